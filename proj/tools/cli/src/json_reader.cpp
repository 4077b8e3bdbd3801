#include "json_reader.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace asrc::cli {
namespace {

std::string dotted(const std::vector<std::string>& path) {
  std::string out;
  for (const std::string& p : path) {
    if (!out.empty() && p.front() != '[') out += '.';
    out += p;
  }
  return out;
}

int line_at(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigFileError(path.string(), 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document::Document(std::string text, std::string source)
    : text_(std::move(text)), source_(std::move(source)) {
  try {
    json_ = nlohmann::json::parse(text_, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const int line = line_at(text_, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ConfigFileError(source_, line, "", msg);
  }
}

int Document::line_of(const std::vector<std::string>& path) const {
  std::size_t pos = 0;
  bool found = false;
  for (const std::string& key : path) {
    if (key.front() == '[') continue;
    const std::size_t at = text_.find('"' + key + '"', pos);
    if (at == std::string::npos) break;
    pos = at;
    found = true;
  }
  return found ? line_at(text_, pos) : 0;
}

void Node::fail(const std::string& message) const {
  throw ConfigFileError(doc_->source(), doc_->line_of(path_), dotted(path_), message);
}

void Node::allow(std::initializer_list<const char*> keys) const {
  if (!value_->is_object()) fail("expected an object");
  for (auto it = value_->begin(); it != value_->end(); ++it) {
    const bool known = std::any_of(keys.begin(), keys.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) child(it.key()).fail("unknown key");
  }
}

std::optional<Node> Node::opt_child(const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) return std::nullopt;
  std::vector<std::string> p = path_;
  p.push_back(key);
  return Node(*doc_, *it, std::move(p));
}

Node Node::child(const std::string& key) const {
  if (auto c = opt_child(key)) return *c;
  std::vector<std::string> p = path_;
  p.push_back(key);
  Node(*doc_, *value_, std::move(p)).fail("missing required key");
}

std::vector<Node> Node::elements() const {
  if (!value_->is_array()) fail("expected an array");
  std::vector<Node> out;
  for (std::size_t i = 0; i < value_->size(); ++i) {
    std::vector<std::string> p = path_;
    p.push_back("[" + std::to_string(i) + "]");
    out.emplace_back(*doc_, (*value_)[i], std::move(p));
  }
  return out;
}

double Node::number() const {
  if (!value_->is_number()) fail("expected a number");
  const double v = value_->get<double>();
  if (!std::isfinite(v)) fail("expected a finite number");
  return v;
}

std::string Node::string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

long long Node::integer(long long lo, long long hi) const {
  if (!value_->is_number_integer()) fail("expected an integer");
  const long long v = value_->get<long long>();
  if (v < lo || v > hi) fail("expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::uint64_t Node::unsigned_integer() const {
  if (!value_->is_number_unsigned()) fail("expected a non-negative integer");
  return value_->get<std::uint64_t>();
}

Vec Node::vector() const {
  const std::vector<Node> items = elements();
  Vec v(static_cast<Eigen::Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) v[static_cast<Eigen::Index>(i)] = items[i].number();
  return v;
}

Mat Node::matrix() const {
  const std::vector<Node> rows = elements();
  if (rows.empty()) fail("expected a non-empty matrix");
  Mat m;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Vec row = rows[r].vector();
    if (r == 0) m.resize(static_cast<Eigen::Index>(rows.size()), row.size());
    if (row.size() != m.cols()) rows[r].fail("matrix rows must have equal length");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

}  // namespace asrc::cli
