#pragma once

// Typed, located access to a parsed JSON document. Every failure becomes a
// ConfigFileError naming the file, the line of the offending key and its
// dotted path.

#include <array>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "asrc/errors.hpp"
#include "asrc/linalg.hpp"
#include "asrc_cli/scenario_io.hpp"

namespace asrc::cli {

std::string read_text_file(const std::filesystem::path& path);

class Document;

class Node {
 public:
  Node(const Document& doc, const nlohmann::json& value, std::vector<std::string> path)
      : doc_(&doc), value_(&value), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& message) const;

  /// Requires an object whose keys all come from `keys`.
  void allow(std::initializer_list<const char*> keys) const;

  std::optional<Node> opt_child(const std::string& key) const;
  Node child(const std::string& key) const;
  std::vector<Node> elements() const;

  bool is_null() const { return value_->is_null(); }
  double number() const;
  std::string string() const;
  long long integer(long long lo, long long hi) const;
  std::uint64_t unsigned_integer() const;
  Vec vector() const;
  Mat matrix() const;

  template <std::size_t N>
  void array(std::array<double, N>& out) const {
    const std::vector<Node> items = elements();
    if (items.size() != N) fail("expected " + std::to_string(N) + " numbers");
    for (std::size_t i = 0; i < N; ++i) out[i] = items[i].number();
  }

  void number(const std::string& key, double& out) const { out = child(key).number(); }
  void opt_number(const std::string& key, double& out) const {
    if (auto c = opt_child(key)) out = c->number();
  }
  template <std::size_t N>
  void opt_array(const std::string& key, std::array<double, N>& out) const {
    if (auto c = opt_child(key)) c->array(out);
  }

  /// Applies a string conversion that may throw asrc::ConfigError.
  template <class F>
  auto convert(F&& f) const -> decltype(f(std::string())) {
    const std::string s = string();
    try {
      return f(s);
    } catch (const ConfigError& e) {
      fail(e.what());
    }
  }

 private:
  const Document* doc_;
  const nlohmann::json* value_;
  std::vector<std::string> path_;
};

class Document {
 public:
  Document(std::string text, std::string source);

  Node root() const { return Node(*this, json_, {}); }
  const std::string& source() const { return source_; }
  /// Line of the key path in the source text, 0 if not found.
  int line_of(const std::vector<std::string>& path) const;

 private:
  std::string text_;
  std::string source_;
  nlohmann::json json_;
};

}  // namespace asrc::cli
