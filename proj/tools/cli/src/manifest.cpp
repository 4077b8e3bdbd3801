#include "asrc_cli/manifest.hpp"

#include <algorithm>
#include <cstdlib>

#include "asrc/builtin_scenarios.hpp"
#include "json_reader.hpp"

namespace asrc::cli {

RunManifest parse_manifest(const std::string& text, const std::string& source) {
  const Document doc(text, source);
  const Node root = doc.root();
  root.allow({"scenario", "output_dir", "controllers", "sweep", "workers"});

  RunManifest m;
  m.scenario = root.child("scenario").string();
  if (m.scenario.empty()) root.child("scenario").fail("must not be empty");
  m.output_dir = root.child("output_dir").string();
  if (m.output_dir.empty()) root.child("output_dir").fail("must not be empty");

  if (auto c = root.opt_child("controllers")) {
    for (const Node& item : c->elements()) {
      m.controllers.push_back(
          item.convert([](const std::string& s) { return controller_kind_from_string(s); }));
    }
  }
  if (auto s = root.opt_child("sweep")) {
    s->allow({"parameter", "values"});
    Sweep sweep;
    const Node param = s->child("parameter");
    sweep.parameter = param.string();
    const Node values = s->child("values");
    const std::vector<Node> items = values.elements();
    if (items.empty()) values.fail("needs at least one value");
    const auto known = sweepable_parameters();
    if (std::find(known.begin(), known.end(), sweep.parameter) == known.end())
      param.fail("unknown sweep parameter");
    // Every value must be acceptable to the named parameter.
    Scenario probe = builtin_scenario("wmr-circle");
    for (const Node& v : items) {
      const double x = v.number();
      try {
        apply_parameter(probe, sweep.parameter, x);
      } catch (const ConfigError& e) {
        v.fail(e.what());
      }
      sweep.values.push_back(x);
    }
    m.sweep = std::move(sweep);
  }
  if (auto w = root.opt_child("workers")) m.workers = static_cast<unsigned>(w->integer(0, 1024));
  return m;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text_file(path), path.string());
}

std::filesystem::path resolve_output_dir(const RunManifest& m,
                                         const std::filesystem::path& manifest_dir) {
  const char* root = std::getenv(kOutputRootEnv);
  if (root && *root) {
    const std::filesystem::path base(root);
    return m.output_dir.is_absolute() ? base / m.output_dir.filename() : base / m.output_dir;
  }
  return m.output_dir.is_absolute() ? m.output_dir : manifest_dir / m.output_dir;
}

}  // namespace asrc::cli
