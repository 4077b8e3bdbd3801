#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "asrc/scenario.hpp"

namespace asrc::cli {

struct Sweep {
  std::string parameter;
  std::vector<double> values;
};

/// What `run` executes: every (controller x sweep value) combination of one scenario.
struct RunManifest {
  /// Builtin scenario name or path to a scenario file (relative to the manifest).
  std::string scenario;
  std::filesystem::path output_dir;
  /// Empty means the scenario's own controller.
  std::vector<ControllerKind> controllers;
  std::optional<Sweep> sweep;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// Parses a manifest document; throws ConfigFileError with line/field.
RunManifest parse_manifest(const std::string& text, const std::string& source = "<string>");

RunManifest load_manifest(const std::filesystem::path& path);

/// Environment variable that relocates every run's output directory.
inline constexpr const char* kOutputRootEnv = "ASRC_OUTPUT_ROOT";

/// Output directory after applying the manifest location and the
/// ASRC_OUTPUT_ROOT override: with the variable set, a relative output_dir is
/// placed under it and an absolute one keeps only its final component.
std::filesystem::path resolve_output_dir(const RunManifest& m,
                                         const std::filesystem::path& manifest_dir);

}  // namespace asrc::cli
