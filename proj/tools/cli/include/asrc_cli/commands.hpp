#pragma once

#include <filesystem>
#include <ostream>

namespace asrc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitConfigError = 2,
  kExitDiverged = 3,
};

/// Runs every combination in the manifest and writes per-run directories plus
/// metrics.csv and summary.txt. Returns kExitDiverged if any run diverged
/// (all outputs are still written).
int cmd_run(const std::filesystem::path& manifest, std::ostream& out, std::ostream& err);

/// Checks a scenario file (or builtin name) without running it; prints one
/// line per violation.
int cmd_validate(const std::string& config, std::ostream& out, std::ostream& err);

int cmd_list_scenarios(std::ostream& out);

}  // namespace asrc::cli
