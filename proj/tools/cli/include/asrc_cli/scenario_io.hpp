#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "asrc/scenario.hpp"

namespace asrc::cli {

/// A malformed configuration file, located as precisely as possible.
class ConfigFileError : public std::runtime_error {
 public:
  ConfigFileError(std::string file, int line, std::string field, const std::string& message);

  const std::string& file() const { return file_; }
  int line() const { return line_; }  // 0 when unknown
  const std::string& field() const { return field_; }

 private:
  std::string file_;
  int line_;
  std::string field_;
};

/// Parses a scenario document. An optional "base" key names a builtin scenario
/// whose values the remaining keys override; unknown keys are errors.
/// `source` is only used in diagnostics.
Scenario parse_scenario(const std::string& text, const std::string& source = "<string>");

Scenario load_scenario(const std::filesystem::path& path);

/// Complete, self-contained document (no "base"); parse_scenario() of the
/// result reproduces `sc`.
std::string serialize_scenario(const Scenario& sc);

}  // namespace asrc::cli
