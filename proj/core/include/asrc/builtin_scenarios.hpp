#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asrc/scenario.hpp"

namespace asrc {

struct BuiltinScenarioInfo {
  std::string name;
  std::string description;
};

std::vector<BuiltinScenarioInfo> builtin_scenarios();

/// Throws ConfigError for an unknown name.
Scenario builtin_scenario(std::string_view name);

bool is_builtin_scenario(std::string_view name);

/// Overrides one named scalar of a scenario, as used by parameter sweeps.
/// Names: varpi, beta, varsigma, alpha, gamma_init, theta_init, k_bar,
/// k_init, epsilon, horizon_s, control_period_s. Throws ConfigError for an
/// unknown name or a value the parameter cannot take.
void apply_parameter(Scenario& sc, std::string_view name, double value);

std::vector<std::string> sweepable_parameters();

}  // namespace asrc
