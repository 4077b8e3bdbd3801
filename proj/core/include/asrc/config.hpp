#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "asrc/linalg.hpp"

namespace asrc {

/// Structure of the uncertainty bound Y(xi): [1, |xi|] when the plant has no
/// Coriolis term, [1, |xi|, |xi|^2] otherwise.
enum class RegressorOrder { TwoTerm, ThreeTerm };

std::string_view to_string(RegressorOrder order);
RegressorOrder regressor_order_from_string(std::string_view s);

inline std::size_t regressor_size(RegressorOrder order) {
  return order == RegressorOrder::TwoTerm ? 2 : 3;
}

/// User-chosen design constants shared by the robust, ASRC and ASMC laws.
struct ControllerConfig {
  Mat omega = Mat::Identity(2, 2);
  Mat g = Mat::Identity(2, 2);
  double varpi = 0.5;                           // boundary-layer width
  std::array<double, 4> alpha{10, 10, 10, 10};  // alpha_0..alpha_2, alpha_3 (gamma)
  double beta = 0.1;                            // floor of gamma
  double varsigma = 10.0;                       // decay weight of gamma
  std::array<double, 3> theta_init{20, 20, 20};
  double gamma_init = 20.0;
  RegressorOrder order = RegressorOrder::TwoTerm;

  std::size_t dof() const { return static_cast<std::size_t>(omega.rows()); }
};

/// Every violated invariant as a human-readable line; empty when valid.
std::vector<std::string> validate(const ControllerConfig& cfg);

}  // namespace asrc
