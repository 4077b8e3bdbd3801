#pragma once

#include "asrc/config.hpp"
#include "asrc/controllers.hpp"
#include "asrc/tracking.hpp"
#include "asrc/uncertainty.hpp"

namespace asrc {

/// V = 1/2 e_f^T M e_f + 1/2 e^T e.
double lyapunov_V(const TrackingState& ts, const Mat& mass);

/// V1 = V + sum_i (theta_hat_i - theta*_i)^2 / (2 alpha_i) + gamma^2 / (2 alpha_3),
/// summing over the active regressor entries.
double lyapunov_V1(const TrackingState& ts, const Mat& mass, const GainState& gains,
                   const ThetaStar& theta_star, const ControllerConfig& cfg);

}  // namespace asrc
