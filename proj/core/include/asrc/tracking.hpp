#pragma once

#include "asrc/linalg.hpp"

namespace asrc {

/// Tracking error bookkeeping at one control tick.
///
/// `xi` stacks [e; e_dot] and `e_f = e_dot + Omega e` is the filtered error.
/// All norms are Euclidean.
struct TrackingState {
  Vec e;
  Vec e_dot;
  Vec xi;
  Vec e_f;
  double xi_norm = 0.0;
  double e_f_norm = 0.0;

  double e_norm() const { return e.norm(); }
  /// e^T e_dot, positive when the error moves away from the origin.
  double error_growth() const { return e.dot(e_dot); }
};

/// Builds the tracking state for errors (e, e_dot). Throws ConfigError on a
/// dimension mismatch.
TrackingState filtered_error(const Vec& e, const Vec& e_dot, const Mat& omega);

/// ||xi|| >= ||e|| and ||xi|| >= ||e_dot||, up to `tol`.
bool xi_norm_bounds_check(const TrackingState& ts, double tol = 1e-12);

}  // namespace asrc
