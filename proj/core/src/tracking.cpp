#include "asrc/tracking.hpp"

#include <string>

#include "asrc/errors.hpp"

namespace asrc {

TrackingState filtered_error(const Vec& e, const Vec& e_dot, const Mat& omega) {
  if (e.size() != e_dot.size() || omega.rows() != e.size() || omega.cols() != e.size()) {
    throw ConfigError("filtered_error: dimension mismatch (e " + std::to_string(e.size()) +
                      ", e_dot " + std::to_string(e_dot.size()) + ", Omega " +
                      std::to_string(omega.rows()) + "x" + std::to_string(omega.cols()) + ")");
  }
  TrackingState ts;
  ts.e = e;
  ts.e_dot = e_dot;
  ts.xi.resize(2 * e.size());
  ts.xi << e, e_dot;
  ts.e_f = e_dot + omega * e;
  ts.xi_norm = ts.xi.norm();
  ts.e_f_norm = ts.e_f.norm();
  return ts;
}

bool xi_norm_bounds_check(const TrackingState& ts, double tol) {
  return ts.xi_norm >= ts.e.norm() - tol && ts.xi_norm >= ts.e_dot.norm() - tol;
}

}  // namespace asrc
