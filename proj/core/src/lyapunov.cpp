#include "asrc/lyapunov.hpp"

namespace asrc {

double lyapunov_V(const TrackingState& ts, const Mat& mass) {
  return 0.5 * ts.e_f.dot(mass * ts.e_f) + 0.5 * ts.e.squaredNorm();
}

double lyapunov_V1(const TrackingState& ts, const Mat& mass, const GainState& gains,
                   const ThetaStar& theta_star, const ControllerConfig& cfg) {
  double v1 = lyapunov_V(ts, mass);
  for (std::size_t i = 0; i < regressor_size(cfg.order); ++i) {
    const double err = gains.theta_hat[i] - theta_star.theta[i];
    v1 += err * err / (2.0 * cfg.alpha[i]);
  }
  v1 += gains.gamma * gains.gamma / (2.0 * cfg.alpha[3]);
  return v1;
}

}  // namespace asrc
