#include "asrc/uncertainty.hpp"

#include <cmath>

#include "asrc/errors.hpp"

namespace asrc {

double Regressor::dot(const std::array<double, 3>& theta) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < size(); ++i) acc += values[i] * theta[i];
  return acc;
}

Regressor regressor(double xi_norm, RegressorOrder order) {
  if (!(xi_norm >= 0.0) || !std::isfinite(xi_norm))
    throw DomainError("regressor: ||xi|| must be finite and >= 0");
  Regressor y;
  y.order = order;
  y.values = {1.0, xi_norm, order == RegressorOrder::ThreeTerm ? xi_norm * xi_norm : 0.0};
  return y;
}

Vec sigma_true(const PlantModel& plant, const Vec& q, const Vec& qd, const TrajectoryPoint& desired,
               const Mat& omega, double t) {
  const Vec e = q - desired.q;
  const Vec e_dot = qd - desired.qd;
  const Vec e_f = e_dot + omega * e;
  const Mat m = plant.mass(q, t);
  const Mat c = plant.coriolis(q, qd, t);
  return -(c * qd + plant.gravity(q) + plant.friction(qd) + plant.disturbance(t) +
           m * desired.qdd - m * omega * e_dot - c * e_f);
}

ThetaStar theta_star_synthesize(const PlantConstants& k, const Mat& omega,
                                const TrajectoryBounds& bounds) {
  const double qd = bounds.qd_max;
  const double qdd = bounds.qdd_max;
  if (!std::isfinite(qd) || !std::isfinite(qdd))
    throw DomainError("theta_star_synthesize: desired trajectory bounds are not finite");
  const double w = spectral_norm(omega);

  ThetaStar ts;
  ts.theta[0] = k.g_b + k.f_b * qd + k.d_bar + k.mu2 * qdd + k.c_b * qd * qd;
  ts.theta[1] = k.f_b + k.mu2 * w + k.c_b * qd * (1.0 + w);
  ts.theta[2] = k.c_b * w;
  return ts;
}

}  // namespace asrc
