#include "asrc/plant.hpp"

#include <cmath>
#include <numbers>

#include "asrc/errors.hpp"

namespace asrc {

Vec FrictionModel::eval(const Vec& qd) const {
  Vec f(qd.size());
  for (Eigen::Index i = 0; i < qd.size(); ++i)
    f[i] = viscous * qd[i] + coulomb * std::tanh(qd[i] / smoothing);
  return f;
}

Vec DisturbanceModel::eval(double t, std::size_t n) const {
  const double v = period > 0.0 ? amplitude * std::sin(2.0 * std::numbers::pi * t / period) : 0.0;
  return Vec::Constant(static_cast<Eigen::Index>(n), v);
}

double DisturbanceModel::bound(std::size_t n) const {
  return std::abs(amplitude) * std::sqrt(static_cast<double>(n));
}

Vec PlantModel::acceleration(const Vec& q, const Vec& qd, const Vec& tau, double t) const {
  const Mat m = mass(q, t);
  const Vec rhs = tau - coriolis(q, qd, t) * qd - gravity(q) - friction(qd) - disturbance(t);
  Eigen::LLT<Mat> llt(m);
  if (llt.info() != Eigen::Success) throw InvalidPlantError(name() + ": mass matrix is not positive definite");
  return llt.solve(rhs);
}

}  // namespace asrc
