#include "asrc/two_link_arm.hpp"

#include <algorithm>
#include <cmath>

#include "asrc/errors.hpp"

namespace asrc {

TwoLinkArm::TwoLinkArm(TwoLinkParams params, FrictionModel friction, DisturbanceModel disturbance)
    : params_(params), friction_(friction), disturbance_(disturbance) {
  const auto [m1, m2] = params_.link_mass;
  const auto [l1, l2] = params_.link_length;
  if (!(m1 > 0.0 && m2 > 0.0 && l1 > 0.0 && l2 > 0.0))
    throw InvalidPlantError("TwoLinkArm: link masses and lengths must be positive");
  const double lc1 = l1 / 2.0;
  const double lc2 = l2 / 2.0;
  const double i1 = m1 * l1 * l1 / 12.0;
  const double i2 = m2 * l2 * l2 / 12.0;
  a1_ = m1 * lc1 * lc1 + i1 + m2 * (l1 * l1 + lc2 * lc2) + i2;
  a2_ = m2 * l1 * lc2;
  a3_ = m2 * lc2 * lc2 + i2;
}

Mat TwoLinkArm::mass(const Vec& q, double /*t*/) const {
  const double c2 = std::cos(q[1]);
  Mat m(2, 2);
  m << a1_ + 2.0 * a2_ * c2, a3_ + a2_ * c2,
       a3_ + a2_ * c2, a3_;
  return m;
}

Mat TwoLinkArm::coriolis(const Vec& q, const Vec& qd, double /*t*/) const {
  const double h = -a2_ * std::sin(q[1]);
  Mat c(2, 2);
  c << h * qd[1], h * (qd[0] + qd[1]),
       -h * qd[0], 0.0;
  return c;
}

Vec TwoLinkArm::gravity(const Vec& q) const {
  const auto [m1, m2] = params_.link_mass;
  const double l1 = params_.link_length[0];
  const double lc1 = l1 / 2.0;
  const double lc2 = params_.link_length[1] / 2.0;
  const double g = params_.gravity;
  const double c12 = std::cos(q[0] + q[1]);
  Vec out(2);
  out << (m1 * lc1 + m2 * l1) * g * std::cos(q[0]) + m2 * lc2 * g * c12, m2 * lc2 * g * c12;
  return out;
}

Vec TwoLinkArm::friction(const Vec& qd) const { return friction_.eval(qd); }

Vec TwoLinkArm::disturbance(double t) const { return disturbance_.eval(t, 2); }

PlantConstants TwoLinkArm::constants() const {
  // M depends on q only through cos(q2) and is affine in it, so the extreme
  // eigenvalues over all q are attained at cos(q2) = +/-1.
  auto eig_at = [&](double c2) {
    Mat m(2, 2);
    m << a1_ + 2.0 * a2_ * c2, a3_ + a2_ * c2, a3_ + a2_ * c2, a3_;
    return symmetric_eigenvalues(m);
  };
  const Vec e_pos = eig_at(1.0);
  const Vec e_neg = eig_at(-1.0);

  const auto [m1, m2] = params_.link_mass;
  const double l1 = params_.link_length[0];
  const double lc1 = l1 / 2.0;
  const double lc2 = params_.link_length[1] / 2.0;
  const double ga = (m1 * lc1 + m2 * l1) * params_.gravity;
  const double gb = m2 * lc2 * params_.gravity;

  PlantConstants c;
  c.mu1 = std::min(e_pos.minCoeff(), e_neg.minCoeff());
  c.mu2 = std::max(e_pos.maxCoeff(), e_neg.maxCoeff());
  // ||C||_2 <= ||C||_F = |h| sqrt(qd1^2 + qd2^2 + (qd1 + qd2)^2) <= sqrt(3) a2 ||qd||.
  c.c_b = std::sqrt(3.0) * a2_;
  c.g_b = std::hypot(ga + gb, gb);
  c.f_b = friction_.linear_bound();
  c.d_bar = disturbance_.bound(2);
  return c;
}

double TwoLinkArm::kinetic_energy(const Vec& q, const Vec& qd) const {
  return 0.5 * qd.dot(mass(q, 0.0) * qd);
}

double TwoLinkArm::potential_energy(const Vec& q) const {
  const auto [m1, m2] = params_.link_mass;
  const double l1 = params_.link_length[0];
  const double lc1 = l1 / 2.0;
  const double lc2 = params_.link_length[1] / 2.0;
  const double g = params_.gravity;
  return (m1 * lc1 + m2 * l1) * g * std::sin(q[0]) + m2 * lc2 * g * std::sin(q[0] + q[1]);
}

}  // namespace asrc
