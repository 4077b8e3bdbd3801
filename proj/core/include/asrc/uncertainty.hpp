#pragma once

#include <array>

#include "asrc/config.hpp"
#include "asrc/plant.hpp"
#include "asrc/trajectory.hpp"

namespace asrc {

/// Y(xi) = [1, |xi|] or [1, |xi|, |xi|^2]; unused trailing entries are zero.
struct Regressor {
  RegressorOrder order = RegressorOrder::TwoTerm;
  std::array<double, 3> values{};

  std::size_t size() const { return regressor_size(order); }
  /// Y^T theta over the active entries only.
  double dot(const std::array<double, 3>& theta) const;
};

/// Throws DomainError for a negative or non-finite norm.
Regressor regressor(double xi_norm, RegressorOrder order);

/// Coefficients of the linear-in-parameters bound ||sigma|| <= Y(xi)^T theta.
struct ThetaStar {
  std::array<double, 3> theta{};

  friend bool operator==(const ThetaStar&, const ThetaStar&) = default;
};

/// Lumped uncertainty
///
///   sigma = -(C qd + g + f + d_s + M qdd_d - M Omega e_dot - C e_f)
///
/// evaluated from the true plant. Analysis and tests only; controllers never
/// call this.
Vec sigma_true(const PlantModel& plant, const Vec& q, const Vec& qd, const TrajectoryPoint& desired,
               const Mat& omega, double t);

/// Conservative theta* from plant constants, grouping the cross terms of the
/// Coriolis and the gravity/friction/inertia bounds by powers of ||xi||:
///
///   theta0 = g_b + f_b Qd + d_bar + mu2 Qdd + C_b Qd^2
///   theta1 = f_b + mu2 ||Omega|| + C_b Qd (1 + ||Omega||)
///   theta2 = C_b ||Omega||
///
/// with Qd, Qdd the sampled sup-norms. Throws DomainError when the bounds are
/// not finite.
ThetaStar theta_star_synthesize(const PlantConstants& constants, const Mat& omega,
                                const TrajectoryBounds& bounds);

}  // namespace asrc
