#pragma once

#include "asrc/linalg.hpp"

namespace asrc {

struct TrajectoryPoint {
  Vec q;
  Vec qd;
  Vec qdd;
};

/// Desired joint trajectory, per channel
///
///   q_d(t) = offset + rate * t + amplitude * sin(frequency * t + phase).
///
/// A constant set-point, the constant-rate wheel profile of the circular path
/// and sinusoidal joint references are all special cases.
struct DesiredTrajectory {
  Vec offset;
  Vec rate;
  Vec amplitude;
  Vec frequency;
  Vec phase;

  static DesiredTrajectory constant(const Vec& q);
  static DesiredTrajectory ramp(const Vec& offset, const Vec& rate);
  static DesiredTrajectory sinusoid(const Vec& offset, const Vec& amplitude,
                                    const Vec& frequency, const Vec& phase);

  std::size_t dof() const { return static_cast<std::size_t>(offset.size()); }
  TrajectoryPoint at(double t) const;

  friend bool operator==(const DesiredTrajectory&, const DesiredTrajectory&) = default;
};

/// Sampled sup-norms of q_d, dq_d and ddq_d over a horizon, already inflated
/// by the safety factor.
struct TrajectoryBounds {
  double q_max = 0.0;
  double qd_max = 0.0;
  double qdd_max = 0.0;
};

/// Samples the trajectory every `dt` on [0, horizon] and returns the sup-norms
/// times `safety`. Throws DomainError if any sample is not finite.
TrajectoryBounds sample_bounds(const DesiredTrajectory& traj, double horizon, double dt,
                               double safety = 1.05);

}  // namespace asrc
