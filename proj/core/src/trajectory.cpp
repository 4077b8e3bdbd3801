#include "asrc/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "asrc/errors.hpp"

namespace asrc {

DesiredTrajectory DesiredTrajectory::constant(const Vec& q) {
  const auto n = q.size();
  return {q, Vec::Zero(n), Vec::Zero(n), Vec::Zero(n), Vec::Zero(n)};
}

DesiredTrajectory DesiredTrajectory::ramp(const Vec& offset, const Vec& rate) {
  const auto n = offset.size();
  return {offset, rate, Vec::Zero(n), Vec::Zero(n), Vec::Zero(n)};
}

DesiredTrajectory DesiredTrajectory::sinusoid(const Vec& offset, const Vec& amplitude,
                                              const Vec& frequency, const Vec& phase) {
  return {offset, Vec::Zero(offset.size()), amplitude, frequency, phase};
}

TrajectoryPoint DesiredTrajectory::at(double t) const {
  const auto n = offset.size();
  TrajectoryPoint p{Vec(n), Vec(n), Vec(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double arg = frequency[i] * t + phase[i];
    const double s = std::sin(arg);
    const double c = std::cos(arg);
    p.q[i] = offset[i] + rate[i] * t + amplitude[i] * s;
    p.qd[i] = rate[i] + amplitude[i] * frequency[i] * c;
    p.qdd[i] = -amplitude[i] * frequency[i] * frequency[i] * s;
  }
  return p;
}

TrajectoryBounds sample_bounds(const DesiredTrajectory& traj, double horizon, double dt,
                               double safety) {
  if (!(dt > 0.0) || !(horizon >= 0.0)) throw DomainError("sample_bounds: need dt > 0, horizon >= 0");
  TrajectoryBounds b;
  const auto steps = static_cast<long>(std::ceil(horizon / dt));
  for (long k = 0; k <= steps; ++k) {
    const double t = std::min(static_cast<double>(k) * dt, horizon);
    const auto p = traj.at(t);
    if (!p.q.allFinite() || !p.qd.allFinite() || !p.qdd.allFinite())
      throw DomainError("desired trajectory is not bounded (non-finite sample at t = " +
                        std::to_string(t) + ")");
    b.q_max = std::max(b.q_max, p.q.norm());
    b.qd_max = std::max(b.qd_max, p.qd.norm());
    b.qdd_max = std::max(b.qdd_max, p.qdd.norm());
  }
  b.q_max *= safety;
  b.qd_max *= safety;
  b.qdd_max *= safety;
  return b;
}

}  // namespace asrc
