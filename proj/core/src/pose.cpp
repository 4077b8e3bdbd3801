#include "asrc/pose.hpp"

#include "asrc/errors.hpp"

namespace asrc {
namespace {

Eigen::Vector3d pose_rate(double phi, const Vec& wheel_rate, const WmrParams& p) {
  return wmr_kinematics_S(phi, p).topRows<3>() * wheel_rate;
}

Pose rk4_pose(const Pose& s, const Vec& wheel_rate, const WmrParams& p, double h) {
  const Eigen::Vector3d k1 = pose_rate(s.heading, wheel_rate, p);
  const Eigen::Vector3d k2 = pose_rate(s.heading + 0.5 * h * k1[2], wheel_rate, p);
  const Eigen::Vector3d k3 = pose_rate(s.heading + 0.5 * h * k2[2], wheel_rate, p);
  const Eigen::Vector3d k4 = pose_rate(s.heading + h * k3[2], wheel_rate, p);
  const Eigen::Vector3d d = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return {s.x + d[0], s.y + d[1], s.heading + d[2]};
}

}  // namespace

std::vector<Pose> reconstruct_pose(std::span<const Vec> wheel_rates, const WmrParams& p, double dt,
                                   Pose initial) {
  std::vector<Pose> out;
  out.reserve(wheel_rates.size());
  Pose s = initial;
  for (const Vec& rate : wheel_rates) {
    if (rate.size() != 2) throw ConfigError("reconstruct_pose: wheel rates must have 2 entries");
    out.push_back(s);
    s = rk4_pose(s, rate, p, dt);
  }
  return out;
}

Pose transport_pose(const Pose& start, const Vec& wheel_displacement, const WmrParams& p,
                    int steps) {
  if (wheel_displacement.size() != 2)
    throw ConfigError("transport_pose: wheel displacement must have 2 entries");
  if (steps < 1) throw ConfigError("transport_pose: steps must be >= 1");
  // Constant wheel rate over a unit interval covers the displacement exactly.
  Pose s = start;
  const double h = 1.0 / steps;
  for (int i = 0; i < steps; ++i) s = rk4_pose(s, wheel_displacement, p, h);
  return s;
}

}  // namespace asrc
