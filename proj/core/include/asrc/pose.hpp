#pragma once

#include <span>
#include <vector>

#include "asrc/linalg.hpp"
#include "asrc/wmr.hpp"

namespace asrc {

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

/// Integrates (x_c, y_c, phi)' = S(phi) qd_R with RK4, one step per sample,
/// holding each wheel-rate sample over `dt`. Returns one pose per sample, the
/// pose at the start of that sample's interval.
std::vector<Pose> reconstruct_pose(std::span<const Vec> wheel_rates, const WmrParams& p, double dt,
                                   Pose initial = {});

/// Pose reached from `start` by turning the wheels through `wheel_displacement`
/// along a straight line in wheel space.
Pose transport_pose(const Pose& start, const Vec& wheel_displacement, const WmrParams& p,
                    int steps = 200);

}  // namespace asrc
