#pragma once

#include <vector>

#include "asrc/plant.hpp"

namespace asrc {

/// Differential-drive robot parameters.
///
/// `command_scale` multiplies the reduced inertia: the controller's tau is an
/// actuator command, and friction/disturbance are specified in the same
/// command units. See README for why the default is not 1.
struct WmrParams {
  double mass = 9.0;              // m, kg
  double inertia = 0.3;           // I_bar, kg m^2
  double wheel_inertia = 0.01;    // I_w, kg m^2
  double wheel_radius = 0.097;    // r_w, m
  double track_width = 0.381;     // b, m
  double cm_offset = 0.02;        // d, m
  double command_scale = 200.0;

  friend bool operator==(const WmrParams&, const WmrParams&) = default;
};

/// A payload of `mass`/`inertia` carried on [t_on, t_off).
struct PayloadEvent {
  double t_on = 0.0;
  double t_off = 0.0;
  double mass = 0.0;
  double inertia = 0.0;

  friend bool operator==(const PayloadEvent&, const PayloadEvent&) = default;
};
using PayloadSchedule = std::vector<PayloadEvent>;

/// Alternating on/off payload: carried for `on` seconds, removed for `off`
/// seconds, starting at t = 0, until `horizon`.
PayloadSchedule periodic_payload(double on, double off, double mass, double inertia,
                                 double horizon);

/// [[k1, k2], [k2, k1]] = S^T M S for the wheel coordinates (unscaled).
/// Throws InvalidPlantError unless k1 > |k2|.
Mat wmr_reduced_mass(const WmrParams& p);

/// 5x2 map from wheel rates to (x_c, y_c, phi, theta_r, theta_l) rates at heading `phi`.
Eigen::Matrix<double, 5, 2> wmr_kinematics_S(double phi, const WmrParams& p);

/// Full-pose overload; q = (x_c, y_c, phi, theta_r, theta_l).
Eigen::Matrix<double, 5, 2> wmr_kinematics_S(const Vec& q, const WmrParams& p);

/// Solves M_R qdd_R + f + d_s = tau for qdd_R (C_R = 0).
Vec wmr_reduced_dynamics(const Mat& reduced_mass, const Vec& tau, const Vec& friction,
                         const Vec& disturbance);

/// Reduced-order (wheel-space) robot dynamics with friction, disturbance and
/// a payload schedule acting on the plant only.
class WmrPlant final : public PlantModel {
 public:
  WmrPlant(WmrParams params, FrictionModel friction, DisturbanceModel disturbance,
           PayloadSchedule payload = {});

  std::size_t dof() const override { return 2; }
  std::string name() const override { return "wmr"; }

  Mat mass(const Vec& q, double t) const override;
  Mat coriolis(const Vec& q, const Vec& qd, double t) const override;
  Vec gravity(const Vec& q) const override;
  Vec friction(const Vec& qd) const override;
  Vec disturbance(double t) const override;
  PlantConstants constants() const override;

  /// Parameters with every payload active at `t` added.
  WmrParams params_at(double t) const;
  const WmrParams& params() const { return params_; }

 private:
  WmrParams params_;
  FrictionModel friction_;
  DisturbanceModel disturbance_;
  PayloadSchedule payload_;
};

}  // namespace asrc
