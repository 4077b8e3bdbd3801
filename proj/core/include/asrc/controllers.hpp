#pragma once

#include <array>
#include <string_view>

#include "asrc/config.hpp"
#include "asrc/tracking.hpp"
#include "asrc/uncertainty.hpp"

namespace asrc {

enum class Branch { BoundaryLayer, Switching };

/// Switching branch iff ||e_f|| >= varpi (the tie belongs to switching).
inline Branch branch_for(double e_f_norm, double varpi) {
  return e_f_norm >= varpi ? Branch::Switching : Branch::BoundaryLayer;
}

struct ControlOutput {
  Vec tau;
  Vec delta_tau;
  double rho_hat = 0.0;
  Branch branch = Branch::BoundaryLayer;
};

/// Adaptive gains of ASRC. theta_hat[2] is unused with a two-term regressor.
struct GainState {
  std::array<double, 3> theta_hat{};
  double gamma = 0.0;

  friend bool operator==(const GainState&, const GainState&) = default;
};

GainState initial_gains(const ControllerConfig& cfg);

enum class AdaptationMode { Frozen, Increase, Decrease };
std::string_view to_string(AdaptationMode mode);

/// The three sub-conditions of the increase law, all evaluated every tick.
struct AdaptationConditions {
  bool error_growing = false;   // e^T e_dot > 0
  bool theta_at_floor = false;  // some active theta_hat_i <= 0
  bool gamma_at_floor = false;  // gamma <= beta

  bool any() const { return error_growing || theta_at_floor || gamma_at_floor; }
};

struct GainRates {
  std::array<double, 3> theta_dot{};
  double gamma_dot = 0.0;
  AdaptationMode mode = AdaptationMode::Frozen;
  AdaptationConditions conditions;
};

struct GainStep {
  GainState gains;
  unsigned clamp_events = 0;
};

/// tau = -e - G e_f - delta_tau with delta_tau = gain * e_f / max(||e_f||, varpi).
ControlOutput switching_control(const TrackingState& ts, double gain, const ControllerConfig& cfg);

/// Fixed-gain robust law with rho = Y(xi)^T theta. The caller guarantees
/// theta >= theta* componentwise.
ControlOutput robust_control(const TrackingState& ts, const ThetaStar& theta,
                             const ControllerConfig& cfg);

/// ASRC law with rho_hat = Y(xi)^T theta_hat + gamma. Throws InvariantError
/// if the gains are below their floors.
ControlOutput asrc_control(const TrackingState& ts, const GainState& gains,
                           const ControllerConfig& cfg);

/// Right-hand side of the switching-gain adaptive laws.
///
/// Inside the boundary layer every rate is zero. Outside it the gains grow as
/// alpha_i |xi|^i ||e_f|| and gamma as alpha_3 ||e_f|| when the error grows or
/// a gain sits on its floor; otherwise they shrink with the same magnitudes,
/// except gamma which decays as varsigma alpha_3 |xi|^4 (three-term) or
/// |xi|^3 (two-term).
GainRates asrc_gain_rates(const TrackingState& ts, const GainState& gains,
                          const ControllerConfig& cfg);

/// Forward-Euler step followed by the floor clamp theta_i >= 0, gamma >= beta.
/// A frozen step returns the gains unchanged.
GainStep asrc_gain_step(const GainState& gains, const GainRates& rates, double dt,
                        const ControllerConfig& cfg);

/// ASMC baseline parameters (s = e_f).
struct AsmcParams {
  double k_bar = 10.0;
  double k_init = 35.0;
  double epsilon = 0.5;
  double beta = 0.1;

  friend bool operator==(const AsmcParams&, const AsmcParams&) = default;
};

struct AsmcState {
  double k = 0.0;
};

struct AsmcOutput {
  ControlOutput control;
  double k_dot = 0.0;
};

/// K_dot = k_bar ||s|| sgn(||s|| - epsilon) if K > beta, else beta; the
/// switching term uses the same boundary layer as ASRC. sgn(0) = 0.
AsmcOutput asmc_control_and_rate(const TrackingState& ts, const AsmcState& state,
                                 const AsmcParams& params, const ControllerConfig& cfg);

/// Forward-Euler step of K, clamped to K >= beta.
AsmcState asmc_gain_step(const AsmcState& state, double k_dot, double dt, const AsmcParams& params);

}  // namespace asrc
