#include "asrc/controllers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asrc/errors.hpp"

namespace asrc {

std::string_view to_string(AdaptationMode mode) {
  switch (mode) {
    case AdaptationMode::Frozen: return "frozen";
    case AdaptationMode::Increase: return "increase";
    case AdaptationMode::Decrease: return "decrease";
  }
  return "?";
}

GainState initial_gains(const ControllerConfig& cfg) {
  GainState g;
  g.theta_hat = cfg.theta_init;
  if (cfg.order == RegressorOrder::TwoTerm) g.theta_hat[2] = 0.0;
  g.gamma = cfg.gamma_init;
  return g;
}

ControlOutput switching_control(const TrackingState& ts, double gain, const ControllerConfig& cfg) {
  ControlOutput out;
  out.rho_hat = gain;
  out.branch = branch_for(ts.e_f_norm, cfg.varpi);
  const double denom = out.branch == Branch::Switching ? ts.e_f_norm : cfg.varpi;
  out.delta_tau = (gain / denom) * ts.e_f;
  out.tau = -ts.e - cfg.g * ts.e_f - out.delta_tau;
  return out;
}

ControlOutput robust_control(const TrackingState& ts, const ThetaStar& theta,
                             const ControllerConfig& cfg) {
  const double rho = regressor(ts.xi_norm, cfg.order).dot(theta.theta);
  return switching_control(ts, rho, cfg);
}

ControlOutput asrc_control(const TrackingState& ts, const GainState& gains,
                           const ControllerConfig& cfg) {
  for (std::size_t i = 0; i < regressor_size(cfg.order); ++i) {
    if (gains.theta_hat[i] < 0.0)
      throw InvariantError("asrc_control: theta_hat_" + std::to_string(i) + " below 0");
  }
  if (gains.gamma < cfg.beta) throw InvariantError("asrc_control: gamma below beta");

  const double rho_hat = regressor(ts.xi_norm, cfg.order).dot(gains.theta_hat) + gains.gamma;
  return switching_control(ts, rho_hat, cfg);
}

GainRates asrc_gain_rates(const TrackingState& ts, const GainState& gains,
                          const ControllerConfig& cfg) {
  GainRates r;
  const std::size_t active = regressor_size(cfg.order);

  r.conditions.error_growing = ts.error_growth() > 0.0;
  for (std::size_t i = 0; i < active; ++i) r.conditions.theta_at_floor |= gains.theta_hat[i] <= 0.0;
  r.conditions.gamma_at_floor = gains.gamma <= cfg.beta;

  if (ts.e_f_norm < cfg.varpi) {
    r.mode = AdaptationMode::Frozen;
    return r;
  }

  const double x = ts.xi_norm;
  const double ef = ts.e_f_norm;
  const double sign = r.conditions.any() ? 1.0 : -1.0;
  r.mode = r.conditions.any() ? AdaptationMode::Increase : AdaptationMode::Decrease;

  double xi_pow = 1.0;
  for (std::size_t i = 0; i < active; ++i) {
    r.theta_dot[i] = sign * cfg.alpha[i] * xi_pow * ef;
    xi_pow *= x;
  }
  if (r.mode == AdaptationMode::Increase) {
    r.gamma_dot = cfg.alpha[3] * ef;
  } else {
    const double decay = cfg.order == RegressorOrder::ThreeTerm ? x * x * x * x : x * x * x;
    r.gamma_dot = -cfg.varsigma * cfg.alpha[3] * decay;
  }
  return r;
}

GainStep asrc_gain_step(const GainState& gains, const GainRates& rates, double dt,
                        const ControllerConfig& cfg) {
  GainStep out{gains, 0};
  if (rates.mode == AdaptationMode::Frozen) return out;

  for (std::size_t i = 0; i < regressor_size(cfg.order); ++i) {
    double next = gains.theta_hat[i] + dt * rates.theta_dot[i];
    if (next < 0.0) {
      next = 0.0;
      ++out.clamp_events;
    }
    out.gains.theta_hat[i] = next;
  }
  double g = gains.gamma + dt * rates.gamma_dot;
  if (g < cfg.beta) {
    g = cfg.beta;
    ++out.clamp_events;
  }
  out.gains.gamma = g;
  return out;
}

AsmcOutput asmc_control_and_rate(const TrackingState& ts, const AsmcState& state,
                                 const AsmcParams& params, const ControllerConfig& cfg) {
  AsmcOutput out;
  out.control = switching_control(ts, state.k, cfg);
  const double s = ts.e_f_norm;
  if (state.k > params.beta) {
    const double d = s - params.epsilon;
    const double sgn = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
    out.k_dot = params.k_bar * s * sgn;
  } else {
    out.k_dot = params.beta;
  }
  return out;
}

AsmcState asmc_gain_step(const AsmcState& state, double k_dot, double dt, const AsmcParams& params) {
  return {std::max(state.k + dt * k_dot, params.beta)};
}

}  // namespace asrc
