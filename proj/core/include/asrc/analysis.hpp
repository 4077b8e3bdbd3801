#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "asrc/config.hpp"
#include "asrc/simulator.hpp"
#include "asrc/uncertainty.hpp"

namespace asrc {

// ---------------------------------------------------------------------------
// Finite-time decrease of the switching gains.

struct FiniteTimeBounds {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t_bar = 0.0;
  double delta_t = 0.0;
  double t_bound = 0.0;   // t_bar + delta_t
  double rho_rate = 0.0;  // varrho, 1/s
};

/// varrho = min(lambda_min(G), lambda_min(Omega)) / max(mu2, 1).
double convergence_rate(const ControllerConfig& cfg, double mu2);

/// t1..t3 and t_bar only; delta_t and t_bound are left at zero.
FiniteTimeBounds increase_phase_bounds(const ThetaStar& theta_star, const ControllerConfig& cfg,
                                       double mu2);

/// Full bound with delta_t = ln(2 V(t_bar) / psi^2) / varrho, psi = ||e|| at
/// t_in + t_bar. Throws DomainError for psi <= 0.
FiniteTimeBounds finite_time_bounds(const ThetaStar& theta_star, const ControllerConfig& cfg,
                                    double mu2, double v_at_tbar, double psi);

/// A maximal run of ticks whose gains increase, and what followed it.
struct IncreaseEpisode {
  std::size_t start_tick = 0;
  double t_in = 0.0;
  /// First tick after t_in that no longer increases (decrease or freeze).
  std::optional<double> t_stop;
  AdaptationMode stop_mode = AdaptationMode::Increase;
  /// First tick after t_in at which all gains decrease, before the next episode.
  std::optional<double> t_first_decrease;
  FiniteTimeBounds bounds;
  double deadline = 0.0;  // t_in + t_bound
  /// False when the bound needed V(t_in + t_bar) beyond the end of the trace.
  bool bound_evaluable = true;
};

std::vector<IncreaseEpisode> increase_episodes(const SimTrace& trace, const ControllerConfig& cfg);

// ---------------------------------------------------------------------------
// Ultimate bound polynomial.

/// f_p(x) = -varsigma beta x^4 + 2 ||Gamma|| (theta0 x + theta1 x^2 + theta2 x^3) + varrho zeta
/// for the three-term law, and -varsigma beta x^3 + 2 ||Gamma|| (theta0 x + theta1 x^2)
/// + varrho zeta for the two-term law. coeffs[k] multiplies x^k.
struct FpPolynomial {
  std::array<double, 5> coeffs{};

  static FpPolynomial build(const ThetaStar& theta_star, const ControllerConfig& cfg,
                            double gamma_norm, double rho_rate, double zeta);

  int degree() const;
  double leading() const { return coeffs[static_cast<std::size_t>(degree())]; }
  double operator()(double x) const;
};

/// zeta = sum_i (theta*_i^2 + theta_bar_i^2) / alpha_i + gamma_bar^2 / alpha_3.
double zeta_constant(const ThetaStar& theta_star, const std::array<double, 3>& theta_bar,
                     double gamma_bar, const ControllerConfig& cfg);

/// zeta with theta_bar, gamma_bar taken as the maxima over the trace.
double zeta_from_trace(const SimTrace& trace, const ControllerConfig& cfg);

/// Number of sign changes in the coefficient sequence (Descartes' bound on
/// positive roots).
int descartes_sign_changes(const FpPolynomial& poly);

/// The unique positive root, by doubling to a bracket in (0, 1e9] and
/// bisecting to 1e-10. Throws StructuralError if leading >= 0, f(0) <= 0, or
/// no sign change is found.
double fp_positive_root(const FpPolynomial& poly);

// ---------------------------------------------------------------------------
// Trace classification and metrics.

enum class StabilityCase { Case1, Case2, Case3 };
std::string_view to_string(StabilityCase c);

/// Case 3 inside the boundary layer, Case 1 when the increase condition holds,
/// Case 2 otherwise.
StabilityCase case_classifier(const TraceRecord& rec, double varpi);

/// Every maximal Case-3 run lasting at least `min_duration` keeps
/// ||[Omega I] xi|| < varpi at each of its ticks.
bool case3_ball_check(const SimTrace& trace, const ControllerConfig& cfg, double min_duration = 1.0);

double rms(std::span<const double> values);

struct Metrics {
  double rms_ep = 0.0;   // m, NaN without a pose track
  double rms_tau = 0.0;  // RMS of ||tau||
  double rms_e = 0.0;    // RMS of ||e||, rad
};

/// RMS metrics over ticks [first_tick, end). Throws DomainError on an empty range.
Metrics metrics(const SimTrace& trace, std::size_t first_tick = 0);

/// Metrics over the trailing `fraction` of the ticks.
Metrics tail_metrics(const SimTrace& trace, double fraction);

struct ChatteringReport {
  double max_jump = 0.0;          // max ||delta_tau_k - delta_tau_{k-1}||
  double median_magnitude = 0.0;  // median ||delta_tau_k||
  bool flagged = false;           // max_jump >= factor * median_magnitude
};

/// Control-signal chattering check over ticks with t >= t_from.
ChatteringReport chattering_check(const SimTrace& trace, double t_from, double factor = 5.0);

}  // namespace asrc
