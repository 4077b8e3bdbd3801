#include "asrc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "asrc/errors.hpp"

namespace asrc {

double convergence_rate(const ControllerConfig& cfg, double mu2) {
  return std::min(min_eigenvalue(cfg.g), min_eigenvalue(cfg.omega)) / std::max(mu2, 1.0);
}

FiniteTimeBounds increase_phase_bounds(const ThetaStar& theta_star, const ControllerConfig& cfg,
                                       double mu2) {
  const double w = cfg.varpi;
  const double gn = gamma_norm(cfg.omega);
  FiniteTimeBounds b;
  b.t1 = theta_star.theta[0] / ((cfg.alpha[0] + cfg.alpha[3]) * w);
  b.t2 = theta_star.theta[1] * gn / (cfg.alpha[1] * w * w);
  b.t3 = cfg.order == RegressorOrder::ThreeTerm
             ? theta_star.theta[2] * gn * gn / (cfg.alpha[2] * w * w * w)
             : 0.0;
  b.t_bar = std::max({b.t1, b.t2, b.t3});
  b.rho_rate = convergence_rate(cfg, mu2);
  b.t_bound = b.t_bar;
  return b;
}

FiniteTimeBounds finite_time_bounds(const ThetaStar& theta_star, const ControllerConfig& cfg,
                                    double mu2, double v_at_tbar, double psi) {
  if (!(psi > 0.0)) throw DomainError("finite_time_bounds: psi must be > 0");
  FiniteTimeBounds b = increase_phase_bounds(theta_star, cfg, mu2);
  // V >= ||e||^2 / 2 makes the logarithm nonnegative when V and psi come from
  // the same instant; the clamp only guards externally supplied values.
  b.delta_t = std::max(0.0, std::log(2.0 * v_at_tbar / (psi * psi)) / b.rho_rate);
  b.t_bound = b.t_bar + b.delta_t;
  return b;
}

std::vector<IncreaseEpisode> increase_episodes(const SimTrace& trace, const ControllerConfig& cfg) {
  std::vector<IncreaseEpisode> out;
  const auto& recs = trace.records;
  const std::size_t n = recs.size();
  std::size_t k = 0;
  while (k < n) {
    if (recs[k].mode != AdaptationMode::Increase) {
      ++k;
      continue;
    }
    IncreaseEpisode ep;
    ep.start_tick = k;
    ep.t_in = recs[k].t;
    std::size_t j = k;
    while (j < n && recs[j].mode == AdaptationMode::Increase) ++j;
    if (j < n) {
      ep.t_stop = recs[j].t;
      ep.stop_mode = recs[j].mode;
    }
    // First all-gains-decrease tick before the next increase episode.
    for (std::size_t i = j; i < n && recs[i].mode != AdaptationMode::Increase; ++i) {
      if (recs[i].mode == AdaptationMode::Decrease) {
        ep.t_first_decrease = recs[i].t;
        break;
      }
    }

    ep.bounds = increase_phase_bounds(trace.theta_star, cfg, trace.constants.mu2);
    const double t_probe = ep.t_in + ep.bounds.t_bar;
    const auto probe = static_cast<std::size_t>(
        std::ceil((t_probe - recs.front().t) / trace.control_period - 1e-9));
    if (probe < n && recs[probe].e_norm > 0.0) {
      ep.bounds = finite_time_bounds(trace.theta_star, cfg, trace.constants.mu2, recs[probe].v,
                                     recs[probe].e_norm);
    } else {
      ep.bound_evaluable = false;
    }
    ep.deadline = ep.t_in + ep.bounds.t_bound;
    out.push_back(ep);
    k = j;
  }
  return out;
}

FpPolynomial FpPolynomial::build(const ThetaStar& theta_star, const ControllerConfig& cfg,
                                 double gamma_norm, double rho_rate, double zeta) {
  FpPolynomial p;
  p.coeffs[0] = rho_rate * zeta;
  p.coeffs[1] = 2.0 * gamma_norm * theta_star.theta[0];
  p.coeffs[2] = 2.0 * gamma_norm * theta_star.theta[1];
  if (cfg.order == RegressorOrder::ThreeTerm) {
    p.coeffs[3] = 2.0 * gamma_norm * theta_star.theta[2];
    p.coeffs[4] = -cfg.varsigma * cfg.beta;
  } else {
    p.coeffs[3] = -cfg.varsigma * cfg.beta;
  }
  return p;
}

int FpPolynomial::degree() const {
  for (int k = 4; k > 0; --k) {
    if (coeffs[static_cast<std::size_t>(k)] != 0.0) return k;
  }
  return 0;
}

double FpPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (int k = 4; k >= 0; --k) acc = acc * x + coeffs[static_cast<std::size_t>(k)];
  return acc;
}

double zeta_constant(const ThetaStar& theta_star, const std::array<double, 3>& theta_bar,
                     double gamma_bar, const ControllerConfig& cfg) {
  double z = 0.0;
  for (std::size_t i = 0; i < regressor_size(cfg.order); ++i) {
    z += (theta_star.theta[i] * theta_star.theta[i] + theta_bar[i] * theta_bar[i]) / cfg.alpha[i];
  }
  return z + gamma_bar * gamma_bar / cfg.alpha[3];
}

double zeta_from_trace(const SimTrace& trace, const ControllerConfig& cfg) {
  std::array<double, 3> theta_bar{};
  double gamma_bar = 0.0;
  for (const TraceRecord& r : trace.records) {
    for (std::size_t i = 0; i < 3; ++i) theta_bar[i] = std::max(theta_bar[i], r.gains[i]);
    gamma_bar = std::max(gamma_bar, r.gains[3]);
  }
  return zeta_constant(trace.theta_star, theta_bar, gamma_bar, cfg);
}

int descartes_sign_changes(const FpPolynomial& poly) {
  int changes = 0;
  int last = 0;
  for (double c : poly.coeffs) {
    const int s = c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

double fp_positive_root(const FpPolynomial& poly) {
  if (!(poly.leading() < 0.0) || poly.degree() == 0)
    throw StructuralError("fp_positive_root: leading coefficient must be negative");
  if (!(poly(0.0) > 0.0)) throw StructuralError("fp_positive_root: f_p(0) must be positive");

  constexpr double kLimit = 1e9;
  double lo = 0.0;
  double hi = 1.0;
  while (poly(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > kLimit) {
      hi = kLimit;
      if (poly(hi) > 0.0)
        throw StructuralError("fp_positive_root: no sign change found within [0, 1e9]");
      break;
    }
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (poly(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string_view to_string(StabilityCase c) {
  switch (c) {
    case StabilityCase::Case1: return "case1";
    case StabilityCase::Case2: return "case2";
    case StabilityCase::Case3: return "case3";
  }
  return "?";
}

StabilityCase case_classifier(const TraceRecord& rec, double varpi) {
  if (rec.e_f_norm < varpi) return StabilityCase::Case3;
  return rec.conditions.any() ? StabilityCase::Case1 : StabilityCase::Case2;
}

bool case3_ball_check(const SimTrace& trace, const ControllerConfig& cfg, double min_duration) {
  const auto& recs = trace.records;
  const std::size_t n = recs.size();
  const Mat gamma = [&] {
    const auto d = cfg.omega.rows();
    Mat g(d, 2 * d);
    g << cfg.omega, Mat::Identity(d, d);
    return g;
  }();
  std::size_t k = 0;
  while (k < n) {
    if (case_classifier(recs[k], cfg.varpi) != StabilityCase::Case3) {
      ++k;
      continue;
    }
    std::size_t j = k;
    while (j < n && case_classifier(recs[j], cfg.varpi) == StabilityCase::Case3) ++j;
    const double duration = static_cast<double>(j - k) * trace.control_period;
    if (duration >= min_duration) {
      for (std::size_t i = k; i < j; ++i) {
        Vec xi(2 * recs[i].e.size());
        xi << recs[i].e, recs[i].e_dot;
        if (!((gamma * xi).norm() < cfg.varpi)) return false;
      }
    }
    k = j;
  }
  return true;
}

double rms(std::span<const double> values) {
  if (values.empty()) throw DomainError("rms: empty sequence");
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return std::sqrt(acc / static_cast<double>(values.size()));
}

Metrics metrics(const SimTrace& trace, std::size_t first_tick) {
  const std::size_t n = trace.records.size();
  if (first_tick >= n) throw DomainError("metrics: empty trace or range");
  std::vector<double> tau;
  std::vector<double> e;
  tau.reserve(n - first_tick);
  e.reserve(n - first_tick);
  for (std::size_t k = first_tick; k < n; ++k) {
    tau.push_back(trace.records[k].tau.norm());
    e.push_back(trace.records[k].e_norm);
  }
  Metrics m;
  m.rms_tau = rms(tau);
  m.rms_e = rms(e);
  m.rms_ep = trace.pose
                 ? rms(std::span(trace.pose->position_error).subspan(first_tick))
                 : std::numeric_limits<double>::quiet_NaN();
  return m;
}

Metrics tail_metrics(const SimTrace& trace, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw DomainError("tail_metrics: fraction must be in (0, 1]");
  const std::size_t n = trace.records.size();
  const auto tail = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  return metrics(trace, n - std::max<std::size_t>(tail, 1));
}

ChatteringReport chattering_check(const SimTrace& trace, double t_from, double factor) {
  ChatteringReport rep;
  std::vector<double> magnitudes;
  const TraceRecord* prev = nullptr;
  for (const TraceRecord& r : trace.records) {
    if (r.t < t_from) continue;
    magnitudes.push_back(r.delta_tau.norm());
    if (prev) rep.max_jump = std::max(rep.max_jump, (r.delta_tau - prev->delta_tau).norm());
    prev = &r;
  }
  if (magnitudes.empty()) return rep;
  const auto mid = magnitudes.begin() + static_cast<std::ptrdiff_t>(magnitudes.size() / 2);
  std::nth_element(magnitudes.begin(), mid, magnitudes.end());
  rep.median_magnitude = *mid;
  if (magnitudes.size() % 2 == 0) {
    const double lower = *std::max_element(magnitudes.begin(), mid);
    rep.median_magnitude = 0.5 * (lower + *mid);
  }
  rep.flagged = rep.max_jump >= factor * rep.median_magnitude;
  return rep;
}

}  // namespace asrc
