// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asrc/analysis.hpp"
#include "asrc/builtin_scenarios.hpp"
#include "asrc/integrator.hpp"
#include "asrc/two_link_arm.hpp"
#include "asrc_cli/commands.hpp"
#include "asrc_cli/manifest.hpp"
#include "fp_oracle.hpp"

namespace {

using namespace asrc;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

struct TimedTrace {
  SimTrace trace;
  double seconds = 0.0;
};

TimedTrace timed_run(const Scenario& sc) {
  const auto t0 = std::chrono::steady_clock::now();
  SimTrace trace = run_scenario(sc);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(trace), s};
}

Scenario with_controller(Scenario sc, ControllerKind c) {
  sc.controller = c;
  return sc;
}

// 1 -----------------------------------------------------------------------
Outcome gain_floor_invariant() {
  Outcome o{true, ""};
  for (const char* name : {"wmr-circle", "wmr-lowgain"}) {
    const Scenario sc = builtin_scenario(name);
    const TimedTrace run = timed_run(sc);
    double min_theta = INFINITY;
    double min_gamma = INFINITY;
    for (const TraceRecord& r : run.trace.records) {
      for (std::size_t i = 0; i < regressor_size(sc.config.order); ++i) min_theta = std::min(min_theta, r.gains[i]);
      min_gamma = std::min(min_gamma, r.gains[3]);
    }
    const bool ok = !run.trace.diverged && min_theta >= 0.0 && min_gamma >= sc.config.beta &&
                    run.seconds <= 5.0;
    o.pass &= ok;
    o.detail += fmt("%s: min theta_hat %.6g, min gamma %.6g, %.3f s; ", name, min_theta, min_gamma,
                    run.seconds);
  }
  return o;
}

// 2 -----------------------------------------------------------------------
Outcome freeze_invariant() {
  Outcome o{true, ""};
  for (const char* name : {"wmr-circle", "wmr-lowgain", "coriolis-track"}) {
    const Scenario sc = builtin_scenario(name);
    const SimTrace trace = run_scenario(sc);
    std::size_t frozen = 0;
    std::size_t violations = 0;
    for (std::size_t k = 0; k + 1 < trace.records.size(); ++k) {
      if (trace.records[k].e_f_norm < sc.config.varpi) {
        ++frozen;
        if (trace.records[k + 1].gains != trace.records[k].gains) ++violations;
      }
    }
    o.pass &= frozen > 0 && violations == 0;
    o.detail += fmt("%s: %zu frozen ticks, %zu changed; ", name, frozen, violations);
  }
  return o;
}

// 3 -----------------------------------------------------------------------
Outcome overestimation_witness(const SimTrace& trace, const ControllerConfig& cfg) {
  const auto& recs = trace.records;
  const std::size_t active = regressor_size(cfg.order);
  auto in_interval = [&](const TraceRecord& r) {
    return r.e_f_norm >= cfg.varpi && r.error_growth <= 0.0;
  };
  std::size_t intervals = 0;
  for (std::size_t k = 0; k + 1 < recs.size();) {
    if (!in_interval(recs[k])) {
      ++k;
      continue;
    }
    std::size_t j = k;
    bool decreasing = true;
    while (j + 1 < recs.size() && in_interval(recs[j])) {
      for (std::size_t i = 0; i < active; ++i) decreasing &= recs[j + 1].gains[i] < recs[j].gains[i];
      decreasing &= recs[j + 1].gains[3] < recs[j].gains[3];
      ++j;
    }
    ++intervals;
    if (decreasing) {
      return {true, fmt("interval [%.2f, %.2f] s (%zu ticks): theta_hat_0, theta_hat_1 and gamma "
                        "strictly decrease every tick (theta_hat_2 unused by the two-term law)",
                        recs[k].t, recs[j].t, j - k)};
    }
    k = j;
  }
  return {false, fmt("none of %zu candidate intervals has all active gains strictly decreasing", intervals)};
}

// 4 -----------------------------------------------------------------------
Outcome asmc_witness(const SimTrace& trace, const AsmcParams& p) {
  std::size_t count = 0;
  double first = NAN;
  for (const TraceRecord& r : trace.records) {
    if (r.error_growth < 0.0 && r.e_f_norm >= p.epsilon && r.k_dot > 0.0) {
      if (count++ == 0) first = r.t;
    }
  }
  return {count > 0, fmt("%zu ticks with d||e||/dt < 0, ||s|| >= epsilon and K_dot > 0 (first at t = %.2f s)",
                         count, first)};
}

// 5 -----------------------------------------------------------------------
Outcome comparison_trend(const SimTrace& asrc, const SimTrace& asmc) {
  const double a = metrics(asrc).rms_ep;
  const double b = metrics(asmc).rms_ep;
  const double improvement = 1.0 - a / b;
  return {improvement >= 0.10, fmt("RMS E_p ASRC %.5f m vs ASMC %.5f m (%.1f%% better)", a, b, 100 * improvement)};
}

// 6 -----------------------------------------------------------------------
Outcome varpi_sweep() {
  Outcome o{true, ""};
  double previous = INFINITY;
  for (double varpi : {0.5, 0.3, 0.1}) {
    Scenario sc = builtin_scenario("wmr-circle");
    apply_parameter(sc, "varpi", varpi);
    const SimTrace trace = run_scenario(sc);
    const double ep = metrics(trace).rms_ep;
    const ChatteringReport ch = chattering_check(trace, 0.5 * sc.horizon);
    o.pass &= !trace.diverged && ep < previous && !ch.flagged;
    o.detail += fmt("varpi %.1f: RMS E_p %.5f m, max jump %.3g vs 5 x median %.3g; ", varpi, ep,
                    ch.max_jump, 5 * ch.median_magnitude);
    previous = ep;
  }
  return o;
}

// 7 -----------------------------------------------------------------------
Outcome finite_time_bound() {
  const Scenario sc = builtin_scenario("coriolis-track");
  const SimTrace trace = run_scenario(sc);
  const auto episodes = increase_episodes(trace, sc.config);
  std::size_t evaluable = 0;
  std::size_t within = 0;
  std::size_t by_decrease = 0;
  double worst_margin = INFINITY;
  for (const IncreaseEpisode& e : episodes) {
    if (!e.bound_evaluable) continue;
    ++evaluable;
    const double t = e.t_first_decrease ? *e.t_first_decrease : e.t_stop.value_or(INFINITY);
    if (t <= e.deadline) ++within;
    if (e.t_first_decrease) ++by_decrease;
    worst_margin = std::min(worst_margin, e.deadline - t);
  }
  const bool ok = !trace.diverged && !episodes.empty() && evaluable == episodes.size() &&
                  within == episodes.size();
  return {ok, fmt("theta* = (%.3g, %.3g, %.3g); %zu episodes, %zu evaluable, %zu within bound "
                  "(%zu ended by an all-gains decrease), smallest slack %.3g s",
                  trace.theta_star.theta[0], trace.theta_star.theta[1], trace.theta_star.theta[2],
                  episodes.size(), evaluable, within, by_decrease, worst_margin)};
}

// 8 -----------------------------------------------------------------------
Outcome fp_root_oracle() {
  std::mt19937_64 rng(8);
  double worst = 0.0;
  int unique = 0;
  for (int i = 0; i < 1000; ++i) {
    const FpPolynomial p = testing::random_fp(rng);
    const testing::ScanResult scan = testing::scan_positive_roots(p);
    if (scan.sign_changes == 1 && descartes_sign_changes(p) == 1) ++unique;
    worst = std::max(worst, std::abs(fp_positive_root(p) - scan.root));
  }
  return {unique == 1000 && worst <= 1e-6,
          fmt("1000 polynomials, %d with a unique positive sign change, max |bisection - scan| = %.3g", unique,
              worst)};
}

// 9 -----------------------------------------------------------------------
Outcome integrator_order() {
  auto error = [](double h) {
    MechState s{Vec::Constant(1, 1.0), Vec::Zero(1)};
    auto accel = [](double, const Vec& q, const Vec&) { return Vec(-q); };
    const int n = static_cast<int>(std::lround(10.0 / h));
    for (int k = 0; k < n; ++k) s = *rk4_step(accel, s, k * h, h);
    return std::abs(s.q[0] - std::cos(10.0));
  };
  const double ratio = error(0.05) / error(0.025);
  return {ratio >= 12.0 && ratio <= 20.0, fmt("error ratio on halving h = %.3f", ratio)};
}

// 10 ----------------------------------------------------------------------
Outcome skew_symmetry() {
  const Scenario sc = builtin_scenario("coriolis-track");
  const TwoLinkArm arm(sc.plant.arm, sc.plant.friction, sc.plant.disturbance);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI), rate(-5.0, 5.0);
  double worst = 0.0;
  const double h = 1e-6;
  for (int i = 0; i < 1000; ++i) {
    const Vec q = v2(angle(rng), angle(rng)), qd = v2(rate(rng), rate(rng)), v = v2(rate(rng), rate(rng));
    const Mat m_dot = (arm.mass(q + h * qd, 0.0) - arm.mass(q - h * qd, 0.0)) / (2 * h);
    const double s = std::abs(v.dot((m_dot - 2.0 * arm.coriolis(q, qd, 0.0)) * v));
    worst = std::max(worst, s / (1.0 + v.squaredNorm()));
  }
  return {worst <= 1e-6, fmt("max |v'(Mdot - 2C)v| / (1 + |v|^2) = %.3g over 1000 samples", worst)};
}

// 11 ----------------------------------------------------------------------
Outcome domination() {
  Outcome o{true, ""};
  struct Box {
    const char* name;
    double e;
    double ed;
  };
  std::uint64_t seed = 11;
  for (const Box& box : {Box{"wmr-circle", 2.0, 10.0}, Box{"coriolis-track", 3.2, 10.0}}) {
    const Scenario sc = builtin_scenario(box.name);
    const auto plant = make_plant(sc.plant);
    const ThetaStar theta = scenario_theta_star(sc, *plant);
    std::mt19937_64 rng(seed++);
    std::uniform_real_distribution<double> time(0.0, sc.horizon), e(-box.e, box.e), ed(-box.ed, box.ed);
    double worst_ratio = 0.0;
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
      const double t = time(rng);
      const TrajectoryPoint des = sc.trajectory.at(t);
      const Vec err = v2(e(rng), e(rng)), err_dot = v2(ed(rng), ed(rng));
      const Vec sigma = sigma_true(*plant, des.q + err, des.qd + err_dot, des, sc.config.omega, t);
      const double xi = std::sqrt(err.squaredNorm() + err_dot.squaredNorm());
      const double bound = regressor(xi, sc.config.order).dot(theta.theta);
      if (sigma.norm() > bound) ++violations;
      worst_ratio = std::max(worst_ratio, sigma.norm() / bound);
    }
    o.pass &= violations == 0;
    o.detail += fmt("%s: %d violations, max ||sigma|| / bound = %.3f; ", box.name, violations, worst_ratio);
  }
  return o;
}

// 12 ----------------------------------------------------------------------
Outcome low_gain_recovery(const SimTrace& asrc1) {
  const Scenario sc = builtin_scenario("wmr-lowgain");
  const SimTrace trace = run_scenario(sc);
  const auto& recs = trace.records;
  double peak_e = 0.0;
  std::size_t peak_tick = 0;
  for (std::size_t k = 0; k < recs.size() && recs[k].t <= 2.0; ++k) {
    if (recs[k].e_norm > peak_e) {
      peak_e = recs[k].e_norm;
      peak_tick = k;
    }
  }
  const bool rise = peak_e > recs.front().e_norm;
  double max_gain = 0.0;
  for (std::size_t k = peak_tick; k < recs.size(); ++k) {
    max_gain = std::max({max_gain, recs[k].gains[0], recs[k].gains[1], recs[k].gains[3]});
  }
  const bool growth = max_gain > sc.config.gamma_init;
  const double tail2 = tail_metrics(trace, 0.25).rms_ep;
  const double tail1 = tail_metrics(asrc1, 0.25).rms_ep;
  const double rel = std::abs(tail2 - tail1) / tail1;
  return {rise && growth && rel <= 0.20,
          fmt("||e|| %.3f -> peak %.3f at t = %.2f s; max gain after peak %.2f (> 10); final-25%% "
              "RMS E_p %.5f vs ASRC1 %.5f (%.1f%% apart)",
              recs.front().e_norm, peak_e, recs[peak_tick].t, max_gain, tail2, tail1, 100 * rel)};
}

// 13 ----------------------------------------------------------------------
Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / ("asrc_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(base);
  fs::create_directories(base);
  const fs::path manifest = base / "manifest.json";
  std::ofstream(manifest) << R"({
  "scenario": "wmr-circle",
  "output_dir": "out",
  "controllers": ["asrc", "asmc"],
  "sweep": {"parameter": "varpi", "values": [0.5, 0.1]},
  "workers": 2
})";
  std::vector<fs::path> roots{base / "a", base / "b"};
  std::ostringstream sink;
  for (const fs::path& root : roots) {
    ::setenv(cli::kOutputRootEnv, root.c_str(), 1);
    if (cli::cmd_run(manifest, sink, sink) != cli::kExitOk) {
      ::unsetenv(cli::kOutputRootEnv);
      return {false, "cmd_run failed: " + sink.str()};
    }
  }
  ::unsetenv(cli::kOutputRootEnv);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::size_t files = 0;
  std::size_t different = 0;
  for (const auto& entry : fs::recursive_directory_iterator(roots[0])) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    const fs::path twin = roots[1] / fs::relative(entry.path(), roots[0]);
    if (!fs::exists(twin) || slurp(entry.path()) != slurp(twin)) ++different;
  }
  fs::remove_all(base);
  return {files > 0 && different == 0, fmt("%zu CSV files compared across two runs, %zu differ", files, different)};
}

}  // namespace

int main() {
  const Scenario circle = builtin_scenario("wmr-circle");
  const SimTrace asrc = run_scenario(circle);
  const Scenario asmc_sc = with_controller(circle, ControllerKind::Asmc);
  const SimTrace asmc = run_scenario(asmc_sc);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"gain-floor invariant", gain_floor_invariant},
      {"freeze invariant", freeze_invariant},
      {"overestimation alleviation witness", [&] { return overestimation_witness(asrc, circle.config); }},
      {"ASMC contrast witness", [&] { return asmc_witness(asmc, asmc_sc.asmc); }},
      {"ASRC vs ASMC comparison trend", [&] { return comparison_trend(asrc, asmc); }},
      {"varpi sweep trend without chattering", varpi_sweep},
      {"finite-time gain-decrease bound", finite_time_bound},
      {"f_p positive root vs scan oracle", fp_root_oracle},
      {"RK4 convergence order", integrator_order},
      {"skew symmetry of Mdot - 2C", skew_symmetry},
      {"uncertainty domination", domination},
      {"low-initial-gain recovery", [&] { return low_gain_recovery(asrc); }},
      {"determinism of run outputs", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
