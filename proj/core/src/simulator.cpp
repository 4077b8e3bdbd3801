#include "asrc/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "asrc/errors.hpp"
#include "asrc/integrator.hpp"
#include "asrc/lyapunov.hpp"

namespace asrc {
namespace {

bool within_limit(const MechState& s) {
  return is_finite(s) && s.q.cwiseAbs().maxCoeff() <= kDivergenceLimit &&
         s.qd.cwiseAbs().maxCoeff() <= kDivergenceLimit;
}

PoseTrack build_pose_track(const SimTrace& trace, const Scenario& sc, const WmrParams& p) {
  std::vector<Vec> actual_rates;
  std::vector<Vec> desired_rates;
  actual_rates.reserve(trace.records.size());
  desired_rates.reserve(trace.records.size());
  for (const TraceRecord& r : trace.records) {
    actual_rates.push_back(r.qd);
    desired_rates.push_back(sc.trajectory.at(r.t).qd);
  }
  // The desired robot starts where the actual one would be after turning its
  // wheels to the desired initial wheel angles, so that a wheel-angle offset
  // at t = 0 is not read as a position error for the whole run.
  const Pose start{};
  const Pose desired_start = transport_pose(start, sc.trajectory.at(0.0).q - sc.q0, p);

  PoseTrack track;
  track.actual = reconstruct_pose(actual_rates, p, sc.control_period, start);
  track.desired = reconstruct_pose(desired_rates, p, sc.control_period, desired_start);
  track.position_error.reserve(track.actual.size());
  for (std::size_t i = 0; i < track.actual.size(); ++i) {
    track.position_error.push_back(std::hypot(track.actual[i].x - track.desired[i].x,
                                              track.actual[i].y - track.desired[i].y));
  }
  return track;
}

}  // namespace

SimTrace run_scenario(const Scenario& sc) {
  if (auto problems = validate(sc); !problems.empty())
    throw ConfigError("scenario '" + sc.name + "': " + problems.front());

  const std::unique_ptr<PlantModel> plant = make_plant(sc.plant);
  const ControllerConfig& cfg = sc.config;

  SimTrace trace;
  trace.scenario = sc.name;
  trace.controller = sc.controller;
  trace.dof = plant->dof();
  trace.control_period = sc.control_period;
  trace.varpi = cfg.varpi;
  trace.constants = plant->constants();
  trace.theta_star = scenario_theta_star(sc, *plant);

  const ThetaStar robust_theta = sc.robust_theta.value_or(trace.theta_star);
  GainState gains = initial_gains(cfg);
  AsmcState asmc{sc.asmc.k_init};

  std::mt19937_64 rng(sc.seed);
  std::normal_distribution<double> noise(0.0, sc.rate_noise_std > 0.0 ? sc.rate_noise_std : 1.0);

  MechState state{sc.q0, sc.qd0};
  const std::size_t ticks = sc.tick_count();
  const double h = sc.control_period / sc.substeps;
  trace.records.reserve(ticks);

  for (std::size_t k = 0; k < ticks; ++k) {
    const double t = static_cast<double>(k) * sc.control_period;
    const TrajectoryPoint des = sc.trajectory.at(t);

    Vec qd_meas = state.qd;
    if (sc.rate_noise_std > 0.0) {
      for (Eigen::Index i = 0; i < qd_meas.size(); ++i) qd_meas[i] += noise(rng);
    }
    const TrackingState ts = filtered_error(state.q - des.q, qd_meas - des.qd, cfg.omega);

    TraceRecord rec;
    rec.t = t;
    rec.q = state.q;
    rec.qd = state.qd;
    rec.e = ts.e;
    rec.e_dot = ts.e_dot;
    rec.e_norm = ts.e_norm();
    rec.e_f_norm = ts.e_f_norm;
    rec.xi_norm = ts.xi_norm;
    rec.error_growth = ts.error_growth();
    rec.gains = {gains.theta_hat[0], gains.theta_hat[1], gains.theta_hat[2], gains.gamma};
    rec.k = asmc.k;

    ControlOutput u;
    GainRates rates;
    double k_dot = 0.0;
    switch (sc.controller) {
      case ControllerKind::Robust:
        u = robust_control(ts, robust_theta, cfg);
        break;
      case ControllerKind::Asrc:
        u = asrc_control(ts, gains, cfg);
        rates = asrc_gain_rates(ts, gains, cfg);
        break;
      case ControllerKind::Asmc: {
        const AsmcOutput out = asmc_control_and_rate(ts, asmc, sc.asmc, cfg);
        u = out.control;
        k_dot = out.k_dot;
        break;
      }
    }
    rec.k_dot = k_dot;
    rec.rho_hat = u.rho_hat;
    rec.tau = u.tau;
    rec.delta_tau = u.delta_tau;
    rec.branch = u.branch;
    rec.mode = rates.mode;
    rec.conditions = rates.conditions;

    const Mat m = plant->mass(state.q, t);
    rec.v = lyapunov_V(ts, m);
    rec.v1 = sc.controller == ControllerKind::Asrc
                 ? lyapunov_V1(ts, m, gains, trace.theta_star, cfg)
                 : rec.v;

    // Plant advance with tau held over the period.
    const Vec tau = u.tau;
    auto accel = [&](double tt, const Vec& q, const Vec& qd) {
      return plant->acceleration(q, qd, tau, tt);
    };
    bool ok = true;
    try {
      for (int j = 0; j < sc.substeps && ok; ++j) {
        auto next = rk4_step(accel, state, t + j * h, h);
        if (!next || !within_limit(*next)) {
          ok = false;
        } else {
          state = std::move(*next);
        }
      }
    } catch (const InvalidPlantError& err) {
      ok = false;
      trace.divergence_reason = err.what();
    }

    // Adaptive update once per period.
    if (sc.controller == ControllerKind::Asrc) {
      const GainStep step = asrc_gain_step(gains, rates, sc.control_period, cfg);
      gains = step.gains;
      rec.clamp_events = step.clamp_events;
    } else if (sc.controller == ControllerKind::Asmc) {
      asmc = asmc_gain_step(asmc, k_dot, sc.control_period, sc.asmc);
    }
    trace.records.push_back(std::move(rec));

    if (!ok) {
      trace.diverged = true;
      if (trace.divergence_reason.empty()) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "state left |x| <= %g during tick at t = %.6g s",
                      kDivergenceLimit, t);
        trace.divergence_reason = buf;
      }
      break;
    }
  }

  if (sc.plant.kind == PlantKind::Wmr && !trace.records.empty())
    trace.pose = build_pose_track(trace, sc, sc.plant.wmr);
  return trace;
}

}  // namespace asrc
