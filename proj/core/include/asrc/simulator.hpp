#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "asrc/controllers.hpp"
#include "asrc/pose.hpp"
#include "asrc/scenario.hpp"

namespace asrc {

/// One control tick. State and errors are sampled at `t`; gains are the ones
/// used to compute `tau` at this tick, before the adaptive update.
struct TraceRecord {
  double t = 0.0;
  Vec q;
  Vec qd;
  Vec e;
  Vec e_dot;
  double e_norm = 0.0;
  double e_f_norm = 0.0;
  double xi_norm = 0.0;
  double error_growth = 0.0;           // e^T e_dot
  std::array<double, 4> gains{};       // theta_hat_0..2, gamma (ASRC)
  double k = 0.0;                      // K (ASMC)
  double k_dot = 0.0;
  double rho_hat = 0.0;
  Vec tau;
  Vec delta_tau;
  Branch branch = Branch::BoundaryLayer;
  AdaptationMode mode = AdaptationMode::Frozen;
  AdaptationConditions conditions;
  unsigned clamp_events = 0;
  double v = 0.0;
  double v1 = 0.0;  // equals v for controllers without adaptive gains
};

/// Reconstructed actual and desired poses, one per tick.
struct PoseTrack {
  std::vector<Pose> actual;
  std::vector<Pose> desired;
  std::vector<double> position_error;  // E_p, m
};

struct SimTrace {
  std::string scenario;
  ControllerKind controller = ControllerKind::Asrc;
  std::size_t dof = 0;
  double control_period = 0.0;
  double varpi = 0.0;
  ThetaStar theta_star;
  PlantConstants constants;
  std::vector<TraceRecord> records;
  std::optional<PoseTrack> pose;
  bool diverged = false;
  std::string divergence_reason;
};

/// States beyond this magnitude abort the run as diverged.
inline constexpr double kDivergenceLimit = 1e6;

/// Closed-loop run: the controller output is held over each control period
/// while the plant advances by `substeps` RK4 steps; adaptive gains are
/// stepped once per period. Deterministic for a given scenario and seed.
SimTrace run_scenario(const Scenario& sc);

}  // namespace asrc
