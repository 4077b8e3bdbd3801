#include "asrc/scenario.hpp"

#include <cmath>

#include "asrc/errors.hpp"

namespace asrc {

std::string_view to_string(PlantKind kind) {
  return kind == PlantKind::Wmr ? "wmr" : "two_link";
}

std::string_view to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::Robust: return "robust";
    case ControllerKind::Asrc: return "asrc";
    case ControllerKind::Asmc: return "asmc";
  }
  return "?";
}

PlantKind plant_kind_from_string(std::string_view s) {
  if (s == "wmr") return PlantKind::Wmr;
  if (s == "two_link") return PlantKind::TwoLink;
  throw ConfigError("unknown plant kind '" + std::string(s) + "' (expected wmr or two_link)");
}

ControllerKind controller_kind_from_string(std::string_view s) {
  if (s == "robust") return ControllerKind::Robust;
  if (s == "asrc") return ControllerKind::Asrc;
  if (s == "asmc") return ControllerKind::Asmc;
  throw ConfigError("unknown controller '" + std::string(s) + "' (expected robust, asrc or asmc)");
}

std::unique_ptr<PlantModel> make_plant(const PlantSpec& spec) {
  switch (spec.kind) {
    case PlantKind::Wmr:
      return std::make_unique<WmrPlant>(spec.wmr, spec.friction, spec.disturbance, spec.payload);
    case PlantKind::TwoLink:
      return std::make_unique<TwoLinkArm>(spec.arm, spec.friction, spec.disturbance);
  }
  throw ConfigError("make_plant: unknown plant kind");
}

std::size_t Scenario::tick_count() const {
  if (!(horizon > 0.0) || !(control_period > 0.0)) return 0;
  return static_cast<std::size_t>(std::llround(horizon / control_period));
}

std::vector<std::string> validate(const Scenario& sc) {
  std::vector<std::string> out = validate(sc.config);
  const std::size_t n = sc.config.dof();
  constexpr std::size_t plant_dof = 2;  // both plant families are 2-DOF in wheel/joint space

  if (n != plant_dof)
    out.push_back("controller dimension " + std::to_string(n) + " does not match plant DOF 2");
  if (sc.trajectory.dof() != plant_dof || sc.trajectory.rate.size() != sc.trajectory.offset.size() ||
      sc.trajectory.amplitude.size() != sc.trajectory.offset.size() ||
      sc.trajectory.frequency.size() != sc.trajectory.offset.size() ||
      sc.trajectory.phase.size() != sc.trajectory.offset.size())
    out.push_back("trajectory vectors must all have 2 entries");
  if (static_cast<std::size_t>(sc.q0.size()) != plant_dof) out.push_back("q0 must have 2 entries");
  if (static_cast<std::size_t>(sc.qd0.size()) != plant_dof) out.push_back("qd0 must have 2 entries");
  if (!(sc.horizon > 0.0) || !std::isfinite(sc.horizon)) out.push_back("horizon_s must be > 0");
  if (!(sc.control_period > 0.0) || !std::isfinite(sc.control_period))
    out.push_back("control_period_s must be > 0");
  else if (sc.horizon > 0.0 && sc.control_period > sc.horizon)
    out.push_back("control_period_s must not exceed horizon_s");
  if (sc.substeps < 1) out.push_back("substeps must be >= 1");
  if (!(sc.rate_noise_std >= 0.0)) out.push_back("rate_noise_std must be >= 0");

  if (sc.controller == ControllerKind::Asmc) {
    if (!(sc.asmc.beta > 0.0)) out.push_back("asmc.beta must be > 0");
    if (!(sc.asmc.k_bar > 0.0)) out.push_back("asmc.k_bar must be > 0");
    if (!(sc.asmc.epsilon > 0.0)) out.push_back("asmc.epsilon must be > 0");
    if (!(sc.asmc.k_init >= sc.asmc.beta)) out.push_back("asmc.k_init must be >= asmc.beta");
  }
  if (sc.controller == ControllerKind::Robust && sc.robust_theta) {
    for (std::size_t i = 0; i < regressor_size(sc.config.order); ++i) {
      if (!(sc.robust_theta->theta[i] >= 0.0))
        out.push_back("robust_theta[" + std::to_string(i) + "] must be >= 0");
    }
  }
  if (sc.plant.kind == PlantKind::Wmr) {
    for (const PayloadEvent& ev : sc.plant.payload) {
      if (!(ev.t_off >= ev.t_on)) out.push_back("payload event must have t_off >= t_on");
      if (!(ev.mass >= 0.0) || !(ev.inertia >= 0.0))
        out.push_back("payload mass and inertia must be >= 0");
    }
  }
  return out;
}

ThetaStar scenario_theta_star(const Scenario& sc, const PlantModel& plant) {
  const TrajectoryBounds b = sample_bounds(sc.trajectory, sc.horizon, sc.control_period);
  return theta_star_synthesize(plant.constants(), sc.config.omega, b);
}

}  // namespace asrc
