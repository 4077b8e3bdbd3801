#include "asrc/builtin_scenarios.hpp"

#include <cmath>
#include <numbers>

#include "asrc/errors.hpp"

namespace asrc {
namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Scenario wmr_circle() {
  Scenario sc;
  sc.name = "wmr-circle";
  sc.plant.kind = PlantKind::Wmr;
  sc.plant.friction = FrictionModel{0.5, 1.0, 0.01};
  sc.plant.disturbance = DisturbanceModel{0.5, 3.0};
  sc.horizon = 40.0;
  sc.control_period = 0.02;
  sc.substeps = 20;
  // 3.5 kg carried for 5 s, removed for 5 s, repeatedly.
  sc.plant.payload = periodic_payload(5.0, 5.0, 3.5, 0.35, sc.horizon);
  sc.controller = ControllerKind::Asrc;
  sc.config = ControllerConfig{};
  sc.trajectory = DesiredTrajectory::ramp(vec2(std::numbers::pi / 10, std::numbers::pi / 10),
                                          vec2(4.0, 3.0));
  sc.q0 = Vec::Zero(2);
  sc.qd0 = Vec::Zero(2);
  return sc;
}

Scenario wmr_lowgain() {
  Scenario sc = wmr_circle();
  sc.name = "wmr-lowgain";
  sc.config.theta_init = {10.0, 10.0, 10.0};
  sc.config.gamma_init = 10.0;
  return sc;
}

Scenario arm_base() {
  Scenario sc;
  sc.plant.kind = PlantKind::TwoLink;
  sc.plant.arm = TwoLinkParams{{5.0, 3.0}, {0.5, 0.5}, 9.81};
  sc.plant.friction = FrictionModel{0.2, 0.05, 0.05};
  sc.plant.disturbance = DisturbanceModel{0.5, 3.0};
  sc.horizon = 10.0;
  sc.control_period = 0.001;
  sc.substeps = 2;
  sc.trajectory = DesiredTrajectory::sinusoid(vec2(0.3, 1.6), vec2(0.4, 0.4), vec2(1.0, 1.5),
                                              vec2(0.0, 0.0));
  sc.q0 = sc.trajectory.at(0.0).q;
  sc.qd0 = sc.trajectory.at(0.0).qd;
  sc.config.order = RegressorOrder::ThreeTerm;
  sc.config.omega = Mat::Identity(2, 2);
  sc.config.g = 10.0 * Mat::Identity(2, 2);
  sc.config.varpi = 0.5;
  sc.config.alpha = {50.0, 50.0, 50.0, 50.0};
  sc.config.beta = 0.1;
  sc.config.varsigma = 10.0;
  sc.config.theta_init = {5.0, 5.0, 5.0};
  sc.config.gamma_init = 5.0;
  return sc;
}

Scenario coriolis_track() {
  Scenario sc = arm_base();
  sc.name = "coriolis-track";
  sc.controller = ControllerKind::Asrc;
  // Start off the trajectory and at rest so the gains have something to adapt to.
  sc.q0 = sc.trajectory.at(0.0).q + vec2(0.3, -0.3);
  sc.qd0 = Vec::Zero(2);
  return sc;
}

Scenario oracle_robust() {
  Scenario sc = arm_base();
  sc.name = "oracle-robust";
  sc.controller = ControllerKind::Robust;
  return sc;
}

struct Entry {
  const char* name;
  const char* description;
  Scenario (*make)();
};

constexpr Entry kEntries[] = {
    {"wmr-circle", "WMR circle tracking, ASRC two-term, gains 20, periodic 3.5 kg payload",
     wmr_circle},
    {"wmr-lowgain", "wmr-circle with initial gains theta_hat_i = gamma = 10", wmr_lowgain},
    {"coriolis-track", "two-link arm sinusoid tracking, ASRC three-term", coriolis_track},
    {"oracle-robust", "two-link arm, fixed-gain robust law with synthesised theta*",
     oracle_robust},
};

void require(bool ok, std::string_view name, const char* what) {
  if (!ok) throw ConfigError("parameter '" + std::string(name) + "' " + what);
}

}  // namespace

std::vector<BuiltinScenarioInfo> builtin_scenarios() {
  std::vector<BuiltinScenarioInfo> out;
  for (const Entry& e : kEntries) out.push_back({e.name, e.description});
  return out;
}

Scenario builtin_scenario(std::string_view name) {
  for (const Entry& e : kEntries) {
    if (name == e.name) return e.make();
  }
  throw ConfigError("unknown builtin scenario '" + std::string(name) + "'");
}

bool is_builtin_scenario(std::string_view name) {
  for (const Entry& e : kEntries) {
    if (name == e.name) return true;
  }
  return false;
}

void apply_parameter(Scenario& sc, std::string_view name, double value) {
  require(std::isfinite(value), name, "must be finite");
  ControllerConfig& c = sc.config;
  if (name == "varpi") {
    require(value > 0.0, name, "must be > 0");
    c.varpi = value;
  } else if (name == "beta") {
    require(value > 0.0, name, "must be > 0");
    c.beta = value;
  } else if (name == "varsigma") {
    require(value > 0.0, name, "must be > 0");
    c.varsigma = value;
  } else if (name == "alpha") {
    require(value > 0.0, name, "must be > 0");
    c.alpha.fill(value);
  } else if (name == "gamma_init") {
    require(value > 0.0, name, "must be > 0");
    c.gamma_init = value;
  } else if (name == "theta_init") {
    require(value > 0.0, name, "must be > 0");
    c.theta_init.fill(value);
  } else if (name == "k_bar") {
    require(value > 0.0, name, "must be > 0");
    sc.asmc.k_bar = value;
  } else if (name == "k_init") {
    require(value > 0.0, name, "must be > 0");
    sc.asmc.k_init = value;
  } else if (name == "epsilon") {
    require(value > 0.0, name, "must be > 0");
    sc.asmc.epsilon = value;
  } else if (name == "horizon_s") {
    require(value > 0.0, name, "must be > 0");
    sc.horizon = value;
  } else if (name == "control_period_s") {
    require(value > 0.0, name, "must be > 0");
    sc.control_period = value;
  } else {
    throw ConfigError("unknown sweep parameter '" + std::string(name) + "'");
  }
}

std::vector<std::string> sweepable_parameters() {
  return {"varpi", "beta", "varsigma", "alpha", "gamma_init", "theta_init",
          "k_bar", "k_init", "epsilon", "horizon_s", "control_period_s"};
}

}  // namespace asrc
