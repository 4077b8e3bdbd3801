#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asrc/config.hpp"
#include "asrc/controllers.hpp"
#include "asrc/plant.hpp"
#include "asrc/trajectory.hpp"
#include "asrc/two_link_arm.hpp"
#include "asrc/uncertainty.hpp"
#include "asrc/wmr.hpp"

namespace asrc {

enum class PlantKind { Wmr, TwoLink };
enum class ControllerKind { Robust, Asrc, Asmc };

std::string_view to_string(PlantKind kind);
std::string_view to_string(ControllerKind kind);
PlantKind plant_kind_from_string(std::string_view s);
ControllerKind controller_kind_from_string(std::string_view s);

struct PlantSpec {
  PlantKind kind = PlantKind::Wmr;
  WmrParams wmr;
  TwoLinkParams arm;
  FrictionModel friction;
  DisturbanceModel disturbance;
  PayloadSchedule payload;  // WMR only
};

std::unique_ptr<PlantModel> make_plant(const PlantSpec& spec);

/// Everything needed to reproduce one closed-loop run.
struct Scenario {
  std::string name;
  PlantSpec plant;
  ControllerKind controller = ControllerKind::Asrc;
  ControllerConfig config;
  AsmcParams asmc;
  /// Gains of the fixed robust law; synthesised from the plant when empty.
  std::optional<ThetaStar> robust_theta;
  DesiredTrajectory trajectory;
  Vec q0;
  Vec qd0;
  double horizon = 40.0;         // s
  double control_period = 0.02;  // s
  int substeps = 20;
  /// Standard deviation of additive noise on measured joint rates; 0 disables.
  double rate_noise_std = 0.0;
  std::uint64_t seed = 1;

  std::size_t tick_count() const;
};

/// Structural problems with a scenario (dimensions, horizon, period, ...)
/// together with the controller-config violations.
std::vector<std::string> validate(const Scenario& sc);

/// theta* of the scenario's plant along its desired trajectory.
ThetaStar scenario_theta_star(const Scenario& sc, const PlantModel& plant);

}  // namespace asrc
