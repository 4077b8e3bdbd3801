#include <benchmark/benchmark.h>

#include "asrc/builtin_scenarios.hpp"
#include "asrc/controllers.hpp"
#include "asrc/integrator.hpp"
#include "asrc/simulator.hpp"
#include "asrc/tracking.hpp"

namespace {

using namespace asrc;

void BM_Rk4PlantStep(benchmark::State& state, const char* scenario) {
  const Scenario sc = builtin_scenario(scenario);
  const auto plant = make_plant(sc.plant);
  const Vec tau = Vec::Constant(plant->dof(), 1.0);
  MechState s{Vec::Constant(plant->dof(), 0.3), Vec::Constant(plant->dof(), 0.5)};
  auto accel = [&](double t, const Vec& q, const Vec& qd) { return plant->acceleration(q, qd, tau, t); };
  const double h = sc.control_period / sc.substeps;
  for (auto _ : state) {
    auto next = rk4_step(accel, s, 1.0, h);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK_CAPTURE(BM_Rk4PlantStep, wmr, "wmr-circle");
BENCHMARK_CAPTURE(BM_Rk4PlantStep, two_link, "coriolis-track");

void BM_AsrcControlTick(benchmark::State& state) {
  const Scenario sc = builtin_scenario("coriolis-track");
  const TrackingState ts =
      filtered_error((Vec(2) << 0.4, -0.3).finished(), (Vec(2) << -0.2, 0.5).finished(), sc.config.omega);
  GainState gains = initial_gains(sc.config);
  for (auto _ : state) {
    const ControlOutput out = asrc_control(ts, gains, sc.config);
    const GainRates rates = asrc_gain_rates(ts, gains, sc.config);
    const GainStep step = asrc_gain_step(gains, rates, sc.control_period, sc.config);
    benchmark::DoNotOptimize(out);
    benchmark::DoNotOptimize(step);
  }
}
BENCHMARK(BM_AsrcControlTick);

void BM_ScenarioRun(benchmark::State& state, const char* scenario) {
  const Scenario sc = builtin_scenario(scenario);
  for (auto _ : state) {
    SimTrace trace = run_scenario(sc);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK_CAPTURE(BM_ScenarioRun, wmr_circle, "wmr-circle")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ScenarioRun, coriolis_track, "coriolis-track")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
