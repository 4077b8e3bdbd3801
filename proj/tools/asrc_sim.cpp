// asrc_sim: run, validate and list closed-loop switching-gain scenarios.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "asrc_cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop simulator for adaptive switching-gain robust controllers"};
  app.require_subcommand(1);

  std::string manifest;
  auto* run = app.add_subcommand("run", "Run every scenario/controller/sweep combination of a manifest");
  run->add_option("manifest", manifest, "Run manifest (JSON)")->required();

  std::string config;
  auto* validate =
      app.add_subcommand("validate", "Check a scenario file or builtin name without running it");
  validate->add_option("config", config, "Scenario file (JSON) or builtin scenario name")->required();

  auto* list = app.add_subcommand("list-scenarios", "List builtin scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : asrc::cli::kExitConfigError;
  }

  if (*run) return asrc::cli::cmd_run(manifest, std::cout, std::cerr);
  if (*validate) return asrc::cli::cmd_validate(config, std::cout, std::cerr);
  if (*list) return asrc::cli::cmd_list_scenarios(std::cout);
  return asrc::cli::kExitConfigError;
}
