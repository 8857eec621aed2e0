// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "spinent/cli.hpp"

namespace cli = spinent::cli;

int main(int argc, char** argv) {
  CLI::App app{"Entangling two or more impurity spins with a single scattered electron"};
  app.require_subcommand(1);

  std::string mode = "ideal";
  double x_min = 0.0;
  double x_max = 0.0;
  int points = cli::kDefaultPoints;
  std::string out_path;

  auto* sweep = app.add_subcommand("sweep", "Tabulate P, C and E over a coupling grid (CSV)");
  sweep->add_option("--mode", mode, "ideal (x = Jt) or scatter (x = J rho)")
      ->check(CLI::IsMember({"ideal", "scatter"}));
  auto* sweep_min = sweep->add_option("--min", x_min, "Lower end of the grid");
  auto* sweep_max = sweep->add_option("--max", x_max, "Upper end of the grid");
  sweep->add_option("--points", points, "Number of grid points (default 1001)");
  sweep->add_option("--out", out_path, "Output CSV path ('-' or omitted: stdout)");

  double target_e = 0.0;
  auto* find = app.add_subcommand("find-optimal", "Locate optimal operating points");
  find->add_option("--mode", mode, "ideal or scatter")->check(CLI::IsMember({"ideal", "scatter"}));
  auto* find_min = find->add_option("--min", x_min, "Lower end of the search interval");
  auto* find_max = find->add_option("--max", x_max, "Upper end of the search interval");
  find->add_option("--points", points, "Ideal-mode scan grid size (default 1001)");
  auto* find_target = find->add_option("--target-e", target_e,
                                       "Ideal mode: minimum entanglement of formation");

  int impurities = 2;
  double jt = 0.0;
  std::string initial;
  auto* simulate = app.add_subcommand("simulate", "Sequential exchange with N impurities");
  simulate->add_option("--impurities", impurities, "Number of impurities (1-12)");
  simulate->add_option("--jt", jt, "Exchange angle J t");
  simulate->add_option("--initial", initial, "Initial spins, e.g. u,dd (default u,d...d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    const cli::Mode m = cli::parse_mode(mode);
    if (*sweep) {
      auto config = cli::default_sweep_config(m);
      if (sweep_min->count() > 0) config.x_min = x_min;
      if (sweep_max->count() > 0) config.x_max = x_max;
      config.n_points = points;
      config.output_path = out_path;
      return cli::cmd_sweep(config, std::cout, std::cerr);
    }
    if (*find) {
      auto config = cli::default_find_optimal_config(m);
      if (find_min->count() > 0) config.x_min = x_min;
      if (find_max->count() > 0) config.x_max = x_max;
      config.n_points = points;
      if (find_target->count() > 0) config.target_e = target_e;
      return cli::cmd_find_optimal(config, std::cout, std::cerr);
    }
    cli::SimulateConfig config;
    config.n_impurities = impurities;
    config.jt = jt;
    config.initial = initial;
    return cli::cmd_simulate(config, std::cout, std::cerr);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
}
