// rotorkit command-line front end.
//
//   rotorkit evaluate  --config <file> [--out <csv>] [--emit-series <dir>]
//   rotorkit sweep     --config <file> --out <csv> [--threads N]
//   rotorkit polar     --file <csv> --re <val> [--margin 0.85] [--drag-factor 1.0]
//   rotorkit site-rank --file <csv> [--out <csv>]
//
// Set ROTORKIT_LOG=info|debug for diagnostics on stderr.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rotorkit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Blade-element rotor performance and design toolkit"};
  app.require_subcommand(1);

  rotorkit::EvaluateOptions evaluate_options;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Solve one rotor geometry and write the station table");
  evaluate->add_option("--config", evaluate_options.config_path, "run configuration file")
      ->required();
  evaluate->add_option("--out", evaluate_options.out_csv,
                       "station CSV path (default: stdout, or output.csv from the config)");
  evaluate->add_option("--emit-series", evaluate_options.series_dir,
                       "directory for radius-vs-angle and radius-vs-power series CSVs");

  rotorkit::SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a design-variable grid and rank the candidates");
  sweep->add_option("--config", sweep_options.config_path, "run configuration file")->required();
  sweep->add_option("--out", sweep_options.out_csv, "ranked candidate CSV path")->required();
  sweep->add_option("--threads", sweep_options.thread_count,
                    "worker threads for the grid evaluation (0 = auto)");

  rotorkit::PolarOptions polar_options;
  CLI::App* polar = app.add_subcommand(
      "polar", "Report the stall-margined design point of an airfoil polar");
  polar->add_option("--file", polar_options.polar_path, "polar CSV file")->required();
  polar->add_option("--re", polar_options.operating_reynolds, "operating Reynolds number")
      ->required();
  polar->add_option("--margin", polar_options.stall_margin,
                    "design lift as a fraction of stall lift (default 0.85)");
  polar->add_option("--drag-factor", polar_options.drag_safety_factor,
                    "multiplier applied to the interpolated drag (default 1.0)");

  rotorkit::SiteRankOptions site_options;
  CLI::App* site_rank =
      app.add_subcommand("site-rank", "Rank sites by wind power density (0.5*rho*V^3)");
  site_rank->add_option("--file", site_options.sites_path, "site CSV file")->required();
  site_rank->add_option("--out", site_options.out_csv, "ranked site CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (evaluate->parsed()) return rotorkit::cmd_evaluate(evaluate_options, std::cout, std::cerr);
  if (sweep->parsed()) return rotorkit::cmd_sweep(sweep_options, std::cout, std::cerr);
  if (polar->parsed()) return rotorkit::cmd_polar(polar_options, std::cout, std::cerr);
  if (site_rank->parsed()) return rotorkit::cmd_site_rank(site_options, std::cout, std::cerr);
  return 1;
}
