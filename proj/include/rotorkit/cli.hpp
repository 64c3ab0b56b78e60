#pragma once

// Command implementations behind the CLI front end. Each command returns a
// process exit status: 0 iff all outputs were written and every validation
// passed. Console summaries round to 4 significant digits; CSV outputs keep
// full precision.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "rotorkit/design_search.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/polar_csv.hpp"
#include "rotorkit/report_csv.hpp"
#include "rotorkit/rotor_model.hpp"
#include "rotorkit/run_config.hpp"
#include "rotorkit/util.hpp"
#include "rotorkit/wind_resource.hpp"

namespace rotorkit {

enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

// Verbosity from the ROTORKIT_LOG environment variable: off|info|debug.
inline LogLevel log_level() {
  const char* raw = std::getenv("ROTORKIT_LOG");
  if (raw == nullptr) return LogLevel::Off;
  const std::string value(raw);
  if (value == "debug" || value == "2") return LogLevel::Debug;
  if (value == "info" || value == "1") return LogLevel::Info;
  return LogLevel::Off;
}

inline void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::clog << "[rotorkit] " << msg << '\n';
}

inline void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) std::clog << "[rotorkit] " << msg << '\n';
}

// Resolves the configured design point. Polar-sourced configs pick the curve
// at the operating Reynolds number: explicit design.operating_reynolds when
// given, otherwise V*c/nu from the geometry chord. A sweep has no single
// chord, so there the explicit key is mandatory.
inline AerodynamicDesignPoint resolve_design_point(const RunConfig& config) {
  if (config.fixed_design) {
    AerodynamicDesignPoint design = *config.fixed_design;
    design.validate();
    return design;
  }
  double operating_reynolds = 0.0;
  if (config.operating_reynolds) {
    operating_reynolds = *config.operating_reynolds;
  } else if (config.geometry) {
    operating_reynolds = reynolds_number(config.flow, config.geometry->chord);
  } else {
    throw ConfigError("design.operating_reynolds is required when design.polar_file is combined "
                      "with a space block");
  }
  const PolarSet polars = load_polar_set(*config.polar_file);
  const PolarCurve& curve = select_curve(polars, operating_reynolds);
  log_debug("polar '" + polars.airfoil_name + "': selected curve Re " +
            format_sig(curve.reynolds) + " for operating Re " + format_sig(operating_reynolds));
  return design_point_from_polar(curve, config.stall_margin, config.drag_safety_factor);
}

struct EvaluateOptions {
  std::string config_path;
  std::optional<std::string> out_csv;      // overrides output.csv
  std::optional<std::string> series_dir;   // overrides output.series_dir
};

struct SweepOptions {
  std::string config_path;
  std::optional<std::string> out_csv;
  unsigned thread_count = 0;               // 0 = hardware concurrency
};

struct PolarOptions {
  std::string polar_path;
  double operating_reynolds = 0.0;
  double stall_margin = 0.85;
  double drag_safety_factor = 1.0;
};

struct SiteRankOptions {
  std::string sites_path;
  std::optional<std::string> out_csv;
};

namespace detail {

inline std::ofstream open_output(const std::string& path) {
  if (auto parent = std::filesystem::path(path).parent_path(); !parent.empty())
    std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write output file '" + path + "'");
  return out;
}

// Writes a CSV either to a file (summary then goes to `console`) or to the
// console stream itself (summary then goes to `fallback_summary` so stdout
// stays machine-readable).
template <typename WriteFn>
std::ostream& emit_csv(const std::optional<std::string>& path, std::ostream& console,
                       std::ostream& fallback_summary, WriteFn&& write) {
  if (path) {
    std::ofstream file = open_output(*path);
    write(file);
    file.flush();
    if (!file) throw ConfigError("failed writing output file '" + *path + "'");
    return console;
  }
  write(console);
  return fallback_summary;
}

}  // namespace detail

inline int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = load_run_config(options.config_path);
    if (!config.geometry)
      throw ConfigError(options.config_path + ": 'evaluate' needs a geometry block, not a space block");
    const RotorGeometry& geometry = *config.geometry;
    const AerodynamicDesignPoint design = resolve_design_point(config);
    const RotorSolution solution =
        evaluate_rotor(config.flow, geometry, design, config.station_count,
                       config.drivetrain_efficiency);
    log_info("evaluated " + std::to_string(solution.stations.size()) + " stations, rotor power " +
             format_sig(solution.rotor_power / 1e6) + " MW");

    const std::optional<std::string> csv_path =
        options.out_csv ? options.out_csv : config.output_csv;
    std::ostream& summary =
        detail::emit_csv(csv_path, out, err,
                         [&](std::ostream& s) { write_station_csv(s, solution, geometry); });

    if (const std::optional<std::string> series =
            options.series_dir ? options.series_dir : config.output_series_dir) {
      write_series_csvs(*series, solution, geometry);
    }

    summary << "rotor power:     " << format_sig(solution.rotor_power / 1e6) << " MW\n"
            << "electric power:  " << format_sig(solution.electric_power / 1e6) << " MW\n"
            << "reynolds number: " << format_sig(reynolds_number(config.flow, geometry.chord))
            << '\n'
            << "tip speed:       " << format_sig(tip_speed(geometry)) << " m/s\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

inline int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = load_run_config(options.config_path);
    if (!config.space)
      throw ConfigError(options.config_path + ": 'sweep' needs a space block, not a geometry block");
    const AerodynamicDesignPoint design = resolve_design_point(config);
    const std::vector<DesignCandidate> candidates =
        sweep(*config.space, config.constraints, config.flow, design, config.fixed,
              options.thread_count);
    log_info("swept " + std::to_string(candidates.size()) + " candidates");

    const std::optional<std::string> csv_path =
        options.out_csv ? options.out_csv : config.output_csv;
    std::ostream& summary = detail::emit_csv(
        csv_path, out, err, [&](std::ostream& s) { write_sweep_csv(s, candidates); });

    if (!candidates.empty() && candidates.front().feasible) {
      const DesignCandidate& top = candidates.front();
      summary << "top candidate: D=" << format_sig(top.geometry.diameter()) << " m, "
              << format_sig(top.geometry.rotational_speed_rpm) << " rpm, chord "
              << format_sig(top.geometry.chord) << " m -> rotor "
              << format_sig(top.solution.rotor_power / 1e6) << " MW, electric "
              << format_sig(top.solution.electric_power / 1e6) << " MW, tip speed "
              << format_sig(top.tip_speed) << " m/s\n";
    } else {
      summary << "no feasible candidate in the swept grid\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

inline int cmd_polar(const PolarOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const PolarSet polars = load_polar_set(options.polar_path);
    const PolarCurve& curve = select_curve(polars, options.operating_reynolds);
    const AerodynamicDesignPoint design =
        design_point_from_polar(curve, options.stall_margin, options.drag_safety_factor);
    out << "airfoil:          " << polars.airfoil_name << '\n'
        << "curve reynolds:   " << format_sig(curve.reynolds) << '\n'
        << "stall CL:         " << format_sig(stall_lift_coefficient(curve)) << '\n'
        << "design CL:        " << format_sig(design.lift_coefficient) << '\n'
        << "design incidence: " << format_sig(design.incidence_deg) << " deg\n"
        << "design CD:        " << format_sig(design.drag_coefficient) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

inline int cmd_site_rank(const SiteRankOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(options.sites_path);
    if (!in) throw ConfigError("cannot open site file '" + options.sites_path + "'");
    const std::vector<SiteRecord> sites = read_sites_csv(in, options.sites_path);
    const std::vector<RankedSite> ranked = rank_sites(sites);
    detail::emit_csv(options.out_csv, out, err,
                     [&](std::ostream& s) { write_site_ranking_csv(s, ranked); });
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rotorkit
