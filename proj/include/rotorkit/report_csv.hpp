#pragma once

// CSV emission for rotor solutions and sweep results, plus a reader for the
// station table so integrated power can be reproduced from the file alone.
// Data files carry full (round-trip) precision; display rounding happens
// only in console summaries.

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rotorkit/design_search.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/rotor_model.hpp"
#include "rotorkit/util.hpp"

namespace rotorkit {

// Station table layout: one row per radial position, hub first and tip last.
// Hub and tip carry no blade angle (empty field); power is in kW/m.
inline void write_station_csv(std::ostream& out, const RotorSolution& solution,
                              const RotorGeometry& geometry) {
  out << "station,radius_m,blade_angle_deg,power_per_span_kW_per_m\n";
  out << "hub," << format_full(geometry.hub_radius) << ",,"
      << format_full(solution.hub_power_per_span / 1000.0) << '\n';
  for (std::size_t i = 0; i < solution.stations.size(); ++i) {
    const RadialStation& st = solution.stations[i];
    out << (i + 1) << ',' << format_full(st.radius) << ',' << format_full(st.blade_angle_deg)
        << ',' << format_full(st.power_per_span / 1000.0) << '\n';
  }
  out << "tip," << format_full(geometry.tip_radius) << ",,"
      << format_full(solution.tip_power_per_span / 1000.0) << '\n';
}

struct StationTableRow {
  std::string station;                    // "hub", "1".."N", "tip"
  double radius = 0.0;                    // m
  std::optional<double> blade_angle_deg;  // absent on hub/tip rows
  double power_per_span_kw = 0.0;         // kW/m
};

inline std::vector<StationTableRow> read_station_csv(std::istream& in, const std::string& path) {
  std::vector<StationTableRow> rows;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(text);
    if (fields.size() != 4)
      throw ParseError(path, line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    StationTableRow row;
    row.station = fields[0];
    if (!try_parse_double(fields[1], row.radius))
      throw ParseError(path, line_no, "invalid radius '" + fields[1] + "'");
    if (!fields[2].empty()) {
      double angle = 0.0;
      if (!try_parse_double(fields[2], angle))
        throw ParseError(path, line_no, "invalid blade angle '" + fields[2] + "'");
      row.blade_angle_deg = angle;
    }
    if (!try_parse_double(fields[3], row.power_per_span_kw))
      throw ParseError(path, line_no, "invalid power per span '" + fields[3] + "'");
    rows.push_back(std::move(row));
  }
  if (rows.size() < 4)
    throw ParseError(path, line_no, "station table needs hub, at least 2 stations, and tip");
  return rows;
}

// Trapezoidal re-integration of a parsed station table (hub..tip rows),
// times blade count. Returns rotor power in W.
inline double reintegrate_rotor_power(const std::vector<StationTableRow>& rows, int blade_count) {
  if (rows.size() < 2) throw ConfigError("station table needs at least 2 rows");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!(rows[i + 1].radius > rows[i].radius))
      throw ConfigError("station table radii must be strictly increasing");
    sum += 0.5 * (rows[i + 1].power_per_span_kw + rows[i].power_per_span_kw) *
           (rows[i + 1].radius - rows[i].radius);
  }
  return static_cast<double>(blade_count) * sum * 1000.0;
}

// Two-column plot series: radius vs relative angle, blade angle, and power
// per span. Angle series cover the interior stations; the power series also
// carries the hub anchor and the extrapolated tip value.
inline void write_series_csvs(const std::filesystem::path& dir, const RotorSolution& solution,
                              const RotorGeometry& geometry) {
  std::filesystem::create_directories(dir);
  const auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw ConfigError("cannot write series file '" + (dir / name).string() + "'");
    return out;
  };

  std::ofstream relative = open("relative_angle.csv");
  relative << "radius_m,relative_angle_deg\n";
  for (const RadialStation& st : solution.stations)
    relative << format_full(st.radius) << ',' << format_full(st.relative_angle_deg) << '\n';

  std::ofstream blade = open("blade_angle.csv");
  blade << "radius_m,blade_angle_deg\n";
  for (const RadialStation& st : solution.stations)
    blade << format_full(st.radius) << ',' << format_full(st.blade_angle_deg) << '\n';

  std::ofstream power = open("power_per_span.csv");
  power << "radius_m,power_per_span_kW_per_m\n";
  power << format_full(geometry.hub_radius) << ','
        << format_full(solution.hub_power_per_span / 1000.0) << '\n';
  for (const RadialStation& st : solution.stations)
    power << format_full(st.radius) << ',' << format_full(st.power_per_span / 1000.0) << '\n';
  power << format_full(geometry.tip_radius) << ','
        << format_full(solution.tip_power_per_span / 1000.0) << '\n';
}

inline void write_sweep_csv(std::ostream& out, const std::vector<DesignCandidate>& candidates) {
  out << "rank,diameter_m,rpm,chord_m,rotor_power_MW,electric_power_MW,"
         "tip_speed_m_per_s,feasible\n";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const DesignCandidate& c = candidates[i];
    out << (i + 1) << ',' << format_full(c.geometry.diameter()) << ','
        << format_full(c.geometry.rotational_speed_rpm) << ',' << format_full(c.geometry.chord)
        << ',' << format_full(c.solution.rotor_power / 1e6) << ','
        << format_full(c.solution.electric_power / 1e6) << ',' << format_full(c.tip_speed) << ','
        << (c.feasible ? "true" : "false") << '\n';
  }
}

}  // namespace rotorkit
