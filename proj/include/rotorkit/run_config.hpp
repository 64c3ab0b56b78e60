#pragma once

// Run configuration: a flat key-value text file with dotted section
// prefixes, e.g.
//
//   flow.wind_speed = 6.0
//   geometry.diameter = 80
//   design.lift_coefficient = 1.3
//
// '#' starts a comment. A config carries exactly one of a `geometry.` block
// (single-point evaluation) or a `space.` block (design sweep), and exactly
// one design-point source (fixed coefficients or a polar file). Unknown keys
// are rejected.

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rotorkit/airfoil_polar.hpp"
#include "rotorkit/design_search.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/rotor_model.hpp"
#include "rotorkit/util.hpp"

namespace rotorkit {

struct RunConfig {
  FlowConditions flow;
  std::optional<RotorGeometry> geometry;       // evaluate runs
  std::optional<DesignSpace> space;            // sweep runs
  DesignConstraints constraints;               // sweep runs
  FixedRotorParameters fixed;                  // sweep runs

  std::optional<AerodynamicDesignPoint> fixed_design;
  std::optional<std::filesystem::path> polar_file;  // resolved against the config directory
  double stall_margin = 0.85;
  double drag_safety_factor = 1.0;
  std::optional<double> operating_reynolds;    // required for polar-sourced sweeps

  int station_count = 16;
  double drivetrain_efficiency = 0.85;

  std::optional<std::string> output_csv;
  std::optional<std::string> output_series_dir;
};

namespace detail {

class ConfigReader {
public:
  ConfigReader(std::istream& in, std::string path) : path_(std::move(path)) {
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view text(line);
      if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
      text = trim(text);
      if (text.empty()) continue;
      const auto eq = text.find('=');
      if (eq == std::string_view::npos)
        throw ParseError(path_, line_no, "expected 'key = value'");
      std::string key(trim(text.substr(0, eq)));
      std::string value(trim(text.substr(eq + 1)));
      if (key.empty()) throw ParseError(path_, line_no, "empty key");
      if (value.empty()) throw ParseError(path_, line_no, "empty value for '" + key + "'");
      if (!entries_.emplace(key, Entry{value, line_no}).second)
        throw ParseError(path_, line_no, "duplicate key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  bool has_prefix(const std::string& prefix) const {
    auto it = entries_.lower_bound(prefix);
    return it != entries_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
  }

  double require_double(const std::string& key) {
    auto value = take(key);
    if (!value) fail(key, "is required");
    double parsed = 0.0;
    if (!try_parse_double(value->text, parsed))
      throw ParseError(path_, value->line, "invalid number for '" + key + "': '" + value->text + "'");
    return parsed;
  }

  std::optional<double> optional_double(const std::string& key) {
    auto value = take(key);
    if (!value) return std::nullopt;
    double parsed = 0.0;
    if (!try_parse_double(value->text, parsed))
      throw ParseError(path_, value->line, "invalid number for '" + key + "': '" + value->text + "'");
    return parsed;
  }

  std::optional<long> optional_long(const std::string& key) {
    auto value = take(key);
    if (!value) return std::nullopt;
    long parsed = 0;
    if (!try_parse_long(value->text, parsed))
      throw ParseError(path_, value->line, "invalid integer for '" + key + "': '" + value->text + "'");
    return parsed;
  }

  std::optional<std::string> optional_string(const std::string& key) {
    auto value = take(key);
    if (!value) return std::nullopt;
    return value->text;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError(path_ + ": " + key + " " + what);
  }

  void reject_unconsumed() const {
    if (entries_.empty()) return;
    const auto& [key, entry] = *entries_.begin();
    throw ParseError(path_, entry.line, "unknown key '" + key + "'");
  }

private:
  struct Entry {
    std::string text;
    long line;
  };

  std::optional<Entry> take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    Entry entry = it->second;
    entries_.erase(it);
    return entry;
  }

  std::string path_;
  std::map<std::string, Entry> entries_;
};

inline double positive(ConfigReader& reader, const std::string& key) {
  const double v = reader.require_double(key);
  if (!(v > 0.0)) reader.fail(key, "must be > 0 (got " + format_sig(v, 9) + ")");
  return v;
}

}  // namespace detail

inline RunConfig parse_run_config(std::istream& in, const std::string& path,
                                  const std::filesystem::path& base_dir) {
  detail::ConfigReader reader(in, path);
  RunConfig config;

  config.flow.wind_speed = detail::positive(reader, "flow.wind_speed");
  config.flow.air_density = detail::positive(reader, "flow.air_density");
  config.flow.kinematic_viscosity = detail::positive(reader, "flow.kinematic_viscosity");

  const bool has_geometry = reader.has_prefix("geometry.");
  const bool has_space = reader.has_prefix("space.");
  if (has_geometry == has_space)
    throw ConfigError(path + ": exactly one of a 'geometry.' block or a 'space.' block is required");

  if (has_geometry) {
    RotorGeometry geometry;
    const double diameter = detail::positive(reader, "geometry.diameter");
    const double ratio = reader.require_double("geometry.hub_to_tip_ratio");
    if (!(ratio > 0.0 && ratio < 1.0))
      reader.fail("geometry.hub_to_tip_ratio", "must be inside (0, 1)");
    geometry.tip_radius = diameter / 2.0;
    geometry.hub_radius = ratio * geometry.tip_radius;
    geometry.chord = detail::positive(reader, "geometry.chord");
    const long blades = reader.optional_long("geometry.blade_count").value_or(3);
    if (blades < 1) reader.fail("geometry.blade_count", "must be >= 1");
    geometry.blade_count = static_cast<int>(blades);
    geometry.rotational_speed_rpm = detail::positive(reader, "geometry.rotational_speed_rpm");
    config.geometry = geometry;
  } else {
    DesignSpace space;
    space.diameter_m = {reader.require_double("space.diameter_min"),
                        reader.require_double("space.diameter_max"),
                        reader.require_double("space.diameter_step")};
    space.rpm = {reader.require_double("space.rpm_min"),
                 reader.require_double("space.rpm_max"),
                 reader.require_double("space.rpm_step")};
    space.chord_m = {reader.require_double("space.chord_min"),
                     reader.require_double("space.chord_max"),
                     reader.require_double("space.chord_step")};
    if (!(space.diameter_m.min > 0.0)) reader.fail("space.diameter_min", "must be > 0");
    if (!(space.rpm.min > 0.0)) reader.fail("space.rpm_min", "must be > 0");
    if (!(space.chord_m.min > 0.0)) reader.fail("space.chord_min", "must be > 0");
    if (!(space.diameter_m.step > 0.0)) reader.fail("space.diameter_step", "must be > 0");
    if (!(space.rpm.step > 0.0)) reader.fail("space.rpm_step", "must be > 0");
    if (!(space.chord_m.step > 0.0)) reader.fail("space.chord_step", "must be > 0");
    if (!(space.diameter_m.min <= space.diameter_m.max))
      reader.fail("space.diameter_max", "must be >= space.diameter_min");
    if (!(space.rpm.min <= space.rpm.max)) reader.fail("space.rpm_max", "must be >= space.rpm_min");
    if (!(space.chord_m.min <= space.chord_m.max))
      reader.fail("space.chord_max", "must be >= space.chord_min");
    space.validate();
    config.space = space;

    config.constraints.target_electric_power =
        reader.require_double("constraints.target_electric_power");
    if (config.constraints.target_electric_power < 0.0)
      reader.fail("constraints.target_electric_power", "must be >= 0");
    if (auto tip = reader.optional_double("constraints.max_tip_speed")) {
      if (!(*tip > 0.0)) reader.fail("constraints.max_tip_speed", "must be > 0");
      config.constraints.max_tip_speed = tip;
    }
    if (auto ratio = reader.optional_double("fixed.hub_to_tip_ratio")) {
      if (!(*ratio > 0.0 && *ratio < 1.0)) reader.fail("fixed.hub_to_tip_ratio", "must be inside (0, 1)");
      config.fixed.hub_to_tip_ratio = *ratio;
    }
    if (auto blades = reader.optional_long("fixed.blade_count")) {
      if (*blades < 1) reader.fail("fixed.blade_count", "must be >= 1");
      config.fixed.blade_count = static_cast<int>(*blades);
    }
  }

  const bool has_fixed_design = reader.has("design.lift_coefficient") ||
                                reader.has("design.drag_coefficient") ||
                                reader.has("design.incidence_deg");
  const bool has_polar = reader.has("design.polar_file");
  if (has_fixed_design == has_polar)
    throw ConfigError(path +
                      ": exactly one design-point source is required "
                      "(design.lift_coefficient/drag_coefficient/incidence_deg, or design.polar_file)");

  if (has_fixed_design) {
    AerodynamicDesignPoint design;
    design.lift_coefficient = detail::positive(reader, "design.lift_coefficient");
    design.drag_coefficient = detail::positive(reader, "design.drag_coefficient");
    design.incidence_deg = reader.require_double("design.incidence_deg");
    if (!(design.incidence_deg > 0.0 && design.incidence_deg < 90.0))
      reader.fail("design.incidence_deg", "must be inside (0, 90) degrees");
    if (!(design.drag_coefficient < design.lift_coefficient))
      reader.fail("design.drag_coefficient", "must be below design.lift_coefficient");
    design.source = DesignPointSource::Fixed;
    config.fixed_design = design;
  } else {
    std::filesystem::path polar = *reader.optional_string("design.polar_file");
    if (polar.is_relative()) polar = base_dir / polar;
    config.polar_file = polar;
    if (auto margin = reader.optional_double("design.stall_margin")) {
      if (!(*margin > 0.0)) reader.fail("design.stall_margin", "must be > 0");
      config.stall_margin = *margin;
    }
    if (auto factor = reader.optional_double("design.drag_safety_factor")) {
      if (!(*factor >= 1.0)) reader.fail("design.drag_safety_factor", "must be >= 1");
      config.drag_safety_factor = *factor;
    }
    if (auto re = reader.optional_double("design.operating_reynolds")) {
      if (!(*re > 0.0)) reader.fail("design.operating_reynolds", "must be > 0");
      config.operating_reynolds = re;
    }
  }

  if (auto count = reader.optional_long("run.station_count")) {
    if (*count < 2) reader.fail("run.station_count", "must be >= 2");
    config.station_count = static_cast<int>(*count);
  }
  if (auto eff = reader.optional_double("run.drivetrain_efficiency")) {
    if (!(*eff > 0.0 && *eff <= 1.0)) reader.fail("run.drivetrain_efficiency", "must be inside (0, 1]");
    config.drivetrain_efficiency = *eff;
  }
  config.constraints.drivetrain_efficiency = config.drivetrain_efficiency;
  config.constraints.station_count = config.station_count;

  config.output_csv = reader.optional_string("output.csv");
  config.output_series_dir = reader.optional_string("output.series_dir");

  reader.reject_unconsumed();
  return config;
}

inline RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_run_config(in, path.string(), path.parent_path());
}

}  // namespace rotorkit
