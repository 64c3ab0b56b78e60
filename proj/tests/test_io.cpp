#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <sstream>

#include "rotorkit/polar_csv.hpp"
#include "rotorkit/report_csv.hpp"
#include "rotorkit/run_config.hpp"
#include "rotorkit/util.hpp"
#include "rotorkit/wind_resource.hpp"
#include "test_support.hpp"

using namespace rotorkit;
using testsupport::reference_design;
using testsupport::reference_flow;
using testsupport::reference_geometry;

namespace {

TEST(FullPrecisionFormat, RoundTripsBitExactly) {
  for (double v : {4.235294117647059, 1.5294117647058825, 0.018, 2374905.8974255873, 1e-300}) {
    double parsed = 0.0;
    ASSERT_TRUE(try_parse_double(format_full(v), parsed));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parsed), std::bit_cast<std::uint64_t>(v));
  }
}

TEST(PolarCsv, LoadsBundledFile) {
  const PolarSet polars = load_polar_set(testsupport::data_dir() / "naca0012.csv");
  ASSERT_EQ(polars.curves.size(), 3u);
  EXPECT_DOUBLE_EQ(polars.curves[0].reynolds, 1e6);
  EXPECT_DOUBLE_EQ(polars.curves[1].reynolds, 3e6);
  EXPECT_DOUBLE_EQ(polars.curves[2].reynolds, 6e6);
  EXPECT_EQ(polars.curves[0].lift_samples.size(), 8u);
  EXPECT_EQ(polars.curves[0].drag_samples.size(), 5u);
}

TEST(PolarCsv, MalformedRowsCarryLineNumbers) {
  const std::string good_header = "kind,reynolds,x,y\n";
  {
    std::istringstream in(good_header + "lift,1e6,0,0\nlift,1e6,5\n");
    try {
      read_polar_set(in, "polar.csv", "x");
      FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 3);
      EXPECT_NE(std::string(e.what()).find("polar.csv:3:"), std::string::npos);
    }
  }
  {
    std::istringstream in(good_header + "spin,1e6,0,0\n");
    EXPECT_THROW(read_polar_set(in, "polar.csv", "x"), ParseError);
  }
  {
    std::istringstream in(good_header + "lift,1e6,5,0.5\nlift,1e6,4,0.4\n");
    try {
      read_polar_set(in, "polar.csv", "x");
      FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 3);  // non-increasing incidence
    }
  }
  {
    std::istringstream in(good_header + "drag,1e6,0.5,-0.01\n");
    EXPECT_THROW(read_polar_set(in, "polar.csv", "x"), ParseError);
  }
  {
    std::istringstream in("lift,1e6,0,0\n");  // missing header
    EXPECT_THROW(read_polar_set(in, "polar.csv", "x"), ParseError);
  }
  {
    std::istringstream in("");
    EXPECT_THROW(read_polar_set(in, "polar.csv", "x"), ParseError);
  }
}

TEST(PolarCsv, CurveInvariantsCheckedAfterParse) {
  // Parses cleanly but the 1e6 curve has only 2 lift samples.
  std::istringstream in(
      "kind,reynolds,x,y\n"
      "lift,1e6,0,0\nlift,1e6,5,0.5\n"
      "drag,1e6,0,0.008\ndrag,1e6,1,0.02\n");
  EXPECT_THROW(read_polar_set(in, "polar.csv", "x"), ConfigError);
}

std::string evaluate_config_text() {
  return "flow.wind_speed = 6.0\n"
         "flow.air_density = 1.22\n"
         "flow.kinematic_viscosity = 1.5e-5\n"
         "geometry.diameter = 80\n"
         "geometry.hub_to_tip_ratio = 0.05\n"
         "geometry.chord = 3.5\n"
         "geometry.blade_count = 3\n"
         "geometry.rotational_speed_rpm = 15\n"
         "design.lift_coefficient = 1.3\n"
         "design.drag_coefficient = 0.018\n"
         "design.incidence_deg = 12.5\n";
}

RunConfig parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_run_config(in, "test.cfg", "/base");
}

TEST(RunConfig, ParsesEvaluateConfigWithDefaults) {
  const RunConfig config = parse_text(evaluate_config_text());
  ASSERT_TRUE(config.geometry.has_value());
  EXPECT_DOUBLE_EQ(config.geometry->tip_radius, 40.0);
  EXPECT_DOUBLE_EQ(config.geometry->hub_radius, 2.0);
  EXPECT_EQ(config.geometry->blade_count, 3);
  ASSERT_TRUE(config.fixed_design.has_value());
  EXPECT_DOUBLE_EQ(config.fixed_design->lift_coefficient, 1.3);
  EXPECT_EQ(config.station_count, 16);           // defaults
  EXPECT_DOUBLE_EQ(config.drivetrain_efficiency, 0.85);
  EXPECT_FALSE(config.space.has_value());
}

TEST(RunConfig, ParsesSweepConfig) {
  const std::string text =
      "flow.wind_speed = 6.0\n"
      "flow.air_density = 1.22\n"
      "flow.kinematic_viscosity = 1.5e-5\n"
      "space.diameter_min = 80\nspace.diameter_max = 110\nspace.diameter_step = 5\n"
      "space.rpm_min = 6\nspace.rpm_max = 18\nspace.rpm_step = 1\n"
      "space.chord_min = 1.0\nspace.chord_max = 4.0\nspace.chord_step = 0.25\n"
      "constraints.target_electric_power = 2e6\n"
      "constraints.max_tip_speed = 80\n"
      "fixed.hub_to_tip_ratio = 0.05\n"
      "fixed.blade_count = 3\n"
      "design.lift_coefficient = 1.3\n"
      "design.drag_coefficient = 0.018\n"
      "design.incidence_deg = 12.5\n"
      "run.station_count = 32\n"
      "run.drivetrain_efficiency = 0.9\n";
  const RunConfig config = parse_text(text);
  ASSERT_TRUE(config.space.has_value());
  EXPECT_DOUBLE_EQ(config.space->diameter_m.max, 110.0);
  EXPECT_DOUBLE_EQ(config.constraints.target_electric_power, 2e6);
  ASSERT_TRUE(config.constraints.max_tip_speed.has_value());
  EXPECT_DOUBLE_EQ(*config.constraints.max_tip_speed, 80.0);
  EXPECT_EQ(config.constraints.station_count, 32);
  EXPECT_DOUBLE_EQ(config.constraints.drivetrain_efficiency, 0.9);
  EXPECT_EQ(config.fixed.blade_count, 3);
}

TEST(RunConfig, DiagnosticsNameTheOffendingField) {
  std::string text = evaluate_config_text();
  text.replace(text.find("6.0"), 3, "-6.0");
  try {
    parse_text(text);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("flow.wind_speed"), std::string::npos);
  }
}

TEST(RunConfig, ExactlyOneGeometryOrSpaceBlock) {
  std::string both = evaluate_config_text() + "space.diameter_min = 80\n";
  EXPECT_THROW(parse_text(both), ConfigError);
  const std::string neither =
      "flow.wind_speed = 6\nflow.air_density = 1.22\nflow.kinematic_viscosity = 1.5e-5\n"
      "design.lift_coefficient = 1.3\ndesign.drag_coefficient = 0.018\ndesign.incidence_deg = 12.5\n";
  EXPECT_THROW(parse_text(neither), ConfigError);
}

TEST(RunConfig, ExactlyOneDesignPointSource) {
  std::string both = evaluate_config_text() + "design.polar_file = naca0012.csv\n";
  EXPECT_THROW(parse_text(both), ConfigError);
  std::string none = evaluate_config_text();
  none = none.substr(0, none.find("design.lift_coefficient"));
  EXPECT_THROW(parse_text(none), ConfigError);
}

TEST(RunConfig, PolarPathResolvesAgainstConfigDirectory) {
  std::string text = evaluate_config_text();
  text = text.substr(0, text.find("design.lift_coefficient"));
  text += "design.polar_file = naca0012.csv\ndesign.stall_margin = 0.9\n";
  const RunConfig config = parse_text(text);
  ASSERT_TRUE(config.polar_file.has_value());
  EXPECT_EQ(config.polar_file->string(), "/base/naca0012.csv");
  EXPECT_DOUBLE_EQ(config.stall_margin, 0.9);
}

TEST(RunConfig, UnknownAndDuplicateKeysRejected) {
  EXPECT_THROW(parse_text(evaluate_config_text() + "geometry.twist = 3\n"), ParseError);
  EXPECT_THROW(parse_text(evaluate_config_text() + "flow.wind_speed = 7\n"), ParseError);
  EXPECT_THROW(parse_text(evaluate_config_text() + "not a key value line\n"), ParseError);
}

TEST(RunConfig, CommentsAndBlankLinesIgnored) {
  const RunConfig config =
      parse_text("# leading comment\n\n" + evaluate_config_text() + "\nrun.station_count = 8 # inline\n");
  EXPECT_EQ(config.station_count, 8);
}

TEST(StationCsv, WriteThenReadBackBitExactly) {
  const RotorSolution sol =
      evaluate_rotor(reference_flow(), reference_geometry(), reference_design(), 16, 0.85);
  std::ostringstream out;
  write_station_csv(out, sol, reference_geometry());

  std::istringstream in(out.str());
  const auto rows = read_station_csv(in, "stations.csv");
  ASSERT_EQ(rows.size(), 18u);  // hub + 16 stations + tip
  EXPECT_EQ(rows.front().station, "hub");
  EXPECT_FALSE(rows.front().blade_angle_deg.has_value());
  EXPECT_EQ(rows.front().power_per_span_kw, 0.0);
  EXPECT_EQ(rows.back().station, "tip");
  EXPECT_FALSE(rows.back().blade_angle_deg.has_value());
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(rows[i + 1].radius, sol.stations[i].radius);
    ASSERT_TRUE(rows[i + 1].blade_angle_deg.has_value());
    EXPECT_EQ(*rows[i + 1].blade_angle_deg, sol.stations[i].blade_angle_deg);
    EXPECT_EQ(rows[i + 1].power_per_span_kw, sol.stations[i].power_per_span / 1000.0);
  }
}

TEST(StationCsv, ReintegrationReproducesRotorPower) {
  const RotorSolution sol =
      evaluate_rotor(reference_flow(), reference_geometry(), reference_design(), 16, 0.85);
  std::ostringstream out;
  write_station_csv(out, sol, reference_geometry());
  std::istringstream in(out.str());
  const auto rows = read_station_csv(in, "stations.csv");
  const double reintegrated = reintegrate_rotor_power(rows, reference_geometry().blade_count);
  EXPECT_NEAR(reintegrated, sol.rotor_power, 1e-9 * sol.rotor_power);
}

TEST(StationCsv, MalformedTableRejected) {
  std::istringstream missing("station,radius_m,blade_angle_deg,power_per_span_kW_per_m\nhub,2,,0\n");
  EXPECT_THROW(read_station_csv(missing, "stations.csv"), ParseError);
  std::istringstream garbage(
      "station,radius_m,blade_angle_deg,power_per_span_kW_per_m\nhub,x,,0\n1,4,60,1\n2,6,70,2\ntip,40,,3\n");
  EXPECT_THROW(read_station_csv(garbage, "stations.csv"), ParseError);
}

TEST(SweepCsv, RankedRowsWithFeasibilityFlag) {
  DesignSpace space;
  space.diameter_m = {80.0, 85.0, 5.0};
  space.rpm = {14.0, 15.0, 1.0};
  space.chord_m = {3.5, 3.5, 1.0};
  DesignConstraints constraints;
  constraints.target_electric_power = 2.0e6;
  const auto candidates =
      sweep(space, constraints, reference_flow(), reference_design(), {});
  std::ostringstream out;
  write_sweep_csv(out, candidates);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "rank,diameter_m,rpm,chord_m,rotor_power_MW,electric_power_MW,"
            "tip_speed_m_per_s,feasible");
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++count;
    const auto fields = split_csv_line(line);
    ASSERT_EQ(fields.size(), 8u);
    EXPECT_EQ(fields[0], std::to_string(count));
    EXPECT_TRUE(fields[7] == "true" || fields[7] == "false");
  }
  EXPECT_EQ(count, candidates.size());
}

TEST(SeriesCsv, ThreeFilesWithExpectedShapes) {
  const RotorSolution sol =
      evaluate_rotor(reference_flow(), reference_geometry(), reference_design(), 16, 0.85);
  testsupport::TempDir dir;
  write_series_csvs(dir.path() / "series", sol, reference_geometry());
  for (const char* name : {"relative_angle.csv", "blade_angle.csv", "power_per_span.csv"}) {
    const auto path = dir.path() / "series" / name;
    ASSERT_TRUE(std::filesystem::exists(path)) << name;
    const std::string text = testsupport::read_file(path);
    const auto lines = std::count(text.begin(), text.end(), '\n');
    // Angle series: stations only. Power series: hub + stations + tip.
    EXPECT_EQ(lines, std::string(name) == "power_per_span.csv" ? 19 : 17);
  }
}

TEST(WindPowerDensity, ThumraitReferenceValue) {
  EXPECT_DOUBLE_EQ(wind_power_density(6.0, 1.22), 131.76);
  EXPECT_EQ(wind_power_density(0.0, 1.22), 0.0);
}

TEST(SiteRanking, DensityBreaksSpeedTies) {
  const std::vector<SiteRecord> sites = {
      {"LowDensity", 6.0, 1.00, {}},
      {"Thumrait", 6.0, 1.22, {}},
      {"Calm", 0.0, 1.22, {}},
  };
  const auto ranked = rank_sites(sites);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].site.name, "Thumrait");
  EXPECT_EQ(ranked[1].site.name, "LowDensity");
  EXPECT_EQ(ranked[2].site.name, "Calm");  // zero wind ranks last
  EXPECT_EQ(ranked[2].power_density, 0.0);
}

TEST(SiteRanking, NameOrderBreaksFullTies) {
  const std::vector<SiteRecord> sites = {
      {"Bravo", 5.0, 1.2, {}},
      {"Alpha", 5.0, 1.2, {}},
  };
  const auto ranked = rank_sites(sites);
  EXPECT_EQ(ranked[0].site.name, "Alpha");
  EXPECT_EQ(ranked[1].site.name, "Bravo");
}

TEST(SiteCsv, BundledFileAndDefaults) {
  std::istringstream in(
      "name,mean_wind_speed_m_per_s,air_density_kg_per_m3,elevation_m\n"
      "NoDensity,5.0,,\n"
      "Short,4.0\n");
  const auto sites = read_sites_csv(in, "sites.csv");
  ASSERT_EQ(sites.size(), 2u);
  EXPECT_DOUBLE_EQ(sites[0].air_density, 1.22);  // default applies
  EXPECT_DOUBLE_EQ(sites[1].air_density, 1.22);
  EXPECT_FALSE(sites[0].elevation_m.has_value());
}

TEST(SiteCsv, MalformedRowsCarryLineNumbers) {
  std::istringstream bad_speed(
      "name,mean_wind_speed_m_per_s\nGood,5.0\nBad,fast\n");
  try {
    read_sites_csv(bad_speed, "sites.csv");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  std::istringstream negative("name,mean_wind_speed_m_per_s\nBad,-1\n");
  EXPECT_THROW(read_sites_csv(negative, "sites.csv"), ParseError);
  std::istringstream empty("name,mean_wind_speed_m_per_s\n");
  EXPECT_THROW(read_sites_csv(empty, "sites.csv"), ParseError);
}

}  // namespace
