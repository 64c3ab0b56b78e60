#pragma once

// Polar file ingestion. One CSV per airfoil, header row, then rows keyed by a
// `kind` column:
//   lift,<reynolds>,<incidence_deg>,<cl>
//   drag,<reynolds>,<cl>,<cd>
// Multiple Reynolds values per file; samples must appear in ascending order
// within each (kind, reynolds) block.

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <string>
#include <utility>

#include "rotorkit/airfoil_polar.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/util.hpp"

namespace rotorkit {

inline PolarSet read_polar_set(std::istream& in, const std::string& path,
                               const std::string& airfoil_name) {
  std::map<double, PolarCurve> curves;  // keyed by reynolds, so ascending
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      auto header = split_csv_line(text);
      if (header.empty() || header.front() != "kind")
        throw ParseError(path, line_no, "expected a header row starting with 'kind'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(text);
    if (fields.size() != 4)
      throw ParseError(path, line_no, "expected 4 fields (kind,reynolds,x,y), got " +
                                          std::to_string(fields.size()));
    const std::string& kind = fields[0];
    double reynolds = 0.0, x = 0.0, y = 0.0;
    if (!try_parse_double(fields[1], reynolds))
      throw ParseError(path, line_no, "invalid reynolds value '" + fields[1] + "'");
    if (!try_parse_double(fields[2], x))
      throw ParseError(path, line_no, "invalid numeric value '" + fields[2] + "'");
    if (!try_parse_double(fields[3], y))
      throw ParseError(path, line_no, "invalid numeric value '" + fields[3] + "'");
    if (!(reynolds > 0.0)) throw ParseError(path, line_no, "reynolds must be > 0");

    PolarCurve& curve = curves[reynolds];
    curve.reynolds = reynolds;
    if (kind == "lift") {
      if (!curve.lift_samples.empty() && !(x > curve.lift_samples.back().incidence_deg))
        throw ParseError(path, line_no, "lift samples must be strictly increasing in incidence");
      curve.lift_samples.push_back({x, y});
    } else if (kind == "drag") {
      if (!(y > 0.0)) throw ParseError(path, line_no, "drag coefficient must be > 0");
      if (!curve.drag_samples.empty() && !(x > curve.drag_samples.back().lift_coefficient))
        throw ParseError(path, line_no, "drag samples must be strictly increasing in lift coefficient");
      curve.drag_samples.push_back({x, y});
    } else {
      throw ParseError(path, line_no, "unknown kind '" + kind + "' (expected 'lift' or 'drag')");
    }
  }
  if (!header_seen) throw ParseError(path, line_no, "empty polar file");

  PolarSet set;
  set.airfoil_name = airfoil_name;
  for (auto& [re, curve] : curves) set.curves.push_back(std::move(curve));
  set.validate();
  return set;
}

inline PolarSet load_polar_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open polar file '" + path.string() + "'");
  return read_polar_set(in, path.string(), path.stem().string());
}

}  // namespace rotorkit
