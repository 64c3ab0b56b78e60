#pragma once

// Site comparison by wind power density, 0.5 * rho * V^3 (W/m^2).

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rotorkit/errors.hpp"
#include "rotorkit/util.hpp"

namespace rotorkit {

struct SiteRecord {
  std::string name;
  double mean_wind_speed = 0.0;       // m/s
  double air_density = 1.22;          // kg/m^3
  std::optional<double> elevation_m;  // informational

  void validate() const {
    if (name.empty()) throw ConfigError("site name must not be empty");
    if (!(mean_wind_speed >= 0.0)) throw ConfigError("mean_wind_speed must be >= 0");
    if (!(air_density > 0.0)) throw ConfigError("air_density must be > 0");
  }
};

inline double wind_power_density(double wind_speed, double air_density) {
  return 0.5 * air_density * wind_speed * wind_speed * wind_speed;
}

struct RankedSite {
  SiteRecord site;
  double power_density = 0.0;  // W/m^2
};

// Descending power density; ties broken by higher density, then name order.
inline std::vector<RankedSite> rank_sites(const std::vector<SiteRecord>& sites) {
  std::vector<RankedSite> ranked;
  ranked.reserve(sites.size());
  for (const SiteRecord& site : sites) {
    site.validate();
    ranked.push_back({site, wind_power_density(site.mean_wind_speed, site.air_density)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedSite& a, const RankedSite& b) {
    if (a.power_density != b.power_density) return a.power_density > b.power_density;
    if (a.site.air_density != b.site.air_density) return a.site.air_density > b.site.air_density;
    return a.site.name < b.site.name;
  });
  return ranked;
}

// Site CSV: header row, then
//   name,mean_wind_speed_m_per_s[,air_density_kg_per_m3[,elevation_m]]
// Density defaults to 1.22 when the field is empty or absent.
inline std::vector<SiteRecord> read_sites_csv(std::istream& in, const std::string& path) {
  std::vector<SiteRecord> sites;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      auto header = split_csv_line(text);
      if (header.empty() || header.front() != "name")
        throw ParseError(path, line_no, "expected a header row starting with 'name'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(text);
    if (fields.size() < 2 || fields.size() > 4)
      throw ParseError(path, line_no, "expected 2 to 4 fields, got " +
                                          std::to_string(fields.size()));
    SiteRecord site;
    site.name = fields[0];
    if (site.name.empty()) throw ParseError(path, line_no, "site name must not be empty");
    if (!try_parse_double(fields[1], site.mean_wind_speed) || site.mean_wind_speed < 0.0)
      throw ParseError(path, line_no, "invalid mean_wind_speed '" + fields[1] + "'");
    if (fields.size() >= 3 && !fields[2].empty()) {
      if (!try_parse_double(fields[2], site.air_density) || !(site.air_density > 0.0))
        throw ParseError(path, line_no, "invalid air_density '" + fields[2] + "'");
    }
    if (fields.size() >= 4 && !fields[3].empty()) {
      double elevation = 0.0;
      if (!try_parse_double(fields[3], elevation))
        throw ParseError(path, line_no, "invalid elevation '" + fields[3] + "'");
      site.elevation_m = elevation;
    }
    sites.push_back(std::move(site));
  }
  if (sites.empty()) throw ParseError(path, line_no, "site file has no data rows");
  return sites;
}

inline void write_site_ranking_csv(std::ostream& out, const std::vector<RankedSite>& ranked) {
  out << "rank,name,mean_wind_speed_m_per_s,air_density_kg_per_m3,wind_power_density_W_per_m2\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const RankedSite& r = ranked[i];
    out << (i + 1) << ',' << r.site.name << ',' << format_full(r.site.mean_wind_speed) << ','
        << format_full(r.site.air_density) << ',' << format_full(r.power_density) << '\n';
  }
}

}  // namespace rotorkit
