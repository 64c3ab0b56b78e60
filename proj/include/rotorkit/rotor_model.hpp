#pragma once

// Blade-element rotor power model. Each radial station sees a local velocity
// triangle (tangential U = omega*r against the axial wind V); section lift
// and drag give a tangential force and a power per unit span, which is
// integrated piecewise-linearly along the blade with the hub anchored at
// zero and the tip extrapolated from the last two stations.
//
// Deliberately no induction factors, no tip-loss correction, no wake model:
// this is the plain velocity-triangle formulation.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rotorkit/airfoil_polar.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/util.hpp"

namespace rotorkit {

// Ambient wind state.
struct FlowConditions {
  double wind_speed = 0.0;             // V, m/s
  double air_density = 0.0;            // rho, kg/m^3
  double kinematic_viscosity = 0.0;    // nu, m^2/s

  void validate() const {
    if (!(wind_speed > 0.0)) throw ConfigError("wind_speed must be > 0");
    if (!(air_density > 0.0)) throw ConfigError("air_density must be > 0");
    if (!(kinematic_viscosity > 0.0)) throw ConfigError("kinematic_viscosity must be > 0");
  }
};

struct RotorGeometry {
  double tip_radius = 0.0;             // r_t, m
  double hub_radius = 0.0;             // r_h, m
  double chord = 0.0;                  // c, m (constant along span)
  int blade_count = 0;                 // N_b
  double rotational_speed_rpm = 0.0;

  double span() const { return tip_radius - hub_radius; }   // b, m
  double diameter() const { return 2.0 * tip_radius; }

  void validate() const {
    if (!(hub_radius > 0.0 && hub_radius < tip_radius))
      throw ConfigError("rotor geometry requires 0 < hub_radius < tip_radius");
    if (!(chord > 0.0)) throw ConfigError("chord must be > 0");
    if (blade_count < 1) throw ConfigError("blade_count must be >= 1");
    if (!(rotational_speed_rpm > 0.0)) throw ConfigError("rotational_speed must be > 0");
  }
};

// Re = V c / nu
inline double reynolds_number(const FlowConditions& flow, double chord) {
  flow.validate();
  if (!(chord > 0.0)) throw ConfigError("chord must be > 0");
  return flow.wind_speed * chord / flow.kinematic_viscosity;
}

// rad/s from rpm.
inline double angular_velocity(double rotational_speed_rpm) {
  if (!(rotational_speed_rpm > 0.0)) throw ConfigError("rotational_speed must be > 0");
  return 2.0 * kPi * rotational_speed_rpm / 60.0;
}

inline double tip_speed(const RotorGeometry& geometry) {
  return angular_velocity(geometry.rotational_speed_rpm) * geometry.tip_radius;
}

// Equally spaced interior stations r_n = n/(N+1)*b + r_h, n = 1..N.
// The grid excludes both hub and tip; those get their own treatment in the
// integration (zero anchor and extrapolation).
inline std::vector<double> station_radii(const RotorGeometry& geometry, int station_count) {
  geometry.validate();
  if (station_count < 2)
    throw ConfigError("station_count must be >= 2, got " + std::to_string(station_count));
  std::vector<double> radii(static_cast<std::size_t>(station_count));
  const double b = geometry.span();
  for (int n = 1; n <= station_count; ++n) {
    radii[static_cast<std::size_t>(n - 1)] =
        static_cast<double>(n) / static_cast<double>(station_count + 1) * b + geometry.hub_radius;
  }
  return radii;
}

// Flow and force state at one radius. Angles in degrees, forces per unit span.
struct RadialStation {
  double radius = 0.0;                     // r, m
  double tangential_velocity = 0.0;        // U = omega*r, m/s
  double relative_angle_deg = 0.0;         // beta = atan(U/V)
  double relative_velocity = 0.0;          // W = sqrt(U^2 + V^2), m/s
  double lift_per_span = 0.0;              // L, N/m
  double drag_per_span = 0.0;              // D, N/m
  double tangential_force_per_span = 0.0;  // F_theta = L cos(beta) - D sin(beta), N/m
  double power_per_span = 0.0;             // P_r = F_theta * U, W/m
  double blade_angle_deg = 0.0;            // gamma = beta + incidence
};

// Velocity triangle and section forces at a radius, given the rotation rate.
// Pure kernel: no geometry bounds, callers validate.
inline RadialStation station_solution(double radius, const FlowConditions& flow,
                                      double angular_velocity_rad_s, double chord,
                                      const AerodynamicDesignPoint& design) {
  RadialStation st;
  st.radius = radius;
  st.tangential_velocity = angular_velocity_rad_s * radius;
  const double beta_rad = std::atan(st.tangential_velocity / flow.wind_speed);
  st.relative_angle_deg = rad_to_deg(beta_rad);
  st.relative_velocity = std::sqrt(st.tangential_velocity * st.tangential_velocity +
                                   flow.wind_speed * flow.wind_speed);
  const double dynamic_load =
      0.5 * flow.air_density * st.relative_velocity * st.relative_velocity * chord;
  st.lift_per_span = dynamic_load * design.lift_coefficient;
  st.drag_per_span = dynamic_load * design.drag_coefficient;
  st.tangential_force_per_span =
      st.lift_per_span * std::cos(beta_rad) - st.drag_per_span * std::sin(beta_rad);
  st.power_per_span = st.tangential_force_per_span * st.tangential_velocity;
  st.blade_angle_deg = st.relative_angle_deg + design.incidence_deg;
  return st;
}

inline RadialStation solve_station(double radius, const FlowConditions& flow,
                                   const RotorGeometry& geometry,
                                   const AerodynamicDesignPoint& design) {
  flow.validate();
  geometry.validate();
  design.validate();
  if (radius < geometry.hub_radius || radius > geometry.tip_radius)
    throw OutOfRangeError("radius " + format_sig(radius, 9) + " outside rotor [" +
                          format_sig(geometry.hub_radius, 9) + ", " +
                          format_sig(geometry.tip_radius, 9) + "]");
  return station_solution(radius, flow, angular_velocity(geometry.rotational_speed_rpm),
                          geometry.chord, design);
}

// Spanwise solution and integrated power.
struct RotorSolution {
  std::vector<RadialStation> stations;   // ascending radius, interior only
  double hub_power_per_span = 0.0;       // anchored at zero
  double tip_power_per_span = 0.0;       // extrapolated from the last two stations
  double rotor_power = 0.0;              // P, W
  double electric_power = 0.0;           // drivetrain_efficiency * P, W
  double drivetrain_efficiency = 0.0;
};

// Piecewise-linear integration of P_r over [hub, tip], times blade count.
// Hub segment uses P_r = 0 at the hub; the tip value is a linear
// extrapolation from the last two stations.
inline RotorSolution integrate_rotor_power(std::vector<RadialStation> stations,
                                           const RotorGeometry& geometry,
                                           double drivetrain_efficiency = 0.85) {
  geometry.validate();
  if (stations.size() < 2)
    throw ConfigError("power integration needs at least 2 stations (tip extrapolation)");
  if (!(drivetrain_efficiency > 0.0 && drivetrain_efficiency <= 1.0))
    throw ConfigError("drivetrain_efficiency must be inside (0, 1]");
  for (std::size_t i = 0; i < stations.size(); ++i) {
    if (!(stations[i].radius > geometry.hub_radius && stations[i].radius < geometry.tip_radius))
      throw ConfigError("station radii must lie strictly inside (hub_radius, tip_radius)");
    if (i > 0 && !(stations[i].radius > stations[i - 1].radius))
      throw ConfigError("station radii must be strictly increasing");
  }

  const RadialStation& last = stations.back();
  const RadialStation& prev = stations[stations.size() - 2];
  const double tip_pr = last.power_per_span +
                        (last.power_per_span - prev.power_per_span) /
                            (last.radius - prev.radius) *
                            (geometry.tip_radius - last.radius);

  double sum = 0.5 * (stations.front().power_per_span + 0.0) *
               (stations.front().radius - geometry.hub_radius);
  for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
    sum += 0.5 * (stations[i + 1].power_per_span + stations[i].power_per_span) *
           (stations[i + 1].radius - stations[i].radius);
  }
  sum += 0.5 * (tip_pr + last.power_per_span) * (geometry.tip_radius - last.radius);

  RotorSolution solution;
  solution.stations = std::move(stations);
  solution.hub_power_per_span = 0.0;
  solution.tip_power_per_span = tip_pr;
  solution.rotor_power = static_cast<double>(geometry.blade_count) * sum;
  solution.drivetrain_efficiency = drivetrain_efficiency;
  solution.electric_power = drivetrain_efficiency * solution.rotor_power;
  return solution;
}

// Full pipeline: station placement, per-station solution, integration.
inline RotorSolution evaluate_rotor(const FlowConditions& flow, const RotorGeometry& geometry,
                                    const AerodynamicDesignPoint& design, int station_count = 16,
                                    double drivetrain_efficiency = 0.85) {
  flow.validate();
  design.validate();
  const std::vector<double> radii = station_radii(geometry, station_count);
  const double omega = angular_velocity(geometry.rotational_speed_rpm);
  std::vector<RadialStation> stations;
  stations.reserve(radii.size());
  for (double r : radii)
    stations.push_back(station_solution(r, flow, omega, geometry.chord, design));
  return integrate_rotor_power(std::move(stations), geometry, drivetrain_efficiency);
}

}  // namespace rotorkit
