#pragma once

// Constrained grid sweep over the rotor design variables (diameter,
// rotational speed, chord). Every grid point is evaluated with the full
// rotor model; candidates are ranked feasible-first, then by ascending
// diameter, tip speed, rpm and chord. Results are deterministic and
// independent of how many threads evaluate the grid.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rotorkit/errors.hpp"
#include "rotorkit/rotor_model.hpp"

namespace rotorkit {

// Inclusive stepped interval; both endpoints belong to the grid when the
// step lands on them.
struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;

  void validate(const std::string& name) const {
    if (!(step > 0.0)) throw ConfigError(name + " step must be > 0");
    if (!(min <= max)) throw ConfigError(name + " range requires min <= max");
  }

  std::vector<double> values() const {
    std::vector<double> out;
    const long count = static_cast<long>(std::floor((max - min) / step + 1e-9));
    out.reserve(static_cast<std::size_t>(count + 1));
    for (long i = 0; i <= count; ++i) {
      double x = min + static_cast<double>(i) * step;
      if (x > max) x = max;  // endpoint reached within rounding
      out.push_back(x);
    }
    return out;
  }
};

struct DesignSpace {
  AxisRange diameter_m;     // swept rotor diameter
  AxisRange rpm;            // swept rotational speed
  AxisRange chord_m;        // swept chord length

  void validate() const {
    diameter_m.validate("diameter");
    rpm.validate("rpm");
    chord_m.validate("chord");
    // Every grid point must form a valid rotor.
    if (!(diameter_m.min > 0.0)) throw ConfigError("diameter range must be > 0");
    if (!(rpm.min > 0.0)) throw ConfigError("rpm range must be > 0");
    if (!(chord_m.min > 0.0)) throw ConfigError("chord range must be > 0");
  }
};

struct DesignConstraints {
  double target_electric_power = 0.0;     // W
  double drivetrain_efficiency = 0.85;
  std::optional<double> max_tip_speed;    // m/s, unset = unconstrained
  int station_count = 16;

  void validate() const {
    if (!(target_electric_power >= 0.0)) throw ConfigError("target_electric_power must be >= 0");
    if (!(drivetrain_efficiency > 0.0 && drivetrain_efficiency <= 1.0))
      throw ConfigError("drivetrain_efficiency must be inside (0, 1]");
    if (max_tip_speed && !(*max_tip_speed > 0.0))
      throw ConfigError("max_tip_speed must be > 0 when set");
    if (station_count < 2) throw ConfigError("station_count must be >= 2");
  }
};

// Parameters held fixed across the sweep.
struct FixedRotorParameters {
  double hub_to_tip_ratio = 0.05;
  int blade_count = 3;

  void validate() const {
    if (!(hub_to_tip_ratio > 0.0 && hub_to_tip_ratio < 1.0))
      throw ConfigError("hub_to_tip_ratio must be inside (0, 1)");
    if (blade_count < 1) throw ConfigError("blade_count must be >= 1");
  }
};

struct DesignCandidate {
  RotorGeometry geometry;
  RotorSolution solution;
  double tip_speed = 0.0;   // omega * tip_radius, m/s
  bool feasible = false;
};

namespace detail {

// Contiguous index chunks over worker threads; every slot is written by
// exactly one worker, so results do not depend on the thread count. The
// first exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for_index(std::size_t count, unsigned thread_count, Body&& body) {
  if (thread_count == 0) thread_count = std::max(1u, std::thread::hardware_concurrency());
  thread_count = static_cast<unsigned>(
      std::min<std::size_t>(thread_count, count == 0 ? 1 : count));
  if (thread_count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(thread_count);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t chunk = (count + thread_count - 1) / thread_count;
  for (unsigned t = 0; t < thread_count; ++t) {
    const std::size_t begin = static_cast<std::size_t>(t) * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([begin, end, &body, &failure, &failure_mutex] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        const std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

inline bool rank_before(const DesignCandidate& a, const DesignCandidate& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.geometry.diameter() != b.geometry.diameter())
    return a.geometry.diameter() < b.geometry.diameter();
  if (a.tip_speed != b.tip_speed) return a.tip_speed < b.tip_speed;
  if (a.geometry.rotational_speed_rpm != b.geometry.rotational_speed_rpm)
    return a.geometry.rotational_speed_rpm < b.geometry.rotational_speed_rpm;
  if (a.geometry.chord != b.geometry.chord) return a.geometry.chord < b.geometry.chord;
  return false;  // full ties keep grid-iteration order (stable sort)
}

// Feasible candidates first; ties beyond the rank key preserve the canonical
// grid order (diameter-major, then rpm, then chord).
inline std::vector<DesignCandidate> rank(std::vector<DesignCandidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(), rank_before);
  return candidates;
}

// Evaluates every grid point and returns the ranked candidate list, feasible
// ones first. The infeasible candidates are retained for reporting.
inline std::vector<DesignCandidate> sweep(const DesignSpace& space,
                                          const DesignConstraints& constraints,
                                          const FlowConditions& flow,
                                          const AerodynamicDesignPoint& design,
                                          const FixedRotorParameters& fixed,
                                          unsigned thread_count = 0) {
  space.validate();
  constraints.validate();
  fixed.validate();
  flow.validate();
  design.validate();

  const std::vector<double> diameters = space.diameter_m.values();
  const std::vector<double> rpms = space.rpm.values();
  const std::vector<double> chords = space.chord_m.values();
  const std::size_t total = diameters.size() * rpms.size() * chords.size();
  if (total == 0) throw ConfigError("design space grid is empty");

  std::vector<DesignCandidate> candidates(total);
  detail::parallel_for_index(total, thread_count, [&](std::size_t index) {
    const std::size_t di = index / (rpms.size() * chords.size());
    const std::size_t ri = (index / chords.size()) % rpms.size();
    const std::size_t ci = index % chords.size();

    RotorGeometry geometry;
    geometry.tip_radius = diameters[di] / 2.0;
    geometry.hub_radius = fixed.hub_to_tip_ratio * geometry.tip_radius;
    geometry.chord = chords[ci];
    geometry.blade_count = fixed.blade_count;
    geometry.rotational_speed_rpm = rpms[ri];

    DesignCandidate& candidate = candidates[index];
    candidate.geometry = geometry;
    candidate.solution = evaluate_rotor(flow, geometry, design, constraints.station_count,
                                        constraints.drivetrain_efficiency);
    candidate.tip_speed = tip_speed(geometry);
    candidate.feasible =
        candidate.solution.electric_power >= constraints.target_electric_power &&
        (!constraints.max_tip_speed || candidate.tip_speed <= *constraints.max_tip_speed);
  });

  return rank(std::move(candidates));
}

}  // namespace rotorkit
