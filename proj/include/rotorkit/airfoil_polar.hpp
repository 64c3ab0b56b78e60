#pragma once

// Tabulated airfoil lift/drag curves per Reynolds regime: curve selection,
// stall detection, and the safety-margined design point derived from them.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "rotorkit/errors.hpp"
#include "rotorkit/util.hpp"

namespace rotorkit {

struct LiftSample {
  double incidence_deg;
  double lift_coefficient;
};

struct DragSample {
  double lift_coefficient;
  double drag_coefficient;
};

// One measured curve pair at a fixed Reynolds number.
// lift_samples ordered by incidence, drag_samples ordered by lift coefficient.
struct PolarCurve {
  double reynolds = 0.0;
  std::vector<LiftSample> lift_samples;
  std::vector<DragSample> drag_samples;

  void validate() const {
    if (!(reynolds > 0.0)) throw ConfigError("polar curve reynolds must be > 0");
    if (lift_samples.size() < 3)
      throw ConfigError("polar curve at Re " + format_sig(reynolds) + " needs at least 3 lift samples");
    for (std::size_t i = 1; i < lift_samples.size(); ++i) {
      if (!(lift_samples[i].incidence_deg > lift_samples[i - 1].incidence_deg))
        throw ConfigError("lift samples must be strictly increasing in incidence (Re " +
                          format_sig(reynolds) + ")");
    }
    if (drag_samples.size() < 2)
      throw ConfigError("polar curve at Re " + format_sig(reynolds) + " needs at least 2 drag samples");
    for (std::size_t i = 0; i < drag_samples.size(); ++i) {
      if (!(drag_samples[i].drag_coefficient > 0.0))
        throw ConfigError("drag coefficients must be > 0 (Re " + format_sig(reynolds) + ")");
      if (i > 0 && !(drag_samples[i].lift_coefficient > drag_samples[i - 1].lift_coefficient))
        throw ConfigError("drag samples must be strictly increasing in lift coefficient (Re " +
                          format_sig(reynolds) + ")");
    }
  }
};

// All curves of one airfoil, ascending in Reynolds number.
struct PolarSet {
  std::string airfoil_name;
  std::vector<PolarCurve> curves;

  // Builds a valid set from curves in any order.
  static PolarSet sorted(std::string name, std::vector<PolarCurve> curves) {
    PolarSet set{std::move(name), std::move(curves)};
    std::sort(set.curves.begin(), set.curves.end(),
              [](const PolarCurve& a, const PolarCurve& b) { return a.reynolds < b.reynolds; });
    set.validate();
    return set;
  }

  void validate() const {
    if (curves.empty()) throw ConfigError("polar set '" + airfoil_name + "' has no curves");
    for (const PolarCurve& curve : curves) curve.validate();
    for (std::size_t i = 1; i < curves.size(); ++i) {
      if (!(curves[i].reynolds > curves[i - 1].reynolds))
        throw ConfigError("polar set '" + airfoil_name +
                          "' must have strictly increasing, unique Reynolds values");
    }
  }
};

enum class DesignPointSource { Fixed, DerivedFromPolar };

// Operating lift/drag/incidence the blade sections are designed for.
struct AerodynamicDesignPoint {
  double lift_coefficient = 0.0;
  double drag_coefficient = 0.0;
  double incidence_deg = 0.0;
  DesignPointSource source = DesignPointSource::Fixed;

  void validate() const {
    if (!(lift_coefficient > 0.0)) throw ConfigError("design lift coefficient must be > 0");
    if (!(drag_coefficient > 0.0)) throw ConfigError("design drag coefficient must be > 0");
    if (!(drag_coefficient < lift_coefficient))
      throw ConfigError("design drag coefficient must be below the lift coefficient");
    if (!(incidence_deg > 0.0 && incidence_deg < 90.0))
      throw ConfigError("design incidence must be inside (0, 90) degrees");
  }
};

// Picks the curve with the largest Reynolds number at or below the operating
// value; below every curve, the lowest-Reynolds curve is used.
inline const PolarCurve& select_curve(const PolarSet& polars, double operating_reynolds) {
  if (polars.curves.empty()) throw ConfigError("polar set '" + polars.airfoil_name + "' has no curves");
  if (!(operating_reynolds > 0.0)) throw ConfigError("operating Reynolds number must be > 0");
  const PolarCurve* chosen = &polars.curves.front();
  for (const PolarCurve& curve : polars.curves) {
    if (curve.reynolds <= operating_reynolds) chosen = &curve;
  }
  return *chosen;
}

inline double stall_lift_coefficient(const PolarCurve& curve) {
  double max_cl = curve.lift_samples.front().lift_coefficient;
  for (const LiftSample& s : curve.lift_samples) max_cl = std::max(max_cl, s.lift_coefficient);
  return max_cl;
}

// Linear interpolation of the drag polar at a lift coefficient, scaled by a
// safety factor. No extrapolation outside the sampled domain.
inline double drag_at_lift(const PolarCurve& curve, double lift_coefficient,
                           double drag_safety_factor = 1.0) {
  if (!(drag_safety_factor >= 1.0)) throw ConfigError("drag safety factor must be >= 1");
  const auto& samples = curve.drag_samples;
  if (lift_coefficient < samples.front().lift_coefficient ||
      lift_coefficient > samples.back().lift_coefficient) {
    throw OutOfRangeError("lift coefficient " + format_sig(lift_coefficient, 9) +
                          " outside drag polar domain [" +
                          format_sig(samples.front().lift_coefficient, 9) + ", " +
                          format_sig(samples.back().lift_coefficient, 9) + "]");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (lift_coefficient == samples[i].lift_coefficient)
      return samples[i].drag_coefficient * drag_safety_factor;  // exact node hit
    if (i > 0 && lift_coefficient < samples[i].lift_coefficient) {
      const DragSample& lo = samples[i - 1];
      const DragSample& hi = samples[i];
      const double t = (lift_coefficient - lo.lift_coefficient) /
                       (hi.lift_coefficient - lo.lift_coefficient);
      return (lo.drag_coefficient + t * (hi.drag_coefficient - lo.drag_coefficient)) *
             drag_safety_factor;
    }
  }
  throw OutOfRangeError("lift coefficient outside drag polar domain");  // unreachable
}

// Design point at stall_margin x stall lift coefficient. The incidence is the
// first crossing of the target lift on the rising branch (up to and including
// the stall sample); post-stall samples are ignored.
inline AerodynamicDesignPoint design_point_from_polar(const PolarCurve& curve,
                                                      double stall_margin = 0.85,
                                                      double drag_safety_factor = 1.0) {
  if (!(stall_margin > 0.0)) throw ConfigError("stall margin must be > 0");
  const double stall_cl = stall_lift_coefficient(curve);
  const double target_cl = stall_margin * stall_cl;

  std::size_t stall_index = 0;
  for (std::size_t i = 0; i < curve.lift_samples.size(); ++i) {
    if (curve.lift_samples[i].lift_coefficient == stall_cl) {
      stall_index = i;
      break;
    }
  }

  double incidence = 0.0;
  bool found = false;
  for (std::size_t i = 0; i <= stall_index; ++i) {
    const LiftSample& s = curve.lift_samples[i];
    if (s.lift_coefficient >= target_cl) {
      if (s.lift_coefficient == target_cl || i == 0) {
        incidence = s.incidence_deg;
      } else {
        const LiftSample& prev = curve.lift_samples[i - 1];
        const double t = (target_cl - prev.lift_coefficient) /
                         (s.lift_coefficient - prev.lift_coefficient);
        incidence = prev.incidence_deg + t * (s.incidence_deg - prev.incidence_deg);
      }
      found = true;
      break;
    }
  }
  if (!found) {
    throw InfeasibleMarginError("target lift coefficient " + format_sig(target_cl, 9) +
                                " (margin " + format_sig(stall_margin) +
                                ") exceeds the rising branch of the lift curve (stall CL " +
                                format_sig(stall_cl, 9) + ")");
  }

  AerodynamicDesignPoint point;
  point.lift_coefficient = target_cl;
  point.drag_coefficient = drag_at_lift(curve, target_cl, drag_safety_factor);
  point.incidence_deg = incidence;
  point.source = DesignPointSource::DerivedFromPolar;
  point.validate();
  return point;
}

}  // namespace rotorkit
