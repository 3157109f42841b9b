#pragma once

#include <vector>

#include "channel.hpp"
#include "tolerance.hpp"

namespace biso {

// Nondecreasing step function over a partition of [0,1]: f(t) = values[k-1]
// on (breakpoints[k-1], breakpoints[k]], and f(0) = 0. Values are the sorted
// per-pair conditional entropies, interval lengths the pair masses.
struct StepCurve {
  std::vector<double> breakpoints;  // t_0 = 0 < ... < t_N = 1
  std::vector<double> values;       // v_1 <= ... <= v_N, one per interval

  double value_at(double t) const;
};

// Running integral of a StepCurve: convex, piecewise linear, slopes <= 1,
// F(0) = 0, capacity = 1 - F(1).
struct LorenzCurve {
  std::vector<double> breakpoints;
  std::vector<double> cumulative;  // F(t_k)

  double value_at(double t) const;
};

StepCurve biso_curve(const BisoChannel& ch, const Tolerance& tol = {});
LorenzCurve lorenz(const BisoChannel& ch, const Tolerance& tol = {});

// Sorted union of two breakpoint lists, points closer than root_eps merged.
std::vector<double> common_refinement(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      const Tolerance& tol = {});

// True when F(t) <= G(t) + slack at every common-refinement breakpoint,
// which for piecewise-linear curves is equivalent to F <= G + slack
// everywhere. Default slack is abs_eps; strict queries pass -strict_margin.
bool dominates(const LorenzCurve& f, const LorenzCurve& g,
               const Tolerance& tol = {});
bool dominates(const LorenzCurve& f, const LorenzCurve& g, double slack,
               const Tolerance& tol);

}  // namespace biso
