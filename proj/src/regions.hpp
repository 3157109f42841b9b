#pragma once

#include <vector>

#include "channel.hpp"
#include "ordering.hpp"
#include "tolerance.hpp"

namespace biso {

// Sampled f(s) = I(U;Y) profile for BSC(s) auxiliaries with uniform input.
// The channel is kept so refinement steps can evaluate f exactly between
// grid points.
struct FProfile {
  BisoChannel channel;
  std::vector<double> s;  // uniform grid on [0, 1/2]
  std::vector<double> f;  // f(s_j)
  double capacity = 0;

  double value(double s_point, const Tolerance& tol = {}) const;
};

FProfile f_profile(const BisoChannel& ch, int grid_n = 257,
                   const Tolerance& tol = {});

// One boundary point with the parameters that generate it. Unused generator
// slots are zero: time division fills a only, superposition s1 only, the
// outer bound s1 and s2.
struct RegionPoint {
  double r1 = 0, r2 = 0;
  double s1 = 0, s2 = 0, a = 0;
};

struct RateRegion {
  std::vector<RegionPoint> frontier;  // r1 increasing, r2 decreasing
  double max_sum_rate = 0;
  RegionPoint max_sum_generator;
};

// Time division between dedicated links of capacities c1 and c2.
RateRegion td_region(double c1, double c2, int grid_n = 65);

// Layered coding with the first (dominant) profile's receiver decoding the
// cloud center: union over s of { R2 <= f_other(s),
// R1 + R2 <= f_other(s) + C_dom - f_dom(s), R1 + R2 <= C_dom }.
RateRegion superposition_region(const FProfile& dom, const FProfile& other,
                                const Tolerance& tol = {});

struct RtdResult {
  double value = 0;
  double s1 = 0, s2 = 0, a = 0;
  bool degenerate = false;  // a crossing set was empty; value is exactly C
};

// Max sum rate of randomized time division over crossing-set parameters:
// C + min{ (1-a)(f1(s1) - f2(s1)), a(f2(s2) - f1(s2)) } with the mixing
// weight a fixed by a(1 - s2) + (1 - a)s1 = 1/2 after reflecting s2 to
// 1 - s2. This value is also the binary-input Marton max sum rate.
RtdResult rtd_max_sum_rate(const FProfile& p1, const FProfile& p2,
                           const Tolerance& tol = {});

// Max sum rate of the outer bound: max over (s1, s2) of
// min{ f1(s1) + f2(s2), f1(s1) + C - f2(s1), f2(s2) + C - f1(s2) }.
RtdResult ob_max_sum_rate(const FProfile& p1, const FProfile& p2,
                          const Tolerance& tol = {});

// Full outer-bound frontier via a weighted-sum sweep over the closed-form
// vertices of each (s1, s2) constraint polytope.
RateRegion ob_region(const FProfile& p1, const FProfile& p2,
                     int sweep_weights = 512, const Tolerance& tol = {});

// The five equivalent strictness predicates for an equal-capacity pair:
//   a  not more-capable comparable
//   b  time division strictly inside the outer bound
//   c  crossing-set witness with f1(s1) + f2(s2) > C exists
//   d  time division strictly inside the Marton sum rate
//   e  Marton sum rate strictly below the outer bound's
struct EquivalenceReport {
  bool not_comparable = false;
  bool td_strict_in_ob = false;
  bool witness_exists = false;
  bool td_strict_in_mib = false;
  bool mib_strict_in_ob = false;
  double capacity = 0;
  double td_sum = 0, rtd_sum = 0, ob_sum = 0;
  double witness_s1 = 0, witness_s2 = 0, witness_value = 0;
  ComparabilityVerdict verdict;

  bool all_true() const;
  bool all_false() const;
  bool consistent() const { return all_true() || all_false(); }
};

// Computes all five predicates and throws EquivalenceViolation when they
// disagree (they are provably equivalent, so disagreement means a bug).
EquivalenceReport equivalence_report(const BisoChannel& ch1,
                                     const BisoChannel& ch2, int grid_n = 257,
                                     const Tolerance& tol = {});

// Replacing the second receiver of an incomparable pair by the more capable
// erasure channel at the same capacity collapses the achievable sum rate
// back to C.
struct BetterReceiverReport {
  double capacity = 0;
  double sum_original = 0;   // > C for an incomparable pair
  double sum_with_bec = 0;   // = C
  bool strict_gain = false;  // sum_original > C + strict_margin
  bool collapses = false;    // |sum_with_bec - C| <= abs_eps
};

BetterReceiverReport better_receiver_demo(const BisoChannel& ch1,
                                          const BisoChannel& ch2,
                                          int grid_n = 257,
                                          const Tolerance& tol = {});

}  // namespace biso
