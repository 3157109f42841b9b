#pragma once

#include <optional>
#include <string>
#include <vector>

#include "channel.hpp"
#include "tolerance.hpp"

namespace biso {

enum class ComparisonKind {
  FirstMoreCapable,
  SecondMoreCapable,
  Equivalent,
  Incomparable,
};

enum class ComparisonMethod { LorenzSufficient, NumericGrid };

const char* to_string(ComparisonKind k);
const char* to_string(ComparisonMethod m);

// A bias where the mutual-information gap clears the strict margin.
struct Witness {
  double bias = 0;
  double delta = 0;
};

struct ComparabilityVerdict {
  ComparisonKind kind = ComparisonKind::Equivalent;
  ComparisonMethod method = ComparisonMethod::NumericGrid;
  std::optional<Witness> witness_pro;  // delta > strict_margin
  std::optional<Witness> witness_con;  // delta < -strict_margin
  double max_delta = 0, max_delta_bias = 0;
  double min_delta = 0, min_delta_bias = 0;
};

struct Interval {
  double lo = 0, hi = 0;
};

// Grid-resolved subsets of [0, 1/2] where one f-profile strictly exceeds the
// other: i_set where f1 > f2 + strict_margin, j_set the reverse.
struct CrossingSets {
  std::vector<Interval> i_set;
  std::vector<Interval> j_set;
};

// Lorenz-domination sufficiency test for "first channel more capable".
// Some(true)/Some(false) when one curve dominates the other everywhere;
// nullopt when the curves cross (the test is only sufficient).
std::optional<bool> more_capable_sufficient(const BisoChannel& ch1,
                                            const BisoChannel& ch2,
                                            const Tolerance& tol = {});

// Grid decision procedure for the more-capable order: scans the
// mutual-information gap over biases in [0, 1/2] with local refinement at
// the extremes. Not a proof; margins below strict_margin are treated as
// floating noise.
ComparabilityVerdict more_capable_numeric(const BisoChannel& ch1,
                                          const BisoChannel& ch2,
                                          int grid_n = 1025,
                                          const Tolerance& tol = {});

// Essentially-less-noisy order for equal-capacity channels: ch1 dominates
// ch2 exactly when ch2 is more capable than ch1, so the verdict is the
// numeric more-capable scan with the roles swapped. kind FirstMoreCapable
// here means "ch1 essentially-less-noisy dominates ch2".
ComparabilityVerdict essentially_less_noisy_equal_cap(const BisoChannel& ch1,
                                                      const BisoChannel& ch2,
                                                      int grid_n = 1025,
                                                      const Tolerance& tol = {});

CrossingSets crossing_sets(const BisoChannel& ch1, const BisoChannel& ch2,
                           int grid_n = 1025, const Tolerance& tol = {});

struct ChainLink {
  std::string name;
  bool pass = false;
  // Smallest signed slack observed for the link's inequality (>= -abs_eps
  // passes); for parameter-existence links, the parameter's distance into
  // its valid range.
  double margin = 0;
};

struct ChainReport {
  std::vector<ChainLink> links;
  bool all_pass = false;
};

// Verifies the two comparison chains for capacities c1 <= C(f) <= c3: the
// erasure channel at c3 is more capable than f, f more capable than the
// symmetric channel at c1 (mutual-information scans), and the symmetric
// channel at c3 essentially-less-noisy dominates f, f dominates the erasure
// channel at c1 (f-profile scans plus degradation-parameter existence).
ChainReport check_chain(const BisoChannel& f, double c1, double c3,
                        int grid_n = 513, const Tolerance& tol = {});

}  // namespace biso
