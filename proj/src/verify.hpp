#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tolerance.hpp"

namespace biso {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values backing the outcome
};

// Paper: every instance count and seed is pinned, so the run is fully
// reproducible. Random: identical checks, instances drawn from the caller's
// seed (still deterministic given that seed).
enum class Suite { Paper, Random };

std::vector<CheckResult> run_suite(Suite suite, uint64_t seed,
                                   const Tolerance& tol = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace biso
