// Acceptance gate: runs the pinned verification suite and prints one
// pass/fail line per check. Exit status 0 only when every check passes.
#include <cstdio>

#include "verify.hpp"

int main() {
  auto results = biso::run_suite(biso::Suite::Paper, 0);
  for (const auto& r : results) {
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
  }
  bool ok = biso::all_passed(results);
  std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
  return ok ? 0 : 1;
}
