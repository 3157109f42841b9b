#include "binmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace biso {

namespace {

double check_unit_interval(double v, const char* name, const Tolerance& tol) {
  if (!std::isfinite(v) || v < -tol.abs_eps || v > 1.0 + tol.abs_eps)
    throw_domain(std::string(name) + " outside [0,1]: " + std::to_string(v));
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double binary_entropy(double x, const Tolerance& tol) {
  x = check_unit_interval(x, "binary_entropy argument", tol);
  if (x == 0.0 || x == 1.0) return 0.0;  // 0 log 0 := 0
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double binary_entropy_inverse(double y, const Tolerance& tol) {
  y = check_unit_interval(y, "binary_entropy_inverse argument", tol);
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  double lo = 0.0, hi = 0.5;
  // h is strictly increasing on [0, 1/2]; an absolute x-window of 1e-15 keeps
  // |h(x) - y| below root_eps since h' <= log2((1-x)/x) grows only
  // logarithmically.
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (binary_entropy(mid, tol) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double convolve(double a, double b, const Tolerance& tol) {
  a = check_unit_interval(a, "convolve first argument", tol);
  b = check_unit_interval(b, "convolve second argument", tol);
  return std::clamp(a * (1.0 - b) + b * (1.0 - a), 0.0, 1.0);
}

}  // namespace biso
