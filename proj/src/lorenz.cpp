#include "lorenz.hpp"

#include <algorithm>
#include <cmath>

#include "binmath.hpp"
#include "errors.hpp"

namespace biso {

namespace {

double clamp_unit(double t, const Tolerance& tol, const char* what) {
  if (!std::isfinite(t) || t < -tol.abs_eps || t > 1.0 + tol.abs_eps) {
    throw_domain(what);
  }
  return std::min(std::max(t, 0.0), 1.0);
}

}  // namespace

double StepCurve::value_at(double t) const {
  Tolerance tol;
  t = clamp_unit(t, tol, "StepCurve::value_at: t outside [0, 1]");
  if (t <= breakpoints.front()) return 0.0;
  // First interval whose right endpoint reaches t.
  auto it = std::lower_bound(breakpoints.begin() + 1, breakpoints.end(), t);
  auto k = static_cast<size_t>(it - breakpoints.begin()) - 1;
  return values[std::min(k, values.size() - 1)];
}

double LorenzCurve::value_at(double t) const {
  Tolerance tol;
  t = clamp_unit(t, tol, "LorenzCurve::value_at: t outside [0, 1]");
  if (t <= breakpoints.front()) return cumulative.front();
  auto it = std::lower_bound(breakpoints.begin() + 1, breakpoints.end(), t);
  auto k = static_cast<size_t>(it - breakpoints.begin());
  k = std::min(k, breakpoints.size() - 1);
  double t0 = breakpoints[k - 1], t1 = breakpoints[k];
  double f0 = cumulative[k - 1], f1 = cumulative[k];
  if (t1 - t0 <= 0.0) return f1;
  double w = (t - t0) / (t1 - t0);
  return f0 + w * (f1 - f0);
}

StepCurve biso_curve(const BisoChannel& ch, const Tolerance& tol) {
  tol.validate();
  struct Part {
    double mass, h;
  };
  std::vector<Part> parts;
  parts.reserve(ch.pairs().size());
  for (const auto& pr : ch.pairs()) {
    double m = pr.mass();
    parts.push_back({m, binary_entropy(pr.p_neg / m, tol)});
  }
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.h < b.h; });
  // Adjacent intervals with equal conditional entropy collapse into one so
  // the breakpoint list is canonical for the channel.
  StepCurve sc;
  sc.breakpoints.push_back(0.0);
  for (const auto& p : parts) {
    if (!sc.values.empty() && p.h - sc.values.back() <= tol.abs_eps) {
      sc.breakpoints.back() += p.mass;
    } else {
      sc.values.push_back(p.h);
      sc.breakpoints.push_back(sc.breakpoints.back() + p.mass);
    }
  }
  sc.breakpoints.back() = 1.0;  // masses sum to 1 up to rounding
  return sc;
}

LorenzCurve lorenz(const BisoChannel& ch, const Tolerance& tol) {
  StepCurve sc = biso_curve(ch, tol);
  LorenzCurve lc;
  lc.breakpoints = sc.breakpoints;
  lc.cumulative.resize(sc.breakpoints.size());
  lc.cumulative[0] = 0.0;
  for (size_t k = 1; k < sc.breakpoints.size(); ++k) {
    double len = sc.breakpoints[k] - sc.breakpoints[k - 1];
    lc.cumulative[k] = lc.cumulative[k - 1] + len * sc.values[k - 1];
  }
  return lc;
}

std::vector<double> common_refinement(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      const Tolerance& tol) {
  tol.validate();
  std::vector<double> merged;
  merged.reserve(a.size() + b.size());
  merged.insert(merged.end(), a.begin(), a.end());
  merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end());
  std::vector<double> out;
  for (double t : merged) {
    if (out.empty() || t - out.back() > tol.root_eps) {
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back() < 1.0) out.back() = 1.0;
  return out;
}

bool dominates(const LorenzCurve& f, const LorenzCurve& g,
               const Tolerance& tol) {
  return dominates(f, g, tol.abs_eps, tol);
}

bool dominates(const LorenzCurve& f, const LorenzCurve& g, double slack,
               const Tolerance& tol) {
  // Both curves are piecewise linear, so f <= g + slack everywhere iff it
  // holds at every breakpoint of the common refinement.
  std::vector<double> grid =
      common_refinement(f.breakpoints, g.breakpoints, tol);
  for (double t : grid) {
    if (f.value_at(t) > g.value_at(t) + slack) return false;
  }
  return true;
}

}  // namespace biso
