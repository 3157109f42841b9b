#include "ordering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "binmath.hpp"
#include "errors.hpp"
#include "lorenz.hpp"

namespace biso {

namespace {

void require_equal_capacity(const BisoChannel& ch1, const BisoChannel& ch2,
                            const Tolerance& tol, const char* where) {
  if (std::abs(ch1.capacity() - ch2.capacity()) > tol.cap_eps) {
    throw Error(ErrorCode::CapacityMismatch,
                std::string(where) + ": channel capacities differ by more "
                "than the equal-capacity tolerance");
  }
}

// Ternary search for the maximum of a smooth function on [lo, hi]; the
// bracket comes from a sampled local maximum and its two neighbors.
double refine_max(const std::function<double(double)>& fn, double lo,
                  double hi, double* arg) {
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (fn(m1) < fn(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  double x = 0.5 * (lo + hi);
  if (arg) *arg = x;
  return fn(x);
}

std::vector<double> half_interval_grid(int grid_n) {
  std::vector<double> xs(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    xs[i] = static_cast<double>(i) / (2.0 * (grid_n - 1));
  }
  return xs;
}

// Scans fn over [0, 1/2], refines every sampled local extremum, and reports
// the global max and min with their locations.
struct ScanResult {
  double max_v, max_x;
  double min_v, min_x;
};

ScanResult scan_extremes(const std::function<double(double)>& fn, int grid_n) {
  std::vector<double> xs = half_interval_grid(grid_n);
  std::vector<double> vs(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) vs[i] = fn(xs[i]);

  ScanResult r{vs[0], xs[0], vs[0], xs[0]};
  auto note = [&](double v, double x) {
    if (v > r.max_v) r.max_v = v, r.max_x = x;
    if (v < r.min_v) r.min_v = v, r.min_x = x;
  };
  for (size_t i = 1; i < xs.size(); ++i) note(vs[i], xs[i]);

  size_t n = xs.size();
  auto bracket = [&](size_t i, double* lo, double* hi) {
    *lo = xs[i == 0 ? 0 : i - 1];
    *hi = xs[i + 1 < n ? i + 1 : n - 1];
  };
  for (size_t i = 0; i < n; ++i) {
    bool left_le = i == 0 || vs[i - 1] <= vs[i];
    bool right_le = i + 1 == n || vs[i + 1] <= vs[i];
    bool left_ge = i == 0 || vs[i - 1] >= vs[i];
    bool right_ge = i + 1 == n || vs[i + 1] >= vs[i];
    double lo, hi, x;
    if (left_le && right_le) {  // sampled local maximum
      bracket(i, &lo, &hi);
      double v = refine_max(fn, lo, hi, &x);
      note(v, x);
    }
    if (left_ge && right_ge) {  // sampled local minimum
      bracket(i, &lo, &hi);
      double v = -refine_max([&](double t) { return -fn(t); }, lo, hi, &x);
      note(v, x);
    }
  }
  return r;
}

}  // namespace

const char* to_string(ComparisonKind k) {
  switch (k) {
    case ComparisonKind::FirstMoreCapable: return "FirstMoreCapable";
    case ComparisonKind::SecondMoreCapable: return "SecondMoreCapable";
    case ComparisonKind::Equivalent: return "Equivalent";
    case ComparisonKind::Incomparable: return "Incomparable";
  }
  return "?";
}

const char* to_string(ComparisonMethod m) {
  switch (m) {
    case ComparisonMethod::LorenzSufficient: return "LorenzSufficient";
    case ComparisonMethod::NumericGrid: return "NumericGrid";
  }
  return "?";
}

std::optional<bool> more_capable_sufficient(const BisoChannel& ch1,
                                            const BisoChannel& ch2,
                                            const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(ch1, ch2, tol, "more_capable_sufficient");
  LorenzCurve l1 = lorenz(ch1, tol), l2 = lorenz(ch2, tol);
  // The lower Lorenz curve belongs to the more capable channel.
  if (dominates(l1, l2, tol)) return true;
  if (dominates(l2, l1, tol)) return false;
  return std::nullopt;
}

ComparabilityVerdict more_capable_numeric(const BisoChannel& ch1,
                                          const BisoChannel& ch2,
                                          int grid_n, const Tolerance& tol) {
  tol.validate();
  if (grid_n < 64) {
    throw Error(ErrorCode::Precondition,
                "more_capable_numeric: grid_n must be >= 64");
  }
  auto delta = [&](double x) {
    InputBias b = InputBias::of(x, tol);
    return ch1.mutual_info(b) - ch2.mutual_info(b);
  };
  ScanResult sr = scan_extremes(delta, grid_n);

  ComparabilityVerdict v;
  v.method = ComparisonMethod::NumericGrid;
  v.max_delta = sr.max_v;
  v.max_delta_bias = sr.max_x;
  v.min_delta = sr.min_v;
  v.min_delta_bias = sr.min_x;
  if (sr.max_v > tol.strict_margin) {
    v.witness_pro = Witness{sr.max_x, sr.max_v};
  }
  if (sr.min_v < -tol.strict_margin) {
    v.witness_con = Witness{sr.min_x, sr.min_v};
  }

  bool pro = v.witness_pro.has_value(), con = v.witness_con.has_value();
  if (pro && con) {
    v.kind = ComparisonKind::Incomparable;
  } else if (sr.max_v <= tol.abs_eps && sr.min_v >= -tol.abs_eps) {
    v.kind = ComparisonKind::Equivalent;
  } else if (sr.min_v >= -tol.abs_eps) {
    v.kind = ComparisonKind::FirstMoreCapable;
  } else if (sr.max_v <= tol.abs_eps) {
    v.kind = ComparisonKind::SecondMoreCapable;
  } else if (pro) {
    // The reverse excursion stays below the strict margin, so it is not
    // trusted as a real crossing; classify by the dominant side.
    v.kind = ComparisonKind::FirstMoreCapable;
  } else if (con) {
    v.kind = ComparisonKind::SecondMoreCapable;
  } else {
    // Both excursions sit between floating noise and the strict margin.
    // No crossing is certified; the larger side wins.
    v.kind = sr.max_v >= -sr.min_v ? ComparisonKind::FirstMoreCapable
                                   : ComparisonKind::SecondMoreCapable;
  }
  return v;
}

ComparabilityVerdict essentially_less_noisy_equal_cap(const BisoChannel& ch1,
                                                      const BisoChannel& ch2,
                                                      int grid_n,
                                                      const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(ch1, ch2, tol, "essentially_less_noisy_equal_cap");
  // For equal capacities, ch1 dominates ch2 in the essentially-less-noisy
  // order exactly when ch2 is more capable than ch1.
  return more_capable_numeric(ch2, ch1, grid_n, tol);
}

CrossingSets crossing_sets(const BisoChannel& ch1, const BisoChannel& ch2,
                           int grid_n, const Tolerance& tol) {
  tol.validate();
  if (grid_n < 64) {
    throw Error(ErrorCode::Precondition, "crossing_sets: grid_n must be >= 64");
  }
  std::vector<double> xs = half_interval_grid(grid_n);
  CrossingSets cs;
  auto collect = [&](double sign, std::vector<Interval>& out) {
    bool open = false;
    for (double s : xs) {
      InputBias b = InputBias::of(s, tol);
      double g = sign * (ch1.f_value(b) - ch2.f_value(b));
      if (g > tol.strict_margin) {
        if (!open) {
          out.push_back({s, s});
          open = true;
        } else {
          out.back().hi = s;
        }
      } else {
        open = false;
      }
    }
  };
  collect(+1.0, cs.i_set);
  collect(-1.0, cs.j_set);
  return cs;
}

ChainReport check_chain(const BisoChannel& f, double c1, double c3,
                        int grid_n, const Tolerance& tol) {
  tol.validate();
  double c2 = f.capacity();
  if (c1 > c2 + tol.abs_eps || c2 > c3 + tol.abs_eps || c1 < -tol.abs_eps ||
      c3 > 1.0 + tol.abs_eps) {
    throw Error(ErrorCode::Precondition,
                "check_chain: capacities must satisfy 0 <= c1 <= C(f) <= c3 <= 1");
  }
  BisoChannel bec3 = BisoChannel::bec_with_capacity(std::min(c3, 1.0), tol);
  BisoChannel bsc1 = BisoChannel::bsc_with_capacity(std::max(c1, 0.0), tol);
  BisoChannel bsc3 = BisoChannel::bsc_with_capacity(std::min(c3, 1.0), tol);
  BisoChannel bec1 = BisoChannel::bec_with_capacity(std::max(c1, 0.0), tol);

  ChainReport rep;
  auto scan_min_gap = [&](const std::function<double(double)>& gap) {
    return scan_extremes(gap, grid_n).min_v;
  };
  auto add = [&](std::string name, double margin) {
    rep.links.push_back({std::move(name), margin >= -tol.abs_eps, margin});
  };

  add("more-capable: erasure(c3) over f", scan_min_gap([&](double x) {
        InputBias b = InputBias::of(x, tol);
        return bec3.mutual_info(b) - f.mutual_info(b);
      }));
  add("more-capable: f over symmetric(c1)", scan_min_gap([&](double x) {
        InputBias b = InputBias::of(x, tol);
        return f.mutual_info(b) - bsc1.mutual_info(b);
      }));
  add("less-noisy: symmetric(c3) over f", scan_min_gap([&](double s) {
        InputBias b = InputBias::of(s, tol);
        return bsc3.f_value(b) - f.f_value(b);
      }));
  add("less-noisy: f over erasure(c1)", scan_min_gap([&](double s) {
        InputBias b = InputBias::of(s, tol);
        return f.f_value(b) - bec1.f_value(b);
      }));

  // Degradation parameters tying the unequal-capacity endpoints to the
  // equal-capacity comparisons: a symmetric channel at c3 cascades to one at
  // c2 through crossover q, an erasure channel at c2 to one at c1 through
  // extra erasure d. Existence means q in [0, 1/2] and d in [0, 1].
  double p3 = bsc3.family_param();
  double p2 = binary_entropy_inverse(1.0 - c2, tol);
  double q = (1.0 - 2.0 * p3 > tol.root_eps)
                 ? (p2 - p3) / (1.0 - 2.0 * p3)
                 : 0.0;
  add("degradation crossover symmetric(c3) to symmetric(c2)",
      std::min(q, 0.5 - q));
  double d = (c2 > tol.root_eps) ? 1.0 - c1 / c2 : 0.0;
  add("degradation erasure erasure(c2) to erasure(c1)", std::min(d, 1.0 - d));

  rep.all_pass = true;
  for (const auto& ln : rep.links) rep.all_pass = rep.all_pass && ln.pass;
  return rep;
}

}  // namespace biso
