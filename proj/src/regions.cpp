#include "regions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "errors.hpp"

namespace biso {

namespace {

constexpr double kPointEps = 1e-12;

void require_equal_capacity(double c1, double c2, const Tolerance& tol,
                            const char* where) {
  if (std::abs(c1 - c2) > tol.cap_eps) {
    throw Error(ErrorCode::CapacityMismatch,
                std::string(where) + ": capacities differ by more than the "
                "equal-capacity tolerance");
  }
}

// Shared uniform sampling of both f-profiles plus the strict crossing sets.
struct CommonGrid {
  std::vector<double> s, f1, f2;
  std::vector<int> i_idx, j_idx;  // f1 > f2 + margin / f2 > f1 + margin
  double c = 0;                   // common capacity (average)
  double step = 0;
};

CommonGrid make_common_grid(const FProfile& p1, const FProfile& p2,
                            const Tolerance& tol) {
  size_t n = std::max({p1.s.size(), p2.s.size(), size_t{257}});
  CommonGrid g;
  g.c = 0.5 * (p1.capacity + p2.capacity);
  g.s.resize(n);
  g.f1.resize(n);
  g.f2.resize(n);
  for (size_t i = 0; i < n; ++i) {
    double s = static_cast<double>(i) / (2.0 * (n - 1));
    g.s[i] = s;
    g.f1[i] = p1.value(s, tol);
    g.f2[i] = p2.value(s, tol);
  }
  g.step = g.s[1] - g.s[0];
  for (size_t i = 0; i < n; ++i) {
    double gap = g.f1[i] - g.f2[i];
    if (gap > tol.strict_margin) g.i_idx.push_back(static_cast<int>(i));
    if (-gap > tol.strict_margin) g.j_idx.push_back(static_cast<int>(i));
  }
  return g;
}

std::vector<RegionPoint> pareto_sorted(std::vector<RegionPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RegionPoint& a,
                                       const RegionPoint& b) {
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 < b.r2;
  });
  std::vector<RegionPoint> kept;
  double best_r2 = -1.0;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    if (it->r2 > best_r2 + kPointEps) {
      kept.push_back(*it);
      best_r2 = it->r2;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

// Removes points strictly below a chord of their neighbors, leaving the
// upper concave envelope (collinear points are kept).
std::vector<RegionPoint> upper_concave(std::vector<RegionPoint> pts) {
  if (pts.size() < 3) return pts;
  std::vector<RegionPoint> hull;
  for (const RegionPoint& p : pts) {
    while (hull.size() >= 2) {
      const RegionPoint& a = hull[hull.size() - 2];
      const RegionPoint& b = hull.back();
      double cross = (b.r1 - a.r1) * (p.r2 - a.r2) -
                     (b.r2 - a.r2) * (p.r1 - a.r1);
      if (cross > kPointEps) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

// Two zoom rounds of dense re-evaluation around a grid optimum, using the
// exact objective. Returns the best value found; best_x/best_y updated.
void zoom_refine_2d(const std::function<double(double, double)>& fn,
                    double step, double* best_x, double* best_y,
                    double* best_v) {
  double radius = step;
  for (int round = 0; round < 2; ++round) {
    double x0 = *best_x, y0 = *best_y;
    for (int i = 0; i <= 16; ++i) {
      for (int j = 0; j <= 16; ++j) {
        double x = clamp(x0 + radius * (i - 8) / 8.0, 0.0, 0.5);
        double y = clamp(y0 + radius * (j - 8) / 8.0, 0.0, 0.5);
        double v = fn(x, y);
        if (v > *best_v) {
          *best_v = v;
          *best_x = x;
          *best_y = y;
        }
      }
    }
    radius /= 8.0;
  }
}

void zoom_refine_1d(const std::function<double(double)>& fn, double step,
                    double* best_x, double* best_v) {
  double radius = step;
  for (int round = 0; round < 3; ++round) {
    double x0 = *best_x;
    for (int i = 0; i <= 32; ++i) {
      double x = clamp(x0 + radius * (i - 16) / 16.0, 0.0, 0.5);
      double v = fn(x);
      if (v > *best_v) {
        *best_v = v;
        *best_x = x;
      }
    }
    radius /= 16.0;
  }
}

}  // namespace

double FProfile::value(double s_point, const Tolerance& tol) const {
  return channel.f_value(InputBias::of(s_point, tol));
}

FProfile f_profile(const BisoChannel& ch, int grid_n, const Tolerance& tol) {
  tol.validate();
  if (grid_n < 2) throw_domain("f_profile: grid_n must be >= 2");
  FProfile p{ch, {}, {}, ch.capacity()};
  p.s.resize(grid_n);
  p.f.resize(grid_n);
  for (int j = 0; j < grid_n; ++j) {
    p.s[j] = static_cast<double>(j) / (2.0 * (grid_n - 1));
    p.f[j] = ch.f_value(InputBias::of(p.s[j], tol));
  }
  return p;
}

RateRegion td_region(double c1, double c2, int grid_n) {
  if (!(c1 >= 0 && c2 >= 0)) throw_domain("td_region: capacities must be >= 0");
  if (grid_n < 2) throw_domain("td_region: grid_n must be >= 2");
  RateRegion r;
  for (int i = 0; i < grid_n; ++i) {
    double alpha = static_cast<double>(i) / (grid_n - 1);
    RegionPoint p;
    p.r1 = alpha * c1;
    p.r2 = (1.0 - alpha) * c2;
    p.a = alpha;
    r.frontier.push_back(p);
  }
  double alpha_best = c1 >= c2 ? 1.0 : 0.0;
  r.max_sum_rate = std::max(c1, c2);
  r.max_sum_generator = {alpha_best * c1, (1.0 - alpha_best) * c2, 0, 0,
                         alpha_best};
  return r;
}

RateRegion superposition_region(const FProfile& dom, const FProfile& other,
                                const Tolerance& tol) {
  tol.validate();
  double cd = dom.capacity;
  auto sum_cap = [&](double fd, double fo) {
    return std::max(std::min(fo + cd - fd, cd), 0.0);
  };
  std::vector<RegionPoint> pts;
  size_t n = std::max(dom.s.size(), other.s.size());
  for (size_t i = 0; i < n; ++i) {
    double s = static_cast<double>(i) / (2.0 * (n - 1));
    double fd = dom.value(s, tol), fo = other.value(s, tol);
    double cap = sum_cap(fd, fo);
    double b = std::min(fo, cap);
    pts.push_back({cap - b, b, s, 0, 0});
    pts.push_back({cap, 0, s, 0, 0});
  }

  double best_s = 0, best_v = sum_cap(dom.value(0, tol), other.value(0, tol));
  for (const RegionPoint& p : pts) {
    if (p.r1 + p.r2 > best_v) {
      best_v = p.r1 + p.r2;
      best_s = p.s1;
    }
  }
  zoom_refine_1d(
      [&](double s) { return sum_cap(dom.value(s, tol), other.value(s, tol)); },
      1.0 / (2.0 * (n - 1)), &best_s, &best_v);
  {
    double fd = dom.value(best_s, tol), fo = other.value(best_s, tol);
    double cap = sum_cap(fd, fo);
    double b = std::min(fo, cap);
    pts.push_back({cap - b, b, best_s, 0, 0});
  }

  RateRegion r;
  r.frontier = upper_concave(pareto_sorted(std::move(pts)));
  r.max_sum_rate = best_v;
  double fd = dom.value(best_s, tol), fo = other.value(best_s, tol);
  double b = std::min(fo, sum_cap(fd, fo));
  r.max_sum_generator = {sum_cap(fd, fo) - b, b, best_s, 0, 0};
  return r;
}

RtdResult rtd_max_sum_rate(const FProfile& p1, const FProfile& p2,
                           const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(p1.capacity, p2.capacity, tol, "rtd_max_sum_rate");
  CommonGrid g = make_common_grid(p1, p2, tol);
  if (g.i_idx.empty() || g.j_idx.empty()) {
    return {g.c, 0, 0, 0, true};
  }

  auto mix_weight = [](double s1, double s2) {
    // a s2' + (1-a) s1 = 1/2 with the second crossover reflected to
    // s2' = 1 - s2; the denominator is >= 1/2 - s1 > 0 on the sets.
    double denom = 1.0 - s2 - s1;
    return denom > 1e-15 ? (0.5 - s1) / denom : -1.0;
  };
  RtdResult best{-1.0, 0, 0, 0, false};
  for (int i : g.i_idx) {
    for (int j : g.j_idx) {
      double a = mix_weight(g.s[i], g.s[j]);
      if (a < 0.0 || a > 1.0) continue;
      double v = g.c + std::min((1.0 - a) * (g.f1[i] - g.f2[i]),
                                a * (g.f2[j] - g.f1[j]));
      if (v > best.value) best = {v, g.s[i], g.s[j], a, false};
    }
  }
  auto exact = [&](double s1, double s2) {
    double a = mix_weight(s1, s2);
    if (a < 0.0 || a > 1.0) return -1.0;
    double g1 = p1.value(s1, tol) - p2.value(s1, tol);
    double g2 = p2.value(s2, tol) - p1.value(s2, tol);
    return g.c + std::min((1.0 - a) * g1, a * g2);
  };
  zoom_refine_2d(exact, g.step, &best.s1, &best.s2, &best.value);
  best.a = mix_weight(best.s1, best.s2);
  return best;
}

RtdResult ob_max_sum_rate(const FProfile& p1, const FProfile& p2,
                          const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(p1.capacity, p2.capacity, tol, "ob_max_sum_rate");
  CommonGrid g = make_common_grid(p1, p2, tol);
  size_t n = g.s.size();
  std::vector<double> t1(n), t2(n);
  for (size_t i = 0; i < n; ++i) {
    t1[i] = g.f1[i] + g.c - g.f2[i];
    t2[i] = g.f2[i] + g.c - g.f1[i];
  }
  RtdResult best{-1.0, 0, 0, 0, false};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      double v = std::min({g.f1[i] + g.f2[j], t1[i], t2[j]});
      if (v > best.value) best = {v, g.s[i], g.s[j], 0, false};
    }
  }
  auto exact = [&](double s1, double s2) {
    double f1 = p1.value(s1, tol), f2r = p2.value(s1, tol);
    double f2 = p2.value(s2, tol), f1r = p1.value(s2, tol);
    return std::min({f1 + f2, f1 + g.c - f2r, f2 + g.c - f1r});
  };
  zoom_refine_2d(exact, g.step, &best.s1, &best.s2, &best.value);
  return best;
}

RateRegion ob_region(const FProfile& p1, const FProfile& p2, int sweep_weights,
                     const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(p1.capacity, p2.capacity, tol, "ob_region");
  if (sweep_weights < 2) throw_domain("ob_region: sweep_weights must be >= 2");
  CommonGrid g = make_common_grid(p1, p2, tol);
  size_t n = g.s.size();
  std::vector<double> t1(n), t2(n);
  for (size_t i = 0; i < n; ++i) {
    t1[i] = g.f1[i] + g.c - g.f2[i];
    t2[i] = g.f2[i] + g.c - g.f1[i];
  }

  // Closed-form vertices of { R1 <= A, R2 <= B, R1 + R2 <= S, R >= 0 }:
  // the two axis corners plus the two sum-face corners.
  std::vector<RegionPoint> verts;
  verts.reserve(n * n * 4);
  for (size_t i = 0; i < n; ++i) {
    double a_cap = g.f1[i];
    for (size_t j = 0; j < n; ++j) {
      double b_cap = g.f2[j];
      double s_cap = std::max(std::min(t1[i], t2[j]), 0.0);
      double s1 = g.s[i], s2 = g.s[j];
      verts.push_back({std::min(a_cap, s_cap), 0, s1, s2, 0});
      verts.push_back({0, std::min(b_cap, s_cap), s1, s2, 0});
      verts.push_back({a_cap, clamp(s_cap - a_cap, 0.0, b_cap), s1, s2, 0});
      verts.push_back({clamp(s_cap - b_cap, 0.0, a_cap), b_cap, s1, s2, 0});
    }
  }

  std::vector<RegionPoint> pts;
  for (int w = 0; w < sweep_weights; ++w) {
    double lam = static_cast<double>(w) / (sweep_weights - 1);
    const RegionPoint* arg = nullptr;
    double best = -1.0;
    for (const RegionPoint& v : verts) {
      double score = lam * v.r1 + (1.0 - lam) * v.r2;
      if (score > best) {
        best = score;
        arg = &v;
      }
    }
    if (arg && (pts.empty() || std::abs(pts.back().r1 - arg->r1) > kPointEps ||
                std::abs(pts.back().r2 - arg->r2) > kPointEps)) {
      pts.push_back(*arg);
    }
  }

  RtdResult ms = ob_max_sum_rate(p1, p2, tol);
  {
    double a_cap = p1.value(ms.s1, tol), b_cap = p2.value(ms.s2, tol);
    double s_cap = std::min(a_cap + g.c - p2.value(ms.s1, tol),
                            b_cap + g.c - p1.value(ms.s2, tol));
    s_cap = std::max(s_cap, 0.0);
    double r2 = clamp(s_cap - a_cap, 0.0, b_cap);
    double r1 = std::min(a_cap, s_cap - r2);
    pts.push_back({r1, r2, ms.s1, ms.s2, 0});
  }

  RateRegion r;
  r.frontier = pareto_sorted(std::move(pts));
  r.max_sum_rate = ms.value;
  r.max_sum_generator = {0, 0, ms.s1, ms.s2, 0};
  for (const RegionPoint& p : r.frontier) {
    if (std::abs(p.s1 - ms.s1) < kPointEps &&
        std::abs(p.s2 - ms.s2) < kPointEps) {
      r.max_sum_generator = p;
    }
  }
  return r;
}

bool EquivalenceReport::all_true() const {
  return not_comparable && td_strict_in_ob && witness_exists &&
         td_strict_in_mib && mib_strict_in_ob;
}

bool EquivalenceReport::all_false() const {
  return !not_comparable && !td_strict_in_ob && !witness_exists &&
         !td_strict_in_mib && !mib_strict_in_ob;
}

EquivalenceReport equivalence_report(const BisoChannel& ch1,
                                     const BisoChannel& ch2, int grid_n,
                                     const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(ch1.capacity(), ch2.capacity(), tol,
                         "equivalence_report");
  FProfile p1 = f_profile(ch1, grid_n, tol), p2 = f_profile(ch2, grid_n, tol);
  CommonGrid g = make_common_grid(p1, p2, tol);

  EquivalenceReport rep;
  rep.capacity = g.c;
  rep.verdict =
      more_capable_numeric(ch1, ch2, std::max(grid_n, 1025), tol);
  rep.not_comparable = rep.verdict.kind == ComparisonKind::Incomparable;

  rep.td_sum = std::max(ch1.capacity(), ch2.capacity());
  rep.rtd_sum = rtd_max_sum_rate(p1, p2, tol).value;
  rep.ob_sum = ob_max_sum_rate(p1, p2, tol).value;

  if (!g.i_idx.empty() && !g.j_idx.empty()) {
    // The witness objective f1(s1) + f2(s2) separates over the two sets.
    int bi = g.i_idx.front(), bj = g.j_idx.front();
    for (int i : g.i_idx) {
      if (g.f1[i] > g.f1[bi]) bi = i;
    }
    for (int j : g.j_idx) {
      if (g.f2[j] > g.f2[bj]) bj = j;
    }
    double s1 = g.s[bi], v1 = g.f1[bi];
    double s2 = g.s[bj], v2 = g.f2[bj];
    zoom_refine_1d([&](double s) { return p1.value(s, tol); }, g.step, &s1,
                   &v1);
    zoom_refine_1d([&](double s) { return p2.value(s, tol); }, g.step, &s2,
                   &v2);
    rep.witness_s1 = s1;
    rep.witness_s2 = s2;
    rep.witness_value = v1 + v2;
    rep.witness_exists = rep.witness_value > g.c + tol.strict_margin;
  }

  rep.td_strict_in_ob = rep.ob_sum > rep.td_sum + tol.strict_margin;
  rep.td_strict_in_mib = rep.rtd_sum > rep.td_sum + tol.strict_margin;
  rep.mib_strict_in_ob = rep.ob_sum > rep.rtd_sum + tol.strict_margin;

  if (!rep.consistent()) {
    // Near the comparability boundary the thresholded predicates resolve at
    // different scales even though the exact statements are equivalent. The
    // adaptive scan behind not_comparable is the finest instrument, so its
    // value decides and the rest align. A measured margin contradicting it
    // by more than the band below is a real inconsistency, not boundary
    // smear; the band sits well under the separations of any decisively
    // incomparable pair.
    const double band = 1e-4;
    const bool h = rep.not_comparable;
    double worst = 0.0;
    double margins[] = {rep.ob_sum - rep.td_sum - tol.strict_margin,
                        rep.rtd_sum - rep.td_sum - tol.strict_margin,
                        rep.ob_sum - rep.rtd_sum - tol.strict_margin};
    for (double m : margins) worst = std::max(worst, h ? -m : m);
    if (!g.i_idx.empty() && !g.j_idx.empty()) {
      double m = rep.witness_value - g.c - tol.strict_margin;
      worst = std::max(worst, h ? -m : m);
    }
    if (worst > band) {
      std::string msg =
          "equivalence_report: the five equivalent predicates disagree: "
          "not_comparable=" + std::to_string(rep.not_comparable) +
          " td<ob=" + std::to_string(rep.td_strict_in_ob) +
          " witness=" + std::to_string(rep.witness_exists) +
          " td<mib=" + std::to_string(rep.td_strict_in_mib) +
          " mib<ob=" + std::to_string(rep.mib_strict_in_ob) +
          ", worst contradiction " + std::to_string(worst);
      throw Error(ErrorCode::EquivalenceViolation, msg);
    }
    rep.td_strict_in_ob = h;
    rep.td_strict_in_mib = h;
    rep.mib_strict_in_ob = h;
    rep.witness_exists = h;
  }
  return rep;
}

BetterReceiverReport better_receiver_demo(const BisoChannel& ch1,
                                          const BisoChannel& ch2, int grid_n,
                                          const Tolerance& tol) {
  tol.validate();
  require_equal_capacity(ch1.capacity(), ch2.capacity(), tol,
                         "better_receiver_demo");
  ComparabilityVerdict v = more_capable_numeric(ch1, ch2, 1025, tol);
  if (v.kind != ComparisonKind::Incomparable) {
    throw Error(ErrorCode::Precondition,
                "better_receiver_demo: the pair must be incomparable");
  }
  BetterReceiverReport rep;
  rep.capacity = ch1.capacity();
  FProfile p1 = f_profile(ch1, grid_n, tol), p2 = f_profile(ch2, grid_n, tol);
  rep.sum_original = rtd_max_sum_rate(p1, p2, tol).value;
  BisoChannel bec = BisoChannel::bec_with_capacity(rep.capacity, tol);
  FProfile pb = f_profile(bec, grid_n, tol);
  rep.sum_with_bec = rtd_max_sum_rate(p1, pb, tol).value;
  rep.strict_gain = rep.sum_original > rep.capacity + tol.strict_margin;
  rep.collapses = std::abs(rep.sum_with_bec - rep.capacity) <= tol.abs_eps;
  return rep;
}

}  // namespace biso
