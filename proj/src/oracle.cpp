#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "binmath.hpp"
#include "errors.hpp"

namespace biso {

namespace {

// Raw transition rows: out[y][x] = P(y | X=x), expanding each canonical
// pair into its two signed symbols.
std::vector<std::array<double, 2>> raw_rows(const BisoChannel& ch) {
  std::vector<std::array<double, 2>> rows;
  rows.reserve(2 * ch.pairs().size());
  for (const auto& pr : ch.pairs()) {
    rows.push_back({pr.p_pos, pr.p_neg});
    rows.push_back({pr.p_neg, pr.p_pos});
  }
  return rows;
}

double xlog2x_ratio(double p, double q) {
  // p * log2(p/q) with the 0 log 0 limit; q = 0 only occurs with p = 0.
  if (p <= 0.0 || q <= 0.0) return 0.0;
  return p * std::log2(p / q);
}

double mi_rows(const std::vector<std::array<double, 2>>& rows, double p0) {
  double p1 = 1.0 - p0;
  double total = 0.0;
  for (const auto& r : rows) {
    double py = p0 * r[0] + p1 * r[1];
    total += xlog2x_ratio(p0 * r[0], p0 * py);
    total += xlog2x_ratio(p1 * r[1], p1 * py);
  }
  return std::max(total, 0.0);
}

void validate_aux(const AuxChannel& aux, const Tolerance& tol) {
  if (aux.u_probs.empty() || aux.u_probs.size() != aux.x0_given_u.size()) {
    throw_domain("aux channel: u_probs and x0_given_u must match and be nonempty");
  }
  double total = 0.0;
  for (double p : aux.u_probs) {
    if (!(p >= -tol.abs_eps)) throw_domain("aux channel: negative state probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol.abs_eps) {
    throw_domain("aux channel: state probabilities must sum to 1");
  }
  for (double s : aux.x0_given_u) {
    if (!(s >= -tol.abs_eps && s <= 1.0 + tol.abs_eps)) {
      throw_domain("aux channel: conditional outside [0, 1]");
    }
  }
}

// I(U;Y) for the cascade U -> X -> Y over the raw output alphabet.
double mi_u_y(const std::vector<std::array<double, 2>>& rows,
              const AuxChannel& aux) {
  size_t m = aux.u_probs.size(), ny = rows.size();
  std::vector<double> py(ny, 0.0);
  std::vector<double> py_u(ny);
  double total = 0.0;
  for (size_t y = 0; y < ny; ++y) {
    for (size_t u = 0; u < m; ++u) {
      double s = aux.x0_given_u[u];
      py[y] += aux.u_probs[u] * (s * rows[y][0] + (1.0 - s) * rows[y][1]);
    }
  }
  for (size_t u = 0; u < m; ++u) {
    double pu = aux.u_probs[u];
    if (pu <= 0.0) continue;
    double s = aux.x0_given_u[u];
    for (size_t y = 0; y < ny; ++y) {
      py_u[y] = s * rows[y][0] + (1.0 - s) * rows[y][1];
      total += pu * xlog2x_ratio(py_u[y], py[y]);
    }
  }
  return std::max(total, 0.0);
}

double cond_mi_x_y(const std::vector<std::array<double, 2>>& rows,
                   const AuxChannel& aux) {
  double total = 0.0;
  for (size_t u = 0; u < aux.u_probs.size(); ++u) {
    if (aux.u_probs[u] <= 0.0) continue;
    total += aux.u_probs[u] * mi_rows(rows, aux.x0_given_u[u]);
  }
  return total;
}

double objective_rows(const std::vector<std::array<double, 2>>& rows1,
                      const std::vector<std::array<double, 2>>& rows2,
                      const AuxChannel& aux, double lambda) {
  return (lambda + 1.0) * mi_u_y(rows2, aux) + cond_mi_x_y(rows1, aux);
}

// Coarse grid plus ternary polish for a smooth objective of one parameter.
double line_max(const std::function<double(double)>& fn, double lo, double hi,
                double* arg) {
  int coarse = 16;
  double best_t = lo, best_v = fn(lo);
  for (int i = 1; i <= coarse; ++i) {
    double t = lo + (hi - lo) * i / coarse;
    double v = fn(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double step = (hi - lo) / coarse;
  double a = std::max(lo, best_t - step), b = std::min(hi, best_t + step);
  for (int it = 0; it < 50 && b - a > 1e-13; ++it) {
    double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
    if (fn(m1) < fn(m2)) {
      a = m1;
    } else {
      b = m2;
    }
  }
  double t = 0.5 * (a + b), v = fn(t);
  if (v > best_v) {
    best_v = v;
    best_t = t;
  }
  if (arg) *arg = best_t;
  return best_v;
}

}  // namespace

double mi_from_joint(const BisoChannel& ch, double bias_x0,
                     const Tolerance& tol) {
  tol.validate();
  if (!(bias_x0 >= -tol.abs_eps && bias_x0 <= 1.0 + tol.abs_eps)) {
    throw_domain("mi_from_joint: bias outside [0, 1]");
  }
  double p0 = std::min(std::max(bias_x0, 0.0), 1.0);
  return mi_rows(raw_rows(ch), p0);
}

double aux_objective(const BisoChannel& ch1, const BisoChannel& ch2,
                     const AuxChannel& aux, double lambda,
                     const Tolerance& tol) {
  tol.validate();
  validate_aux(aux, tol);
  return objective_rows(raw_rows(ch1), raw_rows(ch2), aux, lambda);
}

double best_bsc_aux(const BisoChannel& ch1, const BisoChannel& ch2,
                    double lambda, int grid_n, const Tolerance& tol) {
  tol.validate();
  if (grid_n < 64) {
    throw Error(ErrorCode::Precondition, "best_bsc_aux: grid_n must be >= 64");
  }
  double c1 = ch1.capacity();
  auto obj = [&](double s) {
    InputBias b = InputBias::of(s, tol);
    return (lambda + 1.0) * ch2.f_value(b) + c1 - ch1.f_value(b);
  };
  double best = obj(0.0);
  double best_s = 0.0;
  for (int i = 1; i < grid_n; ++i) {
    double s = static_cast<double>(i) / (2.0 * (grid_n - 1));
    double v = obj(s);
    if (v > best) {
      best = v;
      best_s = s;
    }
  }
  double step = 0.5 / (grid_n - 1);
  double lo = std::max(0.0, best_s - step), hi = std::min(0.5, best_s + step);
  double polished = line_max(obj, lo, hi, nullptr);
  return std::max(best, polished);
}

AuxSearchResult best_general_aux(const BisoChannel& ch1,
                                 const BisoChannel& ch2, double lambda,
                                 int max_states, int restarts, uint64_t seed,
                                 const Tolerance& tol) {
  tol.validate();
  if (max_states < 1 || max_states > 8) {
    throw Error(ErrorCode::Precondition,
                "best_general_aux: max_states must be in 1..8");
  }
  if (restarts < 1) {
    throw Error(ErrorCode::Precondition, "best_general_aux: restarts must be >= 1");
  }
  auto rows1 = raw_rows(ch1), rows2 = raw_rows(ch2);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  AuxSearchResult best;
  best.value = -1.0;
  for (int r = 0; r < restarts; ++r) {
    AuxChannel aux;
    aux.u_probs.resize(max_states);
    aux.x0_given_u.resize(max_states);
    double total = 0.0;
    for (int u = 0; u < max_states; ++u) {
      aux.u_probs[u] = 0.05 - std::log(1.0 - unit(rng));
      aux.x0_given_u[u] = unit(rng);
      total += aux.u_probs[u];
    }
    for (int u = 0; u < max_states; ++u) aux.u_probs[u] /= total;

    double value = objective_rows(rows1, rows2, aux, lambda);
    for (int sweep = 0; sweep < 40; ++sweep) {
      double before = value;
      for (int u = 0; u < max_states; ++u) {
        double arg = aux.x0_given_u[u];
        double v = line_max(
            [&](double t) {
              AuxChannel probe = aux;
              probe.x0_given_u[u] = t;
              return objective_rows(rows1, rows2, probe, lambda);
            },
            0.0, 1.0, &arg);
        if (v > value) {  // keep the move only when it improves
          value = v;
          aux.x0_given_u[u] = arg;
        }
      }
      for (int u = 0; u < max_states; ++u) {
        // Move this state's mass while rescaling the rest proportionally.
        // The remaining mass is summed directly: dividing by 1 - p_u instead
        // amplifies rounding catastrophically once one state holds nearly
        // everything, and the ascent then climbs the denormalized objective.
        double rest = 0.0;
        for (int w = 0; w < max_states; ++w)
          if (w != u) rest += aux.u_probs[w];
        if (rest < 1e-12) continue;
        auto with_mass = [&](double t) {
          AuxChannel probe = aux;
          double scale = (1.0 - t) / rest;
          for (int w = 0; w < max_states; ++w) probe.u_probs[w] = aux.u_probs[w] * scale;
          probe.u_probs[u] = t;
          return probe;
        };
        double arg = aux.u_probs[u];
        double v = line_max(
            [&](double t) {
              return objective_rows(rows1, rows2, with_mass(t), lambda);
            },
            0.0, 1.0 - 1e-9, &arg);
        if (v > value) {
          value = v;
          aux = with_mass(arg);
        }
      }
      if (value - before < 1e-13) break;
    }
    if (value > best.value) {
      best.value = value;
      best.aux = aux;
    }
  }
  return best;
}

AuxChannel symmetrize_aux(const AuxChannel& aux) {
  AuxChannel out;
  out.u_probs.reserve(2 * aux.u_probs.size());
  out.x0_given_u.reserve(2 * aux.u_probs.size());
  for (size_t u = 0; u < aux.u_probs.size(); ++u) {
    out.u_probs.push_back(0.5 * aux.u_probs[u]);
    out.x0_given_u.push_back(aux.x0_given_u[u]);
    out.u_probs.push_back(0.5 * aux.u_probs[u]);
    out.x0_given_u.push_back(1.0 - aux.x0_given_u[u]);
  }
  return out;
}

bool SymmetrizationCheck::pass(const Tolerance& tol) const {
  return u_y2_gain >= -tol.abs_eps &&
         std::abs(x_y1_given_u_change) <= tol.abs_eps &&
         x_y1_gain >= -tol.abs_eps;
}

SymmetrizationCheck check_symmetrization(const BisoChannel& ch1,
                                         const BisoChannel& ch2,
                                         const AuxChannel& aux,
                                         const Tolerance& tol) {
  tol.validate();
  validate_aux(aux, tol);
  auto rows1 = raw_rows(ch1), rows2 = raw_rows(ch2);
  AuxChannel sym = symmetrize_aux(aux);

  SymmetrizationCheck chk;
  chk.u_y2_gain = mi_u_y(rows2, sym) - mi_u_y(rows2, aux);
  chk.x_y1_given_u_change = cond_mi_x_y(rows1, sym) - cond_mi_x_y(rows1, aux);
  double bias_pre = 0.0;
  for (size_t u = 0; u < aux.u_probs.size(); ++u) {
    bias_pre += aux.u_probs[u] * aux.x0_given_u[u];
  }
  chk.x_y1_gain = mi_rows(rows1, 0.5) - mi_rows(rows1, bias_pre);
  return chk;
}

bool hlp_check(const std::vector<double>& x_seq,
               const std::vector<double>& y_seq,
               const std::vector<double>& xi_seq, int convex_samples,
               const Tolerance& tol) {
  tol.validate();
  size_t n = x_seq.size();
  if (n == 0 || y_seq.size() != n || xi_seq.size() != n) {
    throw Error(ErrorCode::Precondition, "hlp_check: sequences must share a nonzero length");
  }
  if (convex_samples < 1) {
    throw Error(ErrorCode::Precondition, "hlp_check: convex_samples must be >= 1");
  }
  for (size_t j = 0; j < n; ++j) {
    if (!(xi_seq[j] >= -tol.abs_eps)) {
      throw Error(ErrorCode::Precondition, "hlp_check: weights must be nonnegative");
    }
    if (j > 0 && (x_seq[j] < x_seq[j - 1] - tol.abs_eps ||
                  y_seq[j] < y_seq[j - 1] - tol.abs_eps)) {
      throw Error(ErrorCode::Precondition, "hlp_check: sequences must be nondecreasing");
    }
  }
  double sx = 0.0, sy = 0.0;
  for (size_t j = n; j-- > 0;) {
    sx += xi_seq[j] * x_seq[j];
    sy += xi_seq[j] * y_seq[j];
    if (j > 0 && sx < sy - tol.abs_eps) {
      throw Error(ErrorCode::Precondition, "hlp_check: suffix-sum dominance fails");
    }
  }
  if (std::abs(sx - sy) > tol.abs_eps) {
    throw Error(ErrorCode::Precondition, "hlp_check: total weighted sums must be equal");
  }

  double lo = std::min(x_seq.front(), y_seq.front());
  double hi = std::max(x_seq.back(), y_seq.back());
  bool unit_range = lo >= -tol.abs_eps && hi <= 1.0 + tol.abs_eps;

  std::vector<std::function<double(double)>> battery;
  battery.emplace_back([](double t) { return t * t; });
  battery.emplace_back([](double t) { return t * t * t * t; });
  battery.emplace_back([](double t) { return std::exp(t); });
  battery.emplace_back([](double t) { return std::exp(2.0 * t); });
  battery.emplace_back([](double t) { return std::exp(-t); });
  for (int k = 0; k < convex_samples; ++k) {
    double c = lo + (hi - lo) * (k + 1.0) / (convex_samples + 1.0);
    battery.emplace_back([c](double t) { return std::max(t - c, 0.0); });
  }
  if (unit_range) {
    // The entropy transform behind the mutual-information comparison; convex
    // on [0, 1] for each fixed crossover.
    for (double cx : {0.05, 0.15, 0.25, 0.35, 0.45}) {
      battery.emplace_back([cx, &tol](double t) {
        double tt = std::min(std::max(t, 0.0), 1.0);
        double inv = binary_entropy_inverse(tt, tol);
        return binary_entropy(convolve(cx, inv, tol), tol) - tt;
      });
    }
  }

  for (const auto& fn : battery) {
    double vx = 0.0, vy = 0.0;
    for (size_t j = 0; j < n; ++j) {
      vx += xi_seq[j] * fn(x_seq[j]);
      vy += xi_seq[j] * fn(y_seq[j]);
    }
    if (vx < vy - 10.0 * tol.abs_eps) return false;
  }
  return true;
}

}  // namespace biso
