#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "binmath.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "lorenz.hpp"
#include "oracle.hpp"
#include "ordering.hpp"
#include "random_gen.hpp"
#include "regions.hpp"

namespace biso {

namespace {

constexpr uint64_t kPaperSeed = 0xB150C0DE5EEDull;

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

Rng sub_rng(uint64_t seed, uint64_t stream) {
  return Rng(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
}

// 1. Closed-form capacities for the two parametric families, cross-checked
//    against one minus the Lorenz curve endpoint. Tolerance 1e-10.
CheckResult check_capacity_closed_forms(const Tolerance& tol) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    double p = static_cast<double>(i) / 198.0;
    BisoChannel ch = BisoChannel::bsc(p, tol);
    worst = std::max(worst,
                     std::abs(ch.capacity() - (1.0 - binary_entropy(p, tol))));
    LorenzCurve lc = lorenz(ch, tol);
    worst = std::max(worst,
                     std::abs(ch.capacity() - (1.0 - lc.cumulative.back())));
  }
  for (int i = 0; i < 100; ++i) {
    double e = static_cast<double>(i) / 99.0;
    BisoChannel ch = BisoChannel::bec(e, tol);
    worst = std::max(worst, std::abs(ch.capacity() - (1.0 - e)));
    LorenzCurve lc = lorenz(ch, tol);
    worst = std::max(worst,
                     std::abs(ch.capacity() - (1.0 - lc.cumulative.back())));
  }
  return {"closed-form capacities (bsc, bec, 100 grid values each)",
          worst <= 1e-10, fmt("max |error| = %.3e (tol 1e-10)", worst)};
}

// 2. Paired-entropy mutual information against the explicit-joint oracle on
//    1,000 random (channel, bias) instances. Tolerance 1e-10.
CheckResult check_oracle_equivalence(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 2);
  std::uniform_real_distribution<double> bias(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    BisoChannel ch = random_biso(rng, 6, tol);
    double b = bias(rng);
    double lhs = ch.mutual_info(InputBias::of(b, tol));
    double rhs = mi_from_joint(ch, b, tol);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {"mutual information matches explicit-joint oracle (1000 instances)",
          worst <= 1e-10, fmt("max |gap| = %.3e (tol 1e-10)", worst)};
}

// 3. Any channel is sandwiched between the erasure and symmetric channels
//    of its capacity: Lorenz domination both ways plus full numeric scans.
CheckResult check_capacity_sandwich(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 3);
  double worst_margin = 1.0;
  bool lorenz_ok = true;
  for (int i = 0; i < 100; ++i) {
    BisoChannel f = random_biso(rng, 5, tol);
    double c = f.capacity();
    BisoChannel bsc = BisoChannel::bsc_with_capacity(c, tol);
    BisoChannel bec = BisoChannel::bec_with_capacity(c, tol);
    lorenz_ok = lorenz_ok && dominates(lorenz(f, tol), lorenz(bsc, tol), tol);
    lorenz_ok = lorenz_ok && dominates(lorenz(bec, tol), lorenz(f, tol), tol);
    for (int g = 0; g < 1025; ++g) {
      InputBias x = InputBias::of(g / 2048.0, tol);
      double d1 = f.mutual_info(x) - bsc.mutual_info(x);
      double d2 = bec.mutual_info(x) - f.mutual_info(x);
      worst_margin = std::min({worst_margin, d1, d2});
    }
  }
  bool pass = lorenz_ok && worst_margin >= -1e-9;
  return {"capacity sandwich: erasure above, symmetric below (100 channels)",
          pass,
          fmt("lorenz dominations %s, min scan margin = %.3e (tol -1e-9)",
              lorenz_ok ? "all hold" : "FAILED", worst_margin)};
}

// 4. Capacity-equalized channels with at most three raw outputs are always
//    comparable: zero Incomparable verdicts over 100 random pairs.
CheckResult check_ternary_comparable(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 4);
  std::uniform_real_distribution<double> cap(0.1, 0.9);
  int incomparable = 0;
  for (int i = 0; i < 100; ++i) {
    double c = cap(rng);
    BisoChannel a = random_ternary_with_capacity(rng, c, tol);
    BisoChannel b = random_ternary_with_capacity(rng, c, tol);
    ComparabilityVerdict v = more_capable_numeric(a, b, 1025, tol);
    if (v.kind == ComparisonKind::Incomparable) ++incomparable;
  }
  return {"three-output equal-capacity pairs always comparable (100 pairs)",
          incomparable == 0, fmt("incomparable verdicts = %d (want 0)",
                                 incomparable)};
}

// 5. The bundled counterexample pair: capacities agree to 1e-4 yet the
//    mutual-information gap crosses zero with margins beyond 1e-4.
CheckResult check_counterexample_incomparable(const Tolerance& tol) {
  BisoChannel a = BisoChannel::counterexample_a();
  BisoChannel b = BisoChannel::counterexample_b();
  double gap = std::abs(a.capacity() - b.capacity());
  ComparabilityVerdict v = more_capable_numeric(a, b, 1025, tol);
  bool pass = gap < 1e-4 && v.kind == ComparisonKind::Incomparable &&
              v.max_delta > 1e-4 && v.min_delta < -1e-4;
  return {"counterexample pair: equal capacity, incomparable with witnesses",
          pass,
          fmt("|C_A-C_B| = %.3e (tol 1e-4); delta +%.3e at x=%.4f, %.3e at "
              "x=%.4f (margins 1e-4)",
              gap, v.max_delta, v.max_delta_bias, v.min_delta,
              v.min_delta_bias)};
}

// 6. Five-way equivalence: strict gaps on the counterexample pair, full
//    collapse on comparable pairs, and no predicate disagreement on 100
//    random equal-capacity pairs.
CheckResult check_equivalence(uint64_t seed, const Tolerance& tol) {
  std::string notes;
  bool pass = true;
  try {
    EquivalenceReport rep = equivalence_report(
        BisoChannel::counterexample_a(), BisoChannel::counterexample_b(), 257,
        tol);
    bool strict = rep.all_true() && rep.rtd_sum > rep.td_sum + 1e-5 &&
                  rep.ob_sum > rep.rtd_sum + 1e-6;
    pass = pass && strict;
    notes += fmt("counterexample: td=%.9f rtd=%.9f ob=%.9f (gaps %.3e, %.3e; "
                 "tols 1e-5, 1e-6); ",
                 rep.td_sum, rep.rtd_sum, rep.ob_sum, rep.rtd_sum - rep.td_sum,
                 rep.ob_sum - rep.rtd_sum);

    Rng rng = sub_rng(seed, 6);
    double worst_collapse = 0.0;
    for (int i = 0; i < 5; ++i) {
      BisoChannel f = random_biso(rng, 5, tol);
      double c = f.capacity();
      for (int variant = 0; variant < 2; ++variant) {
        BisoChannel other = variant == 0
                                ? BisoChannel::bec_with_capacity(c, tol)
                                : BisoChannel::bsc_with_capacity(c, tol);
        EquivalenceReport r2 = equivalence_report(f, other, 257, tol);
        pass = pass && r2.all_false();
        worst_collapse = std::max({worst_collapse, std::abs(r2.td_sum - c),
                                   std::abs(r2.rtd_sum - c),
                                   std::abs(r2.ob_sum - c)});
      }
    }
    pass = pass && worst_collapse <= 1e-8;
    notes += fmt("comparable pairs: max |sum - C| = %.3e (tol 1e-8); ",
                 worst_collapse);

    int agree = 0, incomparable = 0;
    std::uniform_real_distribution<double> cap(0.15, 0.85);
    for (int i = 0; i < 100; ++i) {
      double c = cap(rng);
      BisoChannel x = random_biso_with_capacity(rng, c, 5, tol);
      BisoChannel y = random_biso_with_capacity(rng, c, 5, tol);
      EquivalenceReport r = equivalence_report(x, y, 257, tol);
      ++agree;  // equivalence_report throws on disagreement
      if (r.all_true()) ++incomparable;
    }
    notes += fmt("random pairs: %d/100 consistent, %d incomparable", agree,
                 incomparable);
  } catch (const Error& e) {
    pass = false;
    notes += std::string("ERROR: ") + e.what();
  }
  return {"five-way equivalence (counterexample, comparable, 100 random)",
          pass, notes};
}

// 7. Sum-rate nesting: time division <= randomized time division <= outer
//    bound on the counterexample plus 30 random equal-capacity pairs. The
//    Marton sum rate is the randomized-time-division value by construction,
//    so this is the indirect consistency check for that identification.
CheckResult check_nesting(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 7);
  std::uniform_real_distribution<double> cap(0.15, 0.85);
  double worst = 1.0;
  for (int i = 0; i < 31; ++i) {
    BisoChannel x = i == 0 ? BisoChannel::counterexample_a()
                           : random_biso_with_capacity(rng, cap(rng), 5, tol);
    BisoChannel y = i == 0
                        ? BisoChannel::counterexample_b()
                        : random_biso_with_capacity(rng, x.capacity(), 5, tol);
    FProfile p1 = f_profile(x, 257, tol), p2 = f_profile(y, 257, tol);
    double td = std::max(x.capacity(), y.capacity());
    double rtd = rtd_max_sum_rate(p1, p2, tol).value;
    double ob = ob_max_sum_rate(p1, p2, tol).value;
    worst = std::min({worst, rtd - td, ob - rtd});
  }
  return {"sum-rate nesting td <= rtd/marton <= outer bound (31 pairs)",
          worst >= -1e-9, fmt("min nesting slack = %.3e (tol -1e-9)", worst)};
}

// 8. General auxiliaries never beat the best symmetric binary auxiliary:
//    |U| = 4, 200 seeded restarts, 20 random pairs x lambda in {0, 1, 4}.
CheckResult check_binary_aux_optimal(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 8);
  double worst_excess = -1.0;
  for (int i = 0; i < 20; ++i) {
    BisoChannel ch1 = random_biso(rng, 4, tol);
    BisoChannel ch2 = random_biso(rng, 4, tol);
    int li = 0;
    for (double lambda : {0.0, 1.0, 4.0}) {
      double bsc_best = best_bsc_aux(ch1, ch2, lambda, 1025, tol);
      uint64_t case_seed = seed ^ (0x9E3779B97F4A7C15ull * (i * 3 + li + 17));
      AuxSearchResult gen =
          best_general_aux(ch1, ch2, lambda, 4, 200, case_seed, tol);
      worst_excess = std::max(worst_excess, gen.value - bsc_best);
      ++li;
    }
  }
  return {"general auxiliary search never beats binary symmetric (60 cases)",
          worst_excess <= 1e-6,
          fmt("max (general - binary) = %.3e (tol 1e-6)", worst_excess)};
}

// 9. State-doubling symmetrization: cloud information does not drop, private
//    information is unchanged, uniform input does not lower receiver-1
//    information. 500 random auxiliaries.
CheckResult check_symmetrization_battery(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> states(1, 4);
  double worst_gain = 1.0, worst_eq = 0.0;
  for (int i = 0; i < 500; ++i) {
    BisoChannel ch1 = random_biso(rng, 4, tol);
    BisoChannel ch2 = random_biso(rng, 4, tol);
    int m = states(rng);
    AuxChannel aux;
    double total = 0.0;
    for (int u = 0; u < m; ++u) {
      aux.u_probs.push_back(0.05 - std::log(1.0 - unit(rng)));
      aux.x0_given_u.push_back(unit(rng));
      total += aux.u_probs.back();
    }
    for (double& p : aux.u_probs) p /= total;
    SymmetrizationCheck chk = check_symmetrization(ch1, ch2, aux, tol);
    worst_gain = std::min({worst_gain, chk.u_y2_gain, chk.x_y1_gain});
    worst_eq = std::max(worst_eq, std::abs(chk.x_y1_given_u_change));
  }
  bool pass = worst_gain >= -1e-9 && worst_eq <= 1e-9;
  return {"symmetrization inequalities on 500 random auxiliaries", pass,
          fmt("min gain = %.3e (tol -1e-9), max |conditional change| = %.3e "
              "(tol 1e-9)",
              worst_gain, worst_eq)};
}

// 10. Convexity of y -> h(x * h^{-1}(y)): second differences on a
//     1,000-point grid for 9 crossovers, tolerance 1e-9.
CheckResult check_entropy_transform_convexity(const Tolerance& tol) {
  double worst = 1.0;
  for (int k = 1; k <= 9; ++k) {
    double x = 0.05 * k;
    auto g = [&](double y) {
      return binary_entropy(convolve(x, binary_entropy_inverse(y, tol), tol),
                            tol);
    };
    const int n = 1000;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
      vals[i] = g(static_cast<double>(i) / (n - 1));
    }
    for (int i = 1; i + 1 < n; ++i) {
      worst = std::min(worst, vals[i - 1] + vals[i + 1] - 2.0 * vals[i]);
    }
  }
  return {"entropy-transform convexity (9 crossovers, 1000-point grid)",
          worst >= -1e-9,
          fmt("min second difference = %.3e (tol -1e-9)", worst)};
}

// 11. Replacing the second receiver of the counterexample pair by the more
//     capable erasure channel collapses the sum rate back to C.
CheckResult check_better_receiver(const Tolerance& tol) {
  std::string detail;
  bool pass = false;
  try {
    BetterReceiverReport rep = better_receiver_demo(
        BisoChannel::counterexample_a(), BisoChannel::counterexample_b(), 257,
        tol);
    pass = rep.sum_original > rep.capacity + 1e-5 &&
           std::abs(rep.sum_with_bec - rep.capacity) <= 1e-8;
    detail = fmt("C = %.9f, sum(A,B) = %.9f (gap %.3e, tol 1e-5), "
                 "sum(A,erasure) = %.9f (|diff| %.3e, tol 1e-8)",
                 rep.capacity, rep.sum_original, rep.sum_original - rep.capacity,
                 rep.sum_with_bec, std::abs(rep.sum_with_bec - rep.capacity));
  } catch (const Error& e) {
    detail = std::string("ERROR: ") + e.what();
  }
  return {"more capable receiver shrinks the achievable sum rate", pass,
          detail};
}

// 12. Comparison chains across capacities c1 <= c2 <= c3 on 50 random
//     instances; the mutual-information scans must clear -1e-9.
CheckResult check_chains(uint64_t seed, const Tolerance& tol) {
  Rng rng = sub_rng(seed, 12);
  std::uniform_real_distribution<double> mid(0.25, 0.75);
  std::uniform_real_distribution<double> lo_frac(0.3, 0.95);
  std::uniform_real_distribution<double> hi_frac(0.05, 0.7);
  double worst = 1.0;
  bool all = true;
  for (int i = 0; i < 50; ++i) {
    double c2 = mid(rng);
    double c1 = c2 * lo_frac(rng);
    double c3 = c2 + (1.0 - c2) * hi_frac(rng);
    BisoChannel f = random_biso_with_capacity(rng, c2, 5, tol);
    ChainReport rep = check_chain(f, c1, c3, 513, tol);
    all = all && rep.all_pass;
    worst = std::min({worst, rep.links[0].margin, rep.links[1].margin});
  }
  return {"capacity-ordered comparison chains (50 random instances)",
          all && worst >= -1e-9,
          fmt("all links %s, min scan margin = %.3e (tol -1e-9)",
              all ? "pass" : "FAILED", worst)};
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, uint64_t seed,
                                   const Tolerance& tol) {
  tol.validate();
  uint64_t s = suite == Suite::Paper ? kPaperSeed : seed;
  std::vector<CheckResult> out;
  out.push_back(check_capacity_closed_forms(tol));
  out.push_back(check_oracle_equivalence(s, tol));
  out.push_back(check_capacity_sandwich(s, tol));
  out.push_back(check_ternary_comparable(s, tol));
  out.push_back(check_counterexample_incomparable(tol));
  out.push_back(check_equivalence(s, tol));
  out.push_back(check_nesting(s, tol));
  out.push_back(check_binary_aux_optimal(s, tol));
  out.push_back(check_symmetrization_battery(s, tol));
  out.push_back(check_entropy_transform_convexity(tol));
  out.push_back(check_better_receiver(tol));
  out.push_back(check_chains(s, tol));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace biso
