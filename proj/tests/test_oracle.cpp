#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "binmath.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "random_gen.hpp"

using namespace biso;

namespace {

AuxChannel bsc_aux(double s) { return {{0.5, 0.5}, {1.0 - s, s}}; }

AuxChannel random_aux(Rng& rng, int states) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  AuxChannel aux;
  double total = 0;
  for (int u = 0; u < states; ++u) {
    aux.u_probs.push_back(unit(rng));
    total += aux.u_probs.back();
    aux.x0_given_u.push_back(unit(rng));
  }
  for (double& p : aux.u_probs) p /= total;
  return aux;
}

}  // namespace

TEST_CASE("joint-distribution mutual information matches the pair shortcut") {
  Tolerance tol;
  CHECK(mi_from_joint(BisoChannel::bsc(0.11), 0.5) ==
        doctest::Approx(1.0 - binary_entropy(0.11)).epsilon(1e-13));
  Rng rng(801);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    BisoChannel ch = random_biso(rng, 5, tol);
    double b = unit(rng);
    CHECK(mi_from_joint(ch, b, tol) ==
          doctest::Approx(ch.mutual_info(InputBias::of(b, tol))).epsilon(1e-11));
    CHECK(mi_from_joint(ch, 0.5, tol) ==
          doctest::Approx(ch.capacity()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mi_from_joint(BisoChannel::bsc(0.1), -0.2), Error);
}

TEST_CASE("auxiliary objective reduces to the profile form for symmetric pairs") {
  Tolerance tol;
  BisoChannel ch1 = BisoChannel::counterexample_a();
  BisoChannel ch2 = BisoChannel::counterexample_b();
  for (double lambda : {0.0, 0.7}) {
    for (double s : {0.05, 0.17, 0.33}) {
      double expect = (lambda + 1.0) * ch2.f_value(InputBias::of(s)) +
                      ch1.capacity() - ch1.f_value(InputBias::of(s));
      CHECK(aux_objective(ch1, ch2, bsc_aux(s), lambda, tol) ==
            doctest::Approx(expect).epsilon(1e-11));
    }
  }
}

TEST_CASE("auxiliary objective endpoints") {
  Tolerance tol;
  BisoChannel ch1 = BisoChannel::counterexample_a();
  BisoChannel ch2 = BisoChannel::counterexample_b();
  // X independent of U: the cloud term vanishes
  AuxChannel indep{{0.3, 0.7}, {0.4, 0.4}};
  CHECK(aux_objective(ch1, ch2, indep, 0.9, tol) ==
        doctest::Approx(ch1.mutual_info(InputBias::of(0.4))).epsilon(1e-11));
  // X determined by a uniform U: only the cloud term survives
  AuxChannel det{{0.5, 0.5}, {1.0, 0.0}};
  CHECK(aux_objective(ch1, ch2, det, 0.9, tol) ==
        doctest::Approx(1.9 * ch2.capacity()).epsilon(1e-11));
}

TEST_CASE("auxiliary objective validates its distribution") {
  BisoChannel ch = BisoChannel::bsc(0.1);
  CHECK_THROWS_AS(aux_objective(ch, ch, {{0.6, 0.6}, {0.2, 0.3}}, 0.0), Error);
  CHECK_THROWS_AS(aux_objective(ch, ch, {{1.0}, {0.2, 0.3}}, 0.0), Error);
  CHECK_THROWS_AS(aux_objective(ch, ch, {{0.5, 0.5}, {1.2, 0.0}}, 0.0), Error);
}

TEST_CASE("binary symmetric auxiliary search matches a dense scan") {
  Tolerance tol;
  BisoChannel ch1 = BisoChannel::counterexample_a();
  BisoChannel ch2 = BisoChannel::counterexample_b();
  double lib = best_bsc_aux(ch1, ch2, 0.5, 1025, tol);
  double dense = -1.0;
  for (int i = 0; i <= 20000; ++i) {
    double s = i / 40000.0;
    double v = 1.5 * ch2.f_value(InputBias::of(s)) + ch1.capacity() -
               ch1.f_value(InputBias::of(s));
    dense = std::max(dense, v);
  }
  CHECK(lib == doctest::Approx(dense).epsilon(1e-7));

  // identical channels make the objective constant in s at lambda = 0
  double flat = best_bsc_aux(ch1, ch1, 0.0, 1025, tol);
  CHECK(flat == doctest::Approx(ch1.capacity()).epsilon(1e-12));

  try {
    best_bsc_aux(ch1, ch2, 0.0, 32, tol);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
}

TEST_CASE("general auxiliary search is deterministic in the seed") {
  Tolerance tol;
  BisoChannel ch1 = BisoChannel::counterexample_a();
  BisoChannel ch2 = BisoChannel::counterexample_b();
  AuxSearchResult a = best_general_aux(ch1, ch2, 0.5, 3, 3, 42, tol);
  AuxSearchResult b = best_general_aux(ch1, ch2, 0.5, 3, 3, 42, tol);
  CHECK(a.value == b.value);
  CHECK(a.aux.u_probs == b.aux.u_probs);
  CHECK(a.aux.x0_given_u == b.aux.x0_given_u);
}

TEST_CASE("general auxiliary search returns a valid distribution") {
  Tolerance tol;
  AuxSearchResult r = best_general_aux(BisoChannel::counterexample_a(),
                                       BisoChannel::counterexample_b(), 1.0, 4,
                                       3, 7, tol);
  REQUIRE(r.aux.u_probs.size() == 4);
  REQUIRE(r.aux.x0_given_u.size() == 4);
  double total = 0;
  for (double p : r.aux.u_probs) {
    CHECK(p >= -1e-12);
    total += p;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  for (double s : r.aux.x0_given_u) {
    CHECK(s >= -1e-12);
    CHECK(s <= 1.0 + 1e-12);
  }
  CHECK(r.value == doctest::Approx(aux_objective(
                       BisoChannel::counterexample_a(),
                       BisoChannel::counterexample_b(), r.aux, 1.0, tol))
                       .epsilon(1e-9));
}

TEST_CASE("general auxiliary search never beats the symmetric binary one") {
  Tolerance tol;
  BisoChannel ch1 = BisoChannel::counterexample_a();
  BisoChannel ch2 = BisoChannel::counterexample_b();
  for (double lambda : {0.0, 1.0}) {
    double bsc = best_bsc_aux(ch1, ch2, lambda, 1025, tol);
    AuxSearchResult gen = best_general_aux(ch1, ch2, lambda, 3, 4, 12345, tol);
    CHECK(gen.value <= bsc + tol.strict_margin);
    CHECK(gen.value >= bsc - 1e-2);
  }
  // identical channels: the objective is bounded by capacity at lambda = 0
  AuxSearchResult self = best_general_aux(ch1, ch1, 0.0, 2, 3, 99, tol);
  CHECK(self.value <= ch1.capacity() + 1e-9);
  CHECK(self.value >= ch1.capacity() - 1e-3);
}

TEST_CASE("general auxiliary search validates its limits") {
  BisoChannel ch = BisoChannel::bsc(0.1);
  CHECK_THROWS_AS(best_general_aux(ch, ch, 0.0, 0, 1, 1), Error);
  CHECK_THROWS_AS(best_general_aux(ch, ch, 0.0, 9, 1, 1), Error);
  CHECK_THROWS_AS(best_general_aux(ch, ch, 0.0, 2, 0, 1), Error);
}

TEST_CASE("symmetrizing doubles states and balances the induced input") {
  AuxChannel one{{1.0}, {0.3}};
  AuxChannel sym = symmetrize_aux(one);
  REQUIRE(sym.u_probs.size() == 2);
  CHECK(sym.u_probs[0] == doctest::Approx(0.5));
  CHECK(sym.u_probs[1] == doctest::Approx(0.5));
  double lo = std::min(sym.x0_given_u[0], sym.x0_given_u[1]);
  double hi = std::max(sym.x0_given_u[0], sym.x0_given_u[1]);
  CHECK(lo == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(hi == doctest::Approx(0.7).epsilon(1e-14));

  Rng rng(802);
  for (int trial = 0; trial < 20; ++trial) {
    AuxChannel aux = random_aux(rng, 3);
    AuxChannel s = symmetrize_aux(aux);
    REQUIRE(s.u_probs.size() == 6);
    double bias = 0, total = 0;
    for (size_t u = 0; u < s.u_probs.size(); ++u) {
      bias += s.u_probs[u] * s.x0_given_u[u];
      total += s.u_probs[u];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bias == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("symmetrizing never lowers the search objective") {
  Tolerance tol;
  BisoChannel ch1 = BisoChannel::counterexample_a();
  BisoChannel ch2 = BisoChannel::counterexample_b();
  double bsc_best = best_bsc_aux(ch1, ch2, 0.5, 1025, tol);
  Rng rng(803);
  for (int trial = 0; trial < 25; ++trial) {
    AuxChannel aux = random_aux(rng, 3);
    SymmetrizationCheck chk = check_symmetrization(ch1, ch2, aux, tol);
    CHECK(chk.pass(tol));
    CHECK(chk.u_y2_gain >= -1e-9);
    CHECK(std::abs(chk.x_y1_given_u_change) <= 1e-9);
    CHECK(chk.x_y1_gain >= -1e-9);

    double before = aux_objective(ch1, ch2, aux, 0.5, tol);
    double after = aux_objective(ch1, ch2, symmetrize_aux(aux), 0.5, tol);
    CHECK(after >= before - 1e-9);
    // a symmetrized objective is a mixture of profile values, so it can
    // never exceed the best symmetric binary auxiliary
    CHECK(after <= bsc_best + 1e-9);
  }
}

TEST_CASE("majorization check accepts equality and clean spreads") {
  std::vector<double> xi{0.5, 0.5};
  CHECK(hlp_check({0.2, 0.8}, {0.2, 0.8}, xi));
  // erasure-style spread versus its symmetric average
  CHECK(hlp_check({0.0, 1.0}, {0.5, 0.5}, xi));
}

TEST_CASE("majorization check accepts averaged sequences") {
  Rng rng(804);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(unit(rng) * 5);
    std::vector<double> x, xi;
    for (int j = 0; j < n; ++j) {
      x.push_back(unit(rng));
      xi.push_back(unit(rng));
    }
    std::sort(x.begin(), x.end());
    double wsum = 0, w = 0;
    for (int j = 0; j < n; ++j) {
      wsum += xi[j] * x[j];
      w += xi[j];
    }
    double mean = wsum / w;
    std::vector<double> y_flat(n, mean), y_mix;
    for (int j = 0; j < n; ++j) y_mix.push_back(0.6 * x[j] + 0.4 * mean);
    CHECK(hlp_check(x, y_flat, xi));
    CHECK(hlp_check(x, y_mix, xi));
  }
}

TEST_CASE("majorization check covers the capacity-matched erasure extreme") {
  // entropy step sequences of the erasure channel versus the two-pair
  // channel it dominates, on their common mass refinement
  BisoChannel ch = BisoChannel::counterexample_a();
  double c = ch.capacity();
  double e = 1.0 - c;
  double h_low = binary_entropy(0.1);
  // refinement boundaries at 1 - e = c and 0.61
  std::vector<double> xi{c, 0.61 - c, 0.39};
  std::vector<double> x_bec{0.0, 1.0, 1.0};
  std::vector<double> y_ch{h_low, h_low, 1.0};
  // both weighted totals equal the common noise budget 1 - c
  REQUIRE(std::abs((0.61 * h_low + 0.39) - e) < 1e-12);
  CHECK(hlp_check(x_bec, y_ch, xi));
}

TEST_CASE("majorization check rejects crossing sequences") {
  // common refinement of the two incomparable channels' entropy steps:
  // neither suffix-dominates the other
  double hA = binary_entropy(0.1), hB = binary_entropy(0.2);
  std::vector<double> xi{0.0634977, 0.61 - 0.0634977, 0.39};
  std::vector<double> x_a{hA, hA, 1.0};
  std::vector<double> y_b{0.0, hB, hB};
  try {
    hlp_check(x_a, y_b, xi);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  try {
    hlp_check(y_b, x_a, xi);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
}

TEST_CASE("majorization check rejects malformed inputs") {
  std::vector<double> xi{0.5, 0.5};
  CHECK_THROWS_AS(hlp_check({0.8, 0.2}, {0.5, 0.5}, xi), Error);
  CHECK_THROWS_AS(hlp_check({0.0, 1.0}, {0.55, 0.55}, xi), Error);
  CHECK_THROWS_AS(hlp_check({0.0, 1.0}, {0.5, 0.5}, {0.5, -0.5}), Error);
  CHECK_THROWS_AS(hlp_check({0.0, 1.0}, {0.5}, xi), Error);
  CHECK_THROWS_AS(hlp_check({}, {}, {}), Error);
  CHECK_THROWS_AS(hlp_check({0.0, 1.0}, {0.5, 0.5}, xi, 0), Error);
}
