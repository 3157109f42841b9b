#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "biso/biso.h"

#ifndef BISO_DATA_DIR
#define BISO_DATA_DIR "data"
#endif

namespace {

constexpr double kCapA = 0.32391268791053845504;
constexpr double kRtdSumAB = 0.324421527973;
constexpr double kObSumAB = 0.325045918037;

struct Chan {
  biso_channel* h = nullptr;
  ~Chan() { biso_channel_destroy(h); }
  biso_channel** out() { return &h; }
};

struct Region {
  biso_region* h = nullptr;
  ~Region() { biso_region_destroy(h); }
  biso_region** out() { return &h; }
};

}  // namespace

TEST_CASE("version string and default tolerances") {
  REQUIRE(biso_version() != nullptr);
  CHECK(std::string(biso_version()).size() > 0);
  biso_tolerance tol{};
  biso_tolerance_default(&tol);
  CHECK(tol.abs_eps == doctest::Approx(1e-9));
  CHECK(tol.strict_margin == doctest::Approx(1e-6));
  CHECK(tol.root_eps == doctest::Approx(1e-12));
  CHECK(tol.cap_eps == doctest::Approx(1e-4));
}

TEST_CASE("symmetric channel round trip") {
  Chan ch;
  REQUIRE(biso_channel_bsc(0.11, nullptr, ch.out()) == BISO_OK);
  double c = 0;
  REQUIRE(biso_channel_capacity(ch.h, &c) == BISO_OK);
  CHECK(c == doctest::Approx(0.50008404183547200436).epsilon(1e-14));

  size_t n = 0;
  REQUIRE(biso_channel_pair_count(ch.h, &n) == BISO_OK);
  REQUIRE(n == 1);
  double p_pos[1], p_neg[1];
  size_t n_out = 0;
  REQUIRE(biso_channel_pairs(ch.h, p_pos, p_neg, 1, &n_out) == BISO_OK);
  CHECK(n_out == 1);
  CHECK(p_pos[0] == doctest::Approx(0.89).epsilon(1e-15));
  CHECK(p_neg[0] == doctest::Approx(0.11).epsilon(1e-15));

  double mi = 0, mi_folded = 0;
  REQUIRE(biso_channel_mutual_info(ch.h, 0.5, &mi) == BISO_OK);
  CHECK(mi == doctest::Approx(c).epsilon(1e-14));
  REQUIRE(biso_channel_mutual_info(ch.h, 0.8, &mi) == BISO_OK);
  REQUIRE(biso_channel_mutual_info(ch.h, 0.2, &mi_folded) == BISO_OK);
  CHECK(mi == doctest::Approx(mi_folded).epsilon(1e-14));

  double f0 = 0, f_half = 0;
  REQUIRE(biso_channel_f_value(ch.h, 0.0, &f0) == BISO_OK);
  REQUIRE(biso_channel_f_value(ch.h, 0.5, &f_half) == BISO_OK);
  CHECK(f0 == doctest::Approx(c).epsilon(1e-14));
  CHECK(f_half == doctest::Approx(0.0));
}

TEST_CASE("failures report a status and a message") {
  Chan bad;
  CHECK(biso_channel_bsc(1.5, nullptr, bad.out()) == BISO_EDOMAIN);
  CHECK(bad.h == nullptr);
  CHECK(std::string(biso_last_error()).size() > 0);

  // a successful call clears the sticky message
  Chan ok;
  REQUIRE(biso_channel_bsc(0.2, nullptr, ok.out()) == BISO_OK);
  CHECK(std::string(biso_last_error()).empty());

  Chan parse;
  CHECK(biso_channel_parse_spec("not a spec", nullptr, parse.out()) ==
        BISO_EPARSE);
  Chan missing;
  CHECK(biso_channel_load_spec("/no/such/file.json", nullptr, missing.out()) ==
        BISO_EIO);

  double row_bad0[2] = {0.5, 0.4}, row_bad1[2] = {0.4, 0.5};
  Chan nonstoch;
  CHECK(biso_channel_from_rows(row_bad0, row_bad1, 2, nullptr,
                               nonstoch.out()) == BISO_ENOT_STOCHASTIC);
  double row_a0[2] = {0.7, 0.3}, row_a1[2] = {0.6, 0.4};
  Chan asym;
  CHECK(biso_channel_from_rows(row_a0, row_a1, 2, nullptr, asym.out()) ==
        BISO_ENOT_SYMMETRIC);

  double v = 0;
  CHECK(biso_channel_mutual_info(ok.h, 1.5, &v) == BISO_EDOMAIN);
  CHECK(biso_channel_capacity(nullptr, &v) == BISO_EINVAL);
  CHECK(biso_channel_capacity(ok.h, nullptr) == BISO_EINVAL);
  CHECK(biso_channel_bsc(0.1, nullptr, nullptr) == BISO_EINVAL);
}

TEST_CASE("rescaling stays inside the parametric family") {
  Chan bsc;
  REQUIRE(biso_channel_bsc(0.2, nullptr, bsc.out()) == BISO_OK);
  Chan scaled;
  REQUIRE(biso_channel_equalized(bsc.h, 0.4, nullptr, scaled.out()) == BISO_OK);
  double c = 0;
  REQUIRE(biso_channel_capacity(scaled.h, &c) == BISO_OK);
  CHECK(c == doctest::Approx(0.4).epsilon(1e-10));

  Chan general;
  REQUIRE(biso_channel_counterexample_a(general.out()) == BISO_OK);
  Chan fail;
  CHECK(biso_channel_equalized(general.h, 0.4, nullptr, fail.out()) ==
        BISO_EPRECONDITION);
}

TEST_CASE("curve query follows the two-call pattern") {
  Chan a;
  REQUIRE(biso_channel_counterexample_a(a.out()) == BISO_OK);
  size_t n = 0;
  REQUIRE(biso_channel_curve(a.h, nullptr, nullptr, nullptr, 0, &n) == BISO_OK);
  REQUIRE(n == 3);
  std::vector<double> t(n), step(n), cum(n);
  REQUIRE(biso_channel_curve(a.h, t.data(), step.data(), cum.data(), n, &n) ==
          BISO_OK);
  CHECK(t[0] == doctest::Approx(0.0));
  CHECK(t[1] == doctest::Approx(0.61).epsilon(1e-14));
  CHECK(t[2] == doctest::Approx(1.0));
  CHECK(step[0] == doctest::Approx(0.0));
  CHECK(step[1] == doctest::Approx(0.46899559358928122125).epsilon(1e-13));
  CHECK(step[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(cum[0] == doctest::Approx(0.0));
  CHECK(cum[1] == doctest::Approx(0.2860873121).epsilon(1e-9));
  CHECK(cum[2] == doctest::Approx(0.6760873121).epsilon(1e-9));
}

TEST_CASE("labels are copied with truncation") {
  Chan named;
  REQUIRE(biso_channel_parse_spec(
              "{\"type\": \"pairs\", \"pairs\": [[0.9, 0.1]], "
              "\"label\": \"verylonglabel\"}",
              nullptr, named.out()) == BISO_OK);
  char buf[32];
  REQUIRE(biso_channel_label(named.h, buf, sizeof buf) == BISO_OK);
  CHECK(std::string(buf) == "verylonglabel");
  REQUIRE(biso_channel_label(named.h, buf, 5) == BISO_OK);
  CHECK(std::string(buf) == "very");
  CHECK(biso_channel_label(named.h, buf, 0) == BISO_EINVAL);
}

TEST_CASE("comparability verdicts cross the boundary intact") {
  Chan a, b;
  REQUIRE(biso_channel_counterexample_a(a.out()) == BISO_OK);
  REQUIRE(biso_channel_counterexample_b(b.out()) == BISO_OK);

  biso_verdict v{};
  REQUIRE(biso_more_capable_numeric(a.h, b.h, 0, nullptr, &v) == BISO_OK);
  CHECK(v.kind == BISO_INCOMPARABLE);
  CHECK(v.has_witness_pro == 1);
  CHECK(v.has_witness_con == 1);
  CHECK(v.max_delta == doctest::Approx(0.0015299257).epsilon(1e-6));
  CHECK(v.min_delta == doctest::Approx(-0.0011332256).epsilon(1e-6));

  int suff = 42;
  REQUIRE(biso_more_capable_sufficient(a.h, b.h, nullptr, &suff) == BISO_OK);
  CHECK(suff == -1);

  double c = 0;
  REQUIRE(biso_channel_capacity(a.h, &c) == BISO_OK);
  Chan bec;
  REQUIRE(biso_channel_bec_with_capacity(c, nullptr, bec.out()) == BISO_OK);
  REQUIRE(biso_more_capable_sufficient(bec.h, a.h, nullptr, &suff) == BISO_OK);
  CHECK(suff == 1);
  REQUIRE(biso_more_capable_sufficient(a.h, bec.h, nullptr, &suff) == BISO_OK);
  CHECK(suff == 0);

  biso_verdict eln{};
  REQUIRE(biso_essentially_less_noisy(a.h, bec.h, 0, nullptr, &eln) == BISO_OK);
  CHECK(eln.kind == BISO_FIRST_MORE_CAPABLE);

  Chan n1, n2;
  REQUIRE(biso_channel_bsc(0.1, nullptr, n1.out()) == BISO_OK);
  REQUIRE(biso_channel_bsc(0.3, nullptr, n2.out()) == BISO_OK);
  CHECK(biso_essentially_less_noisy(n1.h, n2.h, 0, nullptr, &eln) ==
        BISO_ECAPACITY_MISMATCH);
}

TEST_CASE("crossing sets use the two-call pattern") {
  Chan a, b;
  REQUIRE(biso_channel_counterexample_a(a.out()) == BISO_OK);
  REQUIRE(biso_channel_counterexample_b(b.out()) == BISO_OK);
  size_t i_n = 0, j_n = 0;
  REQUIRE(biso_crossing_sets(a.h, b.h, 0, nullptr, nullptr, nullptr, 0, &i_n,
                             nullptr, nullptr, 0, &j_n) == BISO_OK);
  REQUIRE(i_n >= 1);
  REQUIRE(j_n >= 1);
  std::vector<double> ilo(i_n), ihi(i_n), jlo(j_n), jhi(j_n);
  REQUIRE(biso_crossing_sets(a.h, b.h, 0, nullptr, ilo.data(), ihi.data(), i_n,
                             &i_n, jlo.data(), jhi.data(), j_n,
                             &j_n) == BISO_OK);
  CHECK(ilo.front() < 0.01);
  CHECK(ihi.back() < 0.08);
  CHECK(jlo.front() > 0.05);
  CHECK(jhi.back() > 0.45);
}

TEST_CASE("rate region bounds cross the boundary intact") {
  Chan a, b;
  REQUIRE(biso_channel_counterexample_a(a.out()) == BISO_OK);
  REQUIRE(biso_channel_counterexample_b(b.out()) == BISO_OK);

  Region td;
  REQUIRE(biso_region_compute(a.h, b.h, BISO_BOUND_TD, 0, nullptr, td.out()) ==
          BISO_OK);
  double v = 0, gen[3];
  REQUIRE(biso_region_max_sum(td.h, &v, gen) == BISO_OK);
  CHECK(v == doctest::Approx(kCapA).epsilon(1e-12));

  Region sup;
  REQUIRE(biso_region_compute(a.h, b.h, BISO_BOUND_SUP, 0, nullptr,
                              sup.out()) == BISO_OK);
  REQUIRE(biso_region_max_sum(sup.h, &v, nullptr) == BISO_OK);
  CHECK(v == doctest::Approx(kCapA).epsilon(1e-10));

  Region rtd;
  REQUIRE(biso_region_compute(a.h, b.h, BISO_BOUND_RTD, 0, nullptr,
                              rtd.out()) == BISO_OK);
  REQUIRE(biso_region_max_sum(rtd.h, &v, gen) == BISO_OK);
  CHECK(v == doctest::Approx(kRtdSumAB).epsilon(1e-9));
  CHECK(gen[2] >= 0.0);
  CHECK(gen[2] <= 1.0);
  size_t n = 99;
  REQUIRE(biso_region_point_count(rtd.h, &n) == BISO_OK);
  CHECK(n == 0);

  Region ob;
  REQUIRE(biso_region_compute(a.h, b.h, BISO_BOUND_OB, 0, nullptr, ob.out()) ==
          BISO_OK);
  REQUIRE(biso_region_max_sum(ob.h, &v, gen) == BISO_OK);
  CHECK(v == doctest::Approx(kObSumAB).epsilon(1e-9));
  REQUIRE(biso_region_point_count(ob.h, &n) == BISO_OK);
  REQUIRE(n >= 2);
  double point[5];
  REQUIRE(biso_region_point(ob.h, 0, point) == BISO_OK);
  CHECK(point[0] >= -1e-12);
  CHECK(point[1] == doctest::Approx(kCapA).epsilon(1e-6));
  CHECK(biso_region_point(ob.h, n, point) == BISO_EINVAL);

  Region bad;
  CHECK(biso_region_compute(a.h, b.h, 7, 0, nullptr, bad.out()) ==
        BISO_EDOMAIN);
}

TEST_CASE("equivalence and receiver-swap reports") {
  Chan a, b;
  REQUIRE(biso_channel_counterexample_a(a.out()) == BISO_OK);
  REQUIRE(biso_channel_counterexample_b(b.out()) == BISO_OK);

  biso_equivalence_report rep{};
  REQUIRE(biso_equivalence(a.h, b.h, 0, nullptr, &rep) == BISO_OK);
  CHECK(rep.not_comparable == 1);
  CHECK(rep.td_strict_in_ob == 1);
  CHECK(rep.witness_exists == 1);
  CHECK(rep.td_strict_in_mib == 1);
  CHECK(rep.mib_strict_in_ob == 1);
  CHECK(rep.td_sum == doctest::Approx(kCapA).epsilon(1e-12));
  CHECK(rep.rtd_sum == doctest::Approx(kRtdSumAB).epsilon(1e-9));
  CHECK(rep.ob_sum == doctest::Approx(kObSumAB).epsilon(1e-9));
  CHECK(rep.witness_value > rep.capacity + 0.2);

  double c = 0;
  REQUIRE(biso_channel_capacity(a.h, &c) == BISO_OK);
  Chan bec;
  REQUIRE(biso_channel_bec_with_capacity(c, nullptr, bec.out()) == BISO_OK);
  biso_equivalence_report flat{};
  REQUIRE(biso_equivalence(a.h, bec.h, 0, nullptr, &flat) == BISO_OK);
  CHECK(flat.not_comparable == 0);
  CHECK(flat.td_strict_in_ob == 0);
  CHECK(flat.witness_exists == 0);
  CHECK(flat.td_strict_in_mib == 0);
  CHECK(flat.mib_strict_in_ob == 0);

  biso_better_receiver_report swap{};
  REQUIRE(biso_better_receiver(a.h, b.h, 0, nullptr, &swap) == BISO_OK);
  CHECK(swap.strict_gain == 1);
  CHECK(swap.collapses == 1);
  CHECK(swap.sum_original == doctest::Approx(kRtdSumAB).epsilon(1e-9));
  CHECK(biso_better_receiver(a.h, bec.h, 0, nullptr, &swap) ==
        BISO_EPRECONDITION);
}

TEST_CASE("spec files reproduce the built-in instances") {
  Chan built_a, file_a;
  REQUIRE(biso_channel_counterexample_a(built_a.out()) == BISO_OK);
  REQUIRE(biso_channel_load_spec(BISO_DATA_DIR "/channel_A.json", nullptr,
                                 file_a.out()) == BISO_OK);
  Chan built_b, file_b;
  REQUIRE(biso_channel_counterexample_b(built_b.out()) == BISO_OK);
  REQUIRE(biso_channel_load_spec(BISO_DATA_DIR "/channel_B.json", nullptr,
                                 file_b.out()) == BISO_OK);

  for (auto [built, file] : {std::pair{built_a.h, file_a.h},
                             std::pair{built_b.h, file_b.h}}) {
    double cb = 0, cf = 0;
    REQUIRE(biso_channel_capacity(built, &cb) == BISO_OK);
    REQUIRE(biso_channel_capacity(file, &cf) == BISO_OK);
    CHECK(cb == cf);
    size_t nb = 0, nf = 0;
    REQUIRE(biso_channel_pair_count(built, &nb) == BISO_OK);
    REQUIRE(biso_channel_pair_count(file, &nf) == BISO_OK);
    REQUIRE(nb == nf);
    std::vector<double> pb(nb), qb(nb), pf(nf), qf(nf);
    REQUIRE(biso_channel_pairs(built, pb.data(), qb.data(), nb, &nb) ==
            BISO_OK);
    REQUIRE(biso_channel_pairs(file, pf.data(), qf.data(), nf, &nf) == BISO_OK);
    for (size_t k = 0; k < nb; ++k) {
      CHECK(pb[k] == pf[k]);
      CHECK(qb[k] == qf[k]);
    }
  }
}

TEST_CASE("verification entry rejects unknown suites") {
  int all_pass = 0;
  CHECK(biso_verify_run(42, 1, nullptr, nullptr, nullptr, &all_pass) ==
        BISO_EINVAL);
}
