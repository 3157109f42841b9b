#include "biso/biso.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "channel.hpp"
#include "errors.hpp"
#include "lorenz.hpp"
#include "ordering.hpp"
#include "regions.hpp"
#include "spec_io.hpp"
#include "tolerance.hpp"
#include "verify.hpp"

struct biso_channel {
  biso::BisoChannel impl;
};

struct biso_region {
  biso::RateRegion impl;
};

namespace {

thread_local std::string g_last_error;

biso::Tolerance make_tol(const biso_tolerance* t) {
  biso::Tolerance out;
  if (t != nullptr) {
    out.abs_eps = t->abs_eps;
    out.strict_margin = t->strict_margin;
    out.root_eps = t->root_eps;
    out.cap_eps = t->cap_eps;
  }
  out.validate();
  return out;
}

biso_status map_code(biso::ErrorCode code) {
  switch (code) {
    case biso::ErrorCode::Domain:
      return BISO_EDOMAIN;
    case biso::ErrorCode::NotStochastic:
      return BISO_ENOT_STOCHASTIC;
    case biso::ErrorCode::NotSymmetric:
      return BISO_ENOT_SYMMETRIC;
    case biso::ErrorCode::CapacityMismatch:
      return BISO_ECAPACITY_MISMATCH;
    case biso::ErrorCode::Precondition:
      return BISO_EPRECONDITION;
    case biso::ErrorCode::Parse:
      return BISO_EPARSE;
    case biso::ErrorCode::EquivalenceViolation:
      return BISO_EEQUIV_VIOLATION;
    case biso::ErrorCode::Io:
      return BISO_EIO;
    case biso::ErrorCode::Internal:
      return BISO_EINTERNAL;
  }
  return BISO_EINTERNAL;
}

template <class Fn>
biso_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BISO_OK;
  } catch (const biso::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BISO_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return BISO_EINTERNAL;
  }
}

biso_status invalid(const char* msg) {
  g_last_error = msg;
  return BISO_EINVAL;
}

template <class Make>
biso_status make_channel(biso_channel** out, Make&& make) {
  if (out == nullptr) return invalid("output handle pointer is null");
  *out = nullptr;
  return guarded([&] { *out = new biso_channel{make()}; });
}

int map_kind(biso::ComparisonKind k) {
  switch (k) {
    case biso::ComparisonKind::FirstMoreCapable:
      return BISO_FIRST_MORE_CAPABLE;
    case biso::ComparisonKind::SecondMoreCapable:
      return BISO_SECOND_MORE_CAPABLE;
    case biso::ComparisonKind::Equivalent:
      return BISO_EQUIVALENT;
    case biso::ComparisonKind::Incomparable:
      return BISO_INCOMPARABLE;
  }
  return BISO_EQUIVALENT;
}

void fill_verdict(const biso::ComparabilityVerdict& v, biso_verdict* out) {
  *out = biso_verdict{};
  out->kind = map_kind(v.kind);
  if (v.witness_pro) {
    out->has_witness_pro = 1;
    out->witness_pro_bias = v.witness_pro->bias;
    out->witness_pro_delta = v.witness_pro->delta;
  }
  if (v.witness_con) {
    out->has_witness_con = 1;
    out->witness_con_bias = v.witness_con->bias;
    out->witness_con_delta = v.witness_con->delta;
  }
  out->max_delta = v.max_delta;
  out->max_delta_bias = v.max_delta_bias;
  out->min_delta = v.min_delta;
  out->min_delta_bias = v.min_delta_bias;
}

void fill_intervals(const std::vector<biso::Interval>& set, double* lo,
                    double* hi, size_t cap, size_t* n_out) {
  *n_out = set.size();
  size_t n = std::min(cap, set.size());
  for (size_t k = 0; k < n; ++k) {
    lo[k] = set[k].lo;
    hi[k] = set[k].hi;
  }
}

}  // namespace

const char* biso_last_error(void) { return g_last_error.c_str(); }

const char* biso_version(void) { return "1.0.0"; }

void biso_tolerance_default(biso_tolerance* out) {
  if (out == nullptr) return;
  biso::Tolerance t;
  out->abs_eps = t.abs_eps;
  out->strict_margin = t.strict_margin;
  out->root_eps = t.root_eps;
  out->cap_eps = t.cap_eps;
}

biso_status biso_channel_bsc(double p, const biso_tolerance* tol,
                             biso_channel** out) {
  return make_channel(out,
                      [&] { return biso::BisoChannel::bsc(p, make_tol(tol)); });
}

biso_status biso_channel_bec(double e, const biso_tolerance* tol,
                             biso_channel** out) {
  return make_channel(out,
                      [&] { return biso::BisoChannel::bec(e, make_tol(tol)); });
}

biso_status biso_channel_bsc_with_capacity(double c, const biso_tolerance* tol,
                                           biso_channel** out) {
  return make_channel(
      out, [&] { return biso::BisoChannel::bsc_with_capacity(c, make_tol(tol)); });
}

biso_status biso_channel_bec_with_capacity(double c, const biso_tolerance* tol,
                                           biso_channel** out) {
  return make_channel(
      out, [&] { return biso::BisoChannel::bec_with_capacity(c, make_tol(tol)); });
}

biso_status biso_channel_from_rows(const double* row0, const double* row1,
                                   size_t n, const biso_tolerance* tol,
                                   biso_channel** out) {
  if ((row0 == nullptr || row1 == nullptr) && n > 0)
    return invalid("row pointer is null");
  return make_channel(out, [&] {
    std::vector<double> r0(row0, row0 + n), r1(row1, row1 + n);
    return biso::BisoChannel::from_rows(r0, r1, make_tol(tol));
  });
}

biso_status biso_channel_from_pairs(const double* p_pos, const double* p_neg,
                                    size_t n, const biso_tolerance* tol,
                                    biso_channel** out) {
  if ((p_pos == nullptr || p_neg == nullptr) && n > 0)
    return invalid("pair pointer is null");
  return make_channel(out, [&] {
    std::vector<biso::PairProb> pairs(n);
    for (size_t k = 0; k < n; ++k) pairs[k] = {p_pos[k], p_neg[k]};
    return biso::BisoChannel::from_pairs(std::move(pairs), make_tol(tol));
  });
}

biso_status biso_channel_parse_spec(const char* text, const biso_tolerance* tol,
                                    biso_channel** out) {
  if (text == nullptr) return invalid("spec text is null");
  return make_channel(
      out, [&] { return biso::parse_channel_spec(text, make_tol(tol)); });
}

biso_status biso_channel_load_spec(const char* path, const biso_tolerance* tol,
                                   biso_channel** out) {
  if (path == nullptr) return invalid("spec path is null");
  return make_channel(
      out, [&] { return biso::load_channel_spec(path, make_tol(tol)); });
}

biso_status biso_channel_counterexample_a(biso_channel** out) {
  return make_channel(out, [] { return biso::BisoChannel::counterexample_a(); });
}

biso_status biso_channel_counterexample_b(biso_channel** out) {
  return make_channel(out, [] { return biso::BisoChannel::counterexample_b(); });
}

biso_status biso_channel_equalized(const biso_channel* ch,
                                   double target_capacity,
                                   const biso_tolerance* tol,
                                   biso_channel** out) {
  if (ch == nullptr) return invalid("channel handle is null");
  return make_channel(out, [&] {
    return ch->impl.equalized_to(target_capacity, make_tol(tol));
  });
}

void biso_channel_destroy(biso_channel* ch) { delete ch; }

biso_status biso_channel_capacity(const biso_channel* ch, double* out) {
  if (ch == nullptr || out == nullptr) return invalid("null argument");
  *out = ch->impl.capacity();
  return BISO_OK;
}

biso_status biso_channel_mutual_info(const biso_channel* ch, double bias,
                                     double* out) {
  if (ch == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = ch->impl.mutual_info(biso::InputBias::of(bias)); });
}

biso_status biso_channel_f_value(const biso_channel* ch, double s,
                                 double* out) {
  if (ch == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = ch->impl.f_value(biso::InputBias::of(s)); });
}

biso_status biso_channel_pair_count(const biso_channel* ch, size_t* out) {
  if (ch == nullptr || out == nullptr) return invalid("null argument");
  *out = ch->impl.pairs().size();
  return BISO_OK;
}

biso_status biso_channel_pairs(const biso_channel* ch, double* p_pos,
                               double* p_neg, size_t cap, size_t* n_out) {
  if (ch == nullptr || n_out == nullptr) return invalid("null argument");
  if ((p_pos == nullptr || p_neg == nullptr) && cap > 0)
    return invalid("pair buffer is null");
  const auto& pairs = ch->impl.pairs();
  *n_out = pairs.size();
  size_t n = std::min(cap, pairs.size());
  for (size_t k = 0; k < n; ++k) {
    p_pos[k] = pairs[k].p_pos;
    p_neg[k] = pairs[k].p_neg;
  }
  return BISO_OK;
}

biso_status biso_channel_label(const biso_channel* ch, char* buf, size_t cap) {
  if (ch == nullptr || buf == nullptr || cap == 0)
    return invalid("null or empty label buffer");
  const std::string& label = ch->impl.label();
  size_t n = std::min(cap - 1, label.size());
  std::memcpy(buf, label.data(), n);
  buf[n] = '\0';
  return BISO_OK;
}

biso_status biso_channel_curve(const biso_channel* ch, double* t,
                               double* step_value, double* cumulative,
                               size_t cap, size_t* n_out) {
  if (ch == nullptr || n_out == nullptr) return invalid("null argument");
  if ((t == nullptr || step_value == nullptr || cumulative == nullptr) &&
      cap > 0)
    return invalid("curve buffer is null");
  return guarded([&] {
    biso::StepCurve step = biso::biso_curve(ch->impl);
    biso::LorenzCurve lc = biso::lorenz(ch->impl);
    *n_out = lc.breakpoints.size();
    size_t n = std::min(cap, lc.breakpoints.size());
    for (size_t k = 0; k < n; ++k) {
      t[k] = lc.breakpoints[k];
      step_value[k] = k == 0 ? 0.0 : step.values[k - 1];
      cumulative[k] = lc.cumulative[k];
    }
  });
}

biso_status biso_more_capable_sufficient(const biso_channel* ch1,
                                         const biso_channel* ch2,
                                         const biso_tolerance* tol,
                                         int* result) {
  if (ch1 == nullptr || ch2 == nullptr || result == nullptr)
    return invalid("null argument");
  return guarded([&] {
    auto r = biso::more_capable_sufficient(ch1->impl, ch2->impl, make_tol(tol));
    *result = r.has_value() ? (*r ? 1 : 0) : -1;
  });
}

biso_status biso_more_capable_numeric(const biso_channel* ch1,
                                      const biso_channel* ch2, int grid_n,
                                      const biso_tolerance* tol,
                                      biso_verdict* out) {
  if (ch1 == nullptr || ch2 == nullptr || out == nullptr)
    return invalid("null argument");
  return guarded([&] {
    auto v = biso::more_capable_numeric(ch1->impl, ch2->impl,
                                        grid_n > 0 ? grid_n : 1025,
                                        make_tol(tol));
    fill_verdict(v, out);
  });
}

biso_status biso_essentially_less_noisy(const biso_channel* ch1,
                                        const biso_channel* ch2, int grid_n,
                                        const biso_tolerance* tol,
                                        biso_verdict* out) {
  if (ch1 == nullptr || ch2 == nullptr || out == nullptr)
    return invalid("null argument");
  return guarded([&] {
    auto v = biso::essentially_less_noisy_equal_cap(ch1->impl, ch2->impl,
                                                    grid_n > 0 ? grid_n : 1025,
                                                    make_tol(tol));
    fill_verdict(v, out);
  });
}

biso_status biso_crossing_sets(const biso_channel* ch1, const biso_channel* ch2,
                               int grid_n, const biso_tolerance* tol,
                               double* i_lo, double* i_hi, size_t i_cap,
                               size_t* i_n, double* j_lo, double* j_hi,
                               size_t j_cap, size_t* j_n) {
  if (ch1 == nullptr || ch2 == nullptr || i_n == nullptr || j_n == nullptr)
    return invalid("null argument");
  if ((i_lo == nullptr || i_hi == nullptr) && i_cap > 0)
    return invalid("interval buffer is null");
  if ((j_lo == nullptr || j_hi == nullptr) && j_cap > 0)
    return invalid("interval buffer is null");
  return guarded([&] {
    auto sets = biso::crossing_sets(ch1->impl, ch2->impl,
                                    grid_n > 0 ? grid_n : 1025, make_tol(tol));
    fill_intervals(sets.i_set, i_lo, i_hi, i_cap, i_n);
    fill_intervals(sets.j_set, j_lo, j_hi, j_cap, j_n);
  });
}

biso_status biso_region_compute(const biso_channel* ch1,
                                const biso_channel* ch2, int bound, int grid_n,
                                const biso_tolerance* tol, biso_region** out) {
  if (ch1 == nullptr || ch2 == nullptr || out == nullptr)
    return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    biso::Tolerance t = make_tol(tol);
    biso::RateRegion rg;
    switch (bound) {
      case BISO_BOUND_TD:
        rg = biso::td_region(ch1->impl.capacity(), ch2->impl.capacity(),
                             grid_n > 0 ? grid_n : 65);
        break;
      case BISO_BOUND_SUP: {
        auto p1 = biso::f_profile(ch1->impl, grid_n > 0 ? grid_n : 257, t);
        auto p2 = biso::f_profile(ch2->impl, grid_n > 0 ? grid_n : 257, t);
        rg = biso::superposition_region(p1, p2, t);
        break;
      }
      case BISO_BOUND_RTD: {
        auto p1 = biso::f_profile(ch1->impl, grid_n > 0 ? grid_n : 257, t);
        auto p2 = biso::f_profile(ch2->impl, grid_n > 0 ? grid_n : 257, t);
        auto r = biso::rtd_max_sum_rate(p1, p2, t);
        rg.max_sum_rate = r.value;
        rg.max_sum_generator = {0, 0, r.s1, r.s2, r.a};
        break;
      }
      case BISO_BOUND_OB: {
        auto p1 = biso::f_profile(ch1->impl, grid_n > 0 ? grid_n : 257, t);
        auto p2 = biso::f_profile(ch2->impl, grid_n > 0 ? grid_n : 257, t);
        rg = biso::ob_region(p1, p2, 512, t);
        break;
      }
      default:
        biso::throw_domain("unknown bound kind " + std::to_string(bound));
    }
    *out = new biso_region{std::move(rg)};
  });
}

void biso_region_destroy(biso_region* rg) { delete rg; }

biso_status biso_region_point_count(const biso_region* rg, size_t* out) {
  if (rg == nullptr || out == nullptr) return invalid("null argument");
  *out = rg->impl.frontier.size();
  return BISO_OK;
}

biso_status biso_region_point(const biso_region* rg, size_t index,
                              double point[5]) {
  if (rg == nullptr || point == nullptr) return invalid("null argument");
  if (index >= rg->impl.frontier.size())
    return invalid("frontier index out of range");
  const biso::RegionPoint& p = rg->impl.frontier[index];
  point[0] = p.r1;
  point[1] = p.r2;
  point[2] = p.s1;
  point[3] = p.s2;
  point[4] = p.a;
  return BISO_OK;
}

biso_status biso_region_max_sum(const biso_region* rg, double* value,
                                double generator[3]) {
  if (rg == nullptr || value == nullptr) return invalid("null argument");
  *value = rg->impl.max_sum_rate;
  if (generator != nullptr) {
    generator[0] = rg->impl.max_sum_generator.s1;
    generator[1] = rg->impl.max_sum_generator.s2;
    generator[2] = rg->impl.max_sum_generator.a;
  }
  return BISO_OK;
}

biso_status biso_equivalence(const biso_channel* ch1, const biso_channel* ch2,
                             int grid_n, const biso_tolerance* tol,
                             biso_equivalence_report* out) {
  if (ch1 == nullptr || ch2 == nullptr || out == nullptr)
    return invalid("null argument");
  *out = biso_equivalence_report{};
  return guarded([&] {
    auto rep = biso::equivalence_report(ch1->impl, ch2->impl,
                                        grid_n > 0 ? grid_n : 257,
                                        make_tol(tol));
    out->not_comparable = rep.not_comparable ? 1 : 0;
    out->td_strict_in_ob = rep.td_strict_in_ob ? 1 : 0;
    out->witness_exists = rep.witness_exists ? 1 : 0;
    out->td_strict_in_mib = rep.td_strict_in_mib ? 1 : 0;
    out->mib_strict_in_ob = rep.mib_strict_in_ob ? 1 : 0;
    out->capacity = rep.capacity;
    out->td_sum = rep.td_sum;
    out->rtd_sum = rep.rtd_sum;
    out->ob_sum = rep.ob_sum;
    out->witness_s1 = rep.witness_s1;
    out->witness_s2 = rep.witness_s2;
    out->witness_value = rep.witness_value;
  });
}

biso_status biso_better_receiver(const biso_channel* ch1,
                                 const biso_channel* ch2, int grid_n,
                                 const biso_tolerance* tol,
                                 biso_better_receiver_report* out) {
  if (ch1 == nullptr || ch2 == nullptr || out == nullptr)
    return invalid("null argument");
  *out = biso_better_receiver_report{};
  return guarded([&] {
    auto rep = biso::better_receiver_demo(ch1->impl, ch2->impl,
                                          grid_n > 0 ? grid_n : 257,
                                          make_tol(tol));
    out->capacity = rep.capacity;
    out->sum_original = rep.sum_original;
    out->sum_with_bec = rep.sum_with_bec;
    out->strict_gain = rep.strict_gain ? 1 : 0;
    out->collapses = rep.collapses ? 1 : 0;
  });
}

biso_status biso_verify_run(int suite, uint64_t seed, const biso_tolerance* tol,
                            biso_check_callback cb, void* user_data,
                            int* all_pass) {
  if (suite != BISO_SUITE_PAPER && suite != BISO_SUITE_RANDOM)
    return invalid("unknown suite");
  return guarded([&] {
    auto results = biso::run_suite(suite == BISO_SUITE_PAPER
                                       ? biso::Suite::Paper
                                       : biso::Suite::Random,
                                   seed, make_tol(tol));
    if (cb != nullptr)
      for (const auto& r : results)
        cb(user_data, r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str());
    if (all_pass != nullptr) *all_pass = biso::all_passed(results) ? 1 : 0;
  });
}
