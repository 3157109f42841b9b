// Command-line front end. Talks to the library exclusively through the C
// interface in biso/biso.h.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <biso/biso.h>

namespace {

// Exit codes: 0 success, 1 analysis precondition, 2 parse/validation,
// 3 internal consistency.
int exit_code_for(biso_status st) {
  switch (st) {
    case BISO_OK:
      return 0;
    case BISO_ECAPACITY_MISMATCH:
    case BISO_EPRECONDITION:
      return 1;
    case BISO_EINVAL:
    case BISO_EDOMAIN:
    case BISO_ENOT_STOCHASTIC:
    case BISO_ENOT_SYMMETRIC:
    case BISO_EPARSE:
    case BISO_EIO:
      return 2;
    case BISO_EEQUIV_VIOLATION:
    case BISO_EINTERNAL:
      return 3;
  }
  return 3;
}

[[noreturn]] void die(biso_status st) {
  std::fprintf(stderr, "error: %s\n", biso_last_error());
  std::exit(exit_code_for(st));
}

struct Channel {
  biso_channel* h = nullptr;

  Channel() = default;
  explicit Channel(biso_channel* ptr) : h(ptr) {}
  Channel(const Channel&) = delete;
  Channel& operator=(const Channel&) = delete;
  Channel(Channel&& o) : h(o.h) { o.h = nullptr; }
  Channel& operator=(Channel&& o) {
    if (this != &o) {
      biso_channel_destroy(h);
      h = o.h;
      o.h = nullptr;
    }
    return *this;
  }
  ~Channel() { biso_channel_destroy(h); }
};

Channel load_channel(const std::string& path, const biso_tolerance* tol) {
  biso_channel* h = nullptr;
  biso_status st = biso_channel_load_spec(path.c_str(), tol, &h);
  if (st != BISO_OK) {
    std::fprintf(stderr, "error: %s: %s\n", path.c_str(), biso_last_error());
    std::exit(exit_code_for(st));
  }
  return Channel(h);
}

double capacity_of(const Channel& ch) {
  double c = 0;
  biso_status st = biso_channel_capacity(ch.h, &c);
  if (st != BISO_OK) die(st);
  return c;
}

std::string label_of(const Channel& ch) {
  char buf[256] = {0};
  if (biso_channel_label(ch.h, buf, sizeof buf) != BISO_OK || buf[0] == '\0')
    return "(unlabeled)";
  return buf;
}

const char* kind_str(int kind) {
  switch (kind) {
    case BISO_FIRST_MORE_CAPABLE:
      return "first more capable";
    case BISO_SECOND_MORE_CAPABLE:
      return "second more capable";
    case BISO_EQUIVALENT:
      return "equivalent";
    case BISO_INCOMPARABLE:
      return "incomparable";
  }
  return "unknown";
}

const char* eln_kind_str(int kind) {
  switch (kind) {
    case BISO_FIRST_MORE_CAPABLE:
      return "first dominates";
    case BISO_SECOND_MORE_CAPABLE:
      return "second dominates";
    case BISO_EQUIVALENT:
      return "equivalent";
    case BISO_INCOMPARABLE:
      return "incomparable";
  }
  return "unknown";
}

std::FILE* open_csv(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    std::exit(2);
  }
  return f;
}

int cmd_info(const std::string& spec, const std::string& csv_path,
             const biso_tolerance* tol) {
  Channel ch = load_channel(spec, tol);

  size_t n_pairs = 0;
  biso_channel_pair_count(ch.h, &n_pairs);
  std::vector<double> p_pos(n_pairs), p_neg(n_pairs);
  size_t got = 0;
  biso_channel_pairs(ch.h, p_pos.data(), p_neg.data(), n_pairs, &got);

  size_t n_bp = 0;
  biso_status st = biso_channel_curve(ch.h, nullptr, nullptr, nullptr, 0, &n_bp);
  if (st != BISO_OK) die(st);
  std::vector<double> t(n_bp), step(n_bp), cum(n_bp);
  st = biso_channel_curve(ch.h, t.data(), step.data(), cum.data(), n_bp, &n_bp);
  if (st != BISO_OK) die(st);

  std::printf("channel: %s\n", label_of(ch).c_str());
  std::printf("capacity: %.12f\n", capacity_of(ch));
  std::printf("pairs (p_pos, p_neg, mass):\n");
  for (size_t k = 0; k < n_pairs; ++k)
    std::printf("  %2zu  %.12f  %.12f  %.12f\n", k + 1, p_pos[k], p_neg[k],
                p_pos[k] + p_neg[k]);
  std::printf("partition steps (t_lo, t_hi, value):\n");
  for (size_t k = 1; k < n_bp; ++k)
    std::printf("  %.12f  %.12f  %.12f\n", t[k - 1], t[k], step[k]);
  std::printf("lorenz breakpoints (t, F):\n");
  for (size_t k = 0; k < n_bp; ++k)
    std::printf("  %.12f  %.12f\n", t[k], cum[k]);

  if (!csv_path.empty()) {
    std::FILE* f = open_csv(csv_path);
    std::fprintf(f, "t,step_value,cumulative\n");
    for (size_t k = 0; k < n_bp; ++k)
      std::fprintf(f, "%.17g,%.17g,%.17g\n", t[k], step[k], cum[k]);
    std::fclose(f);
    std::printf("curve csv written to %s\n", csv_path.c_str());
  }
  return 0;
}

void print_intervals(const char* name, const std::vector<double>& lo,
                     const std::vector<double>& hi) {
  std::printf("%s:", name);
  if (lo.empty()) std::printf(" (empty)");
  for (size_t k = 0; k < lo.size(); ++k)
    std::printf(" [%.9f, %.9f]", lo[k], hi[k]);
  std::printf("\n");
}

int cmd_compare(const std::string& spec1, const std::string& spec2,
                bool equalize, int grid, const biso_tolerance* tol) {
  Channel a = load_channel(spec1, tol);
  Channel b = load_channel(spec2, tol);

  double c1 = capacity_of(a);
  if (equalize) {
    biso_channel* eq = nullptr;
    biso_status st = biso_channel_equalized(b.h, c1, tol, &eq);
    if (st != BISO_OK) die(st);
    b = Channel(eq);
  }
  double c2 = capacity_of(b);

  std::printf("first:  %s  capacity %.12f\n", label_of(a).c_str(), c1);
  std::printf("second: %s  capacity %.12f\n", label_of(b).c_str(), c2);
  std::printf("capacity gap: %.3e\n", c1 - c2);

  int suff = -1;
  biso_status st = biso_more_capable_sufficient(a.h, b.h, tol, &suff);
  if (st == BISO_ECAPACITY_MISMATCH) {
    std::printf(
        "lorenz sufficiency: skipped, needs equal capacities "
        "(use --equalize)\n");
  } else if (st != BISO_OK) {
    die(st);
  } else {
    std::printf("lorenz sufficiency: %s\n",
                suff == 1   ? "first curve dominates (first more capable)"
                : suff == 0 ? "second curve dominates (second more capable)"
                            : "curves cross (inconclusive)");
  }

  biso_verdict v;
  st = biso_more_capable_numeric(a.h, b.h, grid, tol, &v);
  if (st != BISO_OK) die(st);
  std::printf("numeric verdict: %s\n", kind_str(v.kind));
  std::printf("  max delta: %+.12f at bias %.12f\n", v.max_delta,
              v.max_delta_bias);
  std::printf("  min delta: %+.12f at bias %.12f\n", v.min_delta,
              v.min_delta_bias);
  if (v.has_witness_pro)
    std::printf("  witness pro: delta %+.12f at bias %.12f\n",
                v.witness_pro_delta, v.witness_pro_bias);
  if (v.has_witness_con)
    std::printf("  witness con: delta %+.12f at bias %.12f\n",
                v.witness_con_delta, v.witness_con_bias);

  if (c1 - c2 <= tol->cap_eps && c2 - c1 <= tol->cap_eps) {
    biso_verdict e;
    st = biso_essentially_less_noisy(a.h, b.h, grid, tol, &e);
    if (st != BISO_OK) die(st);
    std::printf("essentially less noisy: %s\n", eln_kind_str(e.kind));
  } else {
    std::printf(
        "essentially less noisy: skipped, capacity gap %.3e exceeds %.3e "
        "(use --equalize)\n",
        c1 > c2 ? c1 - c2 : c2 - c1, tol->cap_eps);
  }

  size_t ni = 0, nj = 0;
  st = biso_crossing_sets(a.h, b.h, grid, tol, nullptr, nullptr, 0, &ni,
                          nullptr, nullptr, 0, &nj);
  if (st != BISO_OK) die(st);
  std::vector<double> ilo(ni), ihi(ni), jlo(nj), jhi(nj);
  st = biso_crossing_sets(a.h, b.h, grid, tol, ilo.data(), ihi.data(), ni, &ni,
                          jlo.data(), jhi.data(), nj, &nj);
  if (st != BISO_OK) die(st);
  print_intervals("crossing set I (f1 > f2)", ilo, ihi);
  print_intervals("crossing set J (f2 > f1)", jlo, jhi);
  return 0;
}

struct BoundRun {
  const char* name;
  int bound;
  biso_region* region = nullptr;
};

int cmd_region(const std::string& spec1, const std::string& spec2,
               const std::string& bound, int grid, const std::string& csv_path,
               const biso_tolerance* tol) {
  Channel a = load_channel(spec1, tol);
  Channel b = load_channel(spec2, tol);

  std::printf("first:  %s  capacity %.12f\n", label_of(a).c_str(),
              capacity_of(a));
  std::printf("second: %s  capacity %.12f\n", label_of(b).c_str(),
              capacity_of(b));

  std::vector<BoundRun> runs;
  if (bound == "td" || bound == "all") runs.push_back({"td", BISO_BOUND_TD});
  if (bound == "sup" || bound == "all") runs.push_back({"sup", BISO_BOUND_SUP});
  if (bound == "rtd" || bound == "all") runs.push_back({"rtd", BISO_BOUND_RTD});
  if (bound == "ob" || bound == "all") runs.push_back({"ob", BISO_BOUND_OB});

  std::printf("max sum rates (bound, value, s1, s2, a):\n");
  for (auto& run : runs) {
    biso_status st =
        biso_region_compute(a.h, b.h, run.bound, grid, tol, &run.region);
    if (st != BISO_OK) {
      for (auto& r : runs) biso_region_destroy(r.region);
      die(st);
    }
    double value = 0, gen[3] = {0, 0, 0};
    biso_region_max_sum(run.region, &value, gen);
    std::printf("  %-3s  %.12f  %.9f  %.9f  %.9f\n", run.name, value, gen[0],
                gen[1], gen[2]);
  }

  if (!csv_path.empty()) {
    std::FILE* f = open_csv(csv_path);
    std::fprintf(f, "bound,r1,r2,s1,s2,a\n");
    for (auto& run : runs) {
      size_t n = 0;
      biso_region_point_count(run.region, &n);
      for (size_t k = 0; k < n; ++k) {
        double p[5];
        biso_region_point(run.region, k, p);
        std::fprintf(f, "%s,%.17g,%.17g,%.17g,%.17g,%.17g\n", run.name, p[0],
                     p[1], p[2], p[3], p[4]);
      }
    }
    std::fclose(f);
    std::printf("frontier csv written to %s\n", csv_path.c_str());
  }

  for (auto& r : runs) biso_region_destroy(r.region);
  return 0;
}

void verify_print(void*, const char* name, int pass, const char* detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name, detail);
}

int cmd_verify(const std::string& suite, uint64_t seed,
               const biso_tolerance* tol) {
  int which = suite == "random" ? BISO_SUITE_RANDOM : BISO_SUITE_PAPER;
  std::printf("suite: %s  seed: %" PRIu64 "\n", suite.c_str(), seed);
  int all_pass = 0;
  biso_status st =
      biso_verify_run(which, seed, tol, verify_print, nullptr, &all_pass);
  if (st != BISO_OK) die(st);
  std::printf("%s\n", all_pass ? "all checks passed" : "CHECKS FAILED");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary-input symmetric-output channel analysis"};
  app.require_subcommand(1);

  biso_tolerance tol;
  biso_tolerance_default(&tol);
  double tol_override = 0;
  app.add_option("--tol", tol_override,
                 "override the equality tolerance abs_eps");

  std::string spec1, spec2, csv_path, bound = "all", suite = "paper";
  int grid = 0;
  bool equalize = false;
  uint64_t seed = 1;

  CLI::App* info = app.add_subcommand("info", "describe one channel");
  info->fallthrough();
  info->add_option("spec", spec1, "channel spec file")->required();
  info->add_option("--csv", csv_path, "write the curve as csv to this path");

  CLI::App* compare =
      app.add_subcommand("compare", "order two channels by capability");
  compare->fallthrough();
  compare->add_option("spec1", spec1, "first channel spec file")->required();
  compare->add_option("spec2", spec2, "second channel spec file")->required();
  compare->add_flag("--equalize", equalize,
                    "rescale the second channel to the first one's capacity");
  compare->add_option("--grid", grid, "scan grid size");

  CLI::App* region =
      app.add_subcommand("region", "broadcast rate bounds for two receivers");
  region->fallthrough();
  region->add_option("spec1", spec1, "first channel spec file")->required();
  region->add_option("spec2", spec2, "second channel spec file")->required();
  region->add_option("--bound", bound, "which bound to compute")
      ->check(CLI::IsMember({"td", "sup", "rtd", "ob", "all"}));
  region->add_option("--grid", grid, "profile grid size");
  region->add_option("--csv", csv_path, "write frontier points to this path");

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->fallthrough();
  verify->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"paper", "random"}));
  verify->add_option("--seed", seed, "seed for the random suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (tol_override > 0) tol.abs_eps = tol_override;

  if (info->parsed()) return cmd_info(spec1, csv_path, &tol);
  if (compare->parsed()) return cmd_compare(spec1, spec2, equalize, grid, &tol);
  if (region->parsed())
    return cmd_region(spec1, spec2, bound, grid, csv_path, &tol);
  if (verify->parsed()) return cmd_verify(suite, seed, &tol);
  return 2;
}
