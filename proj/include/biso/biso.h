#ifndef BISO_H
#define BISO_H

/* C interface to the binary-input symmetric-output channel analysis
 * library: channel construction, capacity and information queries, Lorenz
 * curves, comparability orderings, broadcast rate regions, and the built-in
 * verification suite. All functions return a biso_status; results travel
 * through out parameters. Handles are opaque and must be released with
 * their destroy function. Error details for the calling thread are
 * available from biso_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BISO_API __declspec(dllexport)
#else
#define BISO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum biso_status {
  BISO_OK = 0,
  BISO_EINVAL = 1,              /* null handle or output pointer */
  BISO_EDOMAIN = 2,             /* argument outside its domain */
  BISO_ENOT_STOCHASTIC = 3,     /* rows fail normalization */
  BISO_ENOT_SYMMETRIC = 4,      /* no output pairing symmetry found */
  BISO_ECAPACITY_MISMATCH = 5,  /* equal-capacity precondition violated */
  BISO_EPRECONDITION = 6,       /* other analysis precondition violated */
  BISO_EPARSE = 7,              /* channel spec text is malformed */
  BISO_EEQUIV_VIOLATION = 8,    /* equivalent predicates disagreed */
  BISO_EIO = 9,                 /* file could not be read */
  BISO_EINTERNAL = 10           /* unexpected failure */
} biso_status;

/* Message for the most recent failing call on this thread ("" if none). */
BISO_API const char* biso_last_error(void);

BISO_API const char* biso_version(void);

typedef struct biso_tolerance {
  double abs_eps;       /* equality slack, default 1e-9 */
  double strict_margin; /* strict-gap threshold, default 1e-6 */
  double root_eps;      /* root-finding accuracy, default 1e-12 */
  double cap_eps;       /* equal-capacity slack, default 1e-4 */
} biso_tolerance;

/* Fills the default tolerances. Functions taking a biso_tolerance* accept
 * NULL to mean these defaults. */
BISO_API void biso_tolerance_default(biso_tolerance* out);

/* ---- channels ---- */

typedef struct biso_channel biso_channel;

BISO_API biso_status biso_channel_bsc(double p, const biso_tolerance* tol,
                                      biso_channel** out);
BISO_API biso_status biso_channel_bec(double e, const biso_tolerance* tol,
                                      biso_channel** out);
BISO_API biso_status biso_channel_bsc_with_capacity(double c,
                                                    const biso_tolerance* tol,
                                                    biso_channel** out);
BISO_API biso_status biso_channel_bec_with_capacity(double c,
                                                    const biso_tolerance* tol,
                                                    biso_channel** out);
BISO_API biso_status biso_channel_from_rows(const double* row0,
                                            const double* row1, size_t n,
                                            const biso_tolerance* tol,
                                            biso_channel** out);
BISO_API biso_status biso_channel_from_pairs(const double* p_pos,
                                             const double* p_neg, size_t n,
                                             const biso_tolerance* tol,
                                             biso_channel** out);
BISO_API biso_status biso_channel_parse_spec(const char* text,
                                             const biso_tolerance* tol,
                                             biso_channel** out);
BISO_API biso_status biso_channel_load_spec(const char* path,
                                            const biso_tolerance* tol,
                                            biso_channel** out);
BISO_API biso_status biso_channel_counterexample_a(biso_channel** out);
BISO_API biso_status biso_channel_counterexample_b(biso_channel** out);

/* New channel in the same parametric family (bsc/bec) rescaled to the
 * target capacity; fails with BISO_EPRECONDITION for general channels. */
BISO_API biso_status biso_channel_equalized(const biso_channel* ch,
                                            double target_capacity,
                                            const biso_tolerance* tol,
                                            biso_channel** out);

BISO_API void biso_channel_destroy(biso_channel* ch);

BISO_API biso_status biso_channel_capacity(const biso_channel* ch,
                                           double* out);
/* I(X;Y) at P(X=0) = bias (bias may lie anywhere in [0, 1]). */
BISO_API biso_status biso_channel_mutual_info(const biso_channel* ch,
                                              double bias, double* out);
/* f(s) = I(U;Y) for a symmetric binary auxiliary with crossover s. */
BISO_API biso_status biso_channel_f_value(const biso_channel* ch, double s,
                                          double* out);
BISO_API biso_status biso_channel_pair_count(const biso_channel* ch,
                                             size_t* out);
/* Copies up to cap pairs; *n_out is the full count. */
BISO_API biso_status biso_channel_pairs(const biso_channel* ch, double* p_pos,
                                        double* p_neg, size_t cap,
                                        size_t* n_out);
/* Copies the label (NUL terminated, truncated to cap). */
BISO_API biso_status biso_channel_label(const biso_channel* ch, char* buf,
                                        size_t cap);

/* Curve sampled at its breakpoints: t[k], the step value f(t[k]) (left
 * limit, 0 at k = 0), and the running integral F(t[k]). Call with cap = 0
 * to query the breakpoint count. */
BISO_API biso_status biso_channel_curve(const biso_channel* ch, double* t,
                                        double* step_value, double* cumulative,
                                        size_t cap, size_t* n_out);

/* ---- comparability ---- */

typedef enum biso_comparison_kind {
  BISO_FIRST_MORE_CAPABLE = 0,
  BISO_SECOND_MORE_CAPABLE = 1,
  BISO_EQUIVALENT = 2,
  BISO_INCOMPARABLE = 3
} biso_comparison_kind;

typedef struct biso_verdict {
  int kind;                /* biso_comparison_kind */
  int has_witness_pro;     /* gap > strict_margin somewhere */
  int has_witness_con;     /* gap < -strict_margin somewhere */
  double witness_pro_bias, witness_pro_delta;
  double witness_con_bias, witness_con_delta;
  double max_delta, max_delta_bias;
  double min_delta, min_delta_bias;
} biso_verdict;

/* Lorenz-domination sufficiency: *result is 1 (first more capable), 0 (the
 * reverse), or -1 (curves cross, inconclusive). */
BISO_API biso_status biso_more_capable_sufficient(const biso_channel* ch1,
                                                  const biso_channel* ch2,
                                                  const biso_tolerance* tol,
                                                  int* result);
BISO_API biso_status biso_more_capable_numeric(const biso_channel* ch1,
                                               const biso_channel* ch2,
                                               int grid_n,
                                               const biso_tolerance* tol,
                                               biso_verdict* out);
/* Equal-capacity essentially-less-noisy order; kind FIRST means the first
 * channel dominates. */
BISO_API biso_status biso_essentially_less_noisy(const biso_channel* ch1,
                                                 const biso_channel* ch2,
                                                 int grid_n,
                                                 const biso_tolerance* tol,
                                                 biso_verdict* out);
/* Strict crossing sets of the f-profiles as grid-resolved intervals. Call
 * with caps = 0 to query counts. */
BISO_API biso_status biso_crossing_sets(const biso_channel* ch1,
                                        const biso_channel* ch2, int grid_n,
                                        const biso_tolerance* tol,
                                        double* i_lo, double* i_hi,
                                        size_t i_cap, size_t* i_n,
                                        double* j_lo, double* j_hi,
                                        size_t j_cap, size_t* j_n);

/* ---- rate regions ---- */

typedef enum biso_bound_kind {
  BISO_BOUND_TD = 0,   /* time division */
  BISO_BOUND_SUP = 1,  /* superposition, first channel decodes the cloud */
  BISO_BOUND_RTD = 2,  /* randomized time division (Marton sum rate) */
  BISO_BOUND_OB = 3    /* outer bound */
} biso_bound_kind;

typedef struct biso_region biso_region;

/* Computes one bound for the pair. grid_n <= 0 selects the default (257).
 * RTD carries only its max-sum point. */
BISO_API biso_status biso_region_compute(const biso_channel* ch1,
                                         const biso_channel* ch2, int bound,
                                         int grid_n,
                                         const biso_tolerance* tol,
                                         biso_region** out);
BISO_API void biso_region_destroy(biso_region* rg);
BISO_API biso_status biso_region_point_count(const biso_region* rg,
                                             size_t* out);
/* point[5] = { r1, r2, s1, s2, a }; unused generator slots are 0. */
BISO_API biso_status biso_region_point(const biso_region* rg, size_t index,
                                       double point[5]);
BISO_API biso_status biso_region_max_sum(const biso_region* rg, double* value,
                                         double generator[3] /* s1, s2, a */);

typedef struct biso_equivalence_report {
  int not_comparable;    /* (a) not more-capable comparable */
  int td_strict_in_ob;   /* (b) */
  int witness_exists;    /* (c) f1(s1) + f2(s2) > C on the crossing sets */
  int td_strict_in_mib;  /* (d) */
  int mib_strict_in_ob;  /* (e) */
  double capacity;
  double td_sum, rtd_sum, ob_sum;
  double witness_s1, witness_s2, witness_value;
} biso_equivalence_report;

/* Five-way equivalence check; BISO_EEQUIV_VIOLATION if the provably
 * equivalent predicates disagree numerically. */
BISO_API biso_status biso_equivalence(const biso_channel* ch1,
                                      const biso_channel* ch2, int grid_n,
                                      const biso_tolerance* tol,
                                      biso_equivalence_report* out);

typedef struct biso_better_receiver_report {
  double capacity;
  double sum_original;  /* above capacity for an incomparable pair */
  double sum_with_bec;  /* collapses back to capacity */
  int strict_gain;
  int collapses;
} biso_better_receiver_report;

BISO_API biso_status biso_better_receiver(const biso_channel* ch1,
                                          const biso_channel* ch2, int grid_n,
                                          const biso_tolerance* tol,
                                          biso_better_receiver_report* out);

/* ---- verification suite ---- */

typedef enum biso_suite { BISO_SUITE_PAPER = 0, BISO_SUITE_RANDOM = 1 } biso_suite;

typedef void (*biso_check_callback)(void* user_data, const char* name,
                                    int pass, const char* detail);

/* Runs the acceptance checks; the callback fires once per check.
 * BISO_SUITE_PAPER ignores the seed (its instances are pinned),
 * BISO_SUITE_RANDOM draws from it. *all_pass is 1 iff every check passed. */
BISO_API biso_status biso_verify_run(int suite, uint64_t seed,
                                     const biso_tolerance* tol,
                                     biso_check_callback cb, void* user_data,
                                     int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* BISO_H */
