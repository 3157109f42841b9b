#pragma once

#include <cstdint>
#include <vector>

#include "channel.hpp"
#include "tolerance.hpp"

namespace biso {

// Discrete auxiliary U -> X front end: P(U=u) and P(X=0|U=u).
struct AuxChannel {
  std::vector<double> u_probs;
  std::vector<double> x0_given_u;
};

// Textbook I(X;Y) summed over the explicit joint on the raw output alphabet
// (each canonical pair expands to its two signed symbols). Independent of
// the paired-entropy shortcut, so the two must agree to oracle precision.
double mi_from_joint(const BisoChannel& ch, double bias_x0,
                     const Tolerance& tol = {});

// (lambda + 1) I(U;Y2) + I(X;Y1|U), all terms from explicit joints.
double aux_objective(const BisoChannel& ch1, const BisoChannel& ch2,
                     const AuxChannel& aux, double lambda,
                     const Tolerance& tol = {});

// Best symmetric binary auxiliary: max over s of
// (lambda + 1) f2(s) + C1 - f1(s), by grid scan plus ternary polish.
double best_bsc_aux(const BisoChannel& ch1, const BisoChannel& ch2,
                    double lambda, int grid_n = 1025,
                    const Tolerance& tol = {});

struct AuxSearchResult {
  double value = 0;
  AuxChannel aux;
};

// Multi-start projected coordinate ascent over auxiliaries with at most
// max_states states. Deterministic given the seed; ties keep the earliest
// restart. A real search, not a certificate: its role is to never beat
// best_bsc_aux by more than noise.
AuxSearchResult best_general_aux(const BisoChannel& ch1,
                                 const BisoChannel& ch2, double lambda,
                                 int max_states, int restarts, uint64_t seed,
                                 const Tolerance& tol = {});

// State doubling that replaces each u by two half-mass states carrying
// P(X=0|U) = s and 1 - s, making the induced input uniform.
AuxChannel symmetrize_aux(const AuxChannel& aux);

// Signed changes from symmetrizing: the first two compare receiver-2
// cloud information and receiver-1 conditional information (expected >= 0
// and == 0), the third the unconditional receiver-1 information at the
// induced input bias versus uniform (expected >= 0).
struct SymmetrizationCheck {
  double u_y2_gain = 0;
  double x_y1_given_u_change = 0;
  double x_y1_gain = 0;

  bool pass(const Tolerance& tol = {}) const;
};

SymmetrizationCheck check_symmetrization(const BisoChannel& ch1,
                                         const BisoChannel& ch2,
                                         const AuxChannel& aux,
                                         const Tolerance& tol = {});

// Weighted Hardy-Littlewood-Polya check: given nondecreasing x, y with
// suffix sums sum_{j>=k} xi_j x_j >= sum_{j>=k} xi_j y_j and equality at
// k = 0, verifies sum xi Lambda(x) >= sum xi Lambda(y) for a battery of
// convex test functions (powers, exponentials, hinges, and the entropy
// transform y -> h(x * h^{-1}(y)) - y). Throws on precondition violation.
bool hlp_check(const std::vector<double>& x_seq,
               const std::vector<double>& y_seq,
               const std::vector<double>& xi_seq, int convex_samples = 9,
               const Tolerance& tol = {});

}  // namespace biso
