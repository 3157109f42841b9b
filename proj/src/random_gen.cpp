#include "random_gen.hpp"

#include <cmath>
#include <vector>

#include "binmath.hpp"
#include "errors.hpp"

namespace biso {

namespace {

struct RawPairs {
  std::vector<double> mass;
  std::vector<double> ratio;  // p_neg / mass, in [0, 1/2]
};

BisoChannel assemble(const RawPairs& rp, const Tolerance& tol) {
  std::vector<PairProb> pairs;
  pairs.reserve(rp.mass.size());
  for (size_t k = 0; k < rp.mass.size(); ++k) {
    double m = rp.mass[k], r = rp.ratio[k];
    pairs.push_back({m * (1.0 - r), m * r});
  }
  return BisoChannel::from_pairs(pairs, tol);
}

// Knob t in [-1, 1]: t <= 0 scales ratios by 1+t (t = -1 gives capacity 1),
// t >= 0 convolves ratios with BSC(t/2) (t = 1 gives capacity 0). Capacity
// is continuous and nonincreasing in t.
RawPairs apply_knob(const RawPairs& rp, double t, const Tolerance& tol) {
  RawPairs out = rp;
  for (double& r : out.ratio) {
    r = (t <= 0.0) ? r * (1.0 + t) : convolve(r, 0.5 * t, tol);
  }
  return out;
}

double knob_capacity(const RawPairs& rp, double t, const Tolerance& tol) {
  RawPairs adj = apply_knob(rp, t, tol);
  double pair_entropy = 0.0;
  for (size_t k = 0; k < adj.mass.size(); ++k) {
    pair_entropy += adj.mass[k] * binary_entropy(adj.ratio[k], tol);
  }
  return 1.0 - pair_entropy;
}

}  // namespace

BisoChannel random_biso(Rng& rng, int max_pairs, const Tolerance& tol) {
  tol.validate();
  if (max_pairs < 1) throw_domain("random_biso: max_pairs must be >= 1");
  std::uniform_int_distribution<int> count_dist(1, max_pairs);
  std::exponential_distribution<double> mass_dist(1.0);
  std::uniform_real_distribution<double> ratio_dist(0.0, 0.5);
  int n = count_dist(rng);
  RawPairs rp;
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    // Floor keeps every pair's mass bounded away from zero.
    double m = 0.05 + mass_dist(rng);
    rp.mass.push_back(m);
    rp.ratio.push_back(ratio_dist(rng));
    total += m;
  }
  for (double& m : rp.mass) m /= total;
  return assemble(rp, tol);
}

BisoChannel random_biso_with_capacity(Rng& rng, double target_capacity,
                                      int max_pairs, const Tolerance& tol) {
  tol.validate();
  if (!(target_capacity >= 0.0 && target_capacity <= 1.0)) {
    throw_domain("random_biso_with_capacity: target outside [0, 1]");
  }
  BisoChannel base = random_biso(rng, max_pairs, tol);
  RawPairs rp;
  for (const auto& pr : base.pairs()) {
    double m = pr.mass();
    rp.mass.push_back(m);
    rp.ratio.push_back(pr.p_neg / m);
  }
  double lo = -1.0, hi = 1.0;  // capacity(lo) = 1, capacity(hi) = 0
  for (int it = 0; it < 120 && hi - lo > 1e-16; ++it) {
    double mid = 0.5 * (lo + hi);
    if (knob_capacity(rp, mid, tol) > target_capacity) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return assemble(apply_knob(rp, 0.5 * (lo + hi), tol), tol);
}

BisoChannel random_ternary_with_capacity(Rng& rng, double target_capacity,
                                         const Tolerance& tol) {
  tol.validate();
  if (!(target_capacity > 0.0 && target_capacity < 1.0)) {
    throw_domain("random_ternary_with_capacity: target outside (0, 1)");
  }
  // Capacity of {(m(1-r), m r), ((1-m)/2, (1-m)/2)} is m(1 - h(r)), so any
  // m in (target, 1] works; r then follows from h(r) = 1 - target/m.
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double m = target_capacity + u(rng) * (1.0 - target_capacity);
  double r = binary_entropy_inverse(1.0 - target_capacity / m, tol);
  std::vector<PairProb> pairs;
  pairs.push_back({m * (1.0 - r), m * r});
  if (m < 1.0) pairs.push_back({0.5 * (1.0 - m), 0.5 * (1.0 - m)});
  return BisoChannel::from_pairs(pairs, tol);
}

}  // namespace biso
