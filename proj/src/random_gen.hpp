#pragma once

#include <cstdint>
#include <random>

#include "channel.hpp"
#include "tolerance.hpp"

namespace biso {

using Rng = std::mt19937_64;

// Random canonical channel with 1..max_pairs output pairs: masses drawn from
// a normalized exponential sample, pair ratios uniform on [0, 1/2].
BisoChannel random_biso(Rng& rng, int max_pairs = 5, const Tolerance& tol = {});

// Random channel adjusted to hit target_capacity: a one-parameter knob either
// scales all pair ratios toward 0 (capacity up to 1) or convolves them with a
// BSC crossover (capacity down to 0); the knob is bisected until the capacity
// matches to ~1e-14.
BisoChannel random_biso_with_capacity(Rng& rng, double target_capacity,
                                      int max_pairs = 5,
                                      const Tolerance& tol = {});

// Random channel with at most three raw output symbols: one generic pair of
// mass m plus a pure-noise half pair of mass 1-m. The generic pair's ratio is
// solved in closed form so the capacity m(1 - h(r)) equals target_capacity.
BisoChannel random_ternary_with_capacity(Rng& rng, double target_capacity,
                                         const Tolerance& tol = {});

}  // namespace biso
