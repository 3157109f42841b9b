#include "channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "binmath.hpp"

namespace biso {

InputBias InputBias::of(double x, const Tolerance& tol) {
  if (!std::isfinite(x) || x < -tol.abs_eps || x > 1.0 + tol.abs_eps)
    throw_domain("input bias outside [0,1]: " + std::to_string(x));
  x = std::clamp(x, 0.0, 1.0);
  if (x > 0.5) x = 1.0 - x;
  return InputBias(x);
}

namespace {

std::vector<PairProb> canonicalize(std::vector<PairProb> pairs,
                                   const Tolerance& tol) {
  double total = 0;
  for (auto& pr : pairs) {
    if (!std::isfinite(pr.p_pos) || !std::isfinite(pr.p_neg) ||
        pr.p_pos < -tol.abs_eps || pr.p_neg < -tol.abs_eps)
      throw Error(ErrorCode::NotStochastic, "negative transition probability");
    pr.p_pos = std::max(pr.p_pos, 0.0);
    pr.p_neg = std::max(pr.p_neg, 0.0);
    if (pr.p_pos < pr.p_neg) std::swap(pr.p_pos, pr.p_neg);
    total += pr.mass();
  }
  if (std::abs(total - 1.0) > tol.abs_eps)
    throw Error(ErrorCode::NotStochastic,
                "pair masses sum to " + std::to_string(total) + ", expected 1");
  std::vector<PairProb> out;
  out.reserve(pairs.size());
  for (const auto& pr : pairs) {
    if (pr.mass() <= 0) continue;  // zero-mass pairs carry nothing
    out.push_back({pr.p_pos / total, pr.p_neg / total});
  }
  if (out.empty())
    throw Error(ErrorCode::NotStochastic, "channel has no output mass");
  return out;
}

}  // namespace

BisoChannel::BisoChannel(std::vector<PairProb> pairs, ChannelFamily family,
                         double family_param, std::string label)
    : pairs_(std::move(pairs)),
      family_(family),
      family_param_(family_param),
      label_(std::move(label)) {
  pair_entropy_.reserve(pairs_.size());
  double f1 = 0;  // integral of the BISO curve = sum of mass * h
  for (const auto& pr : pairs_) {
    const double hk = binary_entropy(pr.p_neg / pr.mass());
    pair_entropy_.push_back(hk);
    f1 += pr.mass() * hk;
  }
  capacity_ = 1.0 - f1;
}

BisoChannel BisoChannel::bsc(double p, const Tolerance& tol) {
  if (!std::isfinite(p) || p < -tol.abs_eps || p > 1.0 + tol.abs_eps)
    throw_domain("bsc crossover outside [0,1]");
  p = std::clamp(p, 0.0, 1.0);
  return BisoChannel({{1.0 - p, p}}, ChannelFamily::Bsc, p,
                     "bsc(" + std::to_string(p) + ")");
}

BisoChannel BisoChannel::bec(double e, const Tolerance& tol) {
  if (!std::isfinite(e) || e < -tol.abs_eps || e > 1.0 + tol.abs_eps)
    throw_domain("bec erasure outside [0,1]");
  e = std::clamp(e, 0.0, 1.0);
  std::vector<PairProb> pairs;
  if (e < 1.0) pairs.push_back({1.0 - e, 0.0});
  if (e > 0.0) pairs.push_back({e / 2, e / 2});  // erasure symbol split
  return BisoChannel(std::move(pairs), ChannelFamily::Bec, e,
                     "bec(" + std::to_string(e) + ")");
}

BisoChannel BisoChannel::bsc_with_capacity(double c, const Tolerance& tol) {
  if (!std::isfinite(c) || c < -tol.abs_eps || c > 1.0 + tol.abs_eps)
    throw_domain("capacity outside [0,1]");
  c = std::clamp(c, 0.0, 1.0);
  return bsc(binary_entropy_inverse(1.0 - c, tol), tol);
}

BisoChannel BisoChannel::bec_with_capacity(double c, const Tolerance& tol) {
  if (!std::isfinite(c) || c < -tol.abs_eps || c > 1.0 + tol.abs_eps)
    throw_domain("capacity outside [0,1]");
  return bec(1.0 - std::clamp(c, 0.0, 1.0), tol);
}

BisoChannel BisoChannel::from_rows(const std::vector<double>& row0,
                                   const std::vector<double>& row1,
                                   const Tolerance& tol) {
  if (row0.size() != row1.size() || row0.empty())
    throw Error(ErrorCode::NotStochastic, "rows must be nonempty and equal length");
  const size_t n = row0.size();
  auto check_row = [&](const std::vector<double>& row, const char* name) {
    double sum = 0;
    for (double v : row) {
      if (!std::isfinite(v) || v < -tol.abs_eps)
        throw Error(ErrorCode::NotStochastic,
                    std::string(name) + " has a negative entry");
      sum += std::max(v, 0.0);
    }
    if (std::abs(sum - 1.0) > tol.abs_eps)
      throw Error(ErrorCode::NotStochastic,
                  std::string(name) + " sums to " + std::to_string(sum));
  };
  check_row(row0, "row0");
  check_row(row1, "row1");

  // Discover an output involution sigma with row0[y] = row1[sigma(y)] and
  // row0[sigma(y)] = row1[y]. A fixed point is a zero symbol: split in half.
  std::vector<bool> used(n, false);
  std::vector<PairProb> pairs;
  for (size_t y = 0; y < n; ++y) {
    if (used[y]) continue;
    if (std::abs(row0[y] - row1[y]) <= tol.abs_eps) {
      used[y] = true;
      pairs.push_back({row0[y] / 2, row0[y] / 2});
      continue;
    }
    bool matched = false;
    for (size_t z = y + 1; z < n && !matched; ++z) {
      if (used[z]) continue;
      if (std::abs(row0[y] - row1[z]) <= tol.abs_eps &&
          std::abs(row0[z] - row1[y]) <= tol.abs_eps) {
        used[y] = used[z] = true;
        pairs.push_back({row0[y], row0[z]});
        matched = true;
      }
    }
    if (!matched)
      throw Error(ErrorCode::NotSymmetric,
                  "no output pairing makes the rows symmetric (symbol " +
                      std::to_string(y) + ")");
  }
  return BisoChannel(canonicalize(std::move(pairs), tol),
                     ChannelFamily::General, 0, "");
}

BisoChannel BisoChannel::from_pairs(std::vector<PairProb> pairs,
                                    const Tolerance& tol) {
  return BisoChannel(canonicalize(std::move(pairs), tol),
                     ChannelFamily::General, 0, "");
}

BisoChannel BisoChannel::counterexample_a() {
  const double a_m2 = 0.061;
  const double a_m1 = (1.0 - 10.0 * a_m2) / 2.0;
  BisoChannel ch = from_pairs({{a_m1, a_m1}, {9.0 * a_m2, a_m2}});
  ch.set_label("A");
  return ch;
}

BisoChannel BisoChannel::counterexample_b() {
  const double b_m2 = 0.0634977;
  BisoChannel ch =
      from_pairs({{4.0 * (1.0 - b_m2) / 5.0, (1.0 - b_m2) / 5.0}, {0.0, b_m2}});
  ch.set_label("B");
  return ch;
}

double BisoChannel::mutual_info(InputBias bias) const {
  const double x = bias.value();
  double total = 0;
  for (size_t k = 0; k < pairs_.size(); ++k) {
    const auto& pr = pairs_[k];
    // p_neg/mass is already in [0, 1/2], so it equals h^{-1}(h_k) exactly.
    const double r = pr.p_neg / pr.mass();
    total += pr.mass() * (binary_entropy(convolve(x, r)) - pair_entropy_[k]);
  }
  return std::max(total, 0.0);
}

double BisoChannel::f_value(InputBias s) const {
  return capacity_ - mutual_info(s);
}

BisoChannel BisoChannel::equalized_to(double target_capacity,
                                      const Tolerance& tol) const {
  switch (family_) {
    case ChannelFamily::Bsc:
      return bsc_with_capacity(target_capacity, tol);
    case ChannelFamily::Bec:
      return bec_with_capacity(target_capacity, tol);
    case ChannelFamily::General:
      throw Error(ErrorCode::Precondition,
                  "cannot rescale a general channel to a target capacity");
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

}  // namespace biso
