#pragma once

#include <string>
#include <vector>

#include "tolerance.hpp"

namespace biso {

// Input distribution P(X=0), folded onto [0, 1/2]; output symmetry makes
// I(X;Y) even about 1/2, so the half-interval carries all information.
class InputBias {
 public:
  static InputBias of(double x, const Tolerance& tol = {});
  double value() const { return x_; }

 private:
  explicit InputBias(double x) : x_(x) {}
  double x_;
};

struct PairProb {
  double p_pos = 0;  // P(Y=+k|X=0), stored with p_pos >= p_neg
  double p_neg = 0;  // P(Y=-k|X=0) = P(Y=+k|X=1)
  double mass() const { return p_pos + p_neg; }
};

enum class ChannelFamily { Bsc, Bec, General };

// Binary-input symmetric-output channel in canonical paired form: one
// (p_k, p_{-k}) entry per output-symbol pair after the zero symbol (if any)
// is split into two half-mass symbols. Immutable after construction.
class BisoChannel {
 public:
  static BisoChannel bsc(double p, const Tolerance& tol = {});
  static BisoChannel bec(double e, const Tolerance& tol = {});
  static BisoChannel bsc_with_capacity(double c, const Tolerance& tol = {});
  static BisoChannel bec_with_capacity(double c, const Tolerance& tol = {});
  static BisoChannel from_rows(const std::vector<double>& row0,
                               const std::vector<double>& row1,
                               const Tolerance& tol = {});
  static BisoChannel from_pairs(std::vector<PairProb> pairs,
                                const Tolerance& tol = {});

  // The counterexample pair of same-capacity channels that are not
  // more-capable comparable.
  static BisoChannel counterexample_a();
  static BisoChannel counterexample_b();

  const std::vector<PairProb>& pairs() const { return pairs_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  ChannelFamily family() const { return family_; }
  double family_param() const { return family_param_; }

  double capacity() const { return capacity_; }
  double mutual_info(InputBias bias) const;
  // f(s) = I(U;Y) for U -> X ~ BSC(s) with uniform X; equals C - I(X;Y at s).
  double f_value(InputBias s) const;

  // Same capacity target within the channel's parametric family (bsc/bec);
  // refuses general channels.
  BisoChannel equalized_to(double target_capacity, const Tolerance& tol = {}) const;

 private:
  BisoChannel(std::vector<PairProb> pairs, ChannelFamily family,
              double family_param, std::string label);

  std::vector<PairProb> pairs_;
  std::vector<double> pair_entropy_;  // h(p_neg/mass) per pair, cached
  double capacity_ = 0;
  ChannelFamily family_ = ChannelFamily::General;
  double family_param_ = 0;
  std::string label_;
};

}  // namespace biso
