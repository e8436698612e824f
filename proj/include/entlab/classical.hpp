/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "entlab/extended_value.hpp"
#include "entlab/scalar_kernel.hpp"

namespace entlab {

/// Shape mismatch between two objects that must live on the same alphabet
/// or carry the same dimension.
class shape_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Entries at or below 1e-14 * max_entry count as zero; supports are
/// computed after this rounding so singular-case branches are decidable.
constexpr double kSupportCutoffFactor = 1e-14;

std::vector<char> support_mask(const std::vector<double>& v);

/// Normalized probability vector over a finite alphabet.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit Distribution(std::vector<double> probs);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::vector<double>& probs() const { return p_; }
  std::vector<char> support() const { return support_mask(p_); }

 private:
  std::vector<double> p_;
};

/// Unnormalized nonnegative weights with an explicit support.
class WeightSet {
 public:
  explicit WeightSet(std::vector<double> weights);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[static_cast<size_t>(i)]; }
  const std::vector<double>& weights() const { return w_; }
  const std::vector<char>& support() const { return support_; }
  std::vector<int> support_indices() const;
  double total() const;

 private:
  std::vector<double> w_;
  std::vector<char> support_;
};

/// Joint distribution of two variables on the same N-point alphabet,
/// stored as an N x N cell matrix p_XY(x, y).
class JointDistribution {
 public:
  explicit JointDistribution(std::vector<std::vector<double>> cells);

  int size() const { return n_; }
  double cell(int x, int y) const { return cells_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  const std::vector<std::vector<double>>& cells() const { return cells_; }
  Distribution marginal_x() const;
  Distribution marginal_y() const;

 private:
  int n_;
  std::vector<std::vector<double>> cells_;
};

/// Convex integrand of a Csiszar-type f-divergence.  `limit_at_infinity`
/// is lim_{z->inf} f(z)/z, needed when the second argument has zeros; +inf
/// is a legal value for it.
struct FDivergenceSpec {
  std::function<double(double)> f;
  std::optional<double> limit_at_infinity;
  bool operator_convex = false;  // caller-asserted, never verified here

  /// f_alpha(z) = (alpha-1)^{-1} z^alpha, the integrand behind the Tsallis
  /// family; operator convex for alpha in (0,1) and (1,2].
  static FDivergenceSpec f_alpha(Order order);
  /// f(z) = |z - 1|: S_f = 2 D(P,Q).
  static FDivergenceSpec total_variation();
  /// f(z) = z ln z: S_f = KL divergence.
  static FDivergenceSpec kullback_leibler();
};

// --- classical operations ---------------------------------------------------

double trace_distance(const Distribution& p, const Distribution& q);
double tsallis_entropy(const Distribution& p, Order order);
double renyi_entropy(const Distribution& p, Order order);

/// H_alpha(A||B) on weight sets; +inf for alpha > 1 (and the KL limit)
/// unless supp(A) is contained in supp(B).
ExtendedValue tsallis_rel_entropy(const WeightSet& a, const WeightSet& b, Order order);
ExtendedValue tsallis_rel_entropy(const Distribution& p, const Distribution& q, Order order);
ExtendedValue renyi_rel_entropy(const Distribution& p, const Distribution& q, Order order);
/// Standard relative entropy H_1 (Kullback-Leibler) of weight sets.
ExtendedValue kl_divergence(const WeightSet& a, const WeightSet& b);

ExtendedValue f_divergence(const WeightSet& p, const WeightSet& q, const FDivergenceSpec& spec);
ExtendedValue f_divergence(const Distribution& p, const Distribution& q, const FDivergenceSpec& spec);

/// min{ q_j : j in supp(support_of) }.
double minimal_probability(const Distribution& q, const WeightSet& support_of);

/// The set \bar{Q} with entries max{q0, q_j - p_j} on supp(P), zero elsewhere.
WeightSet qbar_construction(const Distribution& p, const Distribution& q);

double joint_tsallis_entropy(const JointDistribution& j, Order order);
/// H_alpha(X|Y) = sum_y p_Y(y)^alpha H_alpha(X|y).
double conditional_tsallis_entropy(const JointDistribution& j, Order order);
/// P_e = 1 - sum_y p_XY(y, y).
double error_probability(const JointDistribution& j);

/// Coupling with marginals exactly P and Q and P(X != Y) = D(P,Q):
/// diagonal mass min(p,q), residual mass spread as a product.
JointDistribution maximal_coupling(const Distribution& p, const Distribution& q);

}  // namespace entlab
