/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <optional>
#include <string>

#include "entlab/classical.hpp"

namespace entlab {

/// Pluggable kernels behind the bound evaluators.  The defaults are the real
/// functions; the harness substitutes corrupted ones for mutation testing,
/// so the genuine evaluation path is what gets exercised.
struct BoundKernels {
  double (*kappa_fn)(Order);
  double (*series_coeff_fn)(int);
  bool (*thm3_first_branch)(double tau, double q0);

  static const BoundKernels& standard();
};

enum class BoundDirection { lower, upper };

/// A measured quantity next to the bound that should dominate it (or be
/// dominated by it).  `in_domain = false` means the bound's hypotheses do
/// not hold, which forces the verdict to "not-applicable".
struct BoundReport {
  ExtendedValue measured;
  ExtendedValue bound;
  BoundDirection direction = BoundDirection::lower;
  bool in_domain = true;
  double tolerance = 1e-9;

  /// bound - measured for upper bounds, measured - bound for lower bounds.
  ExtendedValue slack() const;
  bool satisfied() const;
  std::string verdict() const;  // "satisfied" | "violated" | "not-applicable"
};

BoundReport make_bound_report(ExtendedValue measured, ExtendedValue bound, BoundDirection direction,
                              bool in_domain, double tolerance = 1e-9);

/// kappa_alpha theta g(tau/theta): the Pinsker-type floor for the Tsallis
/// relative entropy of equal-trace positive operators, 0 < alpha < 1.
double pinsker_lower_bound(double theta, double tau, Order order,
                           const BoundKernels& k = BoundKernels::standard());

/// Partial sum of the binomial expansion of the floor above; nondecreasing
/// in n_terms and dominated by pinsker_lower_bound.
double pinsker_series_bound(double theta, double tau, Order order, int n_terms,
                            const BoundKernels& k = BoundKernels::standard());

/// (alpha-1)^{-1} ln[1 - (1-alpha) kappa_alpha g(tau)]: Pinsker-type floor
/// for the Renyi relative entropy of density operators, 0 < alpha < 1.
double renyi_pinsker_bound(double tau, Order order,
                           const BoundKernels& k = BoundKernels::standard());

/// Upper bound on H_alpha(P||Q) for alpha > 1 in terms of the minimal
/// probability q0 and tau = D(P,Q); two branches split at tau = q0.
ExtendedValue upper_bound_thm3(double q0, double tau, Order order,
                               const BoundKernels& k = BoundKernels::standard());

/// Same bound written with alpha-logarithms; algebraically identical.
/// Also valid with R_alpha in place of H_alpha.
ExtendedValue upper_bound_thm3_log_form(double q0, double tau, Order order,
                                        const BoundKernels& k = BoundKernels::standard());

/// sum_y p_Y^alpha h_alpha(q(e|y)) + ln_alpha(N-1) sum_y p_Y^alpha q(e|y)^alpha,
/// the intermediate Fano-type bound on the conditional entropy.
double fano_intermediate(const JointDistribution& j, Order order);

/// Closed-form Fano-type bound on H_alpha(X|Y) in terms of Pe and N.
double fano_bound(double pe, int n, Order order);

/// Fannes-type bound on |H_alpha(rho) - H_alpha(sigma)| in terms of the
/// trace distance tau and the dimension d.  The alpha > 1 branch is only
/// valid for tau <= d/(d+1) and rejects arguments beyond it.
double fannes_bound(double tau, int d, Order order);

/// ((2 tau)^alpha - 2 tau)/(1-alpha) + (2 tau)^alpha ln_alpha d, valid while
/// 2 tau <= alpha^{1/(1-alpha)}; nullopt when out of range (not an error).
std::optional<double> yanagi_comparison_bound(double tau, int d, Order order);

}  // namespace entlab
