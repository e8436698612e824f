/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include "entlab/operator_core.hpp"

namespace entlab {

/// Thrown by quantum_f_divergence when kr(B) is not contained in kr(A);
/// callers should route to quantum_f_divergence_limit.
class kernel_precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by quantum_f_divergence_limit when the epsilon sequence neither
/// converges nor diverges monotonically (distinct from a +inf result).
class limit_failure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides kr(B) subset-of kr(A), i.e. supp(A) subset-of supp(B), via
/// tr((I - B^0) A) <= 1e-12 tr(A).
bool kernel_contained(const PositiveOperator& a, const PositiveOperator& b);

double quantum_tsallis_entropy(const DensityOperator& rho, Order order);
double quantum_renyi_entropy(const DensityOperator& rho, Order order);

/// tr(A ln A - A ln B) on supports; +inf when supp(A) is not inside supp(B).
ExtendedValue quantum_relative_entropy(const PositiveOperator& a, const PositiveOperator& b);

/// (alpha-1)^{-1} (tr(A^alpha B^{1-alpha}) - tr A), powers on supports;
/// +inf for alpha > 1 (and the alpha -> 1 limit) in the singular case.
ExtendedValue quantum_tsallis_rel_entropy(const PositiveOperator& a, const PositiveOperator& b,
                                          Order order);

ExtendedValue quantum_renyi_rel_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                                        Order order);

/// <B^{1/2}, f(L_A R_{B^{-1}}) B^{1/2}>_hs expanded through the spectral
/// decompositions: sum over a in spc(A), b in spc(B) with b > 0 of
/// f(a/b) b tr(P_a Q_b).  Requires kr(B) inside kr(A); otherwise throws
/// kernel_precondition_error (use quantum_f_divergence_limit).
ExtendedValue quantum_f_divergence(const PositiveOperator& a, const PositiveOperator& b,
                                   const FDivergenceSpec& spec);

/// lim_{eps -> 0} S_f(A || B + eps I) along eps_k = 2^{-k}, k = 4..40.
/// Returns the stabilized value, +inf on monotone blow-up, and throws
/// limit_failure_error on a non-convergent non-monotone sequence.
ExtendedValue quantum_f_divergence_limit(const PositiveOperator& a, const PositiveOperator& b,
                                         const FDivergenceSpec& spec);

/// Two-point classical floor from the pinching channel: S_f({u'+-}||{v'+-})
/// with u'+- = tr(P+- A), v'+- = tr(P+- B) over the Jordan projectors of
/// A - B; a lower bound on quantum_f_divergence for operator convex f.
ExtendedValue theorem1_classical_floor(const PositiveOperator& a, const PositiveOperator& b,
                                       const FDivergenceSpec& spec);

}  // namespace entlab
