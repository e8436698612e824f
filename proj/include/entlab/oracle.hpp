/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include "entlab/classical.hpp"

namespace entlab {

/// Explicit (P, Q) pair witnessing the minimal-probability upper bound:
/// probability of Q on supp(P) equals q0 and D(P, Q) = tau.  In the
/// tau <= q0 branch (with q0 = 1/m) the pair attains the bound exactly.
struct ExtremalConstruction {
  double q0 = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  Distribution p_extremal;
  Distribution q_base;
};

/// Grid maximum of the relaxed upper-bound objective over the simplex
/// sum x_i = sum y_j = tau (and the single-sided objective for tau > q0),
/// with x_i, y_j restricted to multiples of tau/grid_steps.  The objective
/// is coordinate-separable, so the grid maximum is computed exactly by
/// dynamic programming over the budget; the analytic extreme point (all
/// mass on one coordinate) is a grid member, so equality checks are exact.
/// Never exceeds upper_bound_thm3 and approaches it from below.
double brute_force_thm3_oracle(double q0, double tau, double alpha, int n, int grid_steps);

/// Builds the extremal pair.  Requires q0 = 1/m for an integer 2 <= m <= n
/// (the only configurations where Q equals the proof's \bar{Q} on supp(P),
/// hence where equality is attainable) and tau <= 1 - q0.
ExtremalConstruction extremal_thm3_instance(double q0, double tau, double alpha, int n);

}  // namespace entlab
