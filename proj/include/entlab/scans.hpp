/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <string>
#include <vector>

#include "entlab/properties.hpp"

namespace entlab {

/// A rectangular numeric table with named columns (CSV-ready).
struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Per-tau comparison of the two Fannes-type bounds for alpha < 1:
/// columns tau, fannes, yanagi, rel_diff, yanagi_applicable.  rel_diff is
/// (yanagi - fannes)/fannes (NaN when not applicable); for d = 2,
/// alpha = 1/2 it climbs to sqrt(2) - 1 ~ 0.414 as tau -> 0.
ScanTable fannes_comparison_scan(int d, double alpha, const std::vector<double>& tau_grid);

/// Convergence of the Tsallis/Renyi families to the alpha = 1 limit on a
/// fixed random pair: columns k, eps, err_tsallis, err_renyi, err_quantum,
/// where eps = 10^{-k} and errors average the two sides 1 +- eps.
ScanTable alpha_limit_scan(int n, uint64_t seed, int k_min = 2, int k_max = 6);

/// Tightness of the Pinsker-type floor: for each tau the minimum of the
/// two-point H_alpha({u,1-u}||{v,1-v}) over |u-v| = tau against
/// kappa_alpha g(tau): columns tau, bound, min_measured, ratio.
ScanTable pinsker_tightness_scan(double alpha, const std::vector<double>& tau_grid,
                                 int u_steps = 200);

}  // namespace entlab
