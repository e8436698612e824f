/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/scans.hpp"

#include <cmath>
#include <limits>

#include "entlab/quantum.hpp"
#include "entlab/samplers.hpp"

namespace entlab {

ScanTable fannes_comparison_scan(int d, double alpha, const std::vector<double>& tau_grid) {
  const Order order(alpha);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("fannes_comparison_scan: requires 0 < alpha < 1");
  ScanTable t;
  t.columns = {"tau", "fannes", "yanagi", "rel_diff", "yanagi_applicable"};
  for (double tau : tau_grid) {
    const double fan = fannes_bound(tau, d, order);
    const auto yan = yanagi_comparison_bound(tau, d, order);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (yan)
      t.rows.push_back({tau, fan, *yan, fan > 0.0 ? (*yan - fan) / fan : nan, 1.0});
    else
      t.rows.push_back({tau, fan, nan, nan, 0.0});
  }
  return t;
}

ScanTable alpha_limit_scan(int n, uint64_t seed, int k_min, int k_max) {
  SplitMix64 rng(substream_seed(seed, "alpha-limit-scan", 0));
  const Distribution p = sample_distribution(n, rng, 0.05);
  const Distribution q = sample_distribution(n, rng, 0.05);
  const DensityOperator rho = diagonal_density(p);
  const DensityOperator sigma = diagonal_density(q);
  const double kl = kl_divergence(WeightSet(p.probs()), WeightSet(q.probs())).finite_value();
  const double qkl = quantum_relative_entropy(rho, sigma).finite_value();

  ScanTable t;
  t.columns = {"k", "eps", "err_tsallis", "err_renyi", "err_quantum"};
  for (int k = k_min; k <= k_max; ++k) {
    const double eps = std::pow(10.0, -k);
    // average the two sides: the even Taylor term cancels, leaving the
    // first-order coefficient that sets the per-decade ratio
    double eh = 0.0, er = 0.0, eq = 0.0;
    for (double side : {1.0, -1.0}) {
      const Order order(1.0 + side * eps);
      eh += 0.5 * std::fabs(tsallis_rel_entropy(p, q, order).finite_value() - kl);
      er += 0.5 * std::fabs(renyi_rel_entropy(p, q, order).finite_value() - kl);
      eq += 0.5 * std::fabs(quantum_tsallis_rel_entropy(rho, sigma, order).finite_value() - qkl);
    }
    t.rows.push_back({static_cast<double>(k), eps, eh, er, eq});
  }
  return t;
}

ScanTable pinsker_tightness_scan(double alpha, const std::vector<double>& tau_grid, int u_steps) {
  const Order order(alpha);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("pinsker_tightness_scan: requires 0 < alpha < 1");
  if (u_steps < 2) throw std::domain_error("pinsker_tightness_scan: u_steps must be >= 2");
  ScanTable t;
  t.columns = {"tau", "bound", "min_measured", "ratio"};
  for (double tau : tau_grid) {
    const double bound = kappa(order) * g_of_t(tau);
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= u_steps; ++i) {
      const double u = tau + (1.0 - tau) * i / u_steps;
      const double v = u - tau;
      const Distribution pu({u, 1.0 - u});
      const Distribution pv({v, 1.0 - v});
      lo = std::min(lo, tsallis_rel_entropy(pu, pv, order).finite_value());
      lo = std::min(lo, tsallis_rel_entropy(pv, pu, order).finite_value());
    }
    t.rows.push_back({tau, bound, lo, bound > 0.0 ? lo / bound : 1.0});
  }
  return t;
}

}  // namespace entlab
