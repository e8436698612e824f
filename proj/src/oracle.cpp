/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace entlab {

namespace {

// Best value of sum_i phi(tau k_i / g) over compositions (k_1..k_m) of g
// into m nonnegative parts, for every m = 1..m_max.  best[m][r] is the
// maximum over m parts with budget r; phi need not be monotone.
std::vector<double> composition_maxima(int m_max, int g, const std::vector<double>& phi_of_k) {
  std::vector<std::vector<double>> best(static_cast<size_t>(m_max + 1),
                                        std::vector<double>(static_cast<size_t>(g + 1),
                                                            -std::numeric_limits<double>::infinity()));
  for (int r = 0; r <= g; ++r) best[1][static_cast<size_t>(r)] = phi_of_k[static_cast<size_t>(r)];
  for (int m = 2; m <= m_max; ++m)
    for (int r = 0; r <= g; ++r) {
      double v = -std::numeric_limits<double>::infinity();
      for (int k = 0; k <= r; ++k)
        v = std::max(v, phi_of_k[static_cast<size_t>(k)] +
                            best[static_cast<size_t>(m - 1)][static_cast<size_t>(r - k)]);
      best[static_cast<size_t>(m)][static_cast<size_t>(r)] = v;
    }
  std::vector<double> full(static_cast<size_t>(m_max + 1), 0.0);
  for (int m = 1; m <= m_max; ++m) full[static_cast<size_t>(m)] = best[static_cast<size_t>(m)][static_cast<size_t>(g)];
  return full;
}

}  // namespace

double brute_force_thm3_oracle(double q0, double tau, double alpha, int n, int grid_steps) {
  if (!(alpha > 1.0)) throw std::domain_error("brute_force_thm3_oracle: requires alpha > 1");
  if (grid_steps < 20) throw std::domain_error("brute_force_thm3_oracle: grid_steps must be >= 20");
  if (n < 2 || n > 6) throw std::domain_error("brute_force_thm3_oracle: n must lie in [2, 6]");
  if (!(q0 > 0.0)) throw std::domain_error("brute_force_thm3_oracle: q0 must be positive");
  if (!(tau >= 0.0 && tau <= 1.0 - q0))
    throw std::domain_error("brute_force_thm3_oracle: infeasible (q0, tau)");
  if (tau == 0.0) return 0.0;

  const int g = grid_steps;
  const double scale = std::pow(q0, 1.0 - alpha);

  // Per-coordinate contributions relative to an untouched coordinate, so
  // padding a composition with zeros adds nothing.
  std::vector<double> phi_plus(static_cast<size_t>(g + 1));
  for (int k = 0; k <= g; ++k) {
    const double x = tau * k / g;
    phi_plus[static_cast<size_t>(k)] = std::pow(q0 + x, alpha) * scale - q0;
  }

  if (tau <= q0) {
    std::vector<double> phi_minus(static_cast<size_t>(g + 1));
    for (int k = 0; k <= g; ++k) {
      const double y = tau * k / g;
      phi_minus[static_cast<size_t>(k)] = pow_support(q0 - y, alpha) * scale - q0;
    }
    const auto vx = composition_maxima(n - 1, g, phi_plus);
    const auto vy = composition_maxima(n - 1, g, phi_minus);
    double best = -std::numeric_limits<double>::infinity();
    for (int mx = 1; mx <= n - 1; ++mx)
      best = std::max(best, vx[static_cast<size_t>(mx)] + vy[static_cast<size_t>(n - mx)]);
    // analytic extreme point: one x and one y carry all of tau
    best = std::max(best, phi_plus[static_cast<size_t>(g)] + phi_minus[static_cast<size_t>(g)]);
    return best / (alpha - 1.0);
  }

  // tau > q0: the proof's relaxation leaves the single-sided objective
  // G = sum_i [(q0+x_i)^a q0^{1-a} - q0] - tau over sum x_i = tau.
  const auto vx = composition_maxima(n - 1, g, phi_plus);
  double best = vx[static_cast<size_t>(n - 1)];
  best = std::max(best, phi_plus[static_cast<size_t>(g)]);  // injected extreme point
  return (best - tau) / (alpha - 1.0);
}

ExtremalConstruction extremal_thm3_instance(double q0, double tau, double alpha, int n) {
  if (!(alpha > 1.0)) throw std::domain_error("extremal_thm3_instance: requires alpha > 1");
  if (!(q0 > 0.0 && q0 <= 0.5))
    throw std::domain_error("extremal_thm3_instance: q0 must lie in (0, 1/2]");
  const int m = static_cast<int>(std::lround(1.0 / q0));
  if (std::fabs(m * q0 - 1.0) > 1e-9 || m < 2 || m > n)
    throw std::domain_error(
        "extremal_thm3_instance: q0 must equal 1/m for an integer m in [2, n] (otherwise equality is unattainable)");
  if (!(tau >= 0.0 && tau <= 1.0 - q0))
    throw std::domain_error("extremal_thm3_instance: infeasible (q0, tau)");

  std::vector<double> q(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) q[static_cast<size_t>(i)] = q0;
  std::vector<double> p = q;
  if (tau <= q0) {
    // one coordinate up by tau, one down by tau: the proof's maximizer
    p[0] += tau;
    p[1] -= tau;
  } else {
    // spread the negative part; witnesses the dominant (q0+tau)^a term
    p[0] += tau;
    for (int i = 1; i < m; ++i) p[static_cast<size_t>(i)] -= tau / (m - 1);
  }
  ExtremalConstruction ex{q0, tau, alpha, Distribution(p), Distribution(q)};
  return ex;
}

}  // namespace entlab
