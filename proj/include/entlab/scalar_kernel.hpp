/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cmath>
#include <stdexcept>

namespace entlab {

/// Entropic order alpha.  Orders within kNearOneBand of 1 route to the
/// standard (Shannon / von Neumann / Kullback-Leibler) limit formulas.
struct Order {
  double alpha;
  bool near_one;

  static constexpr double kNearOneBand = 1e-6;
  // Inside [kNearOneBand, kSeriesBand) the alpha-logarithm is evaluated by a
  // truncated expansion of exp((1-alpha) ln z) to dodge cancellation.
  static constexpr double kSeriesBand = 1e-4;

  explicit Order(double a) : alpha(a), near_one(std::fabs(a - 1.0) < kNearOneBand) {
    if (!(a > 0.0) || !std::isfinite(a))
      throw std::domain_error("Order: alpha must be positive and finite");
  }
};

/// ln_alpha z = (z^{1-alpha} - 1)/(1 - alpha); natural log in the alpha->1 limit.
double alpha_log(double z, Order order);

/// Binary Tsallis entropy h_alpha(u) = -u^a ln_a u - (1-u)^a ln_a(1-u).
double binary_tsallis(double u, Order order);

/// g(t) = 1 - sqrt(1 - t^2) on [0,1].
double g_of_t(double t);

/// Pinsker factor: 2a/(1-a) for 0 < a <= 1/2, 2 for 1/2 <= a < 1.
double kappa(Order order);

/// Phi_uv(alpha) = u^a v^{1-a} + (1-u)^a (1-v)^{1-a} + 2a g(|u-v|) - 1,
/// for alpha in [0, 1/2].  Conventions at the boundary: 0^e = 0 for e > 0,
/// and 0^0 = 0 (support indicator) so that alpha = 0 is well defined.
double phi_uv(double u, double v, double alpha);

/// binom(1/2, n) * (-1)^{n+1}; positive for every n >= 1.
double pinsker_series_coeff(int n);

/// x^e with 0^e := 0 for every e (including e = 0): the support-indicator
/// convention shared by the entropy sums.
inline double pow_support(double x, double e) {
  return x > 0.0 ? std::pow(x, e) : 0.0;
}

}  // namespace entlab
