/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/scalar_kernel.hpp"

namespace entlab {

double alpha_log(double z, Order order) {
  if (!(z > 0.0)) throw std::domain_error("alpha_log: argument must be positive");
  const double lz = std::log(z);
  if (order.near_one) return lz;
  const double om = 1.0 - order.alpha;
  if (std::fabs(om) < Order::kSeriesBand) {
    // (e^w - 1)/(1-alpha) with w = (1-alpha) ln z; direct evaluation loses
    // ~|1-alpha|^{-1} digits, the 4-term expansion keeps ~1e-14 accuracy.
    const double w = om * lz;
    return lz * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0))));
  }
  return (std::pow(z, om) - 1.0) / om;
}

double binary_tsallis(double u, Order order) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("binary_tsallis: u must lie in [0,1]");
  const double w = 1.0 - u;
  if (order.near_one) {
    double s = 0.0;
    if (u > 0.0) s -= u * std::log(u);
    if (w > 0.0) s -= w * std::log(w);
    return s;
  }
  double s = 0.0;
  if (u > 0.0) s -= std::pow(u, order.alpha) * alpha_log(u, order);
  if (w > 0.0) s -= std::pow(w, order.alpha) * alpha_log(w, order);
  return s;
}

double g_of_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("g_of_t: t must lie in [0,1]");
  return 1.0 - std::sqrt(1.0 - t * t);
}

double kappa(Order order) {
  const double a = order.alpha;
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("kappa: requires 0 < alpha < 1");
  return a <= 0.5 ? 2.0 * a / (1.0 - a) : 2.0;
}

namespace {
// 0^0 resolves to the support indicator, i.e. 0 when the base vanishes.
double pow_indicator(double x, double e) { return x > 0.0 ? std::pow(x, e) : 0.0; }
}  // namespace

double phi_uv(double u, double v, double alpha) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw std::domain_error("phi_uv: u, v must lie in [0,1]");
  if (!(alpha >= 0.0 && alpha <= 0.5))
    throw std::domain_error("phi_uv: lemma hypothesis needs alpha in [0,1/2]");
  const double t = std::fabs(u - v);
  return pow_indicator(u, alpha) * pow_indicator(v, 1.0 - alpha) +
         pow_indicator(1.0 - u, alpha) * pow_indicator(1.0 - v, 1.0 - alpha) +
         2.0 * alpha * g_of_t(t) - 1.0;
}

double pinsker_series_coeff(int n) {
  if (n < 1) throw std::domain_error("pinsker_series_coeff: n must be >= 1");
  // c_1 = 1/2, c_{k+1} = c_k (k - 1/2)/(k + 1); every factor is positive.
  double c = 0.5;
  for (int k = 1; k < n; ++k) c *= (k - 0.5) / (k + 1.0);
  return c;
}

}  // namespace entlab
