/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/bounds.hpp"

#include <cmath>

namespace entlab {

namespace {
bool tau_le_q0(double tau, double q0) { return tau <= q0; }
}  // namespace

const BoundKernels& BoundKernels::standard() {
  static const BoundKernels k{&kappa, &pinsker_series_coeff, &tau_le_q0};
  return k;
}

ExtendedValue BoundReport::slack() const {
  if (direction == BoundDirection::upper) {
    if (bound.is_infinite()) return ExtendedValue::infinity();
    if (measured.is_infinite())
      throw std::logic_error("BoundReport: infinite measured value under a finite upper bound");
    return bound.value() - measured.value();
  }
  if (measured.is_infinite()) return ExtendedValue::infinity();
  if (bound.is_infinite())
    throw std::logic_error("BoundReport: infinite lower bound over a finite measured value");
  return measured.value() - bound.value();
}

bool BoundReport::satisfied() const { return in_domain && slack() >= -tolerance; }

std::string BoundReport::verdict() const {
  if (!in_domain) return "not-applicable";
  return satisfied() ? "satisfied" : "violated";
}

BoundReport make_bound_report(ExtendedValue measured, ExtendedValue bound, BoundDirection direction,
                              bool in_domain, double tolerance) {
  return BoundReport{measured, bound, direction, in_domain, tolerance};
}

double pinsker_lower_bound(double theta, double tau, Order order, const BoundKernels& k) {
  if (!(theta > 0.0)) throw std::domain_error("pinsker_lower_bound: theta must be positive");
  if (!(tau >= 0.0 && tau <= theta))
    throw std::domain_error("pinsker_lower_bound: tau must lie in [0, theta]");
  return k.kappa_fn(order) * theta * g_of_t(tau / theta);
}

double pinsker_series_bound(double theta, double tau, Order order, int n_terms,
                            const BoundKernels& k) {
  if (!(theta > 0.0)) throw std::domain_error("pinsker_series_bound: theta must be positive");
  if (!(tau >= 0.0 && tau <= theta))
    throw std::domain_error("pinsker_series_bound: tau must lie in [0, theta]");
  if (n_terms < 1) throw std::domain_error("pinsker_series_bound: n_terms must be >= 1");
  const double x2 = (tau / theta) * (tau / theta);
  double s = 0.0, p = theta;  // p = tau^{2n} / theta^{2n-1}
  for (int n = 1; n <= n_terms; ++n) {
    p *= x2;
    s += k.series_coeff_fn(n) * p;
  }
  return k.kappa_fn(order) * s;
}

double renyi_pinsker_bound(double tau, Order order, const BoundKernels& k) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::domain_error("renyi_pinsker_bound: tau must lie in [0,1]");
  const double arg = 1.0 - (1.0 - order.alpha) * k.kappa_fn(order) * g_of_t(tau);
  // (1-alpha) kappa_alpha <= max(2 alpha, 2(1-alpha)) < 2 and g <= 1, so the
  // argument stays positive for every valid input.
  if (!(arg > 0.0)) throw std::logic_error("renyi_pinsker_bound: nonpositive log argument");
  return std::log(arg) / (order.alpha - 1.0);
}

namespace {

void check_thm3_domain(double q0, double tau, Order order) {
  if (!(order.alpha > 1.0)) throw std::domain_error("upper_bound_thm3: requires alpha > 1");
  if (!(q0 > 0.0)) throw std::domain_error("upper_bound_thm3: q0 must be positive");
  if (!(tau >= 0.0)) throw std::domain_error("upper_bound_thm3: tau must be nonnegative");
  if (tau > 1.0 - q0 + 1e-15)
    throw std::domain_error("upper_bound_thm3: tau must not exceed 1 - q0");
}

double thm3_log_terms(double q0, double tau, Order order, bool first_branch) {
  // -(q0+tau) ln_a(q0/(q0+tau)) - [tau<=q0 branch] (q0-tau) ln_a(q0/(q0-tau));
  // the (q0-tau) factor kills the second term at tau = q0.
  double s = -(q0 + tau) * alpha_log(q0 / (q0 + tau), order);
  if (first_branch && q0 - tau > 0.0)
    s -= (q0 - tau) * alpha_log(q0 / (q0 - tau), order);
  return s;
}

}  // namespace

ExtendedValue upper_bound_thm3(double q0, double tau, Order order, const BoundKernels& k) {
  check_thm3_domain(q0, tau, order);
  const bool first = k.thm3_first_branch(tau, q0);
  const double a = order.alpha;
  if (a - 1.0 < Order::kSeriesBand)
    return thm3_log_terms(q0, tau, order, first);  // alpha_log absorbs the cancellation
  if (first) {
    return (std::pow(q0 + tau, a) * std::pow(q0, 1.0 - a) +
            pow_support(q0 - tau, a) * std::pow(q0, 1.0 - a) - 2.0 * q0) /
           (a - 1.0);
  }
  return (std::pow(q0 + tau, a) * std::pow(q0, 1.0 - a) - (q0 + tau)) / (a - 1.0);
}

ExtendedValue upper_bound_thm3_log_form(double q0, double tau, Order order, const BoundKernels& k) {
  check_thm3_domain(q0, tau, order);
  return thm3_log_terms(q0, tau, order, k.thm3_first_branch(tau, q0));
}

double fano_intermediate(const JointDistribution& j, Order order) {
  const int n = j.size();
  if (n < 2) throw std::domain_error("fano_intermediate: alphabet must have N >= 2");
  const Distribution py = j.marginal_y();
  const auto mask = py.support();
  const double ln_nm1 = alpha_log(static_cast<double>(n - 1), order);
  double s = 0.0;
  for (int y = 0; y < n; ++y) {
    if (!mask[static_cast<size_t>(y)]) continue;
    const double qe = std::min(1.0, std::max(0.0, 1.0 - j.cell(y, y) / py[y]));
    const double wy = std::pow(py[y], order.alpha);
    s += wy * (binary_tsallis(qe, order) + ln_nm1 * pow_support(qe, order.alpha));
  }
  return s;
}

double fano_bound(double pe, int n, Order order) {
  if (!(pe >= 0.0 && pe <= 1.0)) throw std::domain_error("fano_bound: Pe must lie in [0,1]");
  if (n < 2) throw std::domain_error("fano_bound: alphabet must have N >= 2");
  const double a = order.alpha;
  if (order.near_one)  // classical Fano closed form, the limit of both branches
    return binary_tsallis(pe, order) + pe * std::log(static_cast<double>(n - 1));
  if (a < 1.0) {
    return (pow_support(pe, a) - a * pe) / (1.0 - a) +
           pow_support(pe, a) * alpha_log(static_cast<double>(n) * (n - 1), order);
  }
  return binary_tsallis(pe, order) +
         pow_support(pe, a) * alpha_log(static_cast<double>(n - 1), order);
}

double fannes_bound(double tau, int d, Order order) {
  if (d < 2) throw std::domain_error("fannes_bound: dimension must be >= 2");
  const double a = order.alpha;
  if (a < 1.0 && !order.near_one) {
    if (!(tau >= 0.0 && tau <= 1.0))
      throw std::domain_error("fannes_bound: tau must lie in [0,1] for alpha < 1");
    return (pow_support(tau, a) - a * tau) / (1.0 - a) +
           pow_support(tau, a) * alpha_log(static_cast<double>(d) * (d - 1), order);
  }
  const double tmax = static_cast<double>(d) / (d + 1);
  if (!(tau >= 0.0 && tau <= tmax))
    throw std::domain_error("fannes_bound: the alpha > 1 branch is only valid for tau in [0, d/(d+1)] = [0, " +
                            std::to_string(tmax) + "]");
  if (order.near_one)  // limit form: h(tau) + tau ln(d-1)
    return binary_tsallis(tau, order) + tau * std::log(static_cast<double>(d - 1));
  return binary_tsallis(tau, order) +
         pow_support(tau, a) * alpha_log(static_cast<double>(d - 1), order);
}

std::optional<double> yanagi_comparison_bound(double tau, int d, Order order) {
  const double a = order.alpha;
  if (!(a > 0.0 && a < 1.0) || order.near_one)
    throw std::domain_error("yanagi_comparison_bound: requires 0 < alpha < 1");
  if (d < 2) throw std::domain_error("yanagi_comparison_bound: dimension must be >= 2");
  if (!(tau >= 0.0)) throw std::domain_error("yanagi_comparison_bound: tau must be nonnegative");
  const double t2 = 2.0 * tau;
  if (t2 > std::pow(a, 1.0 / (1.0 - a))) return std::nullopt;
  return (pow_support(t2, a) - t2) / (1.0 - a) +
         pow_support(t2, a) * alpha_log(static_cast<double>(d), order);
}

}  // namespace entlab
