/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace entlab {

namespace {

constexpr double kKernelMassTolerance = 1e-12;

// Spectral data of a pair: eigenvalues of both operators and the squared
// eigenvector overlaps w_ij = |<u_i|v_j>|^2, which turn every mixed trace
// tr(g(A) h(B)) into a double sum.
struct PairSpectral {
  std::vector<double> la, lb;  // descending
  Eigen::MatrixXd w;
  double cut_a = 0.0, cut_b = 0.0;
  double tr_a = 0.0;

  bool kernel_ok() const {  // kr(B) inside kr(A)
    double on_support = 0.0;
    for (size_t i = 0; i < la.size(); ++i)
      for (size_t j = 0; j < lb.size(); ++j)
        if (lb[j] > cut_b) on_support += std::max(0.0, la[i]) * w(i, j);
    return tr_a - on_support <= kKernelMassTolerance * std::max(1e-300, tr_a);
  }
};

PairSpectral pair_spectral(const PositiveOperator& a, const PositiveOperator& b) {
  if (a.dim() != b.dim()) throw shape_error("quantum divergence: dimension mismatch");
  const SpectralDecomposition da = eigendecompose(a);
  const SpectralDecomposition db = eigendecompose(b);
  PairSpectral ps;
  ps.la = da.eigenvalues();
  ps.lb = db.eigenvalues();
  ps.w = (da.eigenvectors().adjoint() * db.eigenvectors()).cwiseAbs2();
  ps.cut_a = kOperatorSupportFactor * (ps.la.empty() ? 0.0 : std::fabs(ps.la.front()));
  ps.cut_b = kOperatorSupportFactor * (ps.lb.empty() ? 0.0 : std::fabs(ps.lb.front()));
  ps.tr_a = a.trace();
  return ps;
}

double cross_power_trace(const PairSpectral& ps, double alpha) {
  double s = 0.0;
  for (size_t i = 0; i < ps.la.size(); ++i) {
    if (ps.la[i] <= ps.cut_a) continue;
    const double pa = std::pow(ps.la[i], alpha);
    for (size_t j = 0; j < ps.lb.size(); ++j) {
      if (ps.lb[j] <= ps.cut_b) continue;
      s += pa * std::pow(ps.lb[j], 1.0 - alpha) * ps.w(i, j);
    }
  }
  return s;
}

double spectrum_power_sum(const DensityOperator& rho, double alpha) {
  const SpectralDecomposition dec = eigendecompose(rho);
  double s = 0.0;
  for (double v : dec.eigenvalues()) s += pow_support(v, alpha);
  return s;
}

double von_neumann(const DensityOperator& rho) {
  const SpectralDecomposition dec = eigendecompose(rho);
  double s = 0.0;
  for (double v : dec.eigenvalues())
    if (v > 0.0) s -= v * std::log(v);
  return s;
}

}  // namespace

bool kernel_contained(const PositiveOperator& a, const PositiveOperator& b) {
  return pair_spectral(a, b).kernel_ok();
}

double quantum_tsallis_entropy(const DensityOperator& rho, Order order) {
  if (order.near_one) return von_neumann(rho);
  return (spectrum_power_sum(rho, order.alpha) - 1.0) / (1.0 - order.alpha);
}

double quantum_renyi_entropy(const DensityOperator& rho, Order order) {
  if (order.near_one) return von_neumann(rho);
  return std::log(spectrum_power_sum(rho, order.alpha)) / (1.0 - order.alpha);
}

ExtendedValue quantum_relative_entropy(const PositiveOperator& a, const PositiveOperator& b) {
  const PairSpectral ps = pair_spectral(a, b);
  if (!ps.kernel_ok()) return ExtendedValue::infinity();
  double s = 0.0;
  for (size_t i = 0; i < ps.la.size(); ++i) {
    if (ps.la[i] <= ps.cut_a) continue;
    s += ps.la[i] * std::log(ps.la[i]);
    for (size_t j = 0; j < ps.lb.size(); ++j)
      if (ps.lb[j] > ps.cut_b) s -= ps.la[i] * std::log(ps.lb[j]) * ps.w(i, j);
  }
  return s;
}

ExtendedValue quantum_tsallis_rel_entropy(const PositiveOperator& a, const PositiveOperator& b,
                                          Order order) {
  if (order.near_one) return quantum_relative_entropy(a, b);
  const PairSpectral ps = pair_spectral(a, b);
  if (order.alpha > 1.0 && !ps.kernel_ok()) return ExtendedValue::infinity();
  return (cross_power_trace(ps, order.alpha) - ps.tr_a) / (order.alpha - 1.0);
}

ExtendedValue quantum_renyi_rel_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                                        Order order) {
  if (order.near_one) return quantum_relative_entropy(rho, sigma);
  const PairSpectral ps = pair_spectral(rho, sigma);
  if (order.alpha > 1.0 && !ps.kernel_ok()) return ExtendedValue::infinity();
  const double cross = cross_power_trace(ps, order.alpha);
  if (cross <= 0.0) return ExtendedValue::infinity();  // disjoint supports, alpha < 1
  return std::log(cross) / (order.alpha - 1.0);
}

namespace {

// S_f(A || B) through the overlap matrix, with b shifted by eps (the shift
// leaves the eigenvectors of B untouched).  Zero eigenvalues of A feed f(0).
double f_divergence_from_spectra(const PairSpectral& ps, const FDivergenceSpec& spec, double eps) {
  double s = 0.0;
  for (size_t i = 0; i < ps.la.size(); ++i) {
    const double a = ps.la[i] > ps.cut_a ? ps.la[i] : 0.0;
    for (size_t j = 0; j < ps.lb.size(); ++j) {
      const double b = (ps.lb[j] > ps.cut_b ? ps.lb[j] : 0.0) + eps;
      if (b <= 0.0) continue;  // b = 0 terms vanish against B^{1/2}
      const double wij = ps.w(i, j);
      if (wij == 0.0) continue;
      const double term = spec.f(a / b) * b * wij;
      if (std::isnan(term)) throw std::domain_error("quantum_f_divergence: integrand returned NaN");
      s += term;
    }
  }
  return s;
}

}  // namespace

ExtendedValue quantum_f_divergence(const PositiveOperator& a, const PositiveOperator& b,
                                   const FDivergenceSpec& spec) {
  const PairSpectral ps = pair_spectral(a, b);
  if (!ps.kernel_ok())
    throw kernel_precondition_error(
        "quantum_f_divergence: kr(B) not contained in kr(A); use quantum_f_divergence_limit");
  return f_divergence_from_spectra(ps, spec, 0.0);
}

ExtendedValue quantum_f_divergence_limit(const PositiveOperator& a, const PositiveOperator& b,
                                         const FDivergenceSpec& spec) {
  const PairSpectral ps = pair_spectral(a, b);
  std::vector<double> values;
  int stable_hits = 0;
  for (int k = 4; k <= 40; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const double s = f_divergence_from_spectra(ps, spec, eps);
    if (std::isinf(s)) return ExtendedValue::infinity();
    if (!values.empty()) {
      if (std::fabs(s - values.back()) < 1e-8 * (1.0 + std::fabs(s))) {
        if (++stable_hits >= 2) return s;
      } else {
        stable_hits = 0;
      }
    }
    values.push_back(s);
  }
  // No stabilization: a sustained geometric climb is the singular +inf case
  // (for f_alpha with alpha > 1 the kernel mass scales like eps^{1-alpha}).
  const size_t n = values.size();
  bool increasing = true;
  bool geometric = values.back() > 0.0;
  for (size_t i = n - 6; i + 1 < n; ++i) {
    if (!(values[i + 1] > values[i])) increasing = false;
    if (!(values[i] > 0.0 && values[i + 1] >= 1.2 * values[i])) geometric = false;
  }
  if (increasing && (values.back() > 1e12 || geometric)) return ExtendedValue::infinity();
  throw limit_failure_error("quantum_f_divergence_limit: sequence did not converge or diverge monotonically");
}

ExtendedValue theorem1_classical_floor(const PositiveOperator& a, const PositiveOperator& b,
                                       const FDivergenceSpec& spec) {
  const auto [plus, minus] = jordan_projectors(a, b);
  const auto [up, um] = coarse_grain_two_point(a, plus, minus);
  const auto [vp, vm] = coarse_grain_two_point(b, plus, minus);
  // traces can carry -1e-17 noise; the weights are nonnegative by theory
  const WeightSet u({std::max(0.0, up), std::max(0.0, um)});
  const WeightSet v({std::max(0.0, vp), std::max(0.0, vm)});
  return f_divergence(u, v, spec);
}

}  // namespace entlab
