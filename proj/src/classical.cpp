/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace entlab {

std::vector<char> support_mask(const std::vector<double>& v) {
  double mx = 0.0;
  for (double x : v) mx = std::max(mx, x);
  const double cutoff = kSupportCutoffFactor * mx;
  std::vector<char> mask(v.size());
  for (size_t i = 0; i < v.size(); ++i) mask[i] = v[i] > cutoff ? 1 : 0;
  return mask;
}

Distribution::Distribution(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw std::domain_error("Distribution: alphabet must be nonempty");
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::domain_error("Distribution: entries must be finite and nonnegative");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > kSumTolerance)
    throw std::domain_error("Distribution: probabilities must sum to 1 within 1e-12");
}

WeightSet::WeightSet(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::domain_error("WeightSet: must be nonempty");
  for (double x : w_) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::domain_error("WeightSet: entries must be finite and nonnegative");
  }
  support_ = support_mask(w_);
}

std::vector<int> WeightSet::support_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < size(); ++i)
    if (support_[static_cast<size_t>(i)]) idx.push_back(i);
  return idx;
}

double WeightSet::total() const { return std::accumulate(w_.begin(), w_.end(), 0.0); }

JointDistribution::JointDistribution(std::vector<std::vector<double>> cells)
    : n_(static_cast<int>(cells.size())), cells_(std::move(cells)) {
  if (n_ == 0) throw std::domain_error("JointDistribution: alphabet must be nonempty");
  double sum = 0.0;
  for (const auto& row : cells_) {
    if (static_cast<int>(row.size()) != n_)
      throw shape_error("JointDistribution: cell matrix must be square (same alphabet for X and Y)");
    for (double x : row) {
      if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("JointDistribution: cells must be finite and nonnegative");
      sum += x;
    }
  }
  if (std::fabs(sum - 1.0) > Distribution::kSumTolerance)
    throw std::domain_error("JointDistribution: cells must sum to 1 within 1e-12");
}

Distribution JointDistribution::marginal_x() const {
  std::vector<double> m(static_cast<size_t>(n_), 0.0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) m[static_cast<size_t>(x)] += cell(x, y);
  return Distribution(m);
}

Distribution JointDistribution::marginal_y() const {
  std::vector<double> m(static_cast<size_t>(n_), 0.0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) m[static_cast<size_t>(y)] += cell(x, y);
  return Distribution(m);
}

FDivergenceSpec FDivergenceSpec::f_alpha(Order order) {
  if (order.near_one)
    throw std::domain_error("FDivergenceSpec::f_alpha: alpha = 1 has no f_alpha form; use kullback_leibler()");
  const double a = order.alpha;
  FDivergenceSpec spec;
  spec.f = [a](double z) { return pow_support(z, a) / (a - 1.0); };
  spec.limit_at_infinity = a > 1.0 ? std::numeric_limits<double>::infinity() : 0.0;
  spec.operator_convex = (a > 0.0 && a < 1.0) || (a > 1.0 && a <= 2.0);
  return spec;
}

FDivergenceSpec FDivergenceSpec::total_variation() {
  FDivergenceSpec spec;
  spec.f = [](double z) { return std::fabs(z - 1.0); };
  spec.limit_at_infinity = 1.0;
  spec.operator_convex = false;
  return spec;
}

FDivergenceSpec FDivergenceSpec::kullback_leibler() {
  FDivergenceSpec spec;
  spec.f = [](double z) { return z > 0.0 ? z * std::log(z) : 0.0; };
  spec.limit_at_infinity = std::numeric_limits<double>::infinity();
  spec.operator_convex = true;
  return spec;
}

namespace {

void require_same_alphabet(int a, int b, const char* who) {
  if (a != b) throw shape_error(std::string(who) + ": alphabet size mismatch");
}

double shannon_entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

double power_sum(const std::vector<double>& p, double alpha) {
  double s = 0.0;
  for (double x : p) s += pow_support(x, alpha);
  return s;
}

}  // namespace

double trace_distance(const Distribution& p, const Distribution& q) {
  require_same_alphabet(p.size(), q.size(), "trace_distance");
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
  return 0.5 * s;
}

double tsallis_entropy(const Distribution& p, Order order) {
  if (order.near_one) return shannon_entropy(p.probs());
  return (power_sum(p.probs(), order.alpha) - 1.0) / (1.0 - order.alpha);
}

double renyi_entropy(const Distribution& p, Order order) {
  if (order.near_one) return shannon_entropy(p.probs());
  return std::log(power_sum(p.probs(), order.alpha)) / (1.0 - order.alpha);
}

ExtendedValue kl_divergence(const WeightSet& a, const WeightSet& b) {
  require_same_alphabet(a.size(), b.size(), "kl_divergence");
  const auto& sa = a.support();
  const auto& sb = b.support();
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    if (!sa[static_cast<size_t>(i)]) continue;
    if (!sb[static_cast<size_t>(i)]) return ExtendedValue::infinity();
    s += a[i] * std::log(a[i] / b[i]);
  }
  return s;
}

ExtendedValue tsallis_rel_entropy(const WeightSet& a, const WeightSet& b, Order order) {
  require_same_alphabet(a.size(), b.size(), "tsallis_rel_entropy");
  if (order.near_one) return kl_divergence(a, b);
  const auto& sa = a.support();
  const auto& sb = b.support();
  if (order.alpha > 1.0) {
    for (int i = 0; i < a.size(); ++i)
      if (sa[static_cast<size_t>(i)] && !sb[static_cast<size_t>(i)])
        return ExtendedValue::infinity();
  }
  double cross = 0.0;  // sum over supp(A) /\ supp(B) of a^alpha b^{1-alpha}
  double total = 0.0;  // sum over supp(A) of a
  for (int i = 0; i < a.size(); ++i) {
    if (!sa[static_cast<size_t>(i)]) continue;
    total += a[i];
    if (sb[static_cast<size_t>(i)])
      cross += std::pow(a[i], order.alpha) * std::pow(b[i], 1.0 - order.alpha);
  }
  return (cross - total) / (order.alpha - 1.0);
}

ExtendedValue tsallis_rel_entropy(const Distribution& p, const Distribution& q, Order order) {
  return tsallis_rel_entropy(WeightSet(p.probs()), WeightSet(q.probs()), order);
}

ExtendedValue renyi_rel_entropy(const Distribution& p, const Distribution& q, Order order) {
  require_same_alphabet(p.size(), q.size(), "renyi_rel_entropy");
  if (order.near_one) return kl_divergence(WeightSet(p.probs()), WeightSet(q.probs()));
  const auto sp = p.support();
  const auto sq = q.support();
  if (order.alpha > 1.0) {
    for (int i = 0; i < p.size(); ++i)
      if (sp[static_cast<size_t>(i)] && !sq[static_cast<size_t>(i)])
        return ExtendedValue::infinity();
  }
  double cross = 0.0;
  for (int i = 0; i < p.size(); ++i)
    if (sp[static_cast<size_t>(i)] && sq[static_cast<size_t>(i)])
      cross += std::pow(p[i], order.alpha) * std::pow(q[i], 1.0 - order.alpha);
  if (cross <= 0.0) return ExtendedValue::infinity();  // disjoint supports, alpha < 1
  return std::log(cross) / (order.alpha - 1.0);
}

ExtendedValue f_divergence(const WeightSet& p, const WeightSet& q, const FDivergenceSpec& spec) {
  require_same_alphabet(p.size(), q.size(), "f_divergence");
  const auto& sp = p.support();
  const auto& sq = q.support();
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const bool pp = sp[static_cast<size_t>(i)];
    const bool qq = sq[static_cast<size_t>(i)];
    double term;
    if (qq) {
      term = q[i] * spec.f(pp ? p[i] / q[i] : 0.0);
    } else if (pp) {
      // q = 0, p > 0: q f(p/q) -> p * lim_{z->inf} f(z)/z.
      if (!spec.limit_at_infinity)
        throw std::domain_error("f_divergence: f(z)/z limit required for a zero in the second argument");
      term = p[i] * *spec.limit_at_infinity;
    } else {
      term = 0.0;
    }
    if (std::isnan(term)) throw std::domain_error("f_divergence: integrand returned NaN");
    s += term;
  }
  return s;
}

ExtendedValue f_divergence(const Distribution& p, const Distribution& q, const FDivergenceSpec& spec) {
  return f_divergence(WeightSet(p.probs()), WeightSet(q.probs()), spec);
}

double minimal_probability(const Distribution& q, const WeightSet& support_of) {
  require_same_alphabet(q.size(), support_of.size(), "minimal_probability");
  const auto idx = support_of.support_indices();
  if (idx.empty()) throw std::domain_error("minimal_probability: empty support");
  double m = std::numeric_limits<double>::infinity();
  for (int i : idx) m = std::min(m, q[i]);
  return m;
}

WeightSet qbar_construction(const Distribution& p, const Distribution& q) {
  require_same_alphabet(p.size(), q.size(), "qbar_construction");
  const WeightSet psupp(p.probs());
  const double q0 = minimal_probability(q, psupp);
  if (!(q0 > 0.0)) throw std::domain_error("qbar_construction: minimal probability q0 must be positive");
  const auto& sp = psupp.support();
  std::vector<double> w(static_cast<size_t>(p.size()), 0.0);
  for (int i = 0; i < p.size(); ++i)
    if (sp[static_cast<size_t>(i)]) w[static_cast<size_t>(i)] = std::max(q0, q[i] - p[i]);
  return WeightSet(w);
}

double joint_tsallis_entropy(const JointDistribution& j, Order order) {
  double pw = 0.0, sh = 0.0;
  for (const auto& row : j.cells())
    for (double x : row) {
      pw += pow_support(x, order.alpha);
      if (x > 0.0) sh -= x * std::log(x);
    }
  if (order.near_one) return sh;
  return (pw - 1.0) / (1.0 - order.alpha);
}

double conditional_tsallis_entropy(const JointDistribution& j, Order order) {
  const Distribution py = j.marginal_y();
  const auto mask = py.support();
  double s = 0.0;
  for (int y = 0; y < j.size(); ++y) {
    if (!mask[static_cast<size_t>(y)]) continue;  // p_Y(y) = 0 contributes nothing
    std::vector<double> cond(static_cast<size_t>(j.size()));
    for (int x = 0; x < j.size(); ++x) cond[static_cast<size_t>(x)] = j.cell(x, y) / py[y];
    double h;
    if (order.near_one) {
      h = shannon_entropy(cond);
      s += py[y] * h;
    } else {
      h = (power_sum(cond, order.alpha) - 1.0) / (1.0 - order.alpha);
      s += std::pow(py[y], order.alpha) * h;
    }
  }
  return s;
}

double error_probability(const JointDistribution& j) {
  double diag = 0.0;
  for (int y = 0; y < j.size(); ++y) diag += j.cell(y, y);
  return 1.0 - diag;
}

JointDistribution maximal_coupling(const Distribution& p, const Distribution& q) {
  require_same_alphabet(p.size(), q.size(), "maximal_coupling");
  const int n = p.size();
  std::vector<double> m(static_cast<size_t>(n));
  double overlap = 0.0;
  for (int i = 0; i < n; ++i) {
    m[static_cast<size_t>(i)] = std::min(p[i], q[i]);
    overlap += m[static_cast<size_t>(i)];
  }
  const double d = 1.0 - overlap;
  std::vector<std::vector<double>> cells(static_cast<size_t>(n),
                                         std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) cells[static_cast<size_t>(i)][static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
  if (d > 0.0) {
    // Residuals (p-m) and (q-m) each carry mass D; the product spread keeps
    // the marginals exact and puts no mass on the diagonal, because for
    // every x at least one of the two residual factors is exactly zero.
    for (int x = 0; x < n; ++x) {
      const double rp = p[x] - m[static_cast<size_t>(x)];
      if (rp == 0.0) continue;
      for (int y = 0; y < n; ++y) {
        const double rq = q[y] - m[static_cast<size_t>(y)];
        if (rq == 0.0) continue;
        cells[static_cast<size_t>(x)][static_cast<size_t>(y)] += rp * rq / d;
      }
    }
  }
  return JointDistribution(cells);
}

}  // namespace entlab
