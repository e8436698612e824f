/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "entlab/oracle.hpp"
#include "entlab/quantum.hpp"
#include "entlab/samplers.hpp"

namespace entlab {

void SamplerConfig::validate() const {
  if (trials_per_cell < 1) throw std::domain_error("SamplerConfig: trials must be >= 1");
  if (!(tolerance > 0.0)) throw std::domain_error("SamplerConfig: tolerance must be positive");
  if (dims.empty()) throw std::domain_error("SamplerConfig: dims must be nonempty");
  if (alphas.empty()) throw std::domain_error("SamplerConfig: alphas must be nonempty");
  for (int d : dims)
    if (d < 1 || d > kMaxDimension) throw std::domain_error("SamplerConfig: dims must lie in [1, 64]");
  for (double a : alphas)
    if (!(a > 0.0 && a <= 8.0)) throw std::domain_error("SamplerConfig: alphas must lie in (0, 8]");
}

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::kappa_equals_three: return "kappa-equals-three";
    case Mutation::series_coeff_corrupt: return "series-coeff-corrupt";
    case Mutation::thm3_branch_swap: return "thm3-branch-swap";
  }
  return "unknown";
}

const BoundKernels& kernels_for(Mutation m) {
  static const BoundKernels kappa3{[](Order) { return 3.0; }, &pinsker_series_coeff,
                                   [](double tau, double q0) { return tau <= q0; }};
  static const BoundKernels series{&kappa,
                                   [](int n) {
                                     const double c = pinsker_series_coeff(n);
                                     return n == 2 ? 10.0 * c : c;
                                   },
                                   [](double tau, double q0) { return tau <= q0; }};
  static const BoundKernels branch{&kappa, &pinsker_series_coeff,
                                   [](double tau, double q0) { return tau > q0; }};
  switch (m) {
    case Mutation::kappa_equals_three: return kappa3;
    case Mutation::series_coeff_corrupt: return series;
    case Mutation::thm3_branch_swap: return branch;
    case Mutation::none: break;
  }
  return BoundKernels::standard();
}

PropertyContext::PropertyContext(const SamplerConfig& cfg, const BoundKernels& kernels,
                                 SplitMix64 rng, long trial)
    : cfg_(&cfg), kernels_(&kernels), rng_(rng), trial_(trial) {}

void PropertyContext::check(double slack, double tol, double measured, double bound,
                            const std::string& what) {
  ++checks_run;
  if (!std::isnan(slack)) min_slack = std::min(min_slack, slack);
  if (std::isnan(slack) || slack < -tol) {
    std::ostringstream inputs;
    inputs << "trial=" << trial_;
    if (!label_.empty()) inputs << ' ' << label_;
    inputs << " check=" << what;
    sink->push_back({property_id, inputs.str(), measured, bound, slack});
  }
}

void PropertyContext::check_ge(double value, double floor, double tol, const std::string& what) {
  check(value - floor, tol, value, floor, what);
}

void PropertyContext::check_le(double value, double cap, double tol, const std::string& what) {
  check(cap - value, tol, value, cap, what);
}

void PropertyContext::check_close(double a, double b, double tol, const std::string& what) {
  check(tol - std::fabs(a - b), 0.0, a, b, what);
}

void PropertyContext::check_close(ExtendedValue a, ExtendedValue b, double tol,
                                  const std::string& what) {
  if (a.is_infinite() || b.is_infinite()) {
    check(a.is_infinite() == b.is_infinite() ? tol : -1.0, 0.0, a.value(), b.value(), what);
    return;
  }
  check_close(a.value(), b.value(), tol, what);
}

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

const std::vector<double> kAlphaLow{0.3, 0.5, 0.7};
const std::vector<double> kAlphaHigh{1.5, 2.0, 3.0};
const std::vector<double> kAlphaConvexity{0.3, 0.7, 1.5, 2.0, 3.0};
const std::vector<double> kAlphaThm3{1.5, 2.0, 3.0, 5.0};
const std::vector<double> kAlphaFano{0.3, 0.5, 0.7, 1.5, 2.0, 3.0};

std::pair<Distribution, Distribution> sample_pair(int n, SplitMix64& rng, double floor = 0.0) {
  Distribution p = sample_distribution(n, rng, floor);
  Distribution q = sample_distribution(n, rng, floor);
  return {std::move(p), std::move(q)};
}

std::pair<DensityOperator, DensityOperator> sample_density_pair(int d, SplitMix64& rng) {
  DensityOperator rho = sample_density(d, d, rng);
  DensityOperator sigma = sample_density(d, d, rng);
  return {std::move(rho), std::move(sigma)};
}

// ---------------------------------------------------------------- scalar ---

void prop_alpha_log_identities(PropertyContext& ctx) {
  const std::vector<double> alphas{0.3, 0.5, 0.7, 1.5, 2.0, 3.0, 1.0 + 5e-5, 1.0 - 5e-5};
  for (double a : alphas) {
    const Order order(a);
    const double xi = ctx.rng().uniform(0.1, 4.0);
    const double z = ctx.rng().uniform(0.1, 4.0);
    ctx.set_label(fmt("alpha=%g xi=%g z=%g", a, xi, z));
    const double lhs1 = alpha_log(xi * z, order);
    const double rhs1 = alpha_log(xi, order) + std::pow(xi, 1.0 - a) * alpha_log(z, order);
    ctx.check_close(lhs1, rhs1, 1e-12 * (1.0 + std::fabs(lhs1)), "ln_a(xi z) = ln_a xi + xi^{1-a} ln_a z");
    const double lhs2 = alpha_log(1.0 / xi, order);
    const double rhs2 = -std::pow(xi, a - 1.0) * alpha_log(xi, order);
    ctx.check_close(lhs2, rhs2, 1e-12 * (1.0 + std::fabs(lhs2)), "ln_a(1/xi) = -xi^{a-1} ln_a xi");
  }
}

void prop_alpha_log_limit(PropertyContext& ctx) {
  const double z = std::exp(ctx.rng().uniform(std::log(1e-3), std::log(1e3)));
  const double lz = std::log(z);
  for (double da : {1e-7, -1e-7}) {
    ctx.set_label(fmt("z=%g da=%g", z, da));
    ctx.check_close(alpha_log(z, Order(1.0 + da)), lz, 1e-6 * (1.0 + std::fabs(lz)),
                    "near-one band routes to ln z");
  }
  for (double da : {3e-5, -3e-5, 9e-5, -9e-5}) {
    // independent oracle: extended precision direct evaluation
    const long double om = -static_cast<long double>(da);
    const long double exact = (std::pow(static_cast<long double>(z), om) - 1.0L) / om;
    ctx.set_label(fmt("z=%g da=%g", z, da));
    ctx.check_close(alpha_log(z, Order(1.0 + da)), static_cast<double>(exact),
                    1e-12 * (1.0 + std::fabs(static_cast<double>(exact))),
                    "series band matches extended-precision direct form");
  }
}

void prop_binary_tsallis_concavity(PropertyContext& ctx) {
  for (double a : {0.3, 0.5, 0.7, 1.5, 2.0, 3.0, 5.0}) {
    const Order order(a);
    double u = ctx.rng().next_double();
    double v = ctx.rng().next_double();
    if (ctx.rng().next_below(8) == 0) u = ctx.rng().next_below(2) ? 0.0 : 1.0;
    ctx.set_label(fmt("alpha=%g u=%g v=%g", a, u, v));
    const double mid = binary_tsallis(0.5 * (u + v), order);
    ctx.check_ge(mid, 0.5 * (binary_tsallis(u, order) + binary_tsallis(v, order)), 1e-12,
                 "midpoint concavity");
    ctx.check_close(binary_tsallis(u, order), binary_tsallis(1.0 - u, order), 1e-14,
                    "h(u) = h(1-u)");
  }
}

void prop_phi_nonpositive(PropertyContext& ctx) {
  for (int rep = 0; rep < 16; ++rep) {
    double u = ctx.rng().next_double();
    double v = ctx.rng().next_double();
    if (ctx.rng().next_below(6) == 0) u = ctx.rng().next_below(2) ? 0.0 : 1.0;
    if (ctx.rng().next_below(6) == 0) v = ctx.rng().next_below(2) ? 0.0 : 1.0;
    const double a = 0.05 * static_cast<double>(ctx.rng().next_below(11));
    ctx.set_label(fmt("u=%g v=%g alpha=%g", u, v, a));
    ctx.check_le(phi_uv(u, v, a), 0.0, 1e-12, "Phi_uv <= 0 on [0,1]^2 x [0,1/2]");
  }
}

void prop_binary_affinity(PropertyContext& ctx) {
  for (int rep = 0; rep < 16; ++rep) {
    const double u = ctx.rng().next_double();
    const double v = ctx.rng().next_double();
    const double t = std::fabs(u - v);
    ctx.set_label(fmt("u=%g v=%g", u, v));
    ctx.check_le(std::sqrt(u * v) + std::sqrt((1.0 - u) * (1.0 - v)), std::sqrt(1.0 - t * t),
                 1e-12, "sqrt(uv) + sqrt((1-u)(1-v)) <= sqrt(1-t^2)");
  }
}

void prop_phi_convexity(PropertyContext& ctx) {
  const double h = 0.02;
  for (int rep = 0; rep < 8; ++rep) {
    const double u = ctx.rng().uniform(0.02, 0.98);
    const double v = ctx.rng().uniform(0.02, 0.98);
    const double a = ctx.rng().uniform(0.05, 0.45);
    ctx.set_label(fmt("u=%g v=%g alpha=%g", u, v, a));
    const double second = phi_uv(u, v, a - h) + phi_uv(u, v, a + h) - 2.0 * phi_uv(u, v, a);
    ctx.check_ge(second, 0.0, 1e-9, "Phi_uv convex in alpha (second difference)");
  }
}

void prop_series_coefficients(PropertyContext& ctx) {
  ctx.check_close(pinsker_series_coeff(1), 0.5, 1e-15, "c_1 = 1/2");
  ctx.check_close(pinsker_series_coeff(2), 0.125, 1e-15, "c_2 = 1/8");
  for (int n = 1; n <= 50; ++n) {
    ctx.set_label(fmt("n=%g", static_cast<double>(n)));
    ctx.check_ge(pinsker_series_coeff(n), 0.0, 0.0, "binomial coefficient positive");
  }
}

// ------------------------------------------------------------- classical ---

void prop_entropy_range(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const Distribution p = sample_distribution(n, ctx.rng());
    const Distribution uniform(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
    for (double a : ctx.config().alphas) {
      const Order order(a);
      ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), a));
      const double h = tsallis_entropy(p, order);
      ctx.check_ge(h, 0.0, 1e-12, "H_a >= 0");
      ctx.check_le(h, alpha_log(static_cast<double>(n), order), 1e-12, "H_a <= ln_a N");
      ctx.check_close(renyi_entropy(uniform, order), std::log(static_cast<double>(n)), 1e-12,
                      "R_a(uniform) = ln N");
      if (!order.near_one) {
        const double r = renyi_entropy(p, order);
        ctx.check_close((1.0 - a) * r, std::log1p((1.0 - a) * h), 1e-10,
                        "(1-a) R_a = ln[1 + (1-a) H_a]");
      }
    }
  }
}

void prop_rel_entropy_nonneg(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const auto [p, q] = sample_pair(n, ctx.rng());
    const double d = trace_distance(p, q);
    for (double a : ctx.config().alphas) {
      const Order order(a);
      ctx.set_label(fmt("n=%g alpha=%g D=%g", static_cast<double>(n), a, d));
      const ExtendedValue h = tsallis_rel_entropy(p, q, order);
      const ExtendedValue r = renyi_rel_entropy(p, q, order);
      if (h.is_finite()) ctx.check_ge(h.value(), 0.0, 1e-12, "H_a(P||Q) >= 0");
      if (r.is_finite()) ctx.check_ge(r.value(), 0.0, 1e-12, "R_a(P||Q) >= 0");
      ctx.check_le(tsallis_rel_entropy(p, p, order).value(), 0.0, 1e-12, "H_a(P||P) = 0");
      if (h.is_finite() && d >= 1e-3)
        ctx.check_ge(h.value(), 1e-8, 0.0, "H_a positive once D(P,Q) >= 1e-3");
    }
  }
}

void prop_homogeneity(PropertyContext& ctx) {
  const int n = ctx.config().dims[ctx.rng().next_below(ctx.config().dims.size())];
  const WeightSet a = sample_weights(n, ctx.rng());
  const WeightSet b = sample_weights(n, ctx.rng());
  for (double lambda : {0.5, 2.0, 7.3}) {
    std::vector<double> sa(a.weights()), sb(b.weights());
    for (double& x : sa) x *= lambda;
    for (double& x : sb) x *= lambda;
    for (double alpha : ctx.config().alphas) {
      const Order order(alpha);
      ctx.set_label(fmt("n=%g lambda=%g alpha=%g", static_cast<double>(n), lambda, alpha));
      const double lhs = tsallis_rel_entropy(WeightSet(sa), WeightSet(sb), order).finite_value();
      const double rhs = lambda * tsallis_rel_entropy(a, b, order).finite_value();
      // scale-aware: large alpha blows the values past where an absolute
      // 1e-10 is representable in doubles
      ctx.check_close(lhs, rhs, 1e-10 * (1.0 + std::fabs(rhs)), "H_a(kA||kB) = k H_a(A||B)");
    }
  }
}

void prop_joint_convexity(PropertyContext& ctx) {
  const int n = 3;
  const WeightSet a1 = sample_weights(n, ctx.rng()), a2 = sample_weights(n, ctx.rng());
  const WeightSet b1 = sample_weights(n, ctx.rng()), b2 = sample_weights(n, ctx.rng());
  for (double alpha : kAlphaConvexity) {
    const Order order(alpha);
    const double h1 = tsallis_rel_entropy(a1, b1, order).finite_value();
    const double h2 = tsallis_rel_entropy(a2, b2, order).finite_value();
    for (double th : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      std::vector<double> am(static_cast<size_t>(n)), bm(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        am[static_cast<size_t>(i)] = th * a1[i] + (1.0 - th) * a2[i];
        bm[static_cast<size_t>(i)] = th * b1[i] + (1.0 - th) * b2[i];
      }
      ctx.set_label(fmt("alpha=%g theta=%g", alpha, th));
      const double mix = tsallis_rel_entropy(WeightSet(am), WeightSet(bm), order).finite_value();
      ctx.check_le(mix, th * h1 + (1.0 - th) * h2, 1e-10, "joint convexity");
    }
  }
}

void prop_shift_bound(PropertyContext& ctx) {
  const int n = 4;
  const WeightSet a = sample_weights(n, ctx.rng());
  const WeightSet b = sample_weights(n, ctx.rng());
  const WeightSet c = sample_weights(n, ctx.rng());
  std::vector<double> ac(static_cast<size_t>(n)), bc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    ac[static_cast<size_t>(i)] = a[i] + c[i];
    bc[static_cast<size_t>(i)] = b[i] + c[i];
  }
  std::vector<double> alphas = ctx.config().alphas;
  alphas.insert(alphas.end(), {3.0, 5.0});
  for (double alpha : alphas) {
    const Order order(alpha);
    ctx.set_label(fmt("alpha=%g", alpha));
    ctx.check_le(tsallis_rel_entropy(WeightSet(ac), WeightSet(bc), order).finite_value(),
                 tsallis_rel_entropy(a, b, order).finite_value(), 1e-10,
                 "H_a(A+C||B+C) <= H_a(A||B)");
  }
}

void prop_classical_pinsker_chain(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const auto [p, q] = sample_pair(n, ctx.rng(), 0.02);
    const double h1 = kl_divergence(WeightSet(p.probs()), WeightSet(q.probs())).finite_value();
    ctx.set_label(fmt("n=%g", static_cast<double>(n)));
    for (double a : kAlphaLow)
      ctx.check_le(tsallis_rel_entropy(p, q, Order(a)).finite_value(), h1, 1e-10,
                   "H_a <= H_1 for a < 1");
    for (double b : {1.5, 2.0})
      ctx.check_ge(tsallis_rel_entropy(p, q, Order(b)).finite_value(), h1, 1e-10,
                   "H_1 <= H_b for b in (1,2]");
  }
}

void prop_order_relation(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const auto [p, q] = sample_pair(n, ctx.rng(), 0.02);
    for (double a : ctx.config().alphas) {
      if (std::fabs(a - 1.0) < 1e-3) continue;
      const Order order(a);
      const double h = tsallis_rel_entropy(p, q, order).finite_value();
      const double r = renyi_rel_entropy(p, q, order).finite_value();
      ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), a));
      ctx.check_close((a - 1.0) * r, std::log1p((a - 1.0) * h), 1e-10,
                      "(a-1) R_a = ln[1 + (a-1) H_a]");
    }
  }
}

void prop_fdiv_conventions(PropertyContext& ctx) {
  const int n = ctx.config().dims[ctx.rng().next_below(ctx.config().dims.size())];
  const auto [p, q] = sample_pair(n, ctx.rng());
  FDivergenceSpec affine;
  affine.f = [](double z) { return z - 1.0; };
  affine.limit_at_infinity = 1.0;
  ctx.set_label(fmt("n=%g", static_cast<double>(n)));
  ctx.check_close(f_divergence(p, q, affine).finite_value(), 0.0, 1e-12, "f = z-1 gives 0");
  ctx.check_close(f_divergence(p, q, FDivergenceSpec::total_variation()).finite_value(),
                  2.0 * trace_distance(p, q), 1e-12, "f = |z-1| gives 2 D(P,Q)");
  const WeightSet a = sample_weights(n, ctx.rng());
  const WeightSet b = sample_weights(n, ctx.rng());
  for (double alpha : {0.3, 0.7, 1.5, 2.0}) {
    const Order order(alpha);
    ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), alpha));
    const double s = f_divergence(a, b, FDivergenceSpec::f_alpha(order)).finite_value();
    ctx.check_close(s + a.total() / (1.0 - alpha),
                    tsallis_rel_entropy(a, b, order).finite_value(), 1e-10,
                    "S_f_alpha + (1-a)^{-1} tr A = H_a(A||B)");
  }
}

void prop_coupling(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    auto [p, q] = sample_pair(n, ctx.rng());
    if (ctx.rng().next_below(5) == 0) q = p;  // exercise the D = 0 path
    const JointDistribution j = maximal_coupling(p, q);
    const Distribution mx = j.marginal_x();
    const Distribution my = j.marginal_y();
    double err = 0.0;
    for (int i = 0; i < n; ++i)
      err = std::max({err, std::fabs(mx[i] - p[i]), std::fabs(my[i] - q[i])});
    ctx.set_label(fmt("n=%g", static_cast<double>(n)));
    ctx.check_le(err, 0.0, 1e-14, "coupling marginals recover P and Q");
    ctx.check_close(error_probability(j), trace_distance(p, q), 1e-12, "P_e = D(P,Q)");
  }
}

void prop_fano_chain_rule(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const JointDistribution j = sample_joint(n, ctx.rng());
    const Distribution py = j.marginal_y();
    std::vector<double> alphas = ctx.config().alphas;
    alphas.push_back(1.0 + 1e-7);
    for (double a : alphas) {
      const Order order(a);
      ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), a));
      const double joint = joint_tsallis_entropy(j, order);
      const double hy = tsallis_entropy(py, order);
      const double cond = conditional_tsallis_entropy(j, order);
      ctx.check_close(joint, hy + cond, 1e-12, "H_a(X,Y) = H_a(Y) + H_a(X|Y)");
    }
  }
}

void prop_qbar_chain(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const auto [p, q] = sample_pair(n, ctx.rng(), 0.02);
    const WeightSet qbar = qbar_construction(p, q);
    const double q0 = minimal_probability(q, WeightSet(p.probs()));
    std::vector<double> shifted(static_cast<size_t>(n)), cset(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      shifted[static_cast<size_t>(i)] = (p[i] - q[i]) + qbar[i];  // Delta + Qbar
      cset[static_cast<size_t>(i)] = q[i] - qbar[i];              // C = Q - Qbar
    }
    ctx.set_label(fmt("n=%g q0=%g", static_cast<double>(n), q0));
    ctx.check_ge(*std::min_element(shifted.begin(), shifted.end()), 0.0, 1e-15, "Delta + Qbar >= 0");
    ctx.check_ge(*std::min_element(cset.begin(), cset.end()), 0.0, 1e-15, "Q - Qbar >= 0");
    ctx.check_ge(minimal_probability(q, qbar), q0, 1e-15, "Qbar entries >= q0 on supp(P)");
    const WeightSet shifted_ws(shifted);
    for (double alpha : kAlphaHigh) {
      const Order order(alpha);
      ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), alpha));
      ctx.check_le(tsallis_rel_entropy(p, q, order).finite_value(),
                   tsallis_rel_entropy(shifted_ws, qbar, order).finite_value(), 1e-10,
                   "H_a(P||Q) <= H_a(Delta+Qbar||Qbar)");
    }
  }
}

// -------------------------------------------------------------- operator ---

void prop_spectral_reconstruction(PropertyContext& ctx) {
  std::vector<int> dims = ctx.config().dims;
  dims.push_back(16);
  for (int d : dims) {
    const HermitianOperator x = sample_hermitian(d, ctx.rng());
    const SpectralDecomposition dec = eigendecompose(x);
    const double scale = std::max(1.0, x.matrix().norm());
    ctx.set_label(fmt("d=%g", static_cast<double>(d)));
    ctx.check_le((dec.reconstruct() - x.matrix()).norm() / scale, 0.0, 1e-10,
                 "sum of a P_a reconstructs the operator");
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& c : dec.clusters()) {
      ctx.check_le((c.projector * c.projector - c.projector).norm(), 0.0, 1e-10,
                   "projector idempotent");
      sum += c.projector;
    }
    ctx.check_le((sum - Matrix::Identity(d, d)).norm(), 0.0, 1e-10, "projectors resolve identity");
    for (size_t i = 0; i + 1 < dec.clusters().size(); ++i)
      ctx.check_le((dec.clusters()[i].projector * dec.clusters()[i + 1].projector).norm(), 0.0,
                   1e-10, "projectors mutually orthogonal");
  }
}

void prop_power_composition(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const PositiveOperator a = sample_positive(d, 1.0, ctx.rng());
    const auto spectrum = eigendecompose(a).eigenvalues();
    const double cond = spectrum.front() / spectrum.back();
    for (double s : {-1.0, 0.3, 0.5, 2.0})
      for (double t : {-1.0, 0.3, 0.5, 2.0}) {
        const PositiveOperator lhs = power_on_support(power_on_support(a, s), t);
        const PositiveOperator rhs = power_on_support(a, s * t);
        ctx.set_label(fmt("d=%g s=%g t=%g", static_cast<double>(d), s, t));
        // the second decomposition sees A^s's smallest eigenvalue with an
        // absolute 1e-16 error; a negative t turns that into a relative
        // error of order 1e-16 cond(A)^|s|
        const double tol = 1e-9 + 8e-16 * std::pow(cond, std::fabs(s)) * std::max(1.0, std::fabs(t));
        ctx.check_le((lhs.matrix() - rhs.matrix()).norm() / std::max(1.0, rhs.matrix().norm()),
                     0.0, tol, "(A^s)^t = A^{st} on the support");
      }
    // rank-deficient: A A^{-1} is the support projector
    if (d >= 2) {
      const DensityOperator low = sample_density(d, d - 1, ctx.rng());
      const PositiveOperator pinv = power_on_support(PositiveOperator(low.matrix()), -1.0);
      const PositiveOperator proj = power_on_support(PositiveOperator(low.matrix()), 0.0);
      ctx.set_label(fmt("d=%g", static_cast<double>(d)));
      ctx.check_le((low.matrix() * pinv.matrix() - proj.matrix()).norm(), 0.0, 1e-10,
                   "A A^{-1} = A^0");
    }
  }
}

void prop_trace_distance_metric(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [x, y] = sample_density_pair(d, ctx.rng());
    const DensityOperator z = sample_density(d, d, ctx.rng());
    ctx.set_label(fmt("d=%g", static_cast<double>(d)));
    ctx.check_le(trace_distance(x, z), trace_distance(x, y) + trace_distance(y, z), 1e-10,
                 "triangle inequality");
    ctx.check_close(trace_distance(x, x), 0.0, 1e-14, "D(X,X) = 0");
    const Matrix u = sample_unitary(d, ctx.rng());
    const DensityOperator ux(u * x.matrix() * u.adjoint());
    const DensityOperator uy(u * y.matrix() * u.adjoint());
    ctx.check_close(trace_distance(ux, uy), trace_distance(x, y), 1e-10, "unitary invariance");
    const auto [p, q] = sample_pair(d, ctx.rng());
    ctx.check_close(trace_distance(diagonal_density(p), diagonal_density(q)), trace_distance(p, q),
                    1e-12, "diagonal pair reduces to classical D");
  }
}

void prop_pinching(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const PinchingBasis basis = PinchingBasis::from_difference(rho, sigma);
    const HermitianOperator once = pinching_map(rho, basis);
    const HermitianOperator twice = pinching_map(once, basis);
    ctx.set_label(fmt("d=%g", static_cast<double>(d)));
    ctx.check_le((twice.matrix() - once.matrix()).norm(), 0.0, 1e-10, "pinching idempotent");
    ctx.check_close(hs_inner(HermitianOperator::identity(d), once).real(), rho.trace(), 1e-12,
                    "pinching preserves trace");
    // pinched spectrum equals the diagonal inner products <k|rho|k>
    std::vector<double> diag(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      diag[static_cast<size_t>(k)] =
          (basis.basis().col(k).adjoint() * rho.matrix() * basis.basis().col(k))(0, 0).real();
    std::sort(diag.begin(), diag.end(), std::greater<double>());
    const auto ev = eigendecompose(once).eigenvalues();
    double err = 0.0;
    for (int k = 0; k < d; ++k)
      err = std::max(err, std::fabs(ev[static_cast<size_t>(k)] - diag[static_cast<size_t>(k)]));
    ctx.check_le(err, 0.0, 1e-10, "pinched spectrum = diagonal entries");
  }
}

void prop_jordan_coarse_grain(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const auto [plus, minus] = jordan_projectors(rho, sigma);
    const Matrix diff = rho.matrix() - sigma.matrix();
    ctx.set_label(fmt("d=%g", static_cast<double>(d)));
    Eigen::SelfAdjointEigenSolver<Matrix> sp(plus.p * diff * plus.p);
    Eigen::SelfAdjointEigenSolver<Matrix> sm(minus.p * diff * minus.p);
    ctx.check_ge(sp.eigenvalues().minCoeff(), 0.0, 1e-10, "P+ (X-Y) P+ >= 0");
    ctx.check_le(sm.eigenvalues().maxCoeff(), 0.0, 1e-10, "P- (X-Y) P- <= 0");
    const auto [up, um] = coarse_grain_two_point(rho, plus, minus);
    const auto [vp, vm] = coarse_grain_two_point(sigma, plus, minus);
    const double tn = 2.0 * trace_distance(rho, sigma);
    ctx.check_close(std::fabs(up - vp) + std::fabs(um - vm), tn, 1e-10,
                    "|u+-v+| + |u--v-| = ||X-Y||_1 for equal traces");
    ctx.check_close(up + um, rho.trace(), 1e-12, "u+ + u- = tr X");
    ctx.check_close((plus.p * diff).trace().real(), 0.5 * tn, 1e-10,
                    "tr(P+ (X-Y)) = (1/2)||X-Y||_1");
  }
}

// --------------------------------------------------------------- quantum ---

void prop_quantum_classical_consistency(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const bool singular = ctx.rng().next_below(4) == 0 && n >= 2;
    auto [p, q] = sample_pair(n, ctx.rng());
    if (singular) {
      std::vector<double> qv = q.probs();
      qv[0] = 0.0;
      double s = 0.0;
      for (double x : qv) s += x;
      for (double& x : qv) x /= s;
      q = Distribution(qv);
    }
    const DensityOperator rho = diagonal_density(p);
    const DensityOperator sigma = diagonal_density(q);
    for (double a : ctx.config().alphas) {
      const Order order(a);
      ctx.set_label(fmt("n=%g alpha=%g singular=%g", static_cast<double>(n), a, singular ? 1.0 : 0.0));
      ctx.check_close(quantum_tsallis_entropy(rho, order), tsallis_entropy(p, order), 1e-10,
                      "quantum Tsallis entropy reduces to classical");
      ctx.check_close(quantum_renyi_entropy(rho, order), renyi_entropy(p, order), 1e-10,
                      "quantum Renyi entropy reduces to classical");
      {
        // relative-to-scale: the order-alpha power sums reach 1e10+ at the
        // top of the alpha grid, beyond any absolute 1e-10 in doubles
        const ExtendedValue ch = tsallis_rel_entropy(p, q, order);
        const double scale_tol = 1e-10 * (1.0 + (ch.is_finite() ? std::fabs(ch.value()) : 0.0));
        ctx.check_close(quantum_tsallis_rel_entropy(rho, sigma, order), ch, scale_tol,
                        "quantum Tsallis relative entropy reduces to classical");
        ctx.check_close(quantum_renyi_rel_entropy(rho, sigma, order), renyi_rel_entropy(p, q, order),
                        1e-10, "quantum Renyi relative entropy reduces to classical");
      }
    }
    ctx.check_close(quantum_relative_entropy(rho, sigma),
                    kl_divergence(WeightSet(p.probs()), WeightSet(q.probs())), 1e-10,
                    "quantum relative entropy reduces to KL");
    if (!singular) {
      for (double a : {0.3, 0.7, 2.0}) {
        const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
        ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), a));
        ctx.check_close(quantum_f_divergence(rho, sigma, spec), f_divergence(p, q, spec), 1e-10,
                        "quantum f-divergence reduces to classical");
      }
    }
  }
}

void prop_quantum_relation_unitary(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const Matrix u = sample_unitary(d, ctx.rng());
    const DensityOperator ur(u * rho.matrix() * u.adjoint());
    const DensityOperator us(u * sigma.matrix() * u.adjoint());
    for (double a : ctx.config().alphas) {
      const Order order(a);
      ctx.set_label(fmt("d=%g alpha=%g", static_cast<double>(d), a));
      const double h = quantum_tsallis_rel_entropy(rho, sigma, order).finite_value();
      if (!order.near_one) {
        const double r = quantum_renyi_rel_entropy(rho, sigma, order).finite_value();
        ctx.check_close((a - 1.0) * r, std::log1p((a - 1.0) * h),
                        1e-10 * (1.0 + std::fabs((a - 1.0) * r)),
                        "(a-1) R_a = ln[1 + (a-1) H_a] (quantum)");
      }
      // relative-to-scale: conjugation reruns the eigensolver and sigma^{1-a}
      // amplifies its 1e-16 noise by the condition number to the alpha
      ctx.check_close(quantum_tsallis_rel_entropy(ur, us, order).finite_value(), h,
                      1e-9 * (1.0 + std::fabs(h)), "unitary invariance of H_a");
      ctx.check_close(quantum_tsallis_entropy(ur, order), quantum_tsallis_entropy(rho, order),
                      1e-9, "unitary invariance of the entropy");
    }
  }
}

void prop_pinching_monotonicity(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const PinchingBasis basis = PinchingBasis::from_difference(rho, sigma);
    const PositiveOperator pr(pinching_map(rho, basis).matrix());
    const PositiveOperator ps(pinching_map(sigma, basis).matrix());
    for (double a : kAlphaLow) {
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
      ctx.set_label(fmt("d=%g alpha=%g", static_cast<double>(d), a));
      ctx.check_le(quantum_f_divergence(pr, ps, spec).finite_value(),
                   quantum_f_divergence(rho, sigma, spec).finite_value(), 1e-9,
                   "S_f(Psi(A)||Psi(B)) <= S_f(A||B)");
    }
  }
}

void prop_two_point_floor(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
      ctx.set_label(fmt("d=%g alpha=%g", static_cast<double>(d), a));
      ctx.check_ge(quantum_f_divergence(rho, sigma, spec).finite_value(),
                   theorem1_classical_floor(rho, sigma, spec).finite_value(), 1e-9,
                   "S_f(A||B) >= S_f({u'}||{v'})");
    }
  }
}

// The eps schedule bottoms out at 2^{-40}; stabilization at the scaled 1e-8
// threshold needs min spec(B) well above that, so near-singular draws are
// redrawn (they are "full rank" in name only at this resolution).
std::pair<DensityOperator, DensityOperator> sample_resolvable_pair(int d, SplitMix64& rng) {
  DensityOperator rho = sample_density(d, d, rng);
  DensityOperator sigma = sample_density(d, d, rng);
  for (int tries = 0; tries < 64; ++tries) {
    if (eigendecompose(sigma).eigenvalues().back() >= 1e-3) break;
    sigma = sample_density(d, d, rng);
  }
  return {std::move(rho), std::move(sigma)};
}

void prop_eps_limit(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_resolvable_pair(d, ctx.rng());
    for (double a : {0.3, 0.7, 1.5, 2.0}) {
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
      const double direct = quantum_f_divergence(rho, sigma, spec).finite_value();
      const double lim = quantum_f_divergence_limit(rho, sigma, spec).finite_value();
      ctx.set_label(fmt("d=%g alpha=%g", static_cast<double>(d), a));
      ctx.check_close(lim, direct, 1e-8 * (1.0 + std::fabs(direct)),
                      "eps-limit agrees with the direct path on full rank");
    }
    if (d >= 2) {
      // A = B rank-deficient with a normalized integrand: the limit is 0
      const DensityOperator low = sample_density(d, d - 1, ctx.rng());
      const PositiveOperator a(low.matrix());
      ctx.set_label(fmt("d=%g", static_cast<double>(d)));
      ctx.check_close(
          quantum_f_divergence_limit(a, a, FDivergenceSpec::total_variation()).finite_value(), 0.0,
          1e-8, "S_f(A||A+eps) -> 0 for f(1) = 0");
      // singular second argument, alpha = 2: +inf
      const DensityOperator full = sample_density(d, d, ctx.rng());
      const ExtendedValue inf_case = quantum_f_divergence_limit(
          PositiveOperator(full.matrix()), a, FDivergenceSpec::f_alpha(Order(2.0)));
      ctx.check(inf_case.is_infinite() ? 1.0 : -1.0, 0.0, inf_case.value(), 0.0,
                "singular kr(B) overlap diverges to +inf");
    }
  }
}

void prop_quantum_pinsker_chain(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const double h1 = quantum_relative_entropy(rho, sigma).finite_value();
    const double dd = trace_distance(rho, sigma);
    ctx.set_label(fmt("d=%g D=%g", static_cast<double>(d), dd));
    ctx.check_ge(h1, 2.0 * dd * dd, 1e-9, "H_1 >= 2 D^2 (quantum Pinsker)");
    for (double a : {0.3, 0.7})
      ctx.check_le(quantum_tsallis_rel_entropy(rho, sigma, Order(a)).finite_value(), h1, 1e-9,
                   "H_a <= H_1 for a < 1");
    for (double b : {1.5, 2.0})
      ctx.check_ge(quantum_tsallis_rel_entropy(rho, sigma, Order(b)).finite_value(), h1, 1e-9,
                   "H_1 <= H_b for b in (1,2]");
  }
}

void prop_quantum_shift_bound(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const PositiveOperator a = sample_positive(d, 1.0, ctx.rng());
    const PositiveOperator b = sample_positive(d, 1.3, ctx.rng());
    const PositiveOperator c = sample_positive(d, 0.8, ctx.rng());
    const PositiveOperator ac(a.matrix() + c.matrix());
    const PositiveOperator bc(b.matrix() + c.matrix());
    for (double alpha : {0.5, 1.5, 2.0}) {
      const Order order(alpha);
      ctx.set_label(fmt("d=%g alpha=%g", static_cast<double>(d), alpha));
      ctx.check_le(quantum_tsallis_rel_entropy(ac, bc, order).finite_value(),
                   quantum_tsallis_rel_entropy(a, b, order).finite_value(), 1e-9,
                   "H_a(A+C||B+C) <= H_a(A||B), 0 <= a <= 2");
    }
  }
}

// ---------------------------------------------------------------- bounds ---

void prop_pinsker_floor(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    for (double theta : {1.0, 2.5}) {
      const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
      const PositiveOperator a(theta * rho.matrix());
      const PositiveOperator b(theta * sigma.matrix());
      const double tau = trace_distance(a, b);
      for (double al : ctx.config().alphas) {
        if (al >= 1.0) continue;
        const Order order(al);
        ctx.set_label(fmt("d=%g theta=%g alpha=%g", static_cast<double>(d), theta, al));
        ctx.check_ge(quantum_tsallis_rel_entropy(a, b, order).finite_value(),
                     pinsker_lower_bound(theta, tau, order, ctx.kernels()), ctx.config().tolerance,
                     "H_a(A||B) >= kappa theta g(tau/theta)");
      }
    }
  }
  // near-tight two-point pairs: these carry the sensitivity to kappa
  const double u = ctx.rng().uniform(0.05, 0.95);
  const double v = ctx.rng().uniform(0.05, 0.95);
  const Distribution p({u, 1.0 - u});
  const Distribution q({v, 1.0 - v});
  const double tau = trace_distance(p, q);
  for (double al : {0.25, 0.5, 0.75}) {
    const Order order(al);
    ctx.set_label(fmt("u=%g v=%g alpha=%g", u, v, al));
    ctx.check_ge(tsallis_rel_entropy(p, q, order).finite_value(),
                 pinsker_lower_bound(1.0, tau, order, ctx.kernels()), ctx.config().tolerance,
                 "two-point H_a >= kappa g(t)");
  }
}

void prop_pinsker_series(PropertyContext& ctx) {
  for (double theta : {1.0, 2.5}) {
    for (double al : {0.25, 0.5, 0.75}) {
      const Order order(al);
      for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double tau = frac * theta;
        const double closed = pinsker_lower_bound(theta, tau, order, ctx.kernels());
        ctx.set_label(fmt("theta=%g alpha=%g tau=%g", theta, al, tau));
        double prev = 0.0;
        for (int n = 1; n <= 12; ++n) {
          const double partial = pinsker_series_bound(theta, tau, order, n, ctx.kernels());
          ctx.check_ge(partial, prev, 1e-12, "partial sums nondecreasing");
          ctx.check_le(partial, closed, 1e-12, "partial sums below the closed form");
          prev = partial;
        }
        if (frac <= 0.5)
          ctx.check_close(pinsker_series_bound(theta, tau, order, 30, ctx.kernels()), closed, 1e-9,
                          "30 terms reach the closed form");
        ctx.check_close(pinsker_series_bound(theta, tau, order, 1, ctx.kernels()),
                        ctx.kernels().kappa_fn(order) * 0.5 * tau * tau / theta, 1e-14,
                        "first term is the quadratic bound");
      }
    }
  }
}

void prop_renyi_pinsker(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const double tau = trace_distance(rho, sigma);
    for (double al : {0.25, 0.5, 0.75}) {
      const Order order(al);
      const double bound = renyi_pinsker_bound(tau, order, ctx.kernels());
      ctx.set_label(fmt("d=%g alpha=%g tau=%g", static_cast<double>(d), al, tau));
      ctx.check_ge(quantum_renyi_rel_entropy(rho, sigma, order).finite_value(), bound,
                   ctx.config().tolerance, "R_a >= Renyi Pinsker bound");
      ctx.check_ge(bound, ctx.kernels().kappa_fn(order) * g_of_t(tau), 1e-12,
                   "log form dominates kappa g(tau)");
    }
  }
}

void prop_minprob_upper(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    const auto [p, q] = sample_pair(n, ctx.rng(), 0.02);
    const double q0 = minimal_probability(q, WeightSet(p.probs()));
    const double tau = trace_distance(p, q);
    for (double al : kAlphaThm3) {
      const Order order(al);
      const ExtendedValue bound = upper_bound_thm3(q0, tau, order, ctx.kernels());
      ctx.set_label(fmt("n=%g q0=%g tau=%g", static_cast<double>(n), q0, tau));
      ctx.check_le(tsallis_rel_entropy(p, q, order).finite_value(), bound.finite_value(),
                   ctx.config().tolerance, "H_a(P||Q) <= minimal-probability upper bound");
      ctx.check_le(renyi_rel_entropy(p, q, order).finite_value(), bound.finite_value(),
                   ctx.config().tolerance, "R_a(P||Q) <= minimal-probability upper bound");
    }
  }
}

void prop_minprob_forms(PropertyContext& ctx) {
  static const BoundKernels first_branch{&kappa, &pinsker_series_coeff,
                                         [](double, double) { return true; }};
  static const BoundKernels second_branch{&kappa, &pinsker_series_coeff,
                                          [](double, double) { return false; }};
  for (double q0 : {0.1, 0.25, 0.4}) {
    for (double al : kAlphaThm3) {
      const Order order(al);
      for (double frac : {0.0, 0.3, 0.8, 1.0, 1.5, 2.2}) {
        const double tau = std::min(frac * q0, 1.0 - q0);
        ctx.set_label(fmt("q0=%g alpha=%g tau=%g", q0, al, tau));
        ctx.check_close(upper_bound_thm3(q0, tau, order).finite_value(),
                        upper_bound_thm3_log_form(q0, tau, order).finite_value(), 1e-10,
                        "power form = alpha-log form");
      }
      ctx.set_label(fmt("q0=%g alpha=%g", q0, al));
      ctx.check_close(upper_bound_thm3(q0, q0, order, first_branch).finite_value(),
                      upper_bound_thm3(q0, q0, order, second_branch).finite_value(), 1e-10,
                      "branches agree at tau = q0");
    }
  }
}

void prop_minprob_oracle(PropertyContext& ctx) {
  const int n = 4;
  for (double al : {1.5, 2.0, 3.0}) {
    for (double q0 : {0.25, 0.2}) {
      for (double frac : {0.4, 0.8, 1.0, 1.8}) {
        const double tau = std::min(frac * q0, 1.0 - q0);
        const double closed = upper_bound_thm3(q0, tau, Order(al), ctx.kernels()).finite_value();
        const double o20 = brute_force_thm3_oracle(q0, tau, al, n, 20);
        const double o40 = brute_force_thm3_oracle(q0, tau, al, n, 40);
        ctx.set_label(fmt("q0=%g tau=%g alpha=%g", q0, tau, al));
        ctx.check_le(o20, closed, ctx.config().tolerance, "grid maximum below the closed form");
        ctx.check_le(o40, closed, ctx.config().tolerance, "refined grid maximum below the closed form");
        ctx.check_ge(o40, o20, 1e-12, "grid refinement is monotone");
      }
    }
    // equality witness in the tau <= q0 branch (q0 = 1/N)
    for (double frac : {0.4, 0.6, 1.0}) {
      const double q0 = 1.0 / n;
      const double tau = frac * q0;
      const ExtremalConstruction ex = extremal_thm3_instance(q0, tau, al, n);
      const double measured = tsallis_rel_entropy(ex.p_extremal, ex.q_base, Order(al)).finite_value();
      const double bound = upper_bound_thm3(q0, tau, Order(al), ctx.kernels()).finite_value();
      ctx.set_label(fmt("q0=%g tau=%g alpha=%g", q0, tau, al));
      ctx.check_close(measured, bound, 1e-10, "extremal instance attains the bound (tau <= q0)");
      ctx.check_ge(measured, brute_force_thm3_oracle(q0, tau, al, n, 20), 1e-10,
                   "attained value dominates every grid value");
      ctx.check_close(trace_distance(ex.p_extremal, ex.q_base), tau, 1e-12,
                      "extremal construction hits D(P,Q) = tau");
    }
  }
}

void prop_fano_bound_suite(PropertyContext& ctx) {
  for (int n : ctx.config().dims) {
    if (n < 2) continue;
    const JointDistribution j = sample_joint(n, ctx.rng());
    const double pe = error_probability(j);
    for (double al : kAlphaFano) {
      const Order order(al);
      const double cond = conditional_tsallis_entropy(j, order);
      const double mid = fano_intermediate(j, order);
      const double closed = fano_bound(pe, n, order);
      ctx.set_label(fmt("n=%g alpha=%g Pe=%g", static_cast<double>(n), al, pe));
      ctx.check_le(cond, mid, 1e-10, "H_a(X|Y) <= intermediate Fano bound");
      ctx.check_le(mid, closed, ctx.config().tolerance, "intermediate <= closed-form Fano bound");
      if (al < 1.0) {
        // the two algebraically equal closed forms of the bound
        const double nn = static_cast<double>(n);
        const double assembled = (std::pow(nn, 1.0 - al) * std::pow(pe, al) - al * pe) / (1.0 - al) +
                                 std::pow(nn, 1.0 - al) * std::pow(pe, al) *
                                     alpha_log(nn - 1.0, order);
        ctx.check_close(closed, assembled, 1e-12 * (1.0 + std::fabs(closed)),
                        "closed form matches the Holder-assembled form");
      }
    }
    ctx.check_close(fano_bound(pe, n, Order(1.0 + 1e-7)),
                    binary_tsallis(pe, Order(1.0)) + pe * std::log(static_cast<double>(n - 1)),
                    1e-6, "near-one order dispatches to classical Fano");
  }
}

void prop_fannes_bound_suite(PropertyContext& ctx) {
  for (int d : ctx.config().dims) {
    if (d < 2) continue;
    const auto [rho, sigma] = sample_density_pair(d, ctx.rng());
    const double tau = trace_distance(rho, sigma);
    for (double al : kAlphaFano) {
      const Order order(al);
      if (al > 1.0 && tau > static_cast<double>(d) / (d + 1)) continue;
      const double gap = std::fabs(quantum_tsallis_entropy(rho, order) -
                                   quantum_tsallis_entropy(sigma, order));
      ctx.set_label(fmt("d=%g alpha=%g tau=%g", static_cast<double>(d), al, tau));
      ctx.check_le(gap, fannes_bound(tau, d, order), ctx.config().tolerance,
                   "|H_a(rho) - H_a(sigma)| <= Fannes bound");
    }
  }
}

void prop_yanagi_comparison(PropertyContext& ctx) {
  const Order half(0.5);
  for (double tau : {1e-6, 1e-4, 0.01, 0.05, 0.1, 0.125}) {
    const auto yan = yanagi_comparison_bound(tau, 2, half);
    const double fan = fannes_bound(tau, 2, half);
    ctx.set_label(fmt("tau=%g", tau));
    ctx.check(yan.has_value() ? 1.0 : -1.0, 0.0, tau, 0.125, "validity range covers tau <= 1/8");
    if (yan) ctx.check_ge(*yan, fan, 1e-12, "comparison bound dominates the Fano-route bound on (0,1/8]");
  }
  ctx.check(yanagi_comparison_bound(0.2, 2, half).has_value() ? -1.0 : 1.0, 0.0, 0.2, 0.125,
            "tau beyond alpha^{1/(1-alpha)}/2 is out of range");
  // the comparison bound is itself a valid Fannes-type bound in range
  const auto [rho, sigma] = sample_density_pair(2, ctx.rng());
  const double tau = trace_distance(rho, sigma);
  for (double al : {0.3, 0.5, 0.7}) {
    const Order order(al);
    const auto yan = yanagi_comparison_bound(tau, 2, order);
    if (!yan) continue;
    const double gap =
        std::fabs(quantum_tsallis_entropy(rho, order) - quantum_tsallis_entropy(sigma, order));
    ctx.set_label(fmt("alpha=%g tau=%g", al, tau));
    ctx.check_le(gap, *yan, ctx.config().tolerance, "|H_a(rho)-H_a(sigma)| <= comparison bound");
  }
}

void prop_bound_monotonicity(PropertyContext& ctx) {
  // The alpha > 1 bound h_a(x) + x^a ln_a(N-1) has derivative
  // a/(1-a) [(x/(N-1))^{a-1} - (1-x)^{a-1}], nonnegative exactly for
  // x <= (N-1)/N.  (The narrower range than the stated N/(N+1) is a known
  // erratum; past the peak the function genuinely decreases.)
  const int steps = 50;
  for (double al : kAlphaHigh) {
    const Order order(al);
    for (int n : {2, 4, 8}) {
      const double peak = static_cast<double>(n - 1) / n;
      const double cap = static_cast<double>(n) / (n + 1);
      double prev = fano_bound(0.0, n, order);
      double grid_max = prev;
      for (int k = 1; k <= steps; ++k) {
        const double pe = peak * k / steps;
        const double cur = fano_bound(pe, n, order);
        ctx.set_label(fmt("n=%g alpha=%g Pe=%g", static_cast<double>(n), al, pe));
        ctx.check_ge(cur, prev, 1e-12, "Fano bound nondecreasing on [0, (N-1)/N]");
        prev = cur;
      }
      // ... and (N-1)/N really is the maximum over the bound's stated tau-range
      for (int k = 0; k <= steps; ++k)
        grid_max = std::max(grid_max, fano_bound(cap * k / steps, n, order));
      ctx.set_label(fmt("n=%g alpha=%g", static_cast<double>(n), al));
      ctx.check_le(grid_max, fano_bound(peak, n, order), 1e-12,
                   "peak of the Fano bound sits at (N-1)/N");
      prev = fannes_bound(0.0, n, order);
      for (int k = 1; k <= steps; ++k) {
        const double tau = peak * k / steps;
        const double cur = fannes_bound(tau, n, order);
        ctx.set_label(fmt("d=%g alpha=%g tau=%g", static_cast<double>(n), al, tau));
        ctx.check_ge(cur, prev, 1e-12, "Fannes bound nondecreasing on [0, (d-1)/d]");
        prev = cur;
      }
    }
  }
}

void prop_alpha_limit(PropertyContext& ctx) {
  const auto [p, q] = sample_pair(3, ctx.rng(), 0.05);
  const double kl = kl_divergence(WeightSet(p.probs()), WeightSet(q.probs())).finite_value();
  for (double side : {1.0, -1.0}) {
    double prev_err = -1.0;
    for (int k = 2; k <= 4; ++k) {
      const double a = 1.0 + side * std::pow(10.0, -k);
      const double err = std::fabs(tsallis_rel_entropy(p, q, Order(a)).finite_value() - kl);
      ctx.set_label(fmt("side=%g k=%g", side, static_cast<double>(k)));
      if (prev_err >= 0.0) ctx.check_le(err, prev_err / 5.0, 1e-12, "error shrinks toward alpha = 1");
      prev_err = err;
    }
  }
  // quantum scan on a commuting pair tracks the classical one; the quantum
  // path runs through the eigensolver, whose 1e-16 spectrum noise is
  // amplified by (alpha-1)^{-1}, hence the eps-scaled tolerance
  const DensityOperator rho = diagonal_density(p);
  const DensityOperator sigma = diagonal_density(q);
  for (int k = 2; k <= 4; ++k) {
    const double eps = std::pow(10.0, -k);
    ctx.set_label(fmt("k=%g", static_cast<double>(k)));
    ctx.check_close(quantum_tsallis_rel_entropy(rho, sigma, Order(1.0 + eps)).finite_value(),
                    tsallis_rel_entropy(p, q, Order(1.0 + eps)).finite_value(),
                    1e-12 + 1e-15 / eps, "commuting quantum scan matches classical");
  }
}

}  // namespace

const std::vector<std::string>& covered_op_catalog() {
  static const std::vector<std::string> catalog{
      // scalar-kernel
      "alpha_log", "binary_tsallis", "g_of_t", "kappa", "phi_uv", "pinsker_series_coeff",
      // classical-info
      "trace_distance_classical", "tsallis_entropy", "renyi_entropy", "tsallis_rel_entropy",
      "renyi_rel_entropy", "f_divergence", "minimal_probability", "qbar_construction",
      "joint_tsallis_entropy", "conditional_tsallis_entropy", "error_probability",
      "maximal_coupling",
      // operator-core
      "eigendecompose", "power_on_support", "trace_distance_quantum", "hs_inner",
      "jordan_projectors", "pinching_map", "coarse_grain_two_point",
      // quantum-divergence
      "quantum_tsallis_entropy", "quantum_renyi_entropy", "quantum_relative_entropy",
      "quantum_tsallis_rel_entropy", "quantum_renyi_rel_entropy", "quantum_f_divergence",
      "quantum_f_divergence_limit", "theorem1_classical_floor",
      // bounds
      "pinsker_lower_bound", "pinsker_series_bound", "renyi_pinsker_bound", "upper_bound_thm3",
      "upper_bound_thm3_log_form", "fano_intermediate", "fano_bound", "fannes_bound",
      "yanagi_comparison_bound"};
  return catalog;
}

const std::vector<PropertySpec>& property_registry() {
  static const std::vector<PropertySpec> registry{
      {"alpha-log-identities", {"alpha_log"}, prop_alpha_log_identities},
      {"alpha-log-limit", {"alpha_log"}, prop_alpha_log_limit},
      {"binary-tsallis-concavity", {"binary_tsallis"}, prop_binary_tsallis_concavity},
      {"phi-nonpositivity", {"phi_uv", "g_of_t"}, prop_phi_nonpositive},
      {"binary-affinity-inequality", {"g_of_t"}, prop_binary_affinity},
      {"phi-convexity-alpha", {"phi_uv"}, prop_phi_convexity},
      {"pinsker-series-coefficients", {"pinsker_series_coeff"}, prop_series_coefficients},
      {"entropy-range", {"tsallis_entropy", "renyi_entropy", "alpha_log"}, prop_entropy_range},
      {"rel-entropy-nonnegativity",
       {"tsallis_rel_entropy", "renyi_rel_entropy", "trace_distance_classical"},
       prop_rel_entropy_nonneg},
      {"homogeneity", {"tsallis_rel_entropy"}, prop_homogeneity},
      {"joint-convexity", {"tsallis_rel_entropy"}, prop_joint_convexity},
      {"shift-invariance-bound", {"tsallis_rel_entropy"}, prop_shift_bound},
      {"classical-pinsker-chain", {"tsallis_rel_entropy"}, prop_classical_pinsker_chain},
      {"tsallis-renyi-relation", {"tsallis_rel_entropy", "renyi_rel_entropy"}, prop_order_relation},
      {"f-divergence-conventions",
       {"f_divergence", "trace_distance_classical", "tsallis_rel_entropy"},
       prop_fdiv_conventions},
      {"maximal-coupling", {"maximal_coupling", "error_probability", "trace_distance_classical"},
       prop_coupling},
      {"fano-chain-rule",
       {"joint_tsallis_entropy", "conditional_tsallis_entropy", "tsallis_entropy"},
       prop_fano_chain_rule},
      {"qbar-shift-chain",
       {"qbar_construction", "minimal_probability", "tsallis_rel_entropy"},
       prop_qbar_chain},
      {"spectral-reconstruction", {"eigendecompose"}, prop_spectral_reconstruction},
      {"power-on-support-composition", {"power_on_support", "eigendecompose"},
       prop_power_composition},
      {"trace-distance-metric", {"trace_distance_quantum"}, prop_trace_distance_metric},
      {"pinching-fixed-point", {"pinching_map", "hs_inner", "eigendecompose"}, prop_pinching},
      {"jordan-coarse-graining",
       {"jordan_projectors", "coarse_grain_two_point", "trace_distance_quantum"},
       prop_jordan_coarse_grain},
      {"quantum-classical-consistency",
       {"quantum_tsallis_entropy", "quantum_renyi_entropy", "quantum_relative_entropy",
        "quantum_tsallis_rel_entropy", "quantum_renyi_rel_entropy", "quantum_f_divergence"},
       prop_quantum_classical_consistency},
      {"quantum-order-relation-unitary",
       {"quantum_tsallis_rel_entropy", "quantum_renyi_rel_entropy", "quantum_tsallis_entropy"},
       prop_quantum_relation_unitary},
      {"pinching-monotonicity", {"quantum_f_divergence", "pinching_map"},
       prop_pinching_monotonicity},
      {"two-point-classical-floor",
       {"theorem1_classical_floor", "quantum_f_divergence", "jordan_projectors", "f_divergence"},
       prop_two_point_floor},
      {"eps-limit-agreement", {"quantum_f_divergence_limit", "quantum_f_divergence"},
       prop_eps_limit},
      {"quantum-pinsker-chain",
       {"quantum_relative_entropy", "quantum_tsallis_rel_entropy", "trace_distance_quantum"},
       prop_quantum_pinsker_chain},
      {"quantum-shift-bound", {"quantum_tsallis_rel_entropy"}, prop_quantum_shift_bound},
      {"pinsker-floor",
       {"pinsker_lower_bound", "kappa", "g_of_t", "quantum_tsallis_rel_entropy",
        "trace_distance_quantum"},
       prop_pinsker_floor},
      {"pinsker-series-dominance",
       {"pinsker_series_bound", "pinsker_series_coeff", "pinsker_lower_bound", "kappa"},
       prop_pinsker_series},
      {"renyi-pinsker-bound",
       {"renyi_pinsker_bound", "quantum_renyi_rel_entropy", "g_of_t", "kappa"},
       prop_renyi_pinsker},
      {"minprob-upper-bound",
       {"upper_bound_thm3", "minimal_probability", "tsallis_rel_entropy", "renyi_rel_entropy",
        "trace_distance_classical"},
       prop_minprob_upper},
      {"minprob-bound-forms", {"upper_bound_thm3", "upper_bound_thm3_log_form", "alpha_log"},
       prop_minprob_forms},
      {"minprob-oracle-extremal",
       {"upper_bound_thm3", "tsallis_rel_entropy", "minimal_probability",
        "trace_distance_classical"},
       prop_minprob_oracle},
      {"fano-bound",
       {"fano_bound", "fano_intermediate", "conditional_tsallis_entropy", "error_probability",
        "binary_tsallis", "alpha_log"},
       prop_fano_bound_suite},
      {"fannes-bound",
       {"fannes_bound", "quantum_tsallis_entropy", "trace_distance_quantum"},
       prop_fannes_bound_suite},
      {"yanagi-comparison", {"yanagi_comparison_bound", "fannes_bound", "quantum_tsallis_entropy"},
       prop_yanagi_comparison},
      {"bound-monotonicity", {"fano_bound", "fannes_bound"}, prop_bound_monotonicity},
      {"alpha-limit-consistency",
       {"tsallis_rel_entropy", "quantum_tsallis_rel_entropy"},
       prop_alpha_limit},
  };
  return registry;
}

SuiteSummary run_property_suite(const SamplerConfig& cfg, Mutation mutation) {
  cfg.validate();
  SuiteSummary summary;
  summary.config = cfg;
  summary.mutation = mutation;
  const BoundKernels& kernels = kernels_for(mutation);
  for (const PropertySpec& prop : property_registry()) {
    PropertyResult result;
    result.id = prop.id;
    double min_slack = std::numeric_limits<double>::infinity();
    for (long t = 0; t < cfg.trials_per_cell; ++t) {
      PropertyContext ctx(cfg, kernels, SplitMix64(substream_seed(cfg.seed, prop.id, static_cast<uint64_t>(t))), t);
      ctx.sink = &summary.violations;
      ctx.property_id = prop.id;
      const size_t before = summary.violations.size();
      try {
        prop.run(ctx);
      } catch (const std::exception& e) {
        // corrupted kernels may push evaluators outside their domain; an
        // exception is a detection, not a crash
        summary.violations.push_back({prop.id, std::string("trial=") + std::to_string(t) +
                                                   " exception: " + e.what(),
                                      std::numeric_limits<double>::quiet_NaN(),
                                      std::numeric_limits<double>::quiet_NaN(),
                                      std::numeric_limits<double>::quiet_NaN()});
      }
      result.checks += ctx.checks_run;
      result.violations += static_cast<long>(summary.violations.size() - before);
      min_slack = std::min(min_slack, ctx.min_slack);
    }
    result.min_slack = std::isfinite(min_slack) ? min_slack : 0.0;
    summary.results.push_back(std::move(result));
  }
  return summary;
}

long SuiteSummary::total_checks() const {
  long n = 0;
  for (const auto& r : results) n += r.checks;
  return n;
}

std::string SuiteSummary::render_text() const {
  std::ostringstream os;
  os << "# entropy-lab property suite\n";
  os << "# seed=" << config.seed << " dims=";
  for (size_t i = 0; i < config.dims.size(); ++i) os << (i ? "," : "") << config.dims[i];
  os << " alphas=";
  char buf[64];
  for (size_t i = 0; i < config.alphas.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%g", config.alphas[i]);
    os << (i ? "," : "") << buf;
  }
  std::snprintf(buf, sizeof buf, "%g", config.tolerance);
  os << " trials=" << config.trials_per_cell << " tolerance=" << buf
     << " mutation=" << mutation_name(mutation) << "\n";
  os << "# property checks violations min_slack\n";
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%.17g", r.min_slack);
    os << r.id << ' ' << r.checks << ' ' << r.violations << ' ' << buf << '\n';
  }
  os << "# total checks=" << total_checks() << " violations=" << violations.size() << '\n';
  return os.str();
}

}  // namespace entlab
