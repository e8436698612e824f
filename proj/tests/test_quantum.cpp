/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <doctest.h>

#include <cmath>

#include "entlab/quantum.hpp"
#include "entlab/samplers.hpp"

using namespace entlab;

namespace {

Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<long>(v.size()), static_cast<long>(v.size()));
  int i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("quantum entropies") {
  const DensityOperator pure(diag({1.0, 0.0, 0.0}));
  CHECK(quantum_tsallis_entropy(pure, Order(2.0)) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(quantum_renyi_entropy(pure, Order(0.5)) == doctest::Approx(0.0).epsilon(1e-13));
  const int d = 4;
  const DensityOperator mixed(Matrix::Identity(d, d) / d);
  for (double a : {0.3, 2.0}) {
    CHECK(quantum_tsallis_entropy(mixed, Order(a)) ==
          doctest::Approx(alpha_log(d, Order(a))).epsilon(1e-13));
    CHECK(quantum_renyi_entropy(mixed, Order(a)) == doctest::Approx(std::log(d)).epsilon(1e-13));
  }
  // unitary invariance via the spectrum: H_a(rho) = H_a(spc(rho))
  SplitMix64 rng(41);
  const DensityOperator rho = sample_density(4, 4, rng);
  for (double a : {0.5, 1.0, 2.0})
    CHECK(quantum_tsallis_entropy(rho, Order(a)) ==
          doctest::Approx(tsallis_entropy(spectrum_distribution(rho), Order(a))).epsilon(1e-12));
}

TEST_CASE("quantum relative entropy") {
  SplitMix64 rng(43);
  const DensityOperator rho = sample_density(3, 3, rng);
  CHECK(quantum_relative_entropy(rho, rho).finite_value() == doctest::Approx(0.0).epsilon(1e-12));
  // commuting diagonal pair reduces to classical KL
  const DensityOperator dp(diag({0.7, 0.3}));
  const DensityOperator dq(diag({0.4, 0.6}));
  const double kl = 0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6);
  CHECK(quantum_relative_entropy(dp, dq).finite_value() == doctest::Approx(kl).epsilon(1e-13));
  // orthogonal supports
  const DensityOperator e0(diag({1.0, 0.0}));
  const DensityOperator e1(diag({0.0, 1.0}));
  CHECK(quantum_relative_entropy(e0, e1).is_infinite());
  CHECK(kernel_contained(e0, e0));
  CHECK_FALSE(kernel_contained(e0, e1));
}

TEST_CASE("quantum tsallis relative entropy") {
  const DensityOperator pure(diag({1.0, 0.0}));
  const DensityOperator mixed(diag({0.5, 0.5}));
  // tr(rho^2 sigma^{-1}) - 1 = 2 - 1
  CHECK(quantum_tsallis_rel_entropy(pure, mixed, Order(2.0)).finite_value() ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(quantum_tsallis_rel_entropy(mixed, pure, Order(2.0)).is_infinite());
  CHECK(quantum_tsallis_rel_entropy(pure, pure, Order(2.0)).finite_value() ==
        doctest::Approx(0.0).epsilon(1e-13));
  // commuting reduction on random diagonals
  SplitMix64 rng(47);
  for (double a : {0.3, 0.5, 0.7, 1.5, 2.0, 3.0}) {
    const Distribution p = sample_distribution(4, rng);
    const Distribution q = sample_distribution(4, rng);
    CHECK(quantum_tsallis_rel_entropy(diagonal_density(p), diagonal_density(q), Order(a))
              .finite_value() ==
          doctest::Approx(tsallis_rel_entropy(p, q, Order(a)).finite_value()).epsilon(1e-11));
  }
}

TEST_CASE("quantum renyi relative entropy and the order relation") {
  SplitMix64 rng(53);
  const DensityOperator rho = sample_density(4, 4, rng);
  const DensityOperator sigma = sample_density(4, 4, rng);
  CHECK(quantum_renyi_rel_entropy(rho, rho, Order(0.5)).finite_value() ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (double a : {0.3, 0.5, 1.5, 2.0}) {
    const double h = quantum_tsallis_rel_entropy(rho, sigma, Order(a)).finite_value();
    const double r = quantum_renyi_rel_entropy(rho, sigma, Order(a)).finite_value();
    CHECK((a - 1.0) * r == doctest::Approx(std::log1p((a - 1.0) * h)).epsilon(1e-11));
  }
}

TEST_CASE("quantum f-divergence") {
  SplitMix64 rng(59);
  const DensityOperator rho = sample_density(3, 3, rng);
  // A = B with normalized integrand
  CHECK(quantum_f_divergence(PositiveOperator(rho.matrix()), PositiveOperator(rho.matrix()),
                             FDivergenceSpec::total_variation())
            .finite_value() == doctest::Approx(0.0).epsilon(1e-12));
  // f_alpha specialization: S_alpha + (1-a)^{-1} tr A = H_alpha
  const DensityOperator sigma = sample_density(3, 3, rng);
  for (double a : {0.3, 0.7, 1.5, 2.0}) {
    const double s = quantum_f_divergence(PositiveOperator(rho.matrix()),
                                          PositiveOperator(sigma.matrix()),
                                          FDivergenceSpec::f_alpha(Order(a)))
                         .finite_value();
    const double h = quantum_tsallis_rel_entropy(rho, sigma, Order(a)).finite_value();
    CHECK(s + 1.0 / (1.0 - a) == doctest::Approx(h).epsilon(1e-11));
  }
  // kernel precondition violated: rank-deficient B under full-rank A
  const DensityOperator low = sample_density(3, 2, rng);
  CHECK_THROWS_AS(quantum_f_divergence(PositiveOperator(rho.matrix()),
                                       PositiveOperator(low.matrix()),
                                       FDivergenceSpec::f_alpha(Order(2.0))),
                  kernel_precondition_error);
}

TEST_CASE("epsilon-regularized limit") {
  SplitMix64 rng(61);
  const DensityOperator rho = sample_density(3, 3, rng);
  const DensityOperator sigma = sample_density(3, 3, rng);
  for (double a : {0.3, 0.7, 1.5, 2.0}) {
    const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
    const double direct = quantum_f_divergence(PositiveOperator(rho.matrix()),
                                               PositiveOperator(sigma.matrix()), spec)
                              .finite_value();
    const double lim = quantum_f_divergence_limit(PositiveOperator(rho.matrix()),
                                                  PositiveOperator(sigma.matrix()), spec)
                           .finite_value();
    CHECK(lim == doctest::Approx(direct).epsilon(1e-8).scale(1.0 + std::fabs(direct)));
  }
  // singular second argument with alpha = 2 diverges
  const DensityOperator low = sample_density(3, 2, rng);
  CHECK(quantum_f_divergence_limit(PositiveOperator(rho.matrix()), PositiveOperator(low.matrix()),
                                   FDivergenceSpec::f_alpha(Order(2.0)))
            .is_infinite());
  // A = B rank-deficient with f(1) = 0 stabilizes at zero
  CHECK(quantum_f_divergence_limit(PositiveOperator(low.matrix()), PositiveOperator(low.matrix()),
                                   FDivergenceSpec::total_variation())
            .finite_value() == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("two-point classical floor") {
  SplitMix64 rng(67);
  const DensityOperator rho = sample_density(4, 4, rng);
  const DensityOperator sigma = sample_density(4, 4, rng);
  // A = B: floor is f(1) tr(B) = 0 for a normalized integrand
  CHECK(theorem1_classical_floor(PositiveOperator(rho.matrix()), PositiveOperator(rho.matrix()),
                                 FDivergenceSpec::total_variation())
            .finite_value() == doctest::Approx(0.0).epsilon(1e-12));
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
    const double floor = theorem1_classical_floor(PositiveOperator(rho.matrix()),
                                                  PositiveOperator(sigma.matrix()), spec)
                             .finite_value();
    const double full = quantum_f_divergence(PositiveOperator(rho.matrix()),
                                             PositiveOperator(sigma.matrix()), spec)
                            .finite_value();
    CHECK(full >= floor - 1e-9);
  }
  // two-point commuting case: the floor is the full classical f-divergence
  const DensityOperator dp(diag({0.8, 0.2}));
  const DensityOperator dq(diag({0.3, 0.7}));
  const FDivergenceSpec half = FDivergenceSpec::f_alpha(Order(0.5));
  CHECK(theorem1_classical_floor(PositiveOperator(dp.matrix()), PositiveOperator(dq.matrix()), half)
            .finite_value() ==
        doctest::Approx(f_divergence(Distribution({0.8, 0.2}), Distribution({0.3, 0.7}), half)
                            .finite_value())
            .epsilon(1e-12));
}

TEST_CASE("pinching monotonicity of the f-divergence") {
  SplitMix64 rng(71);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityOperator rho = sample_density(4, 4, rng);
    const DensityOperator sigma = sample_density(4, 4, rng);
    const PinchingBasis basis = PinchingBasis::from_difference(rho, sigma);
    const PositiveOperator pr(pinching_map(rho, basis).matrix());
    const PositiveOperator ps(pinching_map(sigma, basis).matrix());
    for (double a : {0.3, 0.5, 0.7}) {
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(a));
      CHECK(quantum_f_divergence(pr, ps, spec).finite_value() <=
            quantum_f_divergence(PositiveOperator(rho.matrix()), PositiveOperator(sigma.matrix()),
                                 spec)
                    .finite_value() +
                1e-9);
    }
  }
}
