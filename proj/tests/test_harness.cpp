/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "entlab/oracle.hpp"
#include "entlab/properties.hpp"
#include "entlab/quantum.hpp"
#include "entlab/samplers.hpp"
#include "entlab/scans.hpp"

using namespace entlab;

TEST_CASE("splitmix64 determinism and substreams") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(substream_seed(1, "prop-a", 0) == substream_seed(1, "prop-a", 0));
  CHECK(substream_seed(1, "prop-a", 0) != substream_seed(1, "prop-a", 1));
  CHECK(substream_seed(1, "prop-a", 0) != substream_seed(1, "prop-b", 0));
  CHECK(substream_seed(1, "prop-a", 0) != substream_seed(2, "prop-a", 0));
}

TEST_CASE("simplex sampler") {
  SplitMix64 rng(101);
  const Distribution one = sample_distribution(1, rng);
  CHECK(one[0] == doctest::Approx(1.0));
  // symmetry of the simplex measure: coordinate means are 1/N
  const int trials = 100000;
  double mean0 = 0.0;
  for (int i = 0; i < trials; ++i) mean0 += sample_distribution(3, rng)[0];
  mean0 /= trials;
  CHECK(std::fabs(mean0 - 1.0 / 3.0) <= 0.01);
  // identical sequences from identical seeds
  SplitMix64 r1(7), r2(7);
  for (int i = 0; i < 10; ++i) {
    const Distribution p1 = sample_distribution(5, r1);
    const Distribution p2 = sample_distribution(5, r2);
    for (int j = 0; j < 5; ++j) CHECK(p1[j] == p2[j]);
  }
  // floor forces full support
  SplitMix64 r3(9);
  const Distribution fl = sample_distribution(4, r3, 0.05);
  for (int j = 0; j < 4; ++j) CHECK(fl[j] >= 0.05 / (1.0 + 4 * 0.05) - 1e-15);
}

TEST_CASE("density sampler") {
  SplitMix64 rng(103);
  const DensityOperator pure = sample_density(4, 1, rng);
  CHECK(quantum_tsallis_entropy(pure, Order(2.0)) == doctest::Approx(0.0).epsilon(1e-12));
  const DensityOperator full = sample_density(4, 4, rng);
  CHECK(full.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigendecompose(full).support_rank() == 4);
  const DensityOperator low = sample_density(5, 2, rng);
  CHECK(eigendecompose(low).support_rank() == 2);
  // pinched sample spectrum equals its diagonal in the pinching basis
  const DensityOperator a = sample_density(3, 3, rng);
  const DensityOperator b = sample_density(3, 3, rng);
  const PinchingBasis basis = PinchingBasis::from_difference(a, b);
  const HermitianOperator pinched = pinching_map(a, basis);
  std::vector<double> diag;
  for (int k = 0; k < 3; ++k)
    diag.push_back((basis.basis().col(k).adjoint() * a.matrix() * basis.basis().col(k))(0, 0).real());
  std::sort(diag.begin(), diag.end(), std::greater<double>());
  const auto ev = eigendecompose(pinched).eigenvalues();
  for (int k = 0; k < 3; ++k) CHECK(ev[static_cast<size_t>(k)] == doctest::Approx(diag[static_cast<size_t>(k)]).epsilon(1e-10));
}

TEST_CASE("upper-bound oracle against the closed form") {
  CHECK(brute_force_thm3_oracle(0.25, 0.0, 2.0, 4, 20) == doctest::Approx(0.0));
  const double closed = upper_bound_thm3(0.25, 0.2, Order(2.0)).finite_value();
  double prev = -1e300;
  for (int g : {20, 40, 80}) {
    const double o = brute_force_thm3_oracle(0.25, 0.2, 2.0, 4, g);
    CHECK(o <= closed + 1e-9);
    CHECK(o >= prev - 1e-12);
    CHECK(o == doctest::Approx(closed).epsilon(1e-10));  // maximizer is a grid member
    prev = o;
  }
  // second branch
  const double closed2 = upper_bound_thm3(0.2, 0.5, Order(2.0)).finite_value();
  const double o2 = brute_force_thm3_oracle(0.2, 0.5, 2.0, 4, 40);
  CHECK(o2 <= closed2 + 1e-9);
  CHECK(o2 == doctest::Approx(closed2).epsilon(1e-10));
  CHECK_THROWS_AS(brute_force_thm3_oracle(0.25, 0.2, 0.5, 4, 20), std::domain_error);
  CHECK_THROWS_AS(brute_force_thm3_oracle(0.25, 0.2, 2.0, 9, 20), std::domain_error);
  CHECK_THROWS_AS(brute_force_thm3_oracle(0.25, 0.2, 2.0, 4, 10), std::domain_error);
  CHECK_THROWS_AS(brute_force_thm3_oracle(0.25, 0.9, 2.0, 4, 20), std::domain_error);
}

TEST_CASE("upper-bound extremal instance") {
  // q0 = 1/4, tau <= q0: equality with the two-sided branch
  for (double a : {1.5, 2.0, 3.0}) {
    for (double tau : {0.0, 0.1, 0.2, 0.25}) {
      const ExtremalConstruction ex = extremal_thm3_instance(0.25, tau, a, 4);
      CHECK(trace_distance(ex.p_extremal, ex.q_base) == doctest::Approx(tau).epsilon(1e-12));
      CHECK(minimal_probability(ex.q_base, WeightSet(ex.p_extremal.probs())) ==
            doctest::Approx(0.25).epsilon(1e-12));
      const double measured = tsallis_rel_entropy(ex.p_extremal, ex.q_base, Order(a)).finite_value();
      const double bound = upper_bound_thm3(0.25, tau, Order(a)).finite_value();
      CHECK(measured == doctest::Approx(bound).epsilon(1e-10));
    }
    // tau > q0: the instance stays admissible and reports its ratio below one
    const ExtremalConstruction wide = extremal_thm3_instance(0.25, 0.6, a, 4);
    const double measured = tsallis_rel_entropy(wide.p_extremal, wide.q_base, Order(a)).finite_value();
    const double bound = upper_bound_thm3(0.25, 0.6, Order(a)).finite_value();
    CHECK(measured <= bound + 1e-10);
    // the bound is attained exactly at tau = 1 - q0 (point-mass P)
    const ExtremalConstruction edge = extremal_thm3_instance(0.25, 0.75, a, 4);
    CHECK(tsallis_rel_entropy(edge.p_extremal, edge.q_base, Order(a)).finite_value() ==
          doctest::Approx(upper_bound_thm3(0.25, 0.75, Order(a)).finite_value()).epsilon(1e-10));
  }
  CHECK_THROWS_AS(extremal_thm3_instance(0.3, 0.1, 2.0, 4), std::domain_error);   // 1/q0 not integral
  CHECK_THROWS_AS(extremal_thm3_instance(0.2, 0.1, 2.0, 4), std::domain_error);   // m = 5 > n
  CHECK_THROWS_AS(extremal_thm3_instance(0.25, 0.8, 2.0, 4), std::domain_error);  // tau > 1 - q0
}

TEST_CASE("registry audit: every core operation is covered by a property") {
  std::set<std::string> covered;
  for (const auto& prop : property_registry())
    for (const auto& op : prop.covers) covered.insert(op);
  for (const auto& op : covered_op_catalog()) {
    INFO("op: ", op);
    CHECK(covered.count(op) == 1);
  }
  // and nothing outside the catalog is claimed
  std::set<std::string> catalog(covered_op_catalog().begin(), covered_op_catalog().end());
  for (const auto& op : covered) {
    INFO("claimed op: ", op);
    CHECK(catalog.count(op) == 1);
  }
}

TEST_CASE("property suite is clean and deterministic") {
  SamplerConfig cfg;
  cfg.trials_per_cell = 3;
  const SuiteSummary s1 = run_property_suite(cfg);
  CHECK(s1.clean());
  CHECK(s1.total_checks() > 0);
  const SuiteSummary s2 = run_property_suite(cfg);
  CHECK(s1.render_text() == s2.render_text());
  CHECK(s1.violations.size() == s2.violations.size());
}

TEST_CASE("mutation smoke tests") {
  SamplerConfig cfg;
  cfg.trials_per_cell = 3;
  const auto hits = [](const SuiteSummary& s, const std::string& id) {
    long n = 0;
    for (const auto& v : s.violations)
      if (v.property_id == id) ++n;
    return n;
  };
  // kappa corrupted to 3: the Pinsker floor overshoots the measured divergence
  const SuiteSummary kappa3 = run_property_suite(cfg, Mutation::kappa_equals_three);
  CHECK(hits(kappa3, "pinsker-floor") > 0);
  // a corrupted series coefficient breaks the partial-sum dominance
  const SuiteSummary series = run_property_suite(cfg, Mutation::series_coeff_corrupt);
  CHECK(hits(series, "pinsker-series-dominance") > 0);
  // a swapped branch predicate breaks the extremal equality
  const SuiteSummary branch = run_property_suite(cfg, Mutation::thm3_branch_swap);
  CHECK(hits(branch, "minprob-oracle-extremal") > 0);
}

TEST_CASE("fannes comparison scan") {
  const ScanTable t = fannes_comparison_scan(2, 0.5, {1e-8, 1e-6, 1e-4, 0.01, 0.125, 0.2});
  REQUIRE(t.rows.size() == 6);
  // rel_diff -> sqrt(2) - 1 as tau -> 0
  CHECK(t.rows[0][3] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-3));
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    if (t.rows[i][4] == 1.0) CHECK(t.rows[i][2] > t.rows[i][1]);  // yanagi above fannes in range
  }
  CHECK(t.rows[5][4] == 0.0);  // tau = 0.2 is out of the comparison range
  CHECK(fannes_comparison_scan(2, 0.5, {}).rows.empty());
}

TEST_CASE("alpha limit scan shows first-order convergence") {
  const ScanTable t = alpha_limit_scan(4, 2024, 2, 5);
  REQUIRE(t.rows.size() == 4);
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    CHECK(t.rows[i][2] / t.rows[i + 1][2] >= 9.0);    // tsallis
    CHECK(t.rows[i][3] / t.rows[i + 1][3] >= 9.0);    // renyi
    CHECK(t.rows[i][4] / t.rows[i + 1][4] >= 9.0);    // quantum
  }
}

TEST_CASE("pinsker tightness scan") {
  const ScanTable t = pinsker_tightness_scan(0.5, {0.1, 0.3, 0.6}, 100);
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows) {
    CHECK(row[2] >= row[1] - 1e-12);  // min measured stays above the bound
    CHECK(row[3] >= 1.0 - 1e-9);
    CHECK(row[3] <= 2.0);             // and the floor is not wildly loose
  }
}
