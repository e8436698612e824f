/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 * Acceptance suite: one line per criterion, nonzero exit on any failure.
 */
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "entlab/io.hpp"
#include "entlab/oracle.hpp"
#include "entlab/quantum.hpp"
#include "entlab/samplers.hpp"

using namespace entlab;

namespace {

struct Tally {
  long checks = 0;
  long violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::string worst;

  void note(double slack, double tol, const std::string& what) {
    ++checks;
    if (!std::isnan(slack)) min_slack = std::min(min_slack, slack);
    if (std::isnan(slack) || slack < -tol) {
      ++violations;
      if (worst.empty()) worst = what + " slack=" + format_double(slack);
    }
  }
  void ge(double value, double floor, double tol, const std::string& what) {
    note(value - floor, tol, what);
  }
  void le(double value, double cap, double tol, const std::string& what) {
    note(cap - value, tol, what);
  }
  void close(double a, double b, double tol, const std::string& what) {
    note(tol - std::fabs(a - b), 0.0, what);
  }
};

uint64_t acceptance_seed() {
  if (const char* env = std::getenv("ENTROPY_LAB_SEED")) return std::stoull(env);
  return 0xace0ba5eULL;
}

// --- criterion 1: Pinsker-type floor suite -----------------------------------

std::string criterion1(bool& pass) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  const int pairs = 10000;
  uint64_t cell = 0;
  for (int d : {2, 3, 4, 8}) {
    for (double al : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      const Order order(al);
      for (double theta : {1.0, 2.5}) {
        SplitMix64 rng(substream_seed(acceptance_seed(), "criterion1", cell++));
        for (int i = 0; i < pairs; ++i) {
          const DensityOperator rho = sample_density(d, d, rng);
          const DensityOperator sigma = sample_density(d, d, rng);
          const PositiveOperator a(theta * rho.matrix());
          const PositiveOperator b(theta * sigma.matrix());
          const double tau = trace_distance(a, b);
          tally.ge(quantum_tsallis_rel_entropy(a, b, order).finite_value(),
                   pinsker_lower_bound(theta, tau, order), 1e-9, "thm2");
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  pass = tally.violations == 0 && secs < 120.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Pinsker floor suite: %ld pairs across d={2,3,4,8} x alpha={.1,.25,.5,.75,.9} x "
                "theta={1,2.5}, %ld violations, min slack %.3g, %.1fs (target < 120s)",
                tally.checks, tally.violations, tally.min_slack, secs);
  return buf;
}

// --- criterion 2: phi and binary-affinity grids ------------------------------

std::string criterion2(bool& pass) {
  Tally tally;
  for (int iu = 0; iu <= 100; ++iu) {
    for (int iv = 0; iv <= 100; ++iv) {
      const double u = iu / 100.0;
      const double v = iv / 100.0;
      const double t = std::fabs(u - v);
      for (int ia = 0; ia <= 10; ++ia)
        tally.le(phi_uv(u, v, 0.05 * ia), 0.0, 1e-12, "phi");
      tally.le(std::sqrt(u * v) + std::sqrt((1.0 - u) * (1.0 - v)), std::sqrt(1.0 - t * t), 1e-12,
               "binary affinity vs sqrt(1-t^2)");
    }
  }
  pass = tally.violations == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Phi grid 101x101x11 and binary-affinity grid 101x101: %ld checks, %ld violations, "
                "max excess %.3g",
                tally.checks, tally.violations, -tally.min_slack);
  return buf;
}

// --- criterion 3: minimal-probability bound, oracle equivalence --------------

std::string criterion3(bool& pass) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  long equality_checks = 0;
  for (int n : {3, 4, 6}) {
    for (double al : {1.5, 2.0, 3.0}) {
      const Order order(al);
      // 20 (q0, tau) pairs spanning both branches
      std::vector<std::pair<double, double>> cells;
      for (double q0 : {1.0 / n, 0.5, 0.21, 0.13}) {
        for (double frac : {0.3, 0.7, 1.0, 1.7, 9.0}) {
          const double tau = std::min(frac * q0, 1.0 - q0);
          cells.emplace_back(q0, tau);
        }
      }
      for (const auto& [q0, tau] : cells) {
        const double closed = upper_bound_thm3(q0, tau, order).finite_value();
        const double grid_max = brute_force_thm3_oracle(q0, tau, al, n, 40);
        tally.le(grid_max, closed, 1e-9, "oracle <= closed form");
      }
      // continuity across tau = q0
      static const BoundKernels first{&kappa, &pinsker_series_coeff,
                                      [](double, double) { return true; }};
      static const BoundKernels second{&kappa, &pinsker_series_coeff,
                                       [](double, double) { return false; }};
      for (double q0 : {1.0 / n, 0.5, 0.21, 0.13})
        tally.close(upper_bound_thm3(q0, q0, order, first).finite_value(),
                    upper_bound_thm3(q0, q0, order, second).finite_value(), 1e-10, "continuity");
      // extremal equality in the tau <= q0 branch (q0 = 1/m, m <= n)
      for (int m : {2, n}) {
        const double q0 = 1.0 / m;
        for (double frac : {0.3, 0.7, 1.0}) {
          const double tau = frac * q0;
          const ExtremalConstruction ex = extremal_thm3_instance(q0, tau, al, n);
          const double measured =
              tsallis_rel_entropy(ex.p_extremal, ex.q_base, order).finite_value();
          tally.close(measured, upper_bound_thm3(q0, tau, order).finite_value(), 1e-10,
                      "extremal equality");
          ++equality_checks;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  pass = tally.violations == 0 && secs < 300.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Upper-bound oracle: 20 cells x N={3,4,6} x alpha={1.5,2,3} grid-40 maxima, %ld "
                "equality witnesses, %ld violations, %.1fs (target < 300s)",
                equality_checks, tally.violations, secs);
  return buf;
}

// --- criterion 4: Fano suite --------------------------------------------------

std::string criterion4(bool& pass) {
  Tally tally;
  const int samples = 10000;
  for (int n : {2, 4, 8}) {
    for (double al : {0.3, 0.5, 0.7, 1.5, 2.0, 3.0}) {
      const Order order(al);
      SplitMix64 rng(substream_seed(acceptance_seed(), "criterion4",
                                    static_cast<uint64_t>(n * 100 + al * 10)));
      for (int i = 0; i < samples; ++i) {
        const JointDistribution j = sample_joint(n, rng);
        const double pe = error_probability(j);
        const double cond = conditional_tsallis_entropy(j, order);
        const double mid = fano_intermediate(j, order);
        const double closed = fano_bound(pe, n, order);
        tally.le(cond, closed, 1e-9, "fano");
        tally.le(cond, mid, 1e-9, "intermediate bound above the measured entropy");
        tally.le(mid, closed, 1e-9, "intermediate bound below the closed form");
        tally.close(joint_tsallis_entropy(j, order),
                    tsallis_entropy(j.marginal_y(), order) + cond, 1e-12, "chain rule");
      }
    }
  }
  pass = tally.violations == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Fano suite: 10000 joints per (N,alpha), N={2,4,8} x alpha={.3,.5,.7,1.5,2,3}, "
                "%ld violations, min slack %.3g",
                tally.violations, tally.min_slack);
  return buf;
}

// --- criterion 5: Fannes suite ------------------------------------------------

std::string criterion5(bool& pass) {
  Tally tally;
  long skipped = 0;
  const int samples = 10000;
  for (int d : {2, 3, 4, 8}) {
    for (double al : {0.3, 0.5, 0.7, 1.5, 2.0, 3.0}) {
      const Order order(al);
      SplitMix64 rng(substream_seed(acceptance_seed(), "criterion5",
                                    static_cast<uint64_t>(d * 100 + al * 10)));
      int accepted = 0;
      long attempts = 0;
      while (accepted < samples && attempts < 20L * samples) {
        ++attempts;
        const DensityOperator rho = sample_density(d, d, rng);
        const DensityOperator sigma = sample_density(d, d, rng);
        const double tau = trace_distance(rho, sigma);
        if (al > 1.0 && tau > static_cast<double>(d) / (d + 1)) {
          ++skipped;  // outside the alpha > 1 branch domain
          continue;
        }
        const double gap =
            std::fabs(quantum_tsallis_entropy(rho, order) - quantum_tsallis_entropy(sigma, order));
        tally.le(gap, fannes_bound(tau, d, order), 1e-9, "fannes");
        ++accepted;
      }
      if (accepted < samples) {
        tally.note(-1.0, 0.0, "could not reach the in-domain sample count");
      }
    }
  }
  pass = tally.violations == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Fannes suite: 10000 in-domain pairs per (d,alpha), d={2,3,4,8} x "
                "alpha={.3,.5,.7,1.5,2,3} (%ld out-of-domain skips), %ld violations, min slack %.3g",
                skipped, tally.violations, tally.min_slack);
  return buf;
}

// --- criterion 6: the "up to 40%" comparison --------------------------------

std::string criterion6(bool& pass) {
  std::vector<double> grid{1e-8, 1e-7, 1e-6, 1e-5, 1e-4};
  for (int i = 1; i <= 25; ++i) grid.push_back(0.125 * i / 25.0);
  const ScanTable t = fannes_comparison_scan(2, 0.5, grid);
  Tally tally;
  for (const auto& row : t.rows) {
    const double tau = row[0], fannes = row[1], yanagi = row[2], rel = row[3], app = row[4];
    tally.note(app - 1.0, 0.0, "applicability on (0, 1/8]");
    if (app != 1.0) continue;
    tally.ge(yanagi, fannes, 0.0, "Fano-route bound below the comparison bound on (0,1/8]");
    if (tau <= 1e-4) tally.ge(rel, 0.40, 0.0, "relative difference >= 0.40 for tau <= 1e-4");
  }
  const double limit_ratio = t.rows[0][3];  // tau = 1e-8
  const double derived = std::sqrt(2.0) - 1.0;
  tally.close(limit_ratio, derived, 1e-3, "limiting ratio");
  pass = tally.violations == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Fannes comparison at d=2, alpha=1/2: rel. difference %.4f at tau=1e-8 "
                "(derived limit %.4f, within 1e-3), >= 0.40 up to tau=1e-4, comparison bound dominates on "
                "(0,1/8]; %ld violations",
                limit_ratio, derived, tally.violations);
  return buf;
}

// --- criterion 7: quantum f-divergence consistency --------------------------

std::string criterion7(bool& pass) {
  Tally tally;
  SplitMix64 rng(substream_seed(acceptance_seed(), "criterion7", 0));
  const std::vector<double> alphas{0.3, 0.7, 1.5, 2.0};
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng.next_below(3));
    const Distribution p = sample_distribution(n, rng);
    const Distribution q = sample_distribution(n, rng);
    const DensityOperator rho = diagonal_density(p);
    const DensityOperator sigma = diagonal_density(q);
    for (double al : alphas) {
      const Order order(al);
      tally.close(quantum_tsallis_rel_entropy(rho, sigma, order).value(),
                  tsallis_rel_entropy(p, q, order).value(), 1e-10, "diagonal tsallis");
      tally.close(quantum_renyi_rel_entropy(rho, sigma, order).value(),
                  renyi_rel_entropy(p, q, order).value(), 1e-10, "diagonal renyi");
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(order);
      tally.close(quantum_f_divergence(rho, sigma, spec).value(),
                  f_divergence(p, q, spec).value(), 1e-10, "diagonal f-divergence");
    }
  }
  long redraws = 0;
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + static_cast<int>(rng.next_below(3));
    const DensityOperator rho = sample_density(d, d, rng);
    DensityOperator sigma = sample_density(d, d, rng);
    // the eps schedule (2^{-4}..2^{-40}) resolves min spec(B) down to ~1e-4;
    // draws below that are full rank in name only at this resolution
    while (eigendecompose(sigma).eigenvalues().back() < 1e-3) {
      sigma = sample_density(d, d, rng);
      ++redraws;
    }
    for (double al : alphas) {
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(al));
      const double direct = quantum_f_divergence(PositiveOperator(rho.matrix()),
                                                 PositiveOperator(sigma.matrix()), spec)
                                .finite_value();
      const double lim = quantum_f_divergence_limit(PositiveOperator(rho.matrix()),
                                                    PositiveOperator(sigma.matrix()), spec)
                             .finite_value();
      // the limit's own stabilization rule is 1e-8 (1+|value|)-scaled
      tally.close(lim, direct, 1e-8 * (1.0 + std::fabs(direct)), "eps-limit vs direct");
    }
    for (double al : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(al));
      tally.ge(quantum_f_divergence(PositiveOperator(rho.matrix()),
                                    PositiveOperator(sigma.matrix()), spec)
                   .finite_value(),
               theorem1_classical_floor(PositiveOperator(rho.matrix()),
                                        PositiveOperator(sigma.matrix()), spec)
                   .finite_value(),
               1e-9, "two-point classical floor");
    }
  }
  pass = tally.violations == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "f-divergence consistency: 1000 diagonal pairs (1e-10), 1000 full-rank eps-limit "
                "agreements (%ld near-singular redraws), two-point floor over alpha in (0,1): "
                "%ld checks, %ld violations",
                redraws, tally.checks, tally.violations);
  return buf;
}

// --- criterion 8: monotonicity under pinching -------------------------------

std::string criterion8(bool& pass) {
  Tally tally;
  for (int d : {2, 4, 8}) {
    SplitMix64 rng(substream_seed(acceptance_seed(), "criterion8", static_cast<uint64_t>(d)));
    for (int i = 0; i < 5000; ++i) {
      const DensityOperator rho = sample_density(d, d, rng);
      const DensityOperator sigma = sample_density(d, d, rng);
      const PinchingBasis basis = PinchingBasis::from_difference(rho, sigma);
      const PositiveOperator pr(pinching_map(rho, basis).matrix());
      const PositiveOperator ps(pinching_map(sigma, basis).matrix());
      for (double al : {0.3, 0.5, 0.7}) {
        const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(al));
        tally.le(quantum_f_divergence(pr, ps, spec).finite_value(),
                 quantum_f_divergence(PositiveOperator(rho.matrix()),
                                      PositiveOperator(sigma.matrix()), spec)
                     .finite_value(),
                 1e-9, "pinching monotonicity");
      }
    }
  }
  pass = tally.violations == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Pinching monotonicity: 5000 pairs per d={2,4,8}, alpha={.3,.5,.7}: %ld checks, "
                "%ld violations, min slack %.3g",
                tally.checks, tally.violations, tally.min_slack);
  return buf;
}

// --- criterion 9: structural identities -------------------------------------

std::string criterion9(bool& pass) {
  Tally tally;
  SplitMix64 rng(substream_seed(acceptance_seed(), "criterion9", 0));
  const std::vector<double> alphas{0.3, 0.7, 1.5, 2.0, 3.0};
  for (int i = 0; i < 2000; ++i) {
    const int n = 2 + static_cast<int>(rng.next_below(4));
    const WeightSet a = sample_weights(n, rng);
    const WeightSet b = sample_weights(n, rng);
    const WeightSet c = sample_weights(n, rng);
    for (double al : alphas) {
      const Order order(al);
      const double h = tsallis_rel_entropy(a, b, order).finite_value();
      for (double lambda : {0.5, 2.0, 7.3}) {
        std::vector<double> sa(a.weights()), sb(b.weights());
        for (double& x : sa) x *= lambda;
        for (double& x : sb) x *= lambda;
        tally.close(tsallis_rel_entropy(WeightSet(sa), WeightSet(sb), order).finite_value(),
                    lambda * h, 1e-10, "homogeneity");
      }
      std::vector<double> ac(a.weights()), bc(b.weights());
      for (int k = 0; k < n; ++k) {
        ac[static_cast<size_t>(k)] += c[k];
        bc[static_cast<size_t>(k)] += c[k];
      }
      tally.le(tsallis_rel_entropy(WeightSet(ac), WeightSet(bc), order).finite_value(), h, 1e-10,
               "shift bound");
      const WeightSet a2 = sample_weights(n, rng);
      const WeightSet b2 = sample_weights(n, rng);
      const double h2 = tsallis_rel_entropy(a2, b2, order).finite_value();
      for (double th : {0.25, 0.5, 0.75}) {
        std::vector<double> am(static_cast<size_t>(n)), bm(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
          am[static_cast<size_t>(k)] = th * a[k] + (1.0 - th) * a2[k];
          bm[static_cast<size_t>(k)] = th * b[k] + (1.0 - th) * b2[k];
        }
        tally.le(tsallis_rel_entropy(WeightSet(am), WeightSet(bm), order).finite_value(),
                 th * h + (1.0 - th) * h2, 1e-10, "joint convexity");
      }
    }
    // Tsallis-Renyi order relation on normalized pairs, classical and quantum
    const Distribution p = sample_distribution(3, rng, 0.02);
    const Distribution q = sample_distribution(3, rng, 0.02);
    const DensityOperator rho = sample_density(3, 3, rng);
    const DensityOperator sigma = sample_density(3, 3, rng);
    for (double al : alphas) {
      const Order order(al);
      tally.close((al - 1.0) * renyi_rel_entropy(p, q, order).finite_value(),
                  std::log1p((al - 1.0) * tsallis_rel_entropy(p, q, order).finite_value()), 1e-10,
                  "order relation classical");
      tally.close((al - 1.0) * quantum_renyi_rel_entropy(rho, sigma, order).finite_value(),
                  std::log1p((al - 1.0) *
                             quantum_tsallis_rel_entropy(rho, sigma, order).finite_value()),
                  1e-10, "order relation quantum");
    }
  }
  // alpha -> 1 convergence: error shrinks by >= 10x per decade (asserted at
  // 9.9 to absorb the O(eps^2) Taylor wiggle of the exact ratio)
  for (uint64_t s = 0; s < 10; ++s) {
    const ScanTable t = alpha_limit_scan(4, substream_seed(acceptance_seed(), "c9-limit", s), 2, 6);
    for (size_t i = 0; i + 1 < t.rows.size(); ++i)
      for (size_t col : {2, 3, 4})
        tally.ge(t.rows[i][col] / t.rows[i + 1][col], 9.9, 0.0, "alpha->1 decade ratio");
  }
  // maximal coupling exactness
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng.next_below(6));
    const Distribution p = sample_distribution(n, rng);
    const Distribution q = sample_distribution(n, rng);
    const JointDistribution j = maximal_coupling(p, q);
    const Distribution mx = j.marginal_x();
    const Distribution my = j.marginal_y();
    double err = 0.0;
    for (int k = 0; k < n; ++k)
      err = std::max({err, std::fabs(mx[k] - p[k]), std::fabs(my[k] - q[k])});
    tally.le(err, 0.0, 1e-14, "coupling marginals");
    tally.close(error_probability(j), trace_distance(p, q), 1e-12, "coupling P_e = D");
  }
  pass = tally.violations == 0;
  char buf[300];
  std::snprintf(buf, sizeof buf,
                "Structural identities: homogeneity/joint convexity/shift/order-relation at 1e-10, "
                "alpha->1 decade ratios >= 9.9, coupling exact at 1e-14/1e-12: %ld checks, %ld "
                "violations",
                tally.checks, tally.violations);
  return buf;
}

// --- criterion 10: mutation sensitivity -------------------------------------

std::string criterion10(bool& pass) {
  SamplerConfig cfg;
  cfg.seed = acceptance_seed();
  cfg.trials_per_cell = 6;
  const SuiteSummary clean = run_property_suite(cfg, Mutation::none);
  long mutants_detected = 0;
  std::string detail;
  for (Mutation m : {Mutation::kappa_equals_three, Mutation::series_coeff_corrupt,
                     Mutation::thm3_branch_swap}) {
    const SuiteSummary s = run_property_suite(cfg, m);
    if (!s.clean()) ++mutants_detected;
    detail += std::string(" ") + mutation_name(m) + "=" + std::to_string(s.violations.size());
  }
  pass = clean.clean() && mutants_detected == 3;
  char buf[300];
  std::snprintf(buf, sizeof buf,
                "Mutation sensitivity: clean run has %ld violations; corrupted-run violation "
                "counts:%s (%ld/3 mutants detected)",
                static_cast<long>(clean.violations.size()), detail.c_str(), mutants_detected);
  return buf;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::function<std::string(bool&)> run;
  };
  const std::vector<Entry> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    bool pass = false;
    std::string detail;
    try {
      detail = c.run(pass);
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", c.id, detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 10 acceptance criteria passed\n");
  return failures;
}
