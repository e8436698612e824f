/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "entlab/io.hpp"
#include "entlab/oracle.hpp"
#include "entlab/quantum.hpp"
#include "entlab/samplers.hpp"

using namespace entlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

uint64_t default_seed() {
  if (const char* env = std::getenv("ENTROPY_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw parse_error("ENTROPY_LAB_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

const Distribution& as_distribution(const LoadedInput& in, const std::string& path) {
  if (const auto* p = std::get_if<Distribution>(&in)) return *p;
  throw parse_error(path + ": expected a probability distribution");
}

const JointDistribution& as_joint(const LoadedInput& in, const std::string& path) {
  if (const auto* p = std::get_if<JointDistribution>(&in)) return *p;
  throw parse_error(path + ": expected a joint distribution");
}

const HermitianOperator& as_operator(const LoadedInput& in, const std::string& path) {
  if (const auto* p = std::get_if<HermitianOperator>(&in)) return *p;
  throw parse_error(path + ": expected an operator");
}

bool is_operator(const LoadedInput& in) { return std::holds_alternative<HermitianOperator>(in); }

DensityOperator to_density(const HermitianOperator& x, const std::string& path) {
  try {
    return DensityOperator(x.matrix());
  } catch (const std::domain_error& e) {
    throw parse_error(path + ": not a density operator: " + e.what());
  }
}

// ------------------------------------------------------------ compute ------

ExtendedValue compute_quantity(const std::string& quantity, const std::vector<std::string>& files,
                               double alpha) {
  const auto need = [&](size_t n) {
    if (files.size() != n)
      throw parse_error("quantity '" + quantity + "' needs " + std::to_string(n) + " input file(s)");
  };
  const auto load2 = [&] {
    need(2);
    return std::pair<LoadedInput, LoadedInput>(load_input(files[0]), load_input(files[1]));
  };

  if (quantity == "trace-distance") {
    const auto [a, b] = load2();
    if (is_operator(a) && is_operator(b))
      return trace_distance(as_operator(a, files[0]), as_operator(b, files[1]));
    return trace_distance(as_distribution(a, files[0]), as_distribution(b, files[1]));
  }
  if (quantity == "tsallis-entropy" || quantity == "renyi-entropy") {
    need(1);
    const Order order(alpha);
    const LoadedInput in = load_input(files[0]);
    const bool renyi = quantity == "renyi-entropy";
    if (is_operator(in)) {
      const DensityOperator rho = to_density(as_operator(in, files[0]), files[0]);
      return renyi ? quantum_renyi_entropy(rho, order) : quantum_tsallis_entropy(rho, order);
    }
    const Distribution& p = as_distribution(in, files[0]);
    return renyi ? renyi_entropy(p, order) : tsallis_entropy(p, order);
  }
  if (quantity == "rel-entropy") {
    const auto [a, b] = load2();
    if (is_operator(a) && is_operator(b))
      return quantum_relative_entropy(PositiveOperator(as_operator(a, files[0])),
                                      PositiveOperator(as_operator(b, files[1])));
    return kl_divergence(WeightSet(as_distribution(a, files[0]).probs()),
                         WeightSet(as_distribution(b, files[1]).probs()));
  }
  if (quantity == "tsallis-rel" || quantity == "renyi-rel") {
    const auto [a, b] = load2();
    const Order order(alpha);
    const bool renyi = quantity == "renyi-rel";
    if (is_operator(a) && is_operator(b)) {
      if (renyi)
        return quantum_renyi_rel_entropy(to_density(as_operator(a, files[0]), files[0]),
                                         to_density(as_operator(b, files[1]), files[1]), order);
      return quantum_tsallis_rel_entropy(PositiveOperator(as_operator(a, files[0])),
                                         PositiveOperator(as_operator(b, files[1])), order);
    }
    const Distribution& p = as_distribution(a, files[0]);
    const Distribution& q = as_distribution(b, files[1]);
    return renyi ? renyi_rel_entropy(p, q, order) : tsallis_rel_entropy(p, q, order);
  }
  if (quantity == "f-div-alpha") {
    const auto [a, b] = load2();
    const FDivergenceSpec spec = FDivergenceSpec::f_alpha(Order(alpha));
    if (is_operator(a) && is_operator(b)) {
      const PositiveOperator pa(as_operator(a, files[0]));
      const PositiveOperator pb(as_operator(b, files[1]));
      try {
        return quantum_f_divergence(pa, pb, spec);
      } catch (const kernel_precondition_error&) {
        return quantum_f_divergence_limit(pa, pb, spec);
      }
    }
    return f_divergence(as_distribution(a, files[0]), as_distribution(b, files[1]), spec);
  }
  if (quantity == "joint-tsallis" || quantity == "conditional-tsallis" ||
      quantity == "error-probability") {
    need(1);
    const JointDistribution j = as_joint(load_input(files[0]), files[0]);
    if (quantity == "error-probability") return error_probability(j);
    const Order order(alpha);
    return quantity == "joint-tsallis" ? joint_tsallis_entropy(j, order)
                                       : conditional_tsallis_entropy(j, order);
  }
  if (quantity == "min-probability") {
    const auto [a, b] = load2();
    return minimal_probability(as_distribution(a, files[0]),
                               WeightSet(as_distribution(b, files[1]).probs()));
  }
  throw parse_error("unknown quantity: " + quantity);
}

// -------------------------------------------------------------- check ------

struct CheckInputs {
  std::vector<std::string> files;
  double alpha = 0.5;
  int terms = 10;
  std::optional<double> tau;
  std::optional<int> dim;
  double tolerance = 1e-9;
};

BoundReport run_check(const std::string& bound_id, const CheckInputs& in) {
  const Order order(in.alpha);
  const auto load_pair = [&] {
    if (in.files.size() != 2) throw parse_error("check '" + bound_id + "' needs two input files");
    return std::pair<LoadedInput, LoadedInput>(load_input(in.files[0]), load_input(in.files[1]));
  };

  if (bound_id == "pinsker" || bound_id == "pinsker-series" || bound_id == "renyi-pinsker") {
    const auto [a, b] = load_pair();
    double theta = 1.0, tau = 0.0;
    ExtendedValue measured;
    bool equal_traces = true;
    if (is_operator(a) && is_operator(b)) {
      const PositiveOperator pa(as_operator(a, in.files[0]));
      const PositiveOperator pb(as_operator(b, in.files[1]));
      theta = pa.trace();
      equal_traces = std::fabs(pa.trace() - pb.trace()) <= 1e-9;
      tau = trace_distance(pa, pb);
      if (bound_id == "renyi-pinsker")
        measured = quantum_renyi_rel_entropy(to_density(as_operator(a, in.files[0]), in.files[0]),
                                             to_density(as_operator(b, in.files[1]), in.files[1]),
                                             order);
      else
        measured = quantum_tsallis_rel_entropy(pa, pb, order);
    } else {
      const Distribution& p = as_distribution(a, in.files[0]);
      const Distribution& q = as_distribution(b, in.files[1]);
      tau = trace_distance(p, q);
      measured = bound_id == "renyi-pinsker" ? renyi_rel_entropy(p, q, order)
                                             : tsallis_rel_entropy(p, q, order);
    }
    const bool in_domain = order.alpha < 1.0 && !order.near_one && equal_traces;
    ExtendedValue bound = 0.0;
    if (in_domain) {
      if (bound_id == "pinsker")
        bound = pinsker_lower_bound(theta, tau, order);
      else if (bound_id == "pinsker-series")
        bound = pinsker_series_bound(theta, tau, order, in.terms);
      else
        bound = renyi_pinsker_bound(tau / theta, order);
    }
    return make_bound_report(measured, bound, BoundDirection::lower, in_domain, in.tolerance);
  }

  if (bound_id == "thm3-upper") {
    const auto [a, b] = load_pair();
    const Distribution& p = as_distribution(a, in.files[0]);
    const Distribution& q = as_distribution(b, in.files[1]);
    const double q0 = minimal_probability(q, WeightSet(p.probs()));
    const double tau = trace_distance(p, q);
    const ExtendedValue measured = tsallis_rel_entropy(p, q, order);
    const bool in_domain = order.alpha > 1.0 && q0 > 0.0;
    const ExtendedValue bound = in_domain ? upper_bound_thm3(q0, tau, order) : ExtendedValue(0.0);
    return make_bound_report(measured, bound, BoundDirection::upper, in_domain, in.tolerance);
  }

  if (bound_id == "fano") {
    if (in.files.size() != 1) throw parse_error("check fano needs one joint-distribution file");
    const JointDistribution j = as_joint(load_input(in.files[0]), in.files[0]);
    const double measured = conditional_tsallis_entropy(j, order);
    const bool in_domain = j.size() >= 2;
    const ExtendedValue bound =
        in_domain ? ExtendedValue(fano_bound(error_probability(j), j.size(), order))
                  : ExtendedValue(0.0);
    return make_bound_report(measured, bound, BoundDirection::upper, in_domain, in.tolerance);
  }

  if (bound_id == "fannes" || bound_id == "yanagi") {
    double tau = 0.0, measured = 0.0;
    int d = 0;
    if (!in.files.empty()) {
      const auto [a, b] = load_pair();
      const DensityOperator rho = to_density(as_operator(a, in.files[0]), in.files[0]);
      const DensityOperator sigma = to_density(as_operator(b, in.files[1]), in.files[1]);
      if (rho.dim() != sigma.dim()) throw shape_error("check: dimension mismatch");
      d = rho.dim();
      tau = trace_distance(rho, sigma);
      measured = std::fabs(quantum_tsallis_entropy(rho, order) - quantum_tsallis_entropy(sigma, order));
    } else {
      if (!in.tau || !in.dim) throw parse_error("check " + bound_id + " needs two states or --tau and --dim");
      tau = *in.tau;
      d = *in.dim;
    }
    if (bound_id == "yanagi") {
      bool in_domain = order.alpha < 1.0 && !order.near_one && d >= 2 && tau >= 0.0;
      std::optional<double> bound;
      if (in_domain) {
        bound = yanagi_comparison_bound(tau, d, order);
        in_domain = bound.has_value();
      }
      return make_bound_report(measured, in_domain ? ExtendedValue(*bound) : ExtendedValue(0.0),
                               BoundDirection::upper, in_domain, in.tolerance);
    }
    const bool alpha_high = order.alpha >= 1.0 || order.near_one;
    const bool in_domain =
        d >= 2 && tau >= 0.0 &&
        (alpha_high ? tau <= static_cast<double>(d) / (d + 1) : tau <= 1.0);
    const ExtendedValue bound =
        in_domain ? ExtendedValue(fannes_bound(tau, d, order)) : ExtendedValue(0.0);
    return make_bound_report(measured, bound, BoundDirection::upper, in_domain, in.tolerance);
  }

  throw parse_error("unknown bound id: " + bound_id);
}

void print_report(const BoundReport& r) {
  std::cout << "measured = " << format_extended(r.measured) << "\n";
  std::cout << "bound = " << (r.in_domain ? format_extended(r.bound) : "n/a") << "\n";
  std::cout << "slack = " << (r.in_domain ? format_extended(r.slack()) : "n/a") << "\n";
  std::cout << "direction = " << (r.direction == BoundDirection::lower ? "lower" : "upper") << "\n";
  std::cout << "in_domain = " << (r.in_domain ? "true" : "false") << "\n";
  std::cout << "verdict = " << r.verdict() << "\n";
}

std::vector<double> make_tau_grid(double lo, double hi, int steps, bool log_scale) {
  std::vector<double> grid;
  if (steps <= 0) return grid;
  if (steps == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (int i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / (steps - 1);
    grid.push_back(log_scale ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-lab: Tsallis/Renyi divergences and their continuity bounds"};
  app.require_subcommand(1);

  // compute
  std::string quantity;
  std::vector<std::string> files;
  double alpha = 2.0;
  auto* compute = app.add_subcommand("compute", "evaluate a single quantity");
  compute->add_option("quantity", quantity,
                      "one of: trace-distance, tsallis-entropy, renyi-entropy, rel-entropy, "
                      "tsallis-rel, renyi-rel, f-div-alpha, joint-tsallis, conditional-tsallis, "
                      "error-probability, min-probability")
      ->required();
  compute->add_option("inputs", files, "input files (distribution/joint CSV or JSON, operator JSON)");
  compute->add_option("--alpha", alpha, "entropic order");

  // check
  std::string bound_id;
  CheckInputs check_in;
  auto* check = app.add_subcommand("check", "evaluate a bound against measured inputs");
  check->add_option("bound", bound_id,
                    "one of: pinsker, pinsker-series, renyi-pinsker, thm3-upper, fano, fannes, yanagi")
      ->required();
  check->add_option("inputs", check_in.files, "input files");
  check->add_option("--alpha", check_in.alpha, "entropic order");
  check->add_option("--terms", check_in.terms, "series terms (pinsker-series)");
  double tau_flag = -1.0;
  int dim_flag = -1;
  auto* tau_opt = check->add_option("--tau", tau_flag, "trace distance (fannes/yanagi without states)");
  auto* dim_opt = check->add_option("--dim", dim_flag, "Hilbert space dimension");
  check->add_option("--tolerance", check_in.tolerance, "slack tolerance");

  // fuzz
  std::string config_path, out_path, json_out;
  uint64_t seed_flag = 0;
  int trials_flag = -1;
  std::string mutation_flag = "none";
  auto* fuzz = app.add_subcommand("fuzz", "run the randomized property suite");
  fuzz->add_option("--config", config_path, "key/value config file (seed, dims, alphas, trials, tolerance)");
  auto* seed_opt = fuzz->add_option("--seed", seed_flag, "override the seed");
  auto* trials_opt = fuzz->add_option("--trials", trials_flag, "override trials per property");
  fuzz->add_option("--out", out_path, "write violations CSV here");
  fuzz->add_option("--json", json_out, "write the full summary as JSON here");
  fuzz->add_option("--mutation", mutation_flag,
                   "inject a corruption: none, kappa-equals-three, series-coeff-corrupt, thm3-branch-swap");

  // scan
  std::string scan_id;
  int scan_dim = 2, scan_steps = 30, scan_n = 4;
  double scan_alpha = 0.5, tau_min = 1e-6, tau_max = 0.125;
  uint64_t scan_seed = 0;
  std::string scan_out;
  bool lin_scale = false;
  auto* scan = app.add_subcommand("scan", "emit a CSV table over a parameter grid");
  scan->add_option("scan-id", scan_id, "one of: fannes-comparison, alpha-limit, pinsker-tightness")
      ->required();
  scan->add_option("--dim", scan_dim, "Hilbert space dimension");
  scan->add_option("--alpha", scan_alpha, "entropic order");
  scan->add_option("--tau-min", tau_min, "grid start");
  scan->add_option("--tau-max", tau_max, "grid end");
  scan->add_option("--steps", scan_steps, "grid size (0 gives a header-only table)");
  scan->add_flag("--linear", lin_scale, "linear instead of logarithmic grid");
  scan->add_option("--n", scan_n, "alphabet size (alpha-limit)");
  auto* scan_seed_opt = scan->add_option("--seed", scan_seed, "seed (alpha-limit)");
  scan->add_option("--out", scan_out, "write CSV here instead of stdout");

  // oracle
  double o_q0 = 0.25, o_tau = 0.2, o_alpha = 2.0;
  int o_n = 4, o_grid = 40;
  auto* oracle = app.add_subcommand("oracle", "brute-force check of the minimal-probability upper bound");
  std::string oracle_kind;
  oracle->add_option("kind", oracle_kind, "thm3")->required();
  oracle->add_option("--q0", o_q0, "minimal probability")->required();
  oracle->add_option("--tau", o_tau, "trace distance")->required();
  oracle->add_option("--alpha", o_alpha, "entropic order (> 1)")->required();
  oracle->add_option("--n", o_n, "alphabet size (<= 6)");
  oracle->add_option("--grid", o_grid, "simplex grid steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (compute->parsed()) {
      std::cout << format_extended(compute_quantity(quantity, files, alpha)) << "\n";
      return kExitOk;
    }
    if (check->parsed()) {
      if (*tau_opt) check_in.tau = tau_flag;
      if (*dim_opt) check_in.dim = dim_flag;
      const BoundReport report = run_check(bound_id, check_in);
      print_report(report);
      return report.in_domain && !report.satisfied() ? kExitViolated : kExitOk;
    }
    if (fuzz->parsed()) {
      SamplerConfig cfg;
      bool seed_from_file = false;
      if (!config_path.empty()) cfg = load_config(config_path, &seed_from_file);
      if (!seed_from_file) cfg.seed = default_seed();
      if (*seed_opt) cfg.seed = seed_flag;
      if (*trials_opt) cfg.trials_per_cell = trials_flag;
      try {
        cfg.validate();
      } catch (const std::domain_error& e) {
        throw parse_error(std::string("invalid config: ") + e.what());
      }
      Mutation mutation = Mutation::none;
      if (mutation_flag == "kappa-equals-three") mutation = Mutation::kappa_equals_three;
      else if (mutation_flag == "series-coeff-corrupt") mutation = Mutation::series_coeff_corrupt;
      else if (mutation_flag == "thm3-branch-swap") mutation = Mutation::thm3_branch_swap;
      else if (mutation_flag != "none") throw parse_error("unknown mutation: " + mutation_flag);
      const SuiteSummary summary = run_property_suite(cfg, mutation);
      std::cout << summary.render_text();
      if (!out_path.empty()) write_file(out_path, violations_to_csv(summary.violations));
      if (!json_out.empty()) write_file(json_out, summary_to_json(summary));
      return summary.clean() ? kExitOk : kExitViolated;
    }
    if (scan->parsed()) {
      ScanTable table;
      if (scan_id == "fannes-comparison") {
        table = fannes_comparison_scan(scan_dim, scan_alpha,
                                       make_tau_grid(tau_min, tau_max, scan_steps, !lin_scale));
      } else if (scan_id == "alpha-limit") {
        table = alpha_limit_scan(scan_n, *scan_seed_opt ? scan_seed : default_seed());
      } else if (scan_id == "pinsker-tightness") {
        table = pinsker_tightness_scan(scan_alpha,
                                       make_tau_grid(tau_min, tau_max, scan_steps, !lin_scale));
      } else {
        throw parse_error("unknown scan id: " + scan_id);
      }
      const std::string csv = scan_table_to_csv(table);
      if (scan_out.empty())
        std::cout << csv;
      else
        write_file(scan_out, csv);
      return kExitOk;
    }
    if (oracle->parsed()) {
      if (oracle_kind != "thm3") throw parse_error("unknown oracle kind: " + oracle_kind);
      const double grid_max = brute_force_thm3_oracle(o_q0, o_tau, o_alpha, o_n, o_grid);
      const double closed = upper_bound_thm3(o_q0, o_tau, Order(o_alpha)).finite_value();
      std::cout << "oracle = " << format_double(grid_max) << "\n";
      std::cout << "closed_form = " << format_double(closed) << "\n";
      std::cout << "gap = " << format_double(closed - grid_max) << "\n";
      return kExitOk;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const shape_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
