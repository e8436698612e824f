/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "entlab/bounds.hpp"
#include "entlab/rng.hpp"

namespace entlab {

constexpr uint64_t kDefaultSeed = 12345;

struct SamplerConfig {
  uint64_t seed = kDefaultSeed;
  std::vector<int> dims{2, 3, 4};
  std::vector<double> alphas{0.3, 0.5, 0.7, 1.5, 2.0};
  int trials_per_cell = 24;
  double tolerance = 1e-9;

  void validate() const;
};

struct ViolationRecord {
  std::string property_id;
  std::string inputs;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;
};

struct PropertyResult {
  std::string id;
  long checks = 0;
  long violations = 0;
  double min_slack = 0.0;  // tightness indicator: minimum over all checks
};

/// Deliberate corruptions for mutation testing; each must surface at least
/// one violation in the default suite (guards against vacuous passes).
enum class Mutation { none, kappa_equals_three, series_coeff_corrupt, thm3_branch_swap };

const char* mutation_name(Mutation m);
const BoundKernels& kernels_for(Mutation m);

struct SuiteSummary {
  SamplerConfig config;
  Mutation mutation = Mutation::none;
  std::vector<PropertyResult> results;
  std::vector<ViolationRecord> violations;

  long total_checks() const;
  bool clean() const { return violations.empty(); }
  std::string render_text() const;
};

/// Per-trial context handed to each property: a substream RNG plus the
/// violation sink.  A check records slack and flags slack < -tol.
class PropertyContext {
 public:
  PropertyContext(const SamplerConfig& cfg, const BoundKernels& kernels, SplitMix64 rng, long trial);

  SplitMix64& rng() { return rng_; }
  const SamplerConfig& config() const { return *cfg_; }
  const BoundKernels& kernels() const { return *kernels_; }
  long trial() const { return trial_; }

  void set_label(std::string label) { label_ = std::move(label); }

  /// Violation iff slack < -tol (or slack is NaN).
  void check(double slack, double tol, double measured, double bound, const std::string& what);
  /// value >= floor - tol.
  void check_ge(double value, double floor, double tol, const std::string& what);
  /// value <= cap + tol.
  void check_le(double value, double cap, double tol, const std::string& what);
  /// |a - b| <= tol.
  void check_close(double a, double b, double tol, const std::string& what);
  /// Extended values: both infinite counts as equal.
  void check_close(ExtendedValue a, ExtendedValue b, double tol, const std::string& what);

  long checks_run = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::vector<ViolationRecord>* sink = nullptr;
  std::string property_id;

 private:
  const SamplerConfig* cfg_;
  const BoundKernels* kernels_;
  SplitMix64 rng_;
  long trial_;
  std::string label_;
};

struct PropertySpec {
  std::string id;
  std::vector<std::string> covers;  // op ids exercised by this property
  std::function<void(PropertyContext&)> run;
};

/// All registered properties, in fixed registration order.
const std::vector<PropertySpec>& property_registry();

/// Canonical op catalog of the core modules; the registry audit asserts the
/// registered properties cover it completely.
const std::vector<std::string>& covered_op_catalog();

SuiteSummary run_property_suite(const SamplerConfig& cfg, Mutation mutation = Mutation::none);

}  // namespace entlab
