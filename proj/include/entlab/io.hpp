/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <string>
#include <variant>

#include "entlab/operator_core.hpp"
#include "entlab/properties.hpp"
#include "entlab/scans.hpp"

namespace entlab {

/// Malformed input files or config; maps to CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal (<= 17 significant digits); "+inf" for the
/// infinite value.
std::string format_double(double v);
std::string format_extended(ExtendedValue v);

/// Any of the three input kinds the CLI accepts.
using LoadedInput = std::variant<Distribution, JointDistribution, HermitianOperator>;

/// Sniffs the payload: a JSON object with "probs" / "joint" / "re" keys, or
/// CSV (one row = distribution, a square block of rows = joint).
LoadedInput parse_input(const std::string& text);
LoadedInput load_input(const std::string& path);

Distribution parse_distribution(const std::string& text);
JointDistribution parse_joint(const std::string& text);
HermitianOperator parse_operator(const std::string& text);

std::string distribution_to_json(const Distribution& p);
std::string distribution_to_csv(const Distribution& p);
std::string joint_to_json(const JointDistribution& j);
std::string operator_to_json(const HermitianOperator& x);

/// Key/value config: seed, dims, alphas, trials, tolerance; lists are
/// comma-separated, '#' starts a comment, unknown keys are rejected.
/// `seed_present` reports whether the file pinned its own seed (so callers
/// can fall back to the environment default otherwise).
SamplerConfig parse_config(const std::string& text, bool* seed_present = nullptr);
SamplerConfig load_config(const std::string& path, bool* seed_present = nullptr);

std::string scan_table_to_csv(const ScanTable& t);
std::string violations_to_csv(const std::vector<ViolationRecord>& v);
std::string summary_to_csv(const SuiteSummary& s);
std::string summary_to_json(const SuiteSummary& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace entlab
