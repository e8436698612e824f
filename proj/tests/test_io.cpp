/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <doctest.h>

#include <cstdlib>

#include "entlab/io.hpp"
#include "entlab/samplers.hpp"

using namespace entlab;

TEST_CASE("double formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 0.16000000000000003, 1e-300, 123456.789}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_extended(ExtendedValue::infinity()) == "+inf");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("distribution parsing") {
  const Distribution p = parse_distribution("0.25, 0.25, 0.5\n");
  CHECK(p.size() == 3);
  CHECK(p[2] == 0.5);
  const Distribution j = parse_distribution(R"({"alphabet": 2, "probs": [0.7, 0.3]})");
  CHECK(j[0] == 0.7);
  CHECK_THROWS_AS(parse_distribution(R"({"alphabet": 3, "probs": [0.7, 0.3]})"), parse_error);
  CHECK_THROWS_AS(parse_distribution("0.7, 0.7"), parse_error);
  CHECK_THROWS_AS(parse_distribution("0.5, abc"), parse_error);
  CHECK_THROWS_AS(parse_distribution(""), parse_error);
  // round trip through both encodings
  SplitMix64 rng(201);
  const Distribution r = sample_distribution(5, rng);
  const Distribution back_json = parse_distribution(distribution_to_json(r));
  const Distribution back_csv = parse_distribution(distribution_to_csv(r));
  for (int i = 0; i < 5; ++i) {
    CHECK(back_json[i] == r[i]);
    CHECK(back_csv[i] == r[i]);
  }
}

TEST_CASE("joint parsing") {
  const JointDistribution j = parse_joint("0.4, 0.1\n0.2, 0.3\n");
  CHECK(j.size() == 2);
  CHECK(j.cell(1, 0) == 0.2);
  const JointDistribution back = parse_joint(joint_to_json(j));
  CHECK(back.cell(0, 1) == j.cell(0, 1));
  CHECK_THROWS_AS(parse_joint("0.5, 0.5\n"), parse_error);  // not square
}

TEST_CASE("operator parsing") {
  SplitMix64 rng(202);
  const DensityOperator rho = sample_density(3, 3, rng);
  const HermitianOperator back = parse_operator(operator_to_json(rho));
  CHECK((back.matrix() - rho.matrix()).norm() <= 1e-15);
  CHECK_THROWS_AS(parse_operator(R"({"dim": 2, "re": [[1, 1], [0, 1]]})"), parse_error);
  CHECK_THROWS_AS(parse_operator(R"({"re": [[1]]})"), parse_error);
  // real symmetric matrix without the im block is accepted
  CHECK_NOTHROW(parse_operator(R"({"dim": 2, "re": [[0.5, 0.1], [0.1, 0.5]]})"));
}

TEST_CASE("input sniffing") {
  CHECK(std::holds_alternative<Distribution>(parse_input("0.5, 0.5")));
  CHECK(std::holds_alternative<JointDistribution>(parse_input("0.25,0.25\n0.25,0.25")));
  CHECK(std::holds_alternative<Distribution>(parse_input(R"({"probs": [1.0]})")));
  CHECK(std::holds_alternative<JointDistribution>(parse_input(R"({"joint": [[0.5,0],[0,0.5]]})")));
  CHECK(std::holds_alternative<HermitianOperator>(
      parse_input(R"({"dim": 1, "re": [[1.0]]})")));
  CHECK_THROWS_AS(parse_input(R"({"something": 1})"), parse_error);
}

TEST_CASE("config parsing") {
  const SamplerConfig cfg = parse_config(
      "# config\nseed = 99\ndims = 2, 4\nalphas = 0.5, 2\ntrials = 7\ntolerance = 1e-8\n");
  CHECK(cfg.seed == 99);
  REQUIRE(cfg.dims.size() == 2);
  CHECK(cfg.dims[1] == 4);
  CHECK(cfg.alphas[0] == 0.5);
  CHECK(cfg.trials_per_cell == 7);
  CHECK(cfg.tolerance == 1e-8);
  CHECK_THROWS_AS(parse_config("bogus = 1\n"), parse_error);
  CHECK_THROWS_AS(parse_config("trials = 0\n"), parse_error);
  CHECK_THROWS_AS(parse_config("seed 12\n"), parse_error);
  CHECK_THROWS_AS(parse_config("trials = abc\n"), parse_error);
  // defaults survive an empty config
  const SamplerConfig def = parse_config("");
  CHECK(def.seed == kDefaultSeed);
  CHECK(def.trials_per_cell == 24);
}

TEST_CASE("scan and summary serialization") {
  ScanTable t;
  t.columns = {"a", "b"};
  t.rows = {{1.0, 0.5}};
  CHECK(scan_table_to_csv(t) == "a,b\n1,0.5\n");
  SamplerConfig cfg;
  cfg.trials_per_cell = 1;
  const SuiteSummary s = run_property_suite(cfg);
  const std::string csv = summary_to_csv(s);
  CHECK(csv.find("property,checks,violations,min_slack") == 0);
  const std::string json = summary_to_json(s);
  CHECK(json.find("\"seed\"") != std::string::npos);
  CHECK(violations_to_csv(s.violations) == "property,inputs,measured,bound,slack\n");
}
