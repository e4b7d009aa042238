#include <gtest/gtest.h>

#include "onerel/presentation.hpp"
#include "onerel/report.hpp"

using namespace onerel;

namespace {

const char* kCommutator = "generators x: 2\ngenerators y: 1\nrelator: [x1,x2] = y1\ne: 3\n";
const char* kSquare = "generators x: 1\ngenerators y: 1\nrelator: x1^2 = y1\n";
const char* kTriple = "generators x: 2\ngenerators y: 1\nrelator: [[x1,x2],x1] = y1\ne: 4\n";

RunConfig small_config() {
  RunConfig c;
  c.primes = {2, 3, 5};
  c.samples = 50;
  return c;
}

bool has_json_integer(const Json& j) {
  if (j.is_number()) return true;
  if (j.is_structured())
    for (const auto& el : j)
      if (has_json_integer(el)) return true;
  return false;
}

}  // namespace

TEST(RunReport, AcceptedPipelinePasses) {
  auto c = small_config();
  c.max_degree = 8;
  auto r = run_report(c, parse_presentation(kCommutator));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.json["gate"]["outcome"], "accepted");
  EXPECT_EQ(r.json["torsion"]["verdict"], "torsion-free up to degree 8");
  EXPECT_TRUE(r.json["hilbert"]["all_match"].get<bool>());
  EXPECT_TRUE(r.json["modp"]["all_match"].get<bool>());
  EXPECT_EQ(r.json["meta"]["exit_code"], "0");
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.json.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"presentation", "gate", "torsion", "hilbert", "modp", "lemma2", "magnus_e1",
                                            "meta"}));
}

TEST(RunReport, GateRejectionSkipsDownstream) {
  auto r = run_report(small_config(), parse_presentation(kSquare));
  EXPECT_EQ(r.exit_code, kExitGateRejected);
  EXPECT_EQ(r.json["gate"]["content"], "2");
  EXPECT_EQ(r.json["torsion"]["status"], "skipped");
}

TEST(RunReport, ForcedDownstreamIsMarked) {
  auto c = small_config();
  c.force_downstream = true;
  c.max_degree = 3;
  auto r = run_report(c, parse_presentation(kSquare));
  EXPECT_EQ(r.exit_code, kExitGateRejected);
  EXPECT_EQ(r.json["torsion"]["status"], "hypotheses not met");
  EXPECT_FALSE(r.json["torsion"]["torsion_free"].get<bool>());
  EXPECT_EQ(r.json["torsion"]["first_torsion_degree"], "1");
}

TEST(RunReport, CutoffBelowDegreeIsInconclusive) {
  auto c = small_config();
  c.max_degree = 2;
  auto r = run_report(c, parse_presentation(kTriple));
  EXPECT_EQ(r.exit_code, kExitInconclusive);
  EXPECT_EQ(r.json["gate"]["outcome"], "inconclusive");
}

TEST(RunReport, BudgetIsInconclusive) {
  auto c = small_config();
  c.max_degree = 6;
  c.budget = Budget{2, 100};
  auto r = run_report(c, parse_presentation(kCommutator));
  EXPECT_EQ(r.exit_code, kExitInconclusive);
  EXPECT_FALSE(r.json["torsion"]["complete"].get<bool>());
}

TEST(RunReport, DeterministicAndRoundTrips) {
  auto c = small_config();
  c.max_degree = 6;
  c.seed = 42;
  const auto pres = parse_presentation(kTriple);
  const auto a = emit_report(run_report(c, pres).json), b = emit_report(run_report(c, pres).json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(emit_report(read_report(a)), a);
  EXPECT_FALSE(has_json_integer(read_report(a)));
  EXPECT_EQ(a.back(), '\n');
}

TEST(RunReport, CheckSelection) {
  auto c = small_config();
  c.max_degree = 5;
  c.checks = parse_checks({"gate", "hilbert"});
  auto r = run_report(c, parse_presentation(kCommutator));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.json["lemma2"]["status"], "not selected");
  EXPECT_EQ(r.json["hilbert"]["verdict"], "match");
  EXPECT_EQ(parse_checks({"all"}).size(), 6u);
  EXPECT_THROW(parse_checks({"everything"}), std::invalid_argument);
}

TEST(RunConfig, Validation) {
  RunConfig c;
  c.primes = {2, 4};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.max_degree = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.samples = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.input_path = "/nonexistent/file.pres";
  EXPECT_THROW(run_report(c), std::runtime_error);
}
