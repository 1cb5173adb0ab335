#include <gtest/gtest.h>

#include "twolen/pipeline.hpp"

namespace twolen {
namespace {

TEST(Roundtrip, SingleClauseIsSatisfiableEverywhere) {
  const CnfFormula cnf{1, {{1}}};
  const PipelineReport r = run_roundtrip(cnf);
  EXPECT_EQ(r.outcome, PipelineOutcome::kSatisfiable);
  EXPECT_EQ(r.sat_oracle.verdict, "sat");
  EXPECT_EQ(r.aux_oracle.verdict, "feasible");
  EXPECT_EQ(r.stacked_solver.verdict, "feasible");
  EXPECT_EQ(r.witness_mapping.verdict, "ok");
  EXPECT_EQ(r.model_encoding.verdict, "ok");
  ASSERT_TRUE(r.decoded.has_value());
  EXPECT_TRUE(satisfies(cnf, *r.decoded));
  EXPECT_TRUE(r.disagreements.empty());
  EXPECT_EQ(r.pairs, 4U);
  EXPECT_EQ(r.stacked_tasks, r.aux_tasks - 2 * r.pairs + 5 * r.pairs);
}

TEST(Roundtrip, ContradictionIsUnsatisfiableEverywhere) {
  const PipelineReport r = run_roundtrip({1, {{1}, {-1}}});
  EXPECT_EQ(r.outcome, PipelineOutcome::kUnsatisfiable);
  EXPECT_EQ(r.sat_oracle.verdict, "unsat");
  EXPECT_EQ(r.aux_oracle.verdict, "infeasible");
  EXPECT_EQ(r.stacked_solver.verdict, "infeasible");
  EXPECT_FALSE(r.witness_mapping.ran());
  EXPECT_FALSE(r.model_encoding.ran());
  EXPECT_FALSE(r.decoded.has_value());
}

TEST(Roundtrip, EmptyFormulaIsSatisfiable) {
  const PipelineReport r = run_roundtrip({2, {}});
  EXPECT_EQ(r.outcome, PipelineOutcome::kSatisfiable);
  EXPECT_EQ(r.pairs, 2U);
}

TEST(Roundtrip, SkippedStagesAreMarked) {
  RoundtripOptions options;
  options.skip_aux_oracle = true;
  const PipelineReport r = run_roundtrip({1, {{1}}}, options);
  EXPECT_EQ(r.aux_oracle.verdict, "skipped");
  EXPECT_FALSE(r.aux_oracle.note.empty());
  EXPECT_EQ(r.outcome, PipelineOutcome::kSatisfiable);
}

TEST(Roundtrip, BudgetExhaustionIsItsOwnOutcome) {
  RoundtripOptions options;
  options.skip_aux_oracle = true;
  options.budget.max_nodes = 3;
  const PipelineReport r = run_roundtrip({2, {{1}, {-1}}}, options);
  EXPECT_EQ(r.outcome, PipelineOutcome::kBudgetExhausted);
  EXPECT_EQ(r.stacked_solver.verdict, "budget_exhausted");
  EXPECT_EQ(exit_code(r.outcome), 3);
}

TEST(Roundtrip, OtherLengths) {
  RoundtripOptions options;
  options.p = 5;
  options.q = 3;
  const CnfFormula cnf{2, {{1, 2}, {-1}}};
  const PipelineReport r = run_roundtrip(cnf, options);
  EXPECT_EQ(r.outcome, PipelineOutcome::kSatisfiable);
  EXPECT_TRUE(satisfies(cnf, *r.decoded));
}

TEST(Roundtrip, ReportJson) {
  const nlohmann::json j = to_json_value(run_roundtrip({1, {{1}}}));
  EXPECT_EQ(j["outcome"], "satisfiable");
  EXPECT_EQ(j["sizes"]["pairs"], 4);
  EXPECT_EQ(j["stages"]["stacked_solver"]["verdict"], "feasible");
  EXPECT_EQ(j["decoded"]["x1"], true);
  EXPECT_FALSE(j.contains("artifacts"));
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code(PipelineOutcome::kSatisfiable), 0);
  EXPECT_EQ(exit_code(PipelineOutcome::kUnsatisfiable), 1);
  EXPECT_EQ(exit_code(PipelineOutcome::kBudgetExhausted), 3);
  EXPECT_EQ(exit_code(PipelineOutcome::kDisagreement), 4);
  EXPECT_EQ(to_string(PipelineOutcome::kDisagreement), "disagreement");
}

}  // namespace
}  // namespace twolen
