#include <gtest/gtest.h>

#include "helpers.hpp"
#include "twolen/errors.hpp"
#include "twolen/sat_reduction.hpp"

namespace twolen {
namespace {

using testing::task;

const Task& by_id(const std::vector<Task>& tasks, const std::string& id) {
  for (const Task& t : tasks) {
    if (t.id == id) return t;
  }
  throw std::out_of_range(id);
}

TEST(MakeBlock, PositiveLiteral) {
  const Block b = make_block(BlockKind::kPositiveLiteral, 3, 2);
  ASSERT_TRUE(b.long_pending.has_value());
  EXPECT_FALSE(b.short_pending.has_value());
  EXPECT_EQ(*b.long_pending, (PendingDeadlines{6, 7}));
  ASSERT_EQ(b.aux_jobs.size(), 2U);
  EXPECT_EQ(b.aux_jobs[0], task("aux1", 1, 4, 2));
  EXPECT_EQ(b.aux_jobs[1], task("aux2", 0, 8, 2));
  EXPECT_EQ(b.length, 7);
}

TEST(MakeBlock, NegativeLiteral) {
  const Block b = make_block(BlockKind::kNegativeLiteral, 3, 2);
  EXPECT_FALSE(b.long_pending.has_value());
  ASSERT_TRUE(b.short_pending.has_value());
  EXPECT_EQ(*b.short_pending, (PendingDeadlines{2, 7}));
  ASSERT_EQ(b.aux_jobs.size(), 2U);
  EXPECT_EQ(b.aux_jobs[0], task("aux1", 3, 5, 2));
  EXPECT_EQ(b.aux_jobs[1], task("aux2", 0, 8, 3));
  EXPECT_EQ(b.length, 7);
}

TEST(MakeBlock, ClauseAndDummyBlocks) {
  const Block inactive = make_block(BlockKind::kClauseInactive, 3, 2);
  EXPECT_EQ(*inactive.long_pending, (PendingDeadlines{4, 6}));
  EXPECT_EQ(*inactive.short_pending, (PendingDeadlines{4, 6}));
  EXPECT_EQ(inactive.length, 5);
  EXPECT_TRUE(inactive.aux_jobs.empty());

  const Block active = make_block(BlockKind::kClauseActive, 3, 2);
  EXPECT_EQ(*active.long_pending, (PendingDeadlines{5, 6}));
  EXPECT_EQ(*active.short_pending, (PendingDeadlines{5, 6}));
  EXPECT_EQ(active.length, 5);

  const Block dl = make_block(BlockKind::kDummyLong, 3, 2);
  EXPECT_EQ(*dl.long_pending, (PendingDeadlines{2, 3}));
  EXPECT_FALSE(dl.short_pending.has_value());
  EXPECT_EQ(dl.length, 3);

  const Block ds = make_block(BlockKind::kDummyShort, 3, 2);
  EXPECT_EQ(*ds.short_pending, (PendingDeadlines{1, 2}));
  EXPECT_EQ(ds.length, 2);
}

TEST(MakeBlock, RequiresNonUnitDistinctLengths) {
  EXPECT_THROW(make_block(BlockKind::kPositiveLiteral, 3, 1), InvalidInput);
  EXPECT_THROW(make_block(BlockKind::kPositiveLiteral, 2, 2), InvalidInput);
  EXPECT_THROW(make_block(BlockKind::kPositiveLiteral, 2, 3), InvalidInput);
}

TEST(ValidateBlock, DeadlineOutsideBlockIsReported) {
  Block b = make_block(BlockKind::kClauseActive, 3, 2);
  EXPECT_TRUE(validate_block(b, 3, 2).empty());
  b.long_pending->late = b.length + 2;
  EXPECT_FALSE(validate_block(b, 3, 2).empty());
}

class SingleClause : public ::testing::Test {
 protected:
  const CnfFormula cnf{1, {{1}}};
  const FilledInstance fi = build_block_sequence(cnf, 3, 2);
};

TEST_F(SingleClause, BlockSequence) {
  std::vector<BlockKind> kinds;
  for (const Block& b : fi.blocks) kinds.push_back(b.kind);
  EXPECT_EQ(kinds, (std::vector<BlockKind>{
                       BlockKind::kDummyLong, BlockKind::kPositiveLiteral,
                       BlockKind::kClauseActive, BlockKind::kNegativeLiteral,
                       BlockKind::kClauseInactive, BlockKind::kDummyShort}));
  EXPECT_EQ(fi.separator_after, (std::set<std::size_t>{3, 5}));
  EXPECT_EQ(fi.pairs(), 4U);
  EXPECT_EQ(fi.offsets, (std::vector<Time>{0, 3, 10, 18, 25, 33}));
  EXPECT_EQ(fi.pair_labels, (std::vector<std::string>{"c_1_0", "v_1", "c_1_1", "c_1_2"}));
  EXPECT_EQ(fi.variable_pair, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(validate_filled(fi).empty());
}

TEST_F(SingleClause, Flatten) {
  const AuxInstance aux = flatten_filled(fi);
  EXPECT_EQ(aux.long_pending, (std::vector<PendingDeadlines>{{2, 3}, {9, 10}, {15, 16}, {29, 31}}));
  EXPECT_EQ(aux.short_pending,
            (std::vector<PendingDeadlines>{{15, 16}, {20, 25}, {29, 31}, {34, 35}}));
  EXPECT_EQ(by_id(aux.ordinary, "blk2_aux1"), task("blk2_aux1", 4, 7, 2));
  EXPECT_EQ(by_id(aux.ordinary, "blk2_aux2"), task("blk2_aux2", 3, 11, 2));
  EXPECT_EQ(by_id(aux.ordinary, "blk4_aux1"), task("blk4_aux1", 21, 23, 2));
  EXPECT_EQ(by_id(aux.ordinary, "blk4_aux2"), task("blk4_aux2", 18, 26, 3));
  EXPECT_EQ(by_id(aux.ordinary, "blk3_sep"), task("blk3_sep", 16, 18, 2));
  EXPECT_EQ(by_id(aux.ordinary, "blk5_sep"), task("blk5_sep", 31, 33, 2));
  EXPECT_EQ(aux.ordinary.size(), 6U);
  EXPECT_TRUE(validate_aux(aux).empty());
}

TEST_F(SingleClause, EncodeTrueModel) {
  const AuxSchedule sch = encode_model(cnf, {true}, fi);
  const AuxInstance aux = flatten_filled(fi);
  EXPECT_TRUE(verify_aux_schedule(aux, sch).empty());
  EXPECT_TRUE(check_offset_property(fi, sch).empty());
  // The variable pair is the second one.
  EXPECT_EQ(sch.starts.at("pending_p_2"), 7);
  EXPECT_EQ(sch.starts.at("pending_q_2"), 18);
  // V+ packed tight: completes at relative p + 2q.
  EXPECT_EQ(sch.starts.at("blk2_aux2"), 3);
  EXPECT_EQ(sch.starts.at("blk2_aux1"), 5);
  // V- delayed: its last job completes at relative p + 2q + 1.
  const Time v_minus_end =
      std::max(sch.starts.at("blk4_aux1") + 2, sch.starts.at("blk4_aux2") + 3);
  EXPECT_EQ(v_minus_end - fi.offsets[3], 3 + 2 * 2 + 1);
}

TEST_F(SingleClause, EncodeRejectsNonModel) {
  EXPECT_THROW(encode_model(cnf, {false}, fi), InvalidInput);
}

TEST_F(SingleClause, DecodeRoundTrip) {
  EXPECT_EQ(decode_schedule(fi, encode_model(cnf, {true}, fi)), (Assignment{true}));
}

TEST_F(SingleClause, OffsetViolationIsReported) {
  AuxSchedule sch = encode_model(cnf, {true}, fi);
  sch.starts["blk2_aux2"] = fi.offsets[1] - 1;
  Violations vs = check_offset_property(fi, sch);
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs[0].subject, "blk2_aux2");
}

TEST_F(SingleClause, DecodeRejectsInvalidSchedule) {
  AuxSchedule sch = encode_model(cnf, {true}, fi);
  sch.starts["blk2_aux2"] = 0;
  EXPECT_THROW(decode_schedule(fi, sch), InvalidInput);
}

TEST(Decode, BothEarlyMeansTrue) {
  // No clauses: V+ for x1, separator, V- for x1, separator.
  const CnfFormula cnf{1, {}};
  const FilledInstance fi = build_block_sequence(cnf, 3, 2);
  const AuxInstance aux = flatten_filled(fi);
  ASSERT_EQ(aux.pairs(), 1U);
  AuxSchedule both_early{{{"blk1_aux1", 1},
                          {"pending_p_1", 3},
                          {"blk1_aux2", 6},
                          {"blk1_sep", 8},
                          {"pending_q_1", 10},
                          {"blk2_aux1", 13},
                          {"blk2_aux2", 15},
                          {"blk2_sep", 18}}};
  ASSERT_TRUE(verify_aux_schedule(aux, both_early).empty())
      << to_string(verify_aux_schedule(aux, both_early));
  EXPECT_EQ(decode_schedule(fi, both_early), (Assignment{true}));

  // Only the long job early: false.
  AuxSchedule long_only = both_early;
  long_only.starts["blk2_aux2"] = 10;
  long_only.starts["blk2_aux1"] = 13;
  long_only.starts["pending_q_1"] = 15;
  ASSERT_TRUE(verify_aux_schedule(aux, long_only).empty())
      << to_string(verify_aux_schedule(aux, long_only));
  EXPECT_EQ(decode_schedule(fi, long_only), (Assignment{false}));
}

TEST(BuildBlockSequence, EmptyFormulaHasOnlyVariablePairs) {
  const FilledInstance fi = build_block_sequence({2, {}}, 3, 2);
  EXPECT_EQ(fi.pairs(), 2U);
  EXPECT_EQ(fi.blocks.size(), 4U);
  EXPECT_EQ(fi.pair_labels, (std::vector<std::string>{"v_1", "v_2"}));
}

TEST(BuildBlockSequence, CountsFollowTheConstruction) {
  const CnfFormula cnf{3, {{1, -2}, {2, 3, -1}}};
  const int n = 3;
  const int m = 2;
  const FilledInstance fi = build_block_sequence(cnf, 4, 3);
  EXPECT_EQ(fi.blocks.size(), static_cast<std::size_t>(2 * m + 2 * n * (m + 1)));
  EXPECT_EQ(fi.pairs(), static_cast<std::size_t>(n + m * (2 * n + 1)));
  const AuxInstance aux = flatten_filled(fi);
  EXPECT_EQ(aux.ordinary.size(), static_cast<std::size_t>(4 * n + 2 * n));
}

TEST(AssembleFilled, RejectsMisorderedPendingJobs) {
  // The short job of pair 1 would be defined before the long one.
  std::vector<Block> blocks{make_block(BlockKind::kDummyShort, 3, 2),
                            make_block(BlockKind::kDummyLong, 3, 2)};
  EXPECT_THROW(assemble_filled(3, 2, blocks, {}), InvalidInput);
  std::vector<Block> unbalanced{make_block(BlockKind::kDummyLong, 3, 2)};
  EXPECT_THROW(assemble_filled(3, 2, unbalanced, {}), InvalidInput);
}

TEST(CheckOffsetProperty, EmptyFilledInstance) {
  const FilledInstance fi = assemble_filled(3, 2, {}, {});
  EXPECT_TRUE(check_offset_property(fi, {}).empty());
  EXPECT_EQ(flatten_filled(fi).pairs(), 0U);
}

TEST(LayoutReport, ListsBlocksAndPairs) {
  const FilledInstance fi = build_block_sequence({1, {{1}}}, 3, 2);
  const nlohmann::json j = layout_report(fi);
  EXPECT_EQ(j["blocks"].size(), 6U);
  EXPECT_EQ(j["blocks"][1]["kind"], "V+");
  EXPECT_EQ(j["blocks"][2]["offset"], 10);
  EXPECT_EQ(j["pending"][1]["label"], "v_1");
  EXPECT_EQ(j["separator_after"], nlohmann::json::array({3, 5}));
}

}  // namespace
}  // namespace twolen
