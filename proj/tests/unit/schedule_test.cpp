#include <gtest/gtest.h>

#include "helpers.hpp"
#include "twolen/schedule.hpp"

namespace twolen {
namespace {

using testing::has_rule;
using testing::has_violation;
using testing::task;

TEST(ValidateInstance, WindowThatExactlyFitsIsAccepted) {
  EXPECT_TRUE(validate_instance({{task("a", 0, 3, 3)}}).empty());
}

TEST(ValidateInstance, WindowTooSmallIsReported) {
  Violations vs = validate_instance({{task("a", 0, 2, 3)}});
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].subject, "a");
  EXPECT_EQ(vs[0].rule, "window too small");
}

TEST(ValidateInstance, NegativeReleaseIsLegal) {
  EXPECT_TRUE(validate_instance({{task("a", -7, 10, 3)}}).empty());
}

TEST(ValidateInstance, EmptyInstanceIsValid) { EXPECT_TRUE(validate_instance({}).empty()); }

TEST(ValidateInstance, DuplicateIdsAreReportedOnce) {
  Violations vs = validate_instance(
      {{task("a", 0, 5, 1), task("a", 0, 5, 2), task("a", 0, 5, 3)}});
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_TRUE(has_violation(vs, "a", "duplicate id"));
}

TEST(ValidateInstance, NonPositiveLengthAndEmptyId) {
  Violations vs = validate_instance({{task("z", 0, 5, 0), task("", 0, 5, 1)}});
  EXPECT_TRUE(has_violation(vs, "z", "non-positive length"));
  EXPECT_TRUE(has_rule(vs, "empty id"));
}

TEST(ValidateInstance, TimesBeyondBoundAreRejected) {
  const Time big = kMaxTimeMagnitude + 1;
  EXPECT_TRUE(has_rule(validate_instance({{task("a", 0, big, 1)}}), "time out of range"));
  EXPECT_TRUE(has_rule(validate_instance({{task("a", -big, 0, 1)}}), "time out of range"));
  EXPECT_TRUE(validate_instance({{task("a", -kMaxTimeMagnitude, kMaxTimeMagnitude, 1)}}).empty());
}

TEST(Instance, LengthsAndFind) {
  Instance inst{{task("a", 0, 9, 3), task("b", 0, 9, 2), task("c", 0, 9, 3)}};
  EXPECT_EQ(inst.lengths(), (std::set<Time>{2, 3}));
  EXPECT_EQ(inst.find("b"), 1);
  EXPECT_EQ(inst.find("nope"), -1);
}

TEST(VerifySchedule, BackToBackPackingIsFeasible) {
  Instance inst{{task("a", 0, 5, 3), task("b", 0, 5, 2)}};
  EXPECT_TRUE(verify_schedule(inst, {{{"a", 0}, {"b", 3}}}).empty());
}

TEST(VerifySchedule, LateCompletionIsReported) {
  Instance inst{{task("a", 0, 4, 3), task("b", 0, 4, 2)}};
  Violations vs = verify_schedule(inst, {{{"a", 0}, {"b", 3}}});
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].subject, "b");
  EXPECT_EQ(vs[0].rule, "completes after deadline");
}

TEST(VerifySchedule, OverlapNamesBothTasks) {
  Instance inst{{task("a", 0, 10, 3), task("b", 0, 10, 2)}};
  Violations vs = verify_schedule(inst, {{{"a", 0}, {"b", 2}}});
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].rule, "overlap");
  EXPECT_EQ(vs[0].subject, "a,b");
}

TEST(VerifySchedule, OverlapWithEarlierLongJobIsFound) {
  // c overlaps a even though b lies between them in start order.
  Instance inst{{task("a", 0, 20, 10), task("b", 0, 20, 1), task("c", 0, 20, 1)}};
  Violations vs = verify_schedule(inst, {{{"a", 0}, {"b", 1}, {"c", 5}}});
  EXPECT_TRUE(has_violation(vs, "a,b", "overlap"));
  EXPECT_TRUE(has_violation(vs, "a,c", "overlap"));
}

TEST(VerifySchedule, EarlyStartMissingAndUnknown) {
  Instance inst{{task("a", 2, 10, 3), task("b", 0, 10, 2)}};
  Violations vs = verify_schedule(inst, {{{"a", 1}, {"ghost", 7}}});
  EXPECT_TRUE(has_violation(vs, "a", "starts before release"));
  EXPECT_TRUE(has_violation(vs, "b", "missing start"));
  EXPECT_TRUE(has_violation(vs, "ghost", "unknown task"));
}

TEST(VerifySchedule, NegativeTimesWork) {
  Instance inst{{task("sep", -2, 0, 2), task("x", -7, 8, 3)}};
  EXPECT_TRUE(verify_schedule(inst, {{{"sep", -2}, {"x", -5}}}).empty());
  EXPECT_FALSE(verify_schedule(inst, {{{"sep", -2}, {"x", -4}}}).empty());
}

TEST(VerifySchedule, EmptyInstanceAndSchedule) { EXPECT_TRUE(verify_schedule({}, {}).empty()); }

TEST(Violations, ToStringMentionsSubjectAndRule) {
  const std::string text = to_string(Violations{{"a", "overlap", "x"}});
  EXPECT_NE(text.find("a"), std::string::npos);
  EXPECT_NE(text.find("overlap"), std::string::npos);
}

}  // namespace
}  // namespace twolen
