#include <gtest/gtest.h>

#include <set>

#include "ratdist/identity.hpp"
#include "support.hpp"

using namespace ratdist;
using ratdist::testing::Q;
using ratdist::testing::RandomRationals;

namespace {

CaseId C(BinOp outer, BinOp inner) { return {outer, inner}; }

}  // namespace

TEST(Apply, Examples) {
  EXPECT_FALSE(apply(BinOp::Div, Q(1), Q(0)).has_value());
  EXPECT_EQ(apply(BinOp::Sub, Q(3), Q(5)), Q(-2));
  EXPECT_EQ(apply(BinOp::Mul, Q(2, 3), Q(3, 4)), Q(1, 2));
  EXPECT_EQ(apply(BinOp::Add, Q(1, 2), Q(1, 2)), Q(1));
  EXPECT_EQ(apply(BinOp::Div, Q(0), Q(5)), Q(0));
}

TEST(CaseIdTable, SixteenDistinctPairs) {
  std::set<CaseId> seen(all_cases().begin(), all_cases().end());
  EXPECT_EQ(seen.size(), 16u);
}

TEST(CaseIdTable, NumberingFollowsTheFixedMapping) {
  struct Row {
    BinOp o, i;
    const char* label;
  };
  const Row rows[] = {
      {BinOp::Add, BinOp::Add, "1"},  {BinOp::Add, BinOp::Sub, "2"},
      {BinOp::Mul, BinOp::Mul, "3"},  {BinOp::Mul, BinOp::Div, "4"},
      {BinOp::Sub, BinOp::Sub, "5"},  {BinOp::Sub, BinOp::Add, "6"},
      {BinOp::Div, BinOp::Div, "7"},  {BinOp::Div, BinOp::Mul, "8"},
      {BinOp::Div, BinOp::Add, "9"},  {BinOp::Div, BinOp::Sub, "10"},
      {BinOp::Add, BinOp::Mul, "11"}, {BinOp::Sub, BinOp::Mul, "12"},
      {BinOp::Add, BinOp::Div, "13"}, {BinOp::Sub, BinOp::Div, "14"},
      {BinOp::Mul, BinOp::Add, "L1"}, {BinOp::Mul, BinOp::Sub, "L2"},
  };
  for (const auto& r : rows) {
    CaseId c = C(r.o, r.i);
    EXPECT_EQ(c.label(), r.label);
    EXPECT_EQ(CaseId::parse(r.label), c);
    EXPECT_EQ(CaseId::parse(c.op_pair()), c);
  }
  EXPECT_FALSE(CaseId::numbered(12).case_number() == std::nullopt);
  EXPECT_EQ(CaseId::base_law(1).case_number(), std::nullopt);
}

TEST(CaseIdTable, ParseRejectsGarbage) {
  EXPECT_FALSE(CaseId::parse("0"));
  EXPECT_FALSE(CaseId::parse("15"));
  EXPECT_FALSE(CaseId::parse("L3"));
  EXPECT_FALSE(CaseId::parse("sub/pow"));
  EXPECT_FALSE(CaseId::parse("12x"));
  EXPECT_EQ(CaseId::parse("sub/mul"), CaseId::numbered(12));
}

TEST(Check, BaseLawExample) {
  auto r = check(C(BinOp::Mul, BinOp::Add), {Q(2, 3), Q(1, 2), Q(5)});
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.lhs, r.rhs);
}

TEST(Check, AdditionOverAdditionFails) {
  auto r = check(C(BinOp::Add, BinOp::Add), {Q(1), Q(5), Q(7)});
  EXPECT_EQ(r.verdict, Verdict::Fails);
  EXPECT_EQ(r.lhs, Q(13));
  EXPECT_EQ(r.rhs, Q(14));
}

TEST(Check, SubtractionOverMultiplicationWorkedInstance) {
  auto r = check(C(BinOp::Sub, BinOp::Mul), {Q(6), Q(4), Q(-3)});
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.lhs, Q(18));
  EXPECT_EQ(r.rhs, Q(18));
}

TEST(Check, ZeroDivisorOnRhsIsUndefined) {
  auto r = check(C(BinOp::Add, BinOp::Div), {Q(1), Q(1), Q(-1)});
  EXPECT_EQ(r.verdict, Verdict::Undefined);
  EXPECT_EQ(r.undefined_site, EvalSite::RhsInner);
  EXPECT_EQ(r.lhs, Q(0));  // 1 + 1/(-1)
  EXPECT_FALSE(r.rhs.has_value());
}

TEST(Check, UndefinedSiteOrder) {
  // r2 / r3 with r3 = 0 also makes r1 / r3 undefined; the lhs inner wins.
  auto a = check(C(BinOp::Div, BinOp::Div), {Q(1), Q(1), Q(0)});
  EXPECT_EQ(a.undefined_site, EvalSite::LhsInner);
  // r2 / r3 = 0 so the lhs outer divides by zero.
  auto b = check(C(BinOp::Div, BinOp::Div), {Q(1), Q(0), Q(2)});
  EXPECT_EQ(b.undefined_site, EvalSite::LhsOuter);
  // Only r1 / r2 is a problem.
  auto c = check(C(BinOp::Div, BinOp::Add), {Q(1), Q(0), Q(2)});
  EXPECT_EQ(c.undefined_site, EvalSite::RhsFirstOuter);
  EXPECT_EQ(c.lhs, Q(1, 2));
  // r2 - r3 = 0: the lhs outer divides by zero while the rhs is 1/2 - 1/2.
  auto d = check(C(BinOp::Div, BinOp::Sub), {Q(1), Q(2), Q(2)});
  EXPECT_EQ(d.undefined_site, EvalSite::LhsOuter);
  EXPECT_EQ(d.rhs, Q(0));
}

TEST(Check, RhsSecondOuter) {
  auto d = check(C(BinOp::Div, BinOp::Sub), {Q(1), Q(2), Q(0)});
  // lhs: 1/(2-0) = 1/2 fine; rhs: 1/2 then 1/0 -> second outer.
  EXPECT_EQ(d.undefined_site, EvalSite::RhsSecondOuter);
  EXPECT_EQ(d.lhs, Q(1, 2));
}

TEST(CheckProperty, BaseLawsHoldEverywhere) {
  RandomRationals rng(21);
  for (int i = 0; i < 3000; ++i) {
    Triple t = rng.triple();
    EXPECT_TRUE(check(CaseId::base_law(1), t).holds());
    EXPECT_TRUE(check(CaseId::base_law(2), t).holds());
  }
}

TEST(CheckProperty, NoDivisionNeverUndefined) {
  RandomRationals rng(22);
  for (const auto& c : all_cases()) {
    if (c.outer == BinOp::Div || c.inner == BinOp::Div) continue;
    for (int i = 0; i < 300; ++i) EXPECT_NE(check(c, rng.triple()).verdict, Verdict::Undefined);
  }
}

TEST(CheckProperty, AdditionOverAdditionSymmetricInR2R3) {
  RandomRationals rng(23);
  const CaseId c = CaseId::numbered(1);
  for (int i = 0; i < 1000; ++i) {
    Triple t = rng.triple();
    auto a = check(c, t);
    auto b = check(c, {t.r1, t.r3, t.r2});
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.rhs, b.rhs);
  }
}

TEST(CheckProperty, DeterministicAndConsistent) {
  RandomRationals rng(24);
  for (int i = 0; i < 500; ++i) {
    Triple t = rng.triple();
    for (const auto& c : all_cases()) {
      auto a = check(c, t), b = check(c, t);
      EXPECT_EQ(a.verdict, b.verdict);
      EXPECT_EQ(a.lhs, b.lhs);
      if (a.verdict != Verdict::Undefined) {
        EXPECT_TRUE(a.lhs && a.rhs);
        EXPECT_FALSE(a.undefined_site);
      } else {
        EXPECT_TRUE(a.undefined_site);
      }
    }
  }
}

// Full-grid comparison against the mpq-based reference evaluator.
TEST(CheckOracle, AgreesWithIndependentEvaluatorOnGrid) {
  auto grid = ratdist::testing::ref_grid(3, 2);
  for (const auto& c : all_cases())
    for (const auto& a : grid)
      for (const auto& b : grid)
        for (const auto& d : grid) {
          Triple t{a, b, d};
          ASSERT_EQ(check(c, t).verdict, ratdist::testing::ref_verdict(c, t))
              << c.label() << " " << a << "," << b << "," << d;
        }
}
