#include <gtest/gtest.h>

#include <numbers>

#include "imfid/group.hpp"
#include "imfid/hypothesis.hpp"

using namespace imfid;

TEST(Intervals, NormalizeMerges) {
  const auto merged = normalize_intervals({{3.0, 4.0}, {0.0, 1.0}, {0.5, 2.0}, {2.0, 2.5}});
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0], (Interval{0.0, 2.5}));
  EXPECT_EQ(merged[1], (Interval{3.0, 4.0}));
}

TEST(Hypothesis, PointAndEverything) {
  const auto p = Hypothesis::point(1.5);
  EXPECT_TRUE(p.contains(1.5));
  EXPECT_FALSE(p.contains(1.6));
  EXPECT_TRUE(Hypothesis::everything().contains(-1e9));
  EXPECT_TRUE(Hypothesis::nothing().is_empty());
  EXPECT_FALSE(Hypothesis::nothing().contains(0.0));
}

TEST(Hypothesis, ArcWrapsThroughZero) {
  const auto a = Hypothesis::arc(kTwoPi - 0.5, kTwoPi + 0.5);
  EXPECT_TRUE(a.contains(0.2));
  EXPECT_TRUE(a.contains(kTwoPi - 0.2));
  EXPECT_FALSE(a.contains(std::numbers::pi));
  ASSERT_TRUE(a.closed_form());
  for (const auto& piece : *a.closed_form()) {
    EXPECT_GE(piece.lo, 0.0);
    EXPECT_LE(piece.hi, kTwoPi);
  }
}

TEST(Hypothesis, ComplementIsClosure) {
  const auto h = Hypothesis::intervals({{0.0, 1.0}, {2.0, 3.0}});
  const auto c = h.complement();
  EXPECT_FALSE(c.contains(0.5));
  EXPECT_TRUE(c.contains(1.5));
  EXPECT_TRUE(c.contains(-5.0));
  ASSERT_TRUE(c.closed_form());
  const auto& pieces = *c.closed_form();
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_DOUBLE_EQ(pieces[1].lo, 1.0);
  EXPECT_DOUBLE_EQ(pieces[1].hi, 2.0);
  EXPECT_TRUE(Hypothesis::everything().complement().is_empty());
}

TEST(Hypothesis, HalfSpace) {
  const auto h = Hypothesis::half_space({1.0, -1.0}, 0.5);
  EXPECT_TRUE(h.contains(std::vector<double>{0.0, 0.0}));
  EXPECT_FALSE(h.contains(std::vector<double>{2.0, 0.0}));
  ASSERT_TRUE(h.linear_form());
  EXPECT_DOUBLE_EQ(h.linear_form()->apply(std::vector<double>{1.0, 2.0}), -1.0);
  EXPECT_FALSE(h.closed_form());
  const auto line = Hypothesis::half_space({2.0}, 1.0);
  ASSERT_TRUE(line.closed_form());
  EXPECT_DOUBLE_EQ(line.closed_form()->front().hi, 0.5);
}
