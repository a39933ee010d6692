#include <gtest/gtest.h>

#include <random>

#include "ecosense/error.hpp"
#include "ecosense/modelmath/geometry.hpp"
#include "test_support.hpp"

namespace ecosense::modelmath {
namespace {

TEST(Iou, HandComputedCases) {
  const BoundingBox a(0, 0, 10, 10);
  EXPECT_DOUBLE_EQ(iou(a, a), 1.0);
  EXPECT_DOUBLE_EQ(iou(a, BoundingBox(20, 20, 30, 30)), 0.0);
  EXPECT_DOUBLE_EQ(iou(a, BoundingBox(10, 0, 20, 10)), 0.0);  // touching edge
  EXPECT_NEAR(iou(a, BoundingBox(5, 0, 15, 10)), 1.0 / 3.0, 1e-15);
}

TEST(Iou, SymmetricBoundedAndOneOnlyForIdentical) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto ps = testing::random_proposals(gen, 2);
    const auto& a = ps[0].box();
    const auto& b = ps[1].box();
    const double ab = iou(a, b);
    EXPECT_EQ(ab, iou(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_NEAR(ab, static_cast<double>(testing::ref_iou(a, b)), 1e-12);
    if (!(a == b)) {
      EXPECT_LT(ab, 1.0);
    }
  }
}

TEST(Nms, EmptyAndSingle) {
  EXPECT_TRUE(nms({}, 0.5).empty());
  const auto p = Proposal::from_box(BoundingBox(0, 0, 5, 5), 0.3, 1);
  const auto out = nms({p}, 0.5);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], p);
}

TEST(Nms, SuppressesOverlapAboveThreshold) {
  // 10x10 boxes offset by 2.5 along x: IoU = 75 / 125 = 0.6.
  const auto hi = Proposal::from_box(BoundingBox(0, 0, 10, 10), 0.9, 0);
  const auto lo = Proposal::from_box(BoundingBox(2.5, 0, 12.5, 10), 0.8, 0);
  ASSERT_NEAR(iou(hi.box(), lo.box()), 0.6, 1e-12);
  const auto out = nms({lo, hi}, 0.5);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], hi);
  EXPECT_EQ(nms({lo, hi}, 0.6).size(), 2u);  // strict: IoU must exceed the threshold
}

TEST(Nms, TiesKeepEarlierProposal) {
  const auto first = Proposal::from_box(BoundingBox(0, 0, 10, 10), 0.5, 0);
  const auto second = Proposal::from_box(BoundingBox(1, 0, 11, 10), 0.5, 1);
  const auto out = nms({first, second}, 0.5);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].true_class(), 0u);
}

TEST(Nms, RejectsThresholdOutsideUnitInterval) {
  EXPECT_THROW(nms({}, 0.0), Error);
  EXPECT_THROW(nms({}, 1.5), Error);
  EXPECT_NO_THROW(nms({}, 1.0));
}

TEST(Nms, MatchesBruteForceOracle) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<std::size_t> count(0, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ps = testing::random_proposals(gen, count(gen));
    for (double thr : {0.3, 0.5, 0.7}) {
      ASSERT_EQ(nms(ps, thr), testing::brute_force_nms(ps, thr)) << "trial " << trial << " thr " << thr;
    }
  }
}

TEST(Nms, OutputSortedAndPairwiseBelowThreshold) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto out = nms(testing::random_proposals(gen, 40), 0.4);
    for (std::size_t i = 0; i + 1 < out.size(); ++i) EXPECT_GE(out[i].objectness(), out[i + 1].objectness());
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) EXPECT_LE(iou(out[i].box(), out[j].box()), 0.4);
  }
}

}  // namespace
}  // namespace ecosense::modelmath
