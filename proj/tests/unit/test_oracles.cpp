#include <gtest/gtest.h>

#include "../oracles.hpp"

// The oracles themselves, against values worked out by hand.

TEST(Oracle, SmoothnessByHand) {
  EXPECT_TRUE(oracle::smooth(3, {0, 0, 0, 1, 2}));
  EXPECT_FALSE(oracle::smooth(3, {0, 0, 0, 0, 0}));  // y^2 = x^3
  EXPECT_FALSE(oracle::smooth(5, {0, 1, 0, 0, 0}));  // node at the origin
  EXPECT_TRUE(oracle::smooth(2, {0, 0, 1, 1, 1}));
}

TEST(Oracle, FibresByHand) {
  EXPECT_TRUE(oracle::fiber(3, {0, 0, 0, 1, 2}, 0).empty());
  EXPECT_EQ(oracle::fiber(3, {0, 0, 0, 1, 2}, 1), (std::vector<int>{1, 2}));
  EXPECT_EQ(oracle::fiber(3, {0, 0, 0, 1, 2}, 2), std::vector<int>{0});
  EXPECT_EQ(oracle::point_count(2, {0, 0, 1, 1, 1}), 1u);
}

TEST(Oracle, CensusByHand) {
  const auto c = oracle::census(3, {0, 0, 0, 1, 2});
  EXPECT_EQ(c.e, 2u);
  EXPECT_EQ(c.s, 2u);
  EXPECT_EQ(c.o, 4u * 3u - 2u);
  EXPECT_EQ(c.ns, 16u);
}

TEST(Oracle, LinearAlgebraByHand) {
  using M = oracle::Mat;
  EXPECT_EQ(oracle::bareiss_det(M{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(oracle::bareiss_det(M{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(oracle::bareiss_det(M{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  EXPECT_EQ(oracle::bareiss_rank(M{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2u);
  EXPECT_EQ(oracle::determinantal_factors(M{{2, 0}, {0, 3}}), (std::vector<oracle::Big>{1, 6}));
  EXPECT_EQ(oracle::determinantal_factors(M{{2, 4}, {6, 8}}), (std::vector<oracle::Big>{2, 4}));
}

TEST(Oracle, RelativeH1OfTruncatedS) {
  EXPECT_EQ(oracle::relative_h1_rank(3, {0, 0, 0, 1, 2}), 3u);
  EXPECT_EQ(oracle::relative_h1_rank(2, {0, 0, 1, 1, 1}), 0u);
  EXPECT_EQ(oracle::relative_h1_rank(3, {0, 0, 0, 1, 2}, 1), 3u);
}
