#include <gtest/gtest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "msym/stree.hpp"

using namespace msym;

namespace {

Curve q3() { return validate_curve(CurveSpec{3, {0, 0, 0, 1, 2}}); }
Curve q2() { return validate_curve(CurveSpec{2, {0, 0, 1, 1, 1}}); }

SLabel V(const Curve& c, int x) { return SLabel::V(XCoord::affine(x), c.fiber_type(XCoord::affine(x))); }
SLabel Vinf() { return SLabel::V(XCoord::infinity(), FiberType::OS); }

}  // namespace

TEST(QuotientTree, RaysOfTheQ3Curve) {
  const QuotientTree t(q3());
  EXPECT_EQ(t.rays().size(), 4u);
  EXPECT_EQ(t.e_points(), (std::vector<Point>{Point::affine(2, 0), Point::infinity()}));
}

TEST(QuotientTree, RaysOfTheQ2Curve) {
  const QuotientTree t(q2());
  EXPECT_EQ(t.rays().size(), 1u);
  EXPECT_EQ(t.curve().fiber_type(XCoord::affine(0)), FiberType::NS);
  EXPECT_EQ(t.curve().fiber_type(XCoord::affine(1)), FiberType::NS);
}

TEST(QuotientTree, Invariants) {
  EXPECT_EQ(invariant_of_label(SLabel::C(Point::affine(1, 1), 5)), 5);
  EXPECT_EQ(invariant_of_label(SLabel::O()), -1);
  EXPECT_EQ(invariant_of_label(SLabel::V(XCoord::affine(0), FiberType::NS)), -2);
  EXPECT_EQ(invariant_of_label(SLabel::V(XCoord::affine(0), FiberType::S)), 0);
  EXPECT_EQ(invariant_of_label(SLabel::V(XCoord::affine(0), FiberType::OS)), 0);
  EXPECT_EQ(invariant_of_label(SLabel::E(Point::infinity())), 0);
}

TEST(QuotientTree, MinimalVertices) {
  const Curve c = q3();
  const QuotientTree t(c);
  EXPECT_EQ(t.minimal_vertices(),
            (std::vector<SLabel>{SLabel::E(Point::affine(2, 0)), SLabel::E(Point::infinity()),
                                 V(c, 1), SLabel::O(), V(c, 0)}));
  const Curve c2 = q2();
  EXPECT_EQ(QuotientTree(c2).minimal_vertices(),
            (std::vector<SLabel>{SLabel::E(Point::infinity()), SLabel::O(), V(c2, 0), V(c2, 1)}));
}

TEST(QuotientTree, Successors) {
  const Curve c = q3();
  const QuotientTree t(c);
  EXPECT_EQ(t.successors_in_S(SLabel::O()), (std::vector<SLabel>{V(c, 0), V(c, 1), V(c, 2), Vinf()}));
  const Point p = Point::affine(2, 0);
  EXPECT_EQ(t.successors_in_S(SLabel::C(p, 1)), (std::vector<SLabel>{SLabel::C(p, 2), SLabel::E(p)}));
  EXPECT_TRUE(t.successors_in_S(SLabel::E(p)).empty());
  EXPECT_EQ(t.predecessor_in_S(SLabel::E(p)), SLabel::C(p, 1));
  EXPECT_FALSE(t.predecessor_in_S(SLabel::O()).has_value());
}

TEST(QuotientTree, NeighbourSpecsMatchTheTable) {
  for (int q : {2, 3, 5}) {
    for (const auto& a : oracle::all_curves(q)) {
      const Curve c = validate_curve(CurveSpec{q, a});
      const QuotientTree t(c);
      const auto trunc = t.materialize(3);
      for (const SLabel& l : trunc.vertices) {
        const NeighborSpec ns = t.neighbor_spec(l);
        ASSERT_EQ(ns.size(), static_cast<std::size_t>(q + 1)) << to_string(l);
        std::vector<SLabel> got = ns.successors;
        for (int i = 0; i < ns.predecessor_copies; ++i) got.push_back(*ns.predecessor);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, oracle::neighbour_multiset(l, q, c)) << to_string(l);
      }
      if (q == 5) break;  // one q=5 curve is enough here
    }
  }
}

TEST(QuotientTree, RootDegreeIsQPlusOne) {
  for (int q : {2, 3, 5, 7}) {
    const auto a = oracle::all_curves(q).front();
    const QuotientTree t(validate_curve(CurveSpec{q, a}));
    EXPECT_EQ(t.successors_in_S(SLabel::O()).size(), static_cast<std::size_t>(q + 1));
  }
}

TEST(QuotientTree, TruncationIsATree) {
  const QuotientTree t(q3());
  const auto tr = t.materialize(3);
  EXPECT_EQ(tr.edges.size() + 1, tr.vertices.size());
  // o, 4 v, 4 rays of 3, 2 e
  EXPECT_EQ(tr.vertices.size(), 1u + 4u + 12u + 2u);
}

TEST(QuotientTree, DotExport) {
  const std::string dot = quotient_tree_dot(QuotientTree(q3()), 2);
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_NE(dot.find("e((2,0))"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}
