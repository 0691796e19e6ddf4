#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "msym/curve.hpp"
#include "msym/error.hpp"

using namespace msym;

namespace {

const CurveSpec kQ3{3, {0, 0, 0, 1, 2}};
const CurveSpec kQ2{2, {0, 0, 1, 1, 1}};

}  // namespace

TEST(Curve, DiscriminantOfTheQ3Curve) {
  EXPECT_EQ(discriminant(kQ3), 2);
  EXPECT_NO_THROW(validate_curve(kQ3));
}

TEST(Curve, CuspidalCubicIsSingular) {
  EXPECT_THROW(validate_curve(CurveSpec{3, {0, 0, 0, 0, 0}}), SingularCurve);
}

TEST(Curve, Q2CurveIsValid) { EXPECT_NO_THROW(validate_curve(kQ2)); }

TEST(Curve, NonPrimeModulusRejected) {
  EXPECT_THROW(validate_curve(CurveSpec{4, {0, 0, 0, 1, 1}}), NonPrimeModulus);
  EXPECT_THROW(validate_curve(CurveSpec{1, {0, 0, 0, 0, 0}}), NonPrimeModulus);
}

TEST(Curve, ValidityAgreesWithSingularPointSearch) {
  for (int q : {2, 3, 5}) {
    std::array<int, 5> a{};
    for (a[0] = 0; a[0] < q; ++a[0])
      for (a[1] = 0; a[1] < q; ++a[1])
        for (a[2] = 0; a[2] < q; ++a[2])
          for (a[3] = 0; a[3] < q; ++a[3])
            for (a[4] = 0; a[4] < q; ++a[4])
              EXPECT_EQ(discriminant(CurveSpec{q, a}) != 0, oracle::smooth(q, a))
                  << oracle::curve_string(q, a);
  }
}

TEST(Curve, FibresOfTheQ3Curve) {
  const Curve c = validate_curve(kQ3);
  const auto f0 = fiber_solutions(c, XCoord::affine(0));
  EXPECT_EQ(f0.type, FiberType::NS);
  EXPECT_TRUE(f0.solutions.empty());

  const auto f1 = fiber_solutions(c, XCoord::affine(1));
  EXPECT_EQ(f1.type, FiberType::S);
  EXPECT_EQ(f1.solutions, (std::vector<Point>{Point::affine(1, 1), Point::affine(1, 2)}));

  const auto f2 = fiber_solutions(c, XCoord::affine(2));
  EXPECT_EQ(f2.type, FiberType::OS);
  EXPECT_EQ(f2.solutions, (std::vector<Point>{Point::affine(2, 0)}));

  const auto fi = fiber_solutions(c, XCoord::infinity());
  EXPECT_EQ(fi.type, FiberType::OS);
  EXPECT_EQ(fi.solutions, (std::vector<Point>{Point::infinity()}));
}

TEST(Curve, FibresMatchBruteForceEverywhere) {
  for (int q : {2, 3, 5}) {
    for (const auto& a : oracle::all_curves(q)) {
      const Curve c = validate_curve(CurveSpec{q, a});
      for (int x = 0; x < q; ++x) {
        const auto ys = oracle::fiber(q, a, x);
        const auto& fc = c.fiber(XCoord::affine(x));
        ASSERT_EQ(fc.solutions.size(), ys.size());
        for (std::size_t i = 0; i < ys.size(); ++i) EXPECT_EQ(fc.solutions[i], Point::affine(x, ys[i]));
        const FiberType want = ys.empty() ? FiberType::NS : ys.size() == 1 ? FiberType::OS : FiberType::S;
        EXPECT_EQ(fc.type, want);
      }
      EXPECT_EQ(c.points().size(), oracle::point_count(q, a));
    }
  }
}

TEST(Curve, RationalPoints) {
  const auto p3 = rational_points(validate_curve(kQ3));
  EXPECT_EQ(p3, (std::vector<Point>{Point::affine(1, 1), Point::affine(1, 2), Point::affine(2, 0),
                                    Point::infinity()}));
  const auto p2 = rational_points(validate_curve(kQ2));
  EXPECT_EQ(p2, std::vector<Point>{Point::infinity()});
}

TEST(Curve, NegationSwapsTheFibre) {
  const Curve c = validate_curve(kQ3);
  EXPECT_EQ(c.negate(Point::affine(1, 1)), Point::affine(1, 2));
  EXPECT_EQ(c.negate(Point::affine(2, 0)), Point::affine(2, 0));
  EXPECT_EQ(c.negate(Point::infinity()), Point::infinity());
}

TEST(Curve, ParseAndPrint) {
  const CurveSpec s = parse_curve_spec("q=3;a=[0,0,0,1,2]");
  EXPECT_EQ(s, kQ3);
  EXPECT_EQ(to_string(s), "q=3;a=[0,0,0,1,2]");
  EXPECT_EQ(parse_curve_spec("q=3;a=[3,0,0,-2,5]").a, (std::array<int, 5>{0, 0, 0, 1, 2}));
  EXPECT_THROW(parse_curve_spec("q=3;a=[0,0,0,1]"), ParseError);
  EXPECT_THROW(parse_curve_spec("garbage"), ParseError);
}
