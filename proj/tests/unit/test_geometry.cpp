#include "convexity/error.hpp"
#include "convexity/experiments/corpus.hpp"
#include "convexity/geometry/operations.hpp"
#include "convexity/geometry/region.hpp"
#include "convexity/geometry/shape.hpp"
#include "oracles/frozen.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace convexity;

namespace {

Shape unit_square() { return Shape::polygon(corpus::square(0, 0, 1)); }

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IoError;
}

}  // namespace

TEST(Hull, SquareWithInteriorPointsIsTheSquare) {
  const Shape s = Shape::points({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.2, 0.7}});
  const ConvexPolygon h = convex_hull(s);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_DOUBLE_EQ(h.area(), 1.0);
}

TEST(Hull, CollinearPointsGiveASegment) {
  const Shape s = Shape::points({{0, 0}, {1, 1}, {2, 2}, {0.5, 0.5}});
  const ConvexPolygon h = convex_hull(s);
  EXPECT_TRUE(h.is_degenerate());
  EXPECT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(hull_area(s), 0.0);
}

TEST(Hull, SubLinearLpHullIsTheTipDiamond) {
  const Shape s = Shape::lp(0.5);
  EXPECT_NEAR(hull_area(s), 2.0, 1e-12);
  EXPECT_NEAR(area(s), oracle::kLpArea_half, 1e-9);
}

TEST(Hull, HullContainsEveryVertexOfRandomShapes) {
  Generator gen(SeededStream{7, 1}, 0);
  for (int t = 0; t < 50; ++t) {
    const Shape s = corpus::random_shape(gen);
    const ConvexPolygon h = convex_hull(s);
    for (const auto& v : s.prepared().vertices()) EXPECT_LE(h.signed_distance(v), 1e-9);
  }
}

TEST(Diameter, UnitSquareIsSqrt2) { EXPECT_NEAR(diameter(unit_square()), std::numbers::sqrt2, 1e-15); }

TEST(Diameter, SingletonIsZero) { EXPECT_EQ(diameter(Shape::points({{3, 4}})), 0.0); }

TEST(Diameter, LpBallIsTwoForEveryP) {
  for (double p : {0.05, 0.5, 1.0, 2.0}) EXPECT_NEAR(diameter(Shape::lp(p)), 2.0, 1e-12) << p;
}

TEST(Diameter, MatchesBruteForceOverVertices) {
  Generator gen(SeededStream{11, 0}, 0);
  for (int t = 0; t < 40; ++t) {
    const Shape s = corpus::random_shape(gen);
    const auto& v = s.prepared().vertices();
    double best = 0.0;
    for (const auto& a : v) {
      for (const auto& b : v) best = std::max(best, (a - b).norm());
    }
    EXPECT_NEAR(diameter(s), best, 1e-12);
  }
}

TEST(Area, PolygonWithHole) {
  const Shape s = Shape::polygon(corpus::square(0, 0, 4), {corpus::square(1, 1, 1)});
  EXPECT_DOUBLE_EQ(area(s), 15.0);
  EXPECT_DOUBLE_EQ(hull_area(s), 16.0);
  EXPECT_FALSE(contains_point(s, {1.5, 1.5}));
  EXPECT_TRUE(contains_point(s, {0.5, 1.5}));
  EXPECT_TRUE(contains_point(s, {1.0, 1.5}));  // hole boundary belongs to the shape
}

TEST(Area, LpBallsMatchTheGammaFormula) {
  EXPECT_NEAR(area(Shape::lp(0.05)), oracle::kLpArea_0_05, 1e-12 * oracle::kLpArea_0_05 + 1e-22);
  EXPECT_NEAR(area(Shape::lp(1.0 / 3.0)), oracle::kLpArea_third, 1e-10);
  EXPECT_NEAR(area(Shape::lp(1.0)), oracle::kLpArea_one, 1e-12);
  EXPECT_NEAR(area(Shape::lp(1.5)), oracle::kLpArea_three_halves, 1e-10);
  EXPECT_NEAR(area(Shape::lp(2.0)), oracle::kLpArea_two, 1e-10);
}

TEST(Area, PointSetsHaveNone) { EXPECT_EQ(area(Shape::points({{0, 0}, {1, 0}, {0, 1}})), 0.0); }

TEST(Segment, ConvexPolygonContainsEveryChord) {
  const Shape s = unit_square();
  EXPECT_TRUE(contains_segment(s, {0, 0}, {1, 1}));
  EXPECT_TRUE(contains_segment(s, {0, 0}, {1, 0}));  // along the boundary
  EXPECT_FALSE(contains_segment(s, {0.5, 0.5}, {1.5, 0.5}));
}

TEST(Segment, NotchBlocksTheChordAcrossIt) {
  const Shape s = corpus::notched_square(0.5, 0.2);
  EXPECT_FALSE(contains_segment(s, {0.2, 0.9}, {0.8, 0.9}));
  EXPECT_TRUE(contains_segment(s, {0.2, 0.3}, {0.8, 0.3}));
  // Touching the notch corner from below stays inside.
  EXPECT_TRUE(contains_segment(s, {0.2, 0.5}, {0.8, 0.5}));
}

TEST(Segment, TwoSquaresGapIsOutside) {
  const Shape s = corpus::two_squares(1.0);
  EXPECT_FALSE(contains_segment(s, {0.5, 0.5}, {2.5, 0.5}));
  EXPECT_TRUE(contains_segment(s, {2.1, 0.1}, {2.9, 0.9}));
}

TEST(Segment, SubLinearLpCrossesOnlyThroughTheCenter) {
  const Shape s = Shape::lp(0.5);
  EXPECT_TRUE(contains_segment(s, {-1, 0}, {1, 0}));
  EXPECT_TRUE(contains_segment(s, {0.25, 0.25}, {-0.25, -0.25}));
  EXPECT_FALSE(contains_segment(s, {0.9, 0.0}, {0.0, 0.9}));
  // Near-axis segment at small p: rounding at the axis crossing must not reject it.
  const Shape thin = Shape::lp(0.05);
  EXPECT_TRUE(contains_segment(thin, {-0.5, 0.0}, {0.5, 0.0}));
}

TEST(Segment, AgreesWithDenseSamplingOnRandomPolygons) {
  Generator gen(SeededStream{5, 2}, 0);
  int disagreements = 0;
  for (int t = 0; t < 30; ++t) {
    const Shape s = corpus::random_star(gen);
    const Box box = s.prepared().bounds();
    for (int k = 0; k < 40; ++k) {
      const Point a = gen.uniform_in(box);
      const Point b = gen.uniform_in(box);
      if (!contains_point(s, a) || !contains_point(s, b)) continue;
      bool dense = true;
      for (int i = 0; i <= 2000 && dense; ++i) dense = contains_point(s, a + (i / 2000.0) * (b - a));
      // Dense sampling can only miss thin excursions, so exact containment
      // implies the sampled answer.
      if (contains_segment(s, a, b) && !dense) ++disagreements;
    }
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Distance, PolygonDistanceIsExact) {
  const Shape s = unit_square();
  EXPECT_DOUBLE_EQ(distance_to_shape(s, {2, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_shape(s, {0.5, 0.5}), 0.0);
  EXPECT_NEAR(distance_to_shape(s, {2, 2}), std::numbers::sqrt2, 1e-15);
  EXPECT_EQ(distance_error(s), 0.0);
}

TEST(Distance, LpDistanceWithinItsErrorBound) {
  const Shape disc = Shape::lp(2.0);
  const double err = distance_error(disc);
  EXPECT_LT(err, 1e-5);
  for (double r : {1.5, 3.0}) {
    for (double a = 0; a < 6.28; a += 0.37) {
      EXPECT_NEAR(distance_to_shape(disc, {r * std::cos(a), r * std::sin(a)}), r - 1.0, err + 1e-12);
    }
  }
}

TEST(Construction, RejectsSelfIntersectingRing) {
  EXPECT_EQ(code_of([] { Shape::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}); }), ErrorCode::InvariantViolation);
}

TEST(Construction, RejectsEmptyInputs) {
  EXPECT_EQ(code_of([] { Shape::points({}); }), ErrorCode::EmptyShape);
  EXPECT_EQ(code_of([] { Shape::multipolygon({}); }), ErrorCode::EmptyShape);
}

TEST(Construction, RejectsOverlappingPolygons) {
  EXPECT_EQ(code_of([] { Shape::multipolygon({{corpus::square(0, 0, 2)}, {corpus::square(1, 1, 2)}}); }),
            ErrorCode::InvariantViolation);
}

TEST(Construction, RejectsBadLpParameters) {
  EXPECT_EQ(code_of([] { Shape::lp(0.0); }), ErrorCode::BadP);
  EXPECT_EQ(code_of([] { Shape::lp(-1.0); }), ErrorCode::BadP);
}

TEST(Construction, SingletonFlag) {
  EXPECT_TRUE(Shape::points({{1, 1}, {1, 1}}).is_singleton());
  EXPECT_FALSE(Shape::points({{1, 1}, {1, 2}}).is_singleton());
  EXPECT_FALSE(unit_square().is_singleton());
}

TEST(Raster, LShapeTracesToOneRing) {
  Raster r;
  r.cols = 2;
  r.rows = 2;
  r.mask = {1, 1, 1, 0};
  const Shape s = Shape::raster(r);
  EXPECT_DOUBLE_EQ(area(s), 3.0);
  EXPECT_DOUBLE_EQ(hull_area(s), 3.5);
  EXPECT_EQ(s.prepared().components().size(), 1u);
}

TEST(Raster, DiagonalCellsStaySeparate) {
  Raster r;
  r.cols = 2;
  r.rows = 2;
  r.mask = {1, 0, 0, 1};
  const Shape s = Shape::raster(r);
  EXPECT_EQ(s.prepared().components().size(), 2u);
  EXPECT_DOUBLE_EQ(area(s), 2.0);
}

TEST(Transform, SimilarityScalesAreaAndDiameter) {
  Generator gen(SeededStream{3, 3}, 0);
  for (int t = 0; t < 20; ++t) {
    const Shape s = corpus::random_star(gen);
    Similarity sim;
    sim.scale = gen.uniform(0.1, 10.0);
    sim.angle = gen.uniform(0.0, 6.28);
    sim.offset = Point(gen.uniform(-5, 5), gen.uniform(-5, 5));
    const Shape image = transformed(s, sim);
    EXPECT_NEAR(area(image), sim.scale * sim.scale * area(s), 1e-9 * area(image));
    EXPECT_NEAR(diameter(image), sim.scale * diameter(s), 1e-9 * diameter(image));
  }
}

TEST(Transform, LpStaysImplicit) {
  Similarity sim;
  sim.scale = 3.0;
  sim.angle = 0.4;
  const Shape image = transformed(Shape::lp(0.5), sim);
  ASSERT_TRUE(std::holds_alternative<LpRegion>(image.geometry()));
  EXPECT_NEAR(area(image), 9.0 * oracle::kLpArea_half, 1e-9);
}
