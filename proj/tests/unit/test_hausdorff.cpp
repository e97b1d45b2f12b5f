#include "convexity/error.hpp"
#include "convexity/experiments/corpus.hpp"
#include "convexity/geometry/hausdorff.hpp"
#include "convexity/geometry/operations.hpp"
#include "oracles/frozen.hpp"

#include <gtest/gtest.h>

using namespace convexity;

namespace {

// Brute-force directed distance between finite point sets.
double directed_points(const std::vector<Point>& a, const std::vector<Point>& b) {
  double worst = 0.0;
  for (const auto& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b) best = std::min(best, (p - q).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST(Hausdorff, DiscAgainstSquare) {
  const Shape disc = Shape::lp(2.0);
  const Shape square = Shape::polygon(corpus::square(-1, -1, 2));
  const double delta = 1e-3;
  const Interval d = hausdorff(disc, square, delta);
  EXPECT_TRUE(d.contains(oracle::kSqrt2Minus1)) << d.lo << " " << d.hi;
  EXPECT_LE(d.width(), delta + 2.0 * distance_error(disc));
}

TEST(Hausdorff, IdenticalShapesAreAtZero) {
  const Shape s = corpus::notched_square(0.3);
  const Interval d = hausdorff(s, s, 1e-3);
  EXPECT_EQ(d.lo, 0.0);
  EXPECT_LE(d.hi, 1e-3);
}

TEST(Hausdorff, TranslatedSquare) {
  const Shape a = Shape::polygon(corpus::square(0, 0, 1));
  const Shape b = Shape::polygon(corpus::square(0.3, 0.4, 1));
  EXPECT_TRUE(hausdorff(a, b, 1e-4).contains(0.5));
}

TEST(Hausdorff, ShapeAgainstItsHullIsHalfTheGap) {
  const Shape s = corpus::two_squares(1.0);
  const Shape hull = Shape::convex(convex_hull(s));
  EXPECT_TRUE(hausdorff(s, hull, 1e-3).contains(0.5));
}

TEST(Hausdorff, PointSetsMatchBruteForce) {
  Generator gen(SeededStream{9, 0}, 0);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> a, b;
    for (int k = 0; k < 12; ++k) a.push_back(gen.uniform_in({{0, 0}, {1, 1}}));
    for (int k = 0; k < 9; ++k) b.push_back(gen.uniform_in({{0, 0}, {1, 1}}));
    const double exact = std::max(directed_points(a, b), directed_points(b, a));
    EXPECT_TRUE(hausdorff(Shape::points(a), Shape::points(b), 1e-3).contains(exact, 1e-12));
  }
}

TEST(Hausdorff, SymmetricIntervalsOverlap) {
  Generator gen(SeededStream{12, 0}, 0);
  for (int t = 0; t < 20; ++t) {
    const Shape a = corpus::random_shape(gen);
    const Shape b = corpus::random_shape(gen);
    EXPECT_TRUE(hausdorff(a, b, 1e-2).overlaps(hausdorff(b, a, 1e-2)));
  }
}

TEST(Hausdorff, DirectedIsAtMostSymmetric) {
  Generator gen(SeededStream{13, 0}, 0);
  for (int t = 0; t < 20; ++t) {
    const Shape a = corpus::random_shape(gen);
    const Shape b = corpus::random_shape(gen);
    HausdorffOptions o;
    o.tolerance = 1e-3;
    const Interval dir = directed_hausdorff(a.prepared(), b.prepared(), o);
    const Interval sym = hausdorff(a.prepared(), b.prepared(), o);
    EXPECT_LE(dir.lo, sym.hi + 1e-12);
  }
}

TEST(Hausdorff, PitchChecks) {
  const Shape s = Shape::polygon(corpus::square(0, 0, 1));
  EXPECT_THROW(hausdorff(s, s, 0.0), Error);
  try {
    hausdorff(s, s, 10.0);
    FAIL() << "coarse pitch accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PitchTooCoarse);
  }
}
