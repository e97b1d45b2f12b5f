#include "convexity/error.hpp"
#include "convexity/experiments/corpus.hpp"
#include "convexity/geometry/hausdorff.hpp"
#include "convexity/geometry/operations.hpp"
#include "convexity/measures/measures.hpp"
#include "oracles/frozen.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace convexity;

namespace {

EvalConfig fast_config() {
  EvalConfig cfg;
  cfg.samples = 200'000;
  cfg.delta = 1e-3;
  cfg.resolution = 1e-2;
  return cfg;
}

void expect_well_formed(const MeasureResult& r) {
  EXPECT_LE(0.0, r.interval.lo) << to_string(r.id);
  EXPECT_LE(r.interval.lo, r.value) << to_string(r.id);
  EXPECT_LE(r.value, r.interval.hi) << to_string(r.id);
  EXPECT_LE(r.interval.hi, 1.0) << to_string(r.id);
}

}  // namespace

TEST(MeasureIds, RoundTripAndRejectUnknown) {
  for (MeasureId id : kAllMeasures) EXPECT_EQ(parse_measure(to_string(id)), id);
  try {
    parse_measure("hull");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownMeasure);
  }
}

TEST(ConvexFixedPoint, UnitSquareScoresOne) {
  const Shape s = Shape::polygon(corpus::square(0, 0, 1));
  const EvalConfig cfg = fast_config();
  for (MeasureId id : kAllMeasures) {
    const MeasureResult r = evaluate(s, id, cfg);
    expect_well_formed(r);
    if (id == MeasureId::Cihi) {
      EXPECT_TRUE(r.interval.contains(1.0));
      EXPECT_LE(r.interval.width(), 1e-2);
    } else {
      EXPECT_DOUBLE_EQ(r.value, 1.0) << to_string(id);
    }
  }
}

TEST(ConvexFixedPoint, DiscScoresOne) {
  const Shape s = Shape::lp(2.0);
  EXPECT_NEAR(m_env(s).value, 1.0, 1e-9);
  EXPECT_EQ(m_prob(s, SeededStream{}, 10'000).value, 1.0);
  EXPECT_NEAR(m_maxdist(s, 1e-2).value, 1.0, 1e-6);
  EXPECT_NEAR(m_ci(s, 1e-2).value, 1.0, 1e-6);
  EXPECT_NEAR(m_ce(s, 1e-2).value, 1.0, 1e-6);
}

TEST(TwoSquares, AnalyticValues) {
  const double g = 1.0;
  const Shape s = corpus::two_squares(g);
  const double diam = diameter(s);
  const double res = 1e-2 * diam;

  EXPECT_NEAR(m_env(s).value, oracle::two_squares_env(g), 1e-12);

  const MeasureResult md = m_maxdist(s, res);
  EXPECT_TRUE(md.interval.contains(oracle::two_squares_maxdist(g), 1e-12));
  EXPECT_NEAR(md.value, oracle::two_squares_maxdist(g), res);

  const MeasureResult ce = m_ce(s, res);
  EXPECT_NEAR(ce.meta.at("pocket_ratio"), oracle::two_squares_pocket_ratio(g), res);

  EXPECT_NEAR(m_ci(s, res).value, oracle::kTwoSquaresCi, res);

  const MeasureResult pr = m_prob(s, SeededStream{42, 0}, 200'000);
  EXPECT_NEAR(pr.value, oracle::kTwoSquaresProb, 3.0 * *pr.std_error + 1e-12);

  const MeasureResult ch = m_cihi(s, 1e-3 * diam);
  EXPECT_GE(ch.interval.lo, 0.86);
  EXPECT_LE(ch.interval.hi, 0.93);
}

TEST(TwoSquares, EnvAndMaxdistFollowTheGap) {
  for (double g : {0.5, 2.0, 4.0}) {
    const Shape s = corpus::two_squares(g);
    EXPECT_NEAR(m_env(s).value, oracle::two_squares_env(g), 1e-12);
    EXPECT_TRUE(m_maxdist(s, 1e-2).interval.contains(oracle::two_squares_maxdist(g), 1e-12)) << g;
  }
}

TEST(HalfBall, EnvCeAndMaxdist) {
  const Shape s = Shape::lp(0.5);
  EXPECT_NEAR(m_env(s).value, oracle::kLpArea_half / 2.0, 1e-9);
  const MeasureResult ce = m_ce(s, 2e-2);
  EXPECT_NEAR(ce.meta.at("pocket_ratio"), oracle::kHalfBallPocketRatio, 2e-2);
  EXPECT_LE(ce.meta.at("pocket_ratio"), oracle::kHalfBallPocketRatio + 1e-9);
  const MeasureResult md = m_maxdist(s, 2e-2);
  EXPECT_TRUE(md.interval.contains(oracle::kHalfBallMaxdist, 1e-9)) << md.interval.lo << " " << md.interval.hi;
}

TEST(HalfBall, InscribedSubsetBeatsTheCentralSquare) {
  // The square [-1/4, 1/4]^2 lies inside L_{1/2} (its corners satisfy
  // 2 sqrt(1/4) = 1), so the inscribed ratio is at least (1/4) / (2/3).
  const MeasureResult r = m_ci(Shape::lp(0.5), 1e-2);
  EXPECT_GE(r.value, 0.25 / oracle::kLpArea_half - 1e-9);
  EXPECT_LE(r.value, 1.0);
}

TEST(Domain, SingletonIsRejectedByEveryMeasure) {
  const Shape s = Shape::points({{0.5, 0.5}});
  for (MeasureId id : kAllMeasures) {
    try {
      evaluate(s, id, fast_config());
      FAIL() << to_string(id);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::SingletonShape);
      EXPECT_NE(std::string(e.what()).find("single point"), std::string::npos);
    }
  }
}

TEST(Domain, ZeroAreaShapes) {
  const Shape s = Shape::points({{0, 0}, {1, 0}});
  for (MeasureId id : {MeasureId::Env, MeasureId::Prob, MeasureId::Ce, MeasureId::Ci}) {
    try {
      evaluate(s, id, fast_config());
      FAIL() << to_string(id);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ZeroAreaShape);
    }
  }
  // Two points at distance 1: the hull is the segment, whose midpoint is 1/2
  // away from the set.
  EXPECT_TRUE(m_maxdist(s, 1e-2).interval.contains(1.0 / 1.5, 1e-12));
  expect_well_formed(m_cihi(s, 1e-3));
}

TEST(Properties, ResultsAreWellFormedOnTheCorpus) {
  Generator gen(SeededStream{21, 0}, 0);
  EvalConfig cfg = fast_config();
  cfg.samples = 20'000;
  for (int t = 0; t < 12; ++t) {
    const Shape s = corpus::random_shape(gen);
    for (MeasureId id : kAllMeasures) {
      if (!s.prepared().has_area() && id != MeasureId::Cihi && id != MeasureId::Maxdist) continue;
      expect_well_formed(evaluate(s, id, cfg));
    }
  }
}

TEST(Properties, NonConvexShapesScoreBelowOne) {
  Generator gen(SeededStream{22, 0}, 0);
  for (int t = 0; t < 10; ++t) {
    const Shape s = corpus::random_star(gen);
    EXPECT_LT(m_env(s).value, 1.0);
    EXPECT_LT(m_maxdist(s, 1e-3 * diameter(s)).interval.lo, 1.0);
    EXPECT_LT(m_cihi(s, 1e-3 * diameter(s)).interval.lo, 1.0);
  }
}

TEST(Properties, SmallValuesAreReachable) {
  // Ten small squares spread along a line: the hull grows with the spread
  // while the set stays small, and the mid-gap points are ~12 away.
  std::vector<std::vector<Ring>> parts;
  for (int k = 0; k < 10; ++k) parts.push_back({corpus::square(25.0 * k, 0, 0.5)});
  const Shape row = Shape::multipolygon(parts);
  EvalConfig cfg = fast_config();
  cfg.samples = 100'000;
  EXPECT_LT(evaluate(row, MeasureId::Env, cfg).value, 0.1);
  EXPECT_LT(evaluate(row, MeasureId::Maxdist, cfg).value, 0.1);
  EXPECT_LT(evaluate(row, MeasureId::Ci, cfg).value, 0.11);
  EXPECT_LT(evaluate(row, MeasureId::Prob, cfg).value, 0.11);
  // D / (D + d*) with d* <= D can never drop below 1/2.
  EXPECT_GE(evaluate(row, MeasureId::Cihi, cfg).interval.hi, 0.5);

  // A thin L: the triangle between its arms is one convex pocket covering
  // almost all of the hull.
  const Shape ell = Shape::polygon({{0, 0}, {1, 0}, {1, 0.01}, {0.01, 0.01}, {0.01, 1}, {0, 1}});
  EXPECT_LT(evaluate(ell, MeasureId::Ce, cfg).value, 0.1);
}

TEST(ConvDistance, SandwichHolds) {
  Generator gen(SeededStream{23, 0}, 0);
  for (int t = 0; t < 10; ++t) {
    const Shape s = corpus::random_star(gen);
    const double delta = 1e-3 * diameter(s);
    const ConvDistance cd = d_conv_distance(s, delta);
    const Interval hull = hausdorff(s, Shape::convex(convex_hull(s)), delta);
    EXPECT_LE(cd.d.lo, cd.d.hi);
    EXPECT_GE(cd.d.lo, hull.lo / 2.0 - 1e-9);
    EXPECT_LE(cd.d.hi, hull.hi + 1e-9);
    EXPECT_GT(cd.d.lo, 0.0);
  }
}

TEST(Prob, SameSeedSameValueAndThreadsDoNotMatter) {
  const Shape s = corpus::notched_square(0.5);
  const MeasureResult a = m_prob(s, SeededStream{3, 0}, 50'000, 1);
  const MeasureResult b = m_prob(s, SeededStream{3, 0}, 50'000, 3);
  EXPECT_EQ(a.value, b.value);
  const MeasureResult c = m_prob(s, SeededStream{4, 0}, 50'000, 1);
  EXPECT_NE(a.value, c.value);
}
