#pragma once

#include "convexity/geometry/convex_polygon.hpp"
#include "convexity/geometry/shape.hpp"
#include "convexity/interval.hpp"
#include "convexity/sampling/stream.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace convexity {

enum class MeasureId { Cihi, Prob, Env, Maxdist, Ce, Ci };

inline constexpr std::array<MeasureId, 6> kAllMeasures{MeasureId::Cihi, MeasureId::Prob, MeasureId::Env,
                                                       MeasureId::Maxdist, MeasureId::Ce, MeasureId::Ci};

/// Stable identifiers: cihi, prob, env, maxdist, ce, ci.
std::string_view to_string(MeasureId id);
/// Throws UnknownMeasure.
MeasureId parse_measure(std::string_view name);

struct MeasureResult {
  MeasureId id = MeasureId::Env;
  double value = 0.0;
  /// 0 <= lo <= value <= hi <= 1.
  Interval interval;
  std::optional<double> std_error;
  std::string method;
  /// Extra numbers (pocket ratio, sample counts, raw distances...).
  std::map<std::string, double> meta;

  bool exact() const { return interval.lo == interval.hi; }
};

/// A convex compact with a certified Hausdorff enclosure to some shape.
struct ConvexApprox {
  ConvexPolygon polygon;
  Interval hdist;
};

struct ConvDistance {
  /// Certified enclosure of the distance from the shape to the convex compacts.
  Interval d;
  /// Hausdorff enclosure between the shape and its hull.
  Interval hull_distance;
  /// Best candidate found by the refinement (the hull when nothing beat it).
  ConvexApprox best;
  /// Erosion offset of `best`.
  double offset = 0.0;
};

/// area(s) / area(co(s)). Throws ZeroAreaShape.
MeasureResult m_env(const Shape& s);

/// Probability that the segment between two independent uniform points of s
/// lies in s. Interval is value +- 3 standard errors.
MeasureResult m_prob(const Shape& s, const SeededStream& stream, std::uint64_t n, unsigned threads = 0);

/// 1 / (1 + sup_{x in co(s)} d(x, s)); the supremum is enclosed to within
/// grid * sqrt(2) / 2.
MeasureResult m_maxdist(const Shape& s, double grid);

/// Score 1 - r with r the largest convex pocket area over the hull area. The
/// search only finds lower bounds r_found on r, so value = 1 - r_found is the
/// upper end of [m_env(s), 1 - r_found]. meta["pocket_ratio"] = r_found.
MeasureResult m_ce(const Shape& s, double resolution);

/// Largest inscribed convex subset over area(s). value = found ratio is the
/// lower end of an interval closed by the largest component area ratio.
MeasureResult m_ci(const Shape& s, double resolution);

/// Certified interval for inf_C d_H(s, C) over convex compacts C.
ConvDistance d_conv_distance(const Shape& s, double delta);

/// D / (D + d*) with D the diameter and d* = d_conv_distance.
MeasureResult m_cihi(const Shape& s, double delta);

struct EvalConfig {
  std::uint64_t seed = 42;
  std::uint64_t samples = 1'000'000;
  /// Hausdorff pitch relative to the shape diameter.
  double delta = 1e-3;
  /// Grid and raster resolution relative to the shape diameter.
  double resolution = 1e-2;
  unsigned threads = 0;
};

/// Runs one measure with pitches scaled by the shape diameter.
MeasureResult evaluate(const Shape& s, MeasureId id, const EvalConfig& cfg);

/// Throws SingletonShape for single-point shapes.
void require_non_singleton(const Shape& s, MeasureId id);

}  // namespace convexity
