#pragma once

#include "convexity/geometry/region.hpp"
#include "convexity/geometry/shape.hpp"
#include "convexity/interval.hpp"

#include <cstddef>

namespace convexity {

struct HausdorffOptions {
  /// Target width of the returned interval (on top of the distance errors of
  /// the two regions).
  double tolerance = 1e-3;
  /// Budget of quadtree cells; the interval stays certified when it runs out,
  /// only wider.
  std::size_t max_cells = 4'000'000;
};

/// Certified enclosure of sup_{x in from} d(x, to).
///
/// Best-first branch and bound over a quadtree on `from`'s bounding box. A cell
/// with center m and half-diagonal r is discarded when it provably misses
/// `from` (signed distance above r) and otherwise bounded above by
/// max(0, sd_to(m) + r), since signed distances are 1-Lipschitz. Lower bounds
/// come from points of `from` itself.
Interval directed_hausdorff(const Region& from, const Region& to, const HausdorffOptions& options = {});

/// Symmetric Hausdorff distance between two regions.
Interval hausdorff(const Region& a, const Region& b, const HausdorffOptions& options = {});

/// Hausdorff distance between two shapes with an interval of width at most
/// `delta` (plus the polygonization error of Lp boundaries). Throws
/// PitchTooCoarse when some boundary ring is shorter than 1.5 * delta, i.e.
/// would get fewer than three samples at pitch delta / 2.
Interval hausdorff(const Shape& a, const Shape& b, double delta);

/// Check used by `hausdorff` and by measures taking a pitch.
void check_pitch(const Shape& s, double delta);

}  // namespace convexity
