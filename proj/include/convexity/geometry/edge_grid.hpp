#pragma once

#include "convexity/geometry/primitives.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace convexity {

struct Segment {
  Point a;
  Point b;
};

/// Uniform bucket grid over a set of segments. Supports nearest-segment queries,
/// even-odd parity along a horizontal ray and enumeration of the segments
/// bucketed in the cells crossed by a query segment.
///
/// Zero-length segments are allowed, so the same index also serves finite point
/// sets.
class EdgeGrid {
 public:
  struct Nearest {
    double distance = std::numeric_limits<double>::infinity();
    Point point = Point::Zero();
    std::int32_t segment = -1;
  };

  EdgeGrid() = default;
  /// `dilation` grows every segment box before bucketing; queries that need
  /// touching tests within a tolerance should pass at least that tolerance.
  explicit EdgeGrid(std::vector<Segment> segments, double dilation = 0.0);

  const std::vector<Segment>& segments() const { return segments_; }
  const Box& bounds() const { return bounds_; }
  bool empty() const { return segments_.empty(); }

  Nearest nearest(const Point& q) const;

  /// Number of segments crossed by the ray from q towards +x; a segment counts
  /// when q.y lies in its half-open y extent.
  int ray_crossings(const Point& q) const;

  /// Calls `visit(index)` for every segment bucketed in a cell that [a,b]
  /// passes through. Indices may repeat. Returns false as soon as the visitor
  /// does.
  template <typename Visitor>
  bool visit_along(const Point& a, const Point& b, Visitor&& visit) const;

 private:
  int cell_x(double x) const {
    return std::clamp(static_cast<int>(std::floor((x - bounds_.min.x()) / cell_)), 0, nx_ - 1);
  }
  int cell_y(double y) const {
    return std::clamp(static_cast<int>(std::floor((y - bounds_.min.y()) / cell_)), 0, ny_ - 1);
  }
  const std::vector<std::int32_t>& cell(int ix, int iy) const { return cells_[iy * nx_ + ix]; }

  std::vector<Segment> segments_;
  Box bounds_;
  double cell_ = 1.0;
  int nx_ = 0;
  int ny_ = 0;
  std::vector<std::vector<std::int32_t>> cells_;
};

template <typename Visitor>
bool EdgeGrid::visit_along(const Point& a, const Point& b, Visitor&& visit) const {
  if (segments_.empty()) return true;
  // Liang-Barsky clip against the grid bounds.
  const Point d = b - a;
  double t0 = 0.0;
  double t1 = 1.0;
  for (int axis = 0; axis < 2; ++axis) {
    const double lo = bounds_.min[axis];
    const double hi = bounds_.max[axis];
    if (d[axis] == 0.0) {
      if (a[axis] < lo || a[axis] > hi) return true;
      continue;
    }
    double ta = (lo - a[axis]) / d[axis];
    double tb = (hi - a[axis]) / d[axis];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return true;
  }
  const Point p0 = a + t0 * d;
  const Point p1 = a + t1 * d;

  int ix = cell_x(p0.x());
  int iy = cell_y(p0.y());
  const int ex = cell_x(p1.x());
  const int ey = cell_y(p1.y());
  const Point dd = p1 - p0;
  const int sx = dd.x() > 0 ? 1 : (dd.x() < 0 ? -1 : 0);
  const int sy = dd.y() > 0 ? 1 : (dd.y() < 0 ? -1 : 0);
  const double inf = std::numeric_limits<double>::infinity();
  auto boundary = [&](int i, int s, int axis) {
    return bounds_.min[axis] + (i + (s > 0 ? 1 : 0)) * cell_;
  };
  double tmx = sx != 0 ? (boundary(ix, sx, 0) - p0.x()) / dd.x() : inf;
  double tmy = sy != 0 ? (boundary(iy, sy, 1) - p0.y()) / dd.y() : inf;
  const double tdx = sx != 0 ? cell_ / std::abs(dd.x()) : inf;
  const double tdy = sy != 0 ? cell_ / std::abs(dd.y()) : inf;

  for (int guard = nx_ + ny_ + 4; guard > 0; --guard) {
    for (std::int32_t idx : cell(ix, iy)) {
      if (!visit(idx)) return false;
    }
    if (ix == ex && iy == ey) break;
    if (tmx < tmy) {
      ix += sx;
      tmx += tdx;
    } else {
      iy += sy;
      tmy += tdy;
    }
    if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_) break;
  }
  return true;
}

}  // namespace convexity
