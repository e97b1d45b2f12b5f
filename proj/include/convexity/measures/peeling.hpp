#pragma once

#include "convexity/geometry/convex_polygon.hpp"
#include "convexity/geometry/region.hpp"

#include <vector>

namespace convexity {

/// A closed planar domain searched for large convex subsets. A convex polygon
/// P lies in the domain when every edge passes `segment_ok`, no obstacle point
/// lies strictly inside P and its centroid is in the domain.
class PeelDomain {
 public:
  virtual ~PeelDomain() = default;

  virtual Box bounds() const = 0;
  virtual bool contains(const Point& q) const = 0;
  virtual bool segment_ok(const Point& a, const Point& b) const = 0;
  /// Positive inside, roughly the distance to the domain boundary.
  virtual double clearance(const Point& q) const = 0;
  /// Points of the excluded set; every bounded excluded part owns at least one.
  virtual const std::vector<Point>& obstacles() const = 0;
  /// Boundary vertices of the domain, used as hull candidates.
  virtual std::vector<Point> vertices() const = 0;
  /// Extra starting points for region growing.
  virtual std::vector<Point> seeds() const { return {}; }
};

/// The closed set itself (largest inscribed convex subset).
class ShapeDomain final : public PeelDomain {
 public:
  explicit ShapeDomain(const PreparedShape& shape) : shape_(shape) {}

  Box bounds() const override { return shape_.bounds(); }
  bool contains(const Point& q) const override { return shape_.contains(q); }
  bool segment_ok(const Point& a, const Point& b) const override { return shape_.contains_segment(a, b); }
  double clearance(const Point& q) const override { return -shape_.signed_distance(q); }
  const std::vector<Point>& obstacles() const override { return shape_.hole_vertices(); }
  std::vector<Point> vertices() const override { return shape_.vertices(); }
  std::vector<Point> seeds() const override { return shape_.interior_seeds(); }

 private:
  const PreparedShape& shape_;
};

/// co(A) minus the interior of A: the union of the pockets.
class PocketDomain final : public PeelDomain {
 public:
  explicit PocketDomain(const PreparedShape& shape);

  Box bounds() const override { return shape_.hull().bounds(); }
  bool contains(const Point& q) const override;
  bool segment_ok(const Point& a, const Point& b) const override;
  double clearance(const Point& q) const override;
  const std::vector<Point>& obstacles() const override { return obstacles_; }
  std::vector<Point> vertices() const override;

 private:
  const PreparedShape& shape_;
  std::vector<Point> obstacles_;
};

struct PeelOptions {
  /// Labeling raster pitch (capped to `max_cells_per_axis` cells per axis).
  double resolution = 1e-2;
  int max_cells_per_axis = 256;
  /// Vertex budget for region growing.
  int max_vertices = 64;
  /// Growing stops once the move step falls below resolution * step_fraction.
  double step_fraction = 1e-2;
  /// Components grown from their best raster cell, largest first.
  int grown_components = 8;
};

struct PeelResult {
  /// Largest verified convex polygon (empty when nothing was found).
  ConvexPolygon polygon;
  double area = 0.0;
  /// Raster components of the domain.
  int components = 0;
  int candidates_checked = 0;
};

/// Heuristic search for the largest-area convex polygon inside `domain`.
/// The result is always a verified subset, so its area is a lower bound.
PeelResult largest_convex_subset(const PeelDomain& domain, const PeelOptions& options);

/// Full verification of a candidate polygon against the domain.
bool convex_polygon_in_domain(const PeelDomain& domain, const std::vector<Point>& polygon);

}  // namespace convexity
