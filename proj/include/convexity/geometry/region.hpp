#pragma once

#include "convexity/geometry/convex_polygon.hpp"
#include "convexity/geometry/edge_grid.hpp"
#include "convexity/geometry/shape.hpp"

#include <span>
#include <vector>

namespace convexity {

/// Distance oracle for a compact set K, the interface the Hausdorff search
/// works against. `signed_distance` is within `distance_error()` of the exact
/// signed distance to K (negative in the interior).
class Region {
 public:
  virtual ~Region() = default;

  virtual Box bounds() const = 0;
  virtual double signed_distance(const Point& q) const = 0;
  virtual double distance_error() const { return 0.0; }
  /// A point within `distance_error()` of K that is closest to q.
  virtual Point nearest_point(const Point& q) const = 0;
  /// Points known to belong to K exactly.
  virtual std::span<const Point> support_points() const = 0;
  /// Finite sets are handled by enumeration instead of spatial search.
  virtual bool is_finite() const { return false; }
};

class ConvexRegion final : public Region {
 public:
  explicit ConvexRegion(ConvexPolygon polygon) : polygon_(std::move(polygon)) {}

  const ConvexPolygon& polygon() const { return polygon_; }

  Box bounds() const override { return polygon_.bounds(); }
  double signed_distance(const Point& q) const override { return polygon_.signed_distance(q); }
  Point nearest_point(const Point& q) const override;
  std::span<const Point> support_points() const override { return polygon_.vertices(); }

 private:
  ConvexPolygon polygon_;
};

/// Acceleration structures and exact predicates for one Shape.
///
/// Polygon sets and rasters are handled through their exact boundary rings.
/// Lp regions answer membership and segment queries from the implicit
/// inequality and distance queries from a boundary polygonization whose
/// Hausdorff error is bounded by `boundary_error()`.
class PreparedShape final : public Region {
 public:
  enum class Kind { Polygonal, Implicit, Points };
  enum class Location { Inside, Boundary, Outside };

  struct Component {
    int outer = -1;
    std::vector<int> holes;
    double area = 0.0;
  };

  explicit PreparedShape(const Shape::Geometry& geometry);

  Kind kind() const { return kind_; }
  /// On-boundary tolerance (1e-9 of the shape extent).
  double tolerance() const { return tol_; }
  double area() const { return area_; }
  bool has_area() const { return area_ > 0.0; }
  const std::vector<Ring>& boundary() const { return rings_; }
  const std::vector<Component>& components() const { return components_; }
  double boundary_error() const { return boundary_error_; }
  const ConvexPolygon& hull() const { return hull_; }
  /// Area of the convex hull of the exact set (not of its polygonization).
  double hull_area() const { return hull_area_; }

  Location locate(const Point& q) const;
  bool contains(const Point& q) const;
  /// Membership without the boundary tolerance band; used by samplers.
  bool contains_open(const Point& q) const;
  bool in_interior(const Point& q) const;

  /// [a,b] lies in the closed set.
  bool contains_segment(const Point& a, const Point& b) const;
  /// [a,b] does not meet the interior of the set.
  bool segment_avoids_interior(const Point& a, const Point& b) const;

  double distance(const Point& q) const { return std::max(0.0, signed_distance(q)); }

  /// Vertices whose presence strictly inside a convex polygon proves that the
  /// polygon is not contained in the set (hole boundaries).
  const std::vector<Point>& hole_vertices() const { return hole_vertices_; }
  /// Boundary vertices of every ring (all points of a point set).
  const std::vector<Point>& vertices() const { return vertices_; }
  /// One point per component with large clearance.
  const std::vector<Point>& interior_seeds() const { return seeds_; }

  // Region
  Box bounds() const override { return bounds_; }
  double signed_distance(const Point& q) const override;
  double distance_error() const override { return 2.0 * boundary_error_; }
  Point nearest_point(const Point& q) const override;
  std::span<const Point> support_points() const override { return vertices_; }
  bool is_finite() const override { return kind_ == Kind::Points; }

  /// Implicit form |u_x|^p + |u_y|^p evaluated in the local frame (Lp only).
  double implicit_value(const Point& q) const;

 private:
  Point to_local(const Point& q) const;
  bool parity_inside(const Point& q) const;
  bool polygonal_segment_test(const Point& a, const Point& b, bool closed) const;
  bool implicit_segment_contained(const Point& a, const Point& b) const;
  bool implicit_segment_avoids(const Point& a, const Point& b) const;
  void finish_polygonal();

  Kind kind_ = Kind::Polygonal;
  std::vector<Ring> rings_;
  std::vector<Component> components_;
  std::vector<Point> vertices_;
  std::vector<Point> hole_vertices_;
  std::vector<Point> seeds_;
  EdgeGrid grid_;
  ConvexPolygon hull_;
  Box bounds_;
  double tol_ = 0.0;
  double area_ = 0.0;
  double hull_area_ = 0.0;
  double boundary_error_ = 0.0;
  LpRegion lp_;
};

/// Boundary of the union of closed raster cells as oriented rings.
std::vector<Ring> trace_raster(const Raster& raster);

/// Uniform-angle polygonization of an Lp region boundary, axis tips included.
/// `n` is rounded up to a multiple of 4.
Ring lp_boundary(const LpRegion& region, int n);

/// Area of the unit Lp ball by adaptive quadrature.
double lp_unit_area(double p);

}  // namespace convexity
