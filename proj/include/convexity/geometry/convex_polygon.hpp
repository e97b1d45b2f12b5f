#pragma once

#include "convexity/geometry/primitives.hpp"

#include <vector>

namespace convexity {

/// A convex compact given by its counterclockwise vertex list. One vertex is a
/// point, two vertices a segment; three or more form a polygon with strictly
/// convex turns.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// Takes the convex hull of `points`, so any point cloud is accepted.
  static ConvexPolygon hull_of(std::vector<Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool is_degenerate() const { return vertices_.size() < 3; }

  double area() const;
  double perimeter() const;
  double diameter() const;
  Box bounds() const { return bounding_box(vertices_); }

  /// Signed distance: negative inside, zero on the boundary. Degenerate hulls
  /// have no interior and return the plain distance.
  double signed_distance(const Point& q) const;
  Point nearest_boundary_point(const Point& q) const;
  bool contains(const Point& q, double tol) const { return signed_distance(q) <= tol; }

  /// Radius of the largest inscribed disc (zero for degenerate hulls).
  double inradius() const;

 private:
  explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}
  friend ConvexPolygon erode_convex(const ConvexPolygon& c, double t);

  std::vector<Point> vertices_;
};

/// Inner parallel body: every supporting half-plane moved inward by t.
/// Throws ErodedToEmpty once t reaches the inradius.
ConvexPolygon erode_convex(const ConvexPolygon& c, double t);

/// Clip a convex polygon by the half-plane {x : n.x <= offset}.
std::vector<Point> clip_half_plane(const std::vector<Point>& poly, const Point& normal, double offset);

}  // namespace convexity
