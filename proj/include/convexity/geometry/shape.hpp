#pragma once

#include "convexity/geometry/convex_polygon.hpp"
#include "convexity/geometry/primitives.hpp"

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace convexity {

/// Polygons with holes. Outer rings run counterclockwise, holes clockwise.
struct PolygonSet {
  std::vector<Ring> rings;
};

/// A finite set of points.
struct PointSet {
  std::vector<Point> points;
};

/// { center + scale * R(angle) * u : |u_x|^p + |u_y|^p <= 1 }.
struct LpRegion {
  double p = 1.0;
  double scale = 1.0;
  Point center = Point::Zero();
  double angle = 0.0;
  /// Vertex count of the boundary polygonization used for distance queries.
  int boundary_vertices = 4096;
};

/// Union of the closed cells whose mask bit is set. Row 0 is the row at
/// origin.y(); cells grow towards +x and +y.
struct Raster {
  Point origin = Point::Zero();
  double cell = 1.0;
  int cols = 0;
  int rows = 0;
  std::vector<std::uint8_t> mask;  // row-major, rows * cols

  bool at(int col, int row) const {
    return col >= 0 && row >= 0 && col < cols && row < rows && mask[static_cast<std::size_t>(row) * cols + col] != 0;
  }
};

class PreparedShape;

/// Similarity transform x -> offset + scale * R(angle) * x.
struct Similarity {
  double scale = 1.0;
  double angle = 0.0;
  Point offset = Point::Zero();

  Point operator()(const Point& p) const;
};

/// A non-empty compact subset of the plane. Immutable; copies share the
/// validated geometry and its prepared acceleration structures.
class Shape {
 public:
  using Geometry = std::variant<PolygonSet, PointSet, LpRegion, Raster>;

  /// One polygon: the outer ring followed by its holes, any orientation.
  static Shape polygon(Ring outer, std::vector<Ring> holes = {});
  /// Several polygons, each given as {outer, holes...}.
  static Shape multipolygon(std::vector<std::vector<Ring>> polygons);
  static Shape points(std::vector<Point> points);
  static Shape lp(const LpRegion& region);
  static Shape lp(double p, double scale = 1.0, Point center = Point::Zero());
  static Shape raster(Raster raster);
  /// Non-degenerate convex polygon as a one-ring polygon shape.
  static Shape convex(const ConvexPolygon& polygon);

  const Geometry& geometry() const;
  bool is_singleton() const;
  const PreparedShape& prepared() const;

 private:
  struct Impl;
  explicit Shape(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Shape make(Geometry geometry);

  std::shared_ptr<const Impl> impl_;
};

/// Image of a shape under a similarity. Lp regions stay implicit; rasters
/// become polygon sets when rotated.
Shape transformed(const Shape& shape, const Similarity& s);

}  // namespace convexity
