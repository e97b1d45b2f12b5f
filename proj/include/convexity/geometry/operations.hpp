#pragma once

#include "convexity/geometry/convex_polygon.hpp"
#include "convexity/geometry/shape.hpp"

namespace convexity {

/// Convex hull of the shape. For Lp regions with p < 1 this is the exact hull
/// (the square spanned by the four axis tips), not the hull of the
/// polygonization.
ConvexPolygon convex_hull(const Shape& s);

/// Largest pairwise distance, by rotating calipers on the hull.
double diameter(const Shape& s);

/// Lebesgue measure; zero for point sets.
double area(const Shape& s);

/// Area of the convex hull of the exact set.
double hull_area(const Shape& s);

/// Closed-set membership with the on-boundary tolerance.
bool contains_point(const Shape& s, const Point& q);

/// Whether the closed segment [a,b] lies in the shape. The test is exact for
/// every representation (up to the on-boundary tolerance), so no subdivision
/// resolution is needed and `tol` is ignored.
bool contains_segment(const Shape& s, const Point& a, const Point& b, double tol = 0.0);

/// Euclidean distance from q to the shape (0 inside).
double distance_to_shape(const Shape& s, const Point& q);

/// Upper bound on the error of `distance_to_shape` (polygonization of Lp
/// boundaries; zero for polygons, rasters and point sets).
double distance_error(const Shape& s);

}  // namespace convexity
