#include "convexity/geometry/operations.hpp"

#include "convexity/geometry/region.hpp"

namespace convexity {

ConvexPolygon convex_hull(const Shape& s) { return s.prepared().hull(); }

double diameter(const Shape& s) {
  if (s.is_singleton()) return 0.0;
  return s.prepared().hull().diameter();
}

double area(const Shape& s) { return s.prepared().area(); }

double hull_area(const Shape& s) { return s.prepared().hull_area(); }

bool contains_point(const Shape& s, const Point& q) { return s.prepared().contains(q); }

bool contains_segment(const Shape& s, const Point& a, const Point& b, double /*tol*/) {
  return s.prepared().contains_segment(a, b);
}

double distance_to_shape(const Shape& s, const Point& q) {
  const auto& prep = s.prepared();
  return prep.contains(q) ? 0.0 : prep.distance(q);
}

double distance_error(const Shape& s) { return s.prepared().distance_error(); }

}  // namespace convexity
