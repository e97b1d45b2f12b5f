#include "convexity/geometry/convex_polygon.hpp"

#include "convexity/error.hpp"

#include <cmath>
#include <sstream>

namespace convexity {

ConvexPolygon ConvexPolygon::hull_of(std::vector<Point> points) {
  return ConvexPolygon(monotone_chain<double>(std::move(points)));
}

double ConvexPolygon::area() const {
  if (is_degenerate()) return 0.0;
  return signed_area(vertices_);
}

double ConvexPolygon::perimeter() const {
  if (vertices_.size() == 2) return 2.0 * (vertices_[1] - vertices_[0]).norm();
  return convexity::perimeter(vertices_);
}

double ConvexPolygon::diameter() const { return calipers_diameter<double>(vertices_); }

double ConvexPolygon::signed_distance(const Point& q) const {
  const std::size_t n = vertices_.size();
  if (n == 0) return std::numeric_limits<double>::infinity();
  if (n == 1) return (q - vertices_[0]).norm();
  if (n == 2) return segment_distance(q, vertices_[0], vertices_[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (orient(a, b, q) < 0) inside = false;
    best = std::min(best, segment_distance(q, a, b));
  }
  return inside ? -best : best;
}

Point ConvexPolygon::nearest_boundary_point(const Point& q) const {
  const std::size_t n = vertices_.size();
  if (n == 1) return vertices_[0];
  Point best_point = vertices_[0];
  double best = std::numeric_limits<double>::infinity();
  const std::size_t edges = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < edges; ++i) {
    const Point c = closest_point_on_segment(q, vertices_[i], vertices_[(i + 1) % n]);
    const double d = (q - c).norm();
    if (d < best) {
      best = d;
      best_point = c;
    }
  }
  return best_point;
}

std::vector<Point> clip_half_plane(const std::vector<Point>& poly, const Point& normal, double offset) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    const double sp = normal.dot(p) - offset;
    const double sq = normal.dot(q) - offset;
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

ConvexPolygon erode_convex(const ConvexPolygon& c, double t) {
  if (t < 0) throw Error(ErrorCode::InvariantViolation, "erosion offset must be non-negative");
  if (t == 0) return c;
  auto empty = [&] {
    std::ostringstream msg;
    msg << "eroding the convex polygon by " << t << " leaves nothing (offset reaches the inradius)";
    return Error(ErrorCode::ErodedToEmpty, msg.str());
  };
  if (c.is_degenerate()) throw empty();

  const auto& v = c.vertices();
  std::vector<Point> poly = v;
  for (std::size_t i = 0; i < v.size() && poly.size() >= 3; ++i) {
    const Point e = v[(i + 1) % v.size()] - v[i];
    const Point normal = Point(e.y(), -e.x()).normalized();  // outward for CCW
    poly = clip_half_plane(poly, normal, normal.dot(v[i]) - t);
  }
  if (poly.size() < 3) throw empty();
  auto hull = monotone_chain<double>(std::move(poly));
  if (hull.size() < 3 || signed_area(hull) <= 1e-14 * c.area()) throw empty();
  return ConvexPolygon(std::move(hull));
}

double ConvexPolygon::inradius() const {
  if (is_degenerate()) return 0.0;
  double lo = 0.0;
  double hi = 0.5 * diameter();
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    try {
      (void)erode_convex(*this, mid);
      lo = mid;
    } catch (const Error&) {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace convexity
