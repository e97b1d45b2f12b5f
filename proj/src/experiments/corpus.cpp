#include "convexity/experiments/corpus.hpp"

#include "convexity/error.hpp"
#include "convexity/geometry/region.hpp"

#include <cmath>
#include <numbers>

namespace convexity::corpus {

Ring square(double x0, double y0, double side) {
  return {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}};
}

Ring circle(const Point& c, double r, int n) {
  Ring out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    out.push_back(c + r * Point(std::cos(a), std::sin(a)));
  }
  return out;
}

Shape two_squares(double gap) { return Shape::multipolygon({{square(0, 0, 1)}, {square(1 + gap, 0, 1)}}); }

std::vector<std::vector<Ring>> polygons_of(const Shape& s) {
  const auto& prep = s.prepared();
  if (prep.kind() == PreparedShape::Kind::Points) {
    throw Error(ErrorCode::InvariantViolation, "point sets have no polygon rings");
  }
  std::vector<std::vector<Ring>> out;
  for (const auto& c : prep.components()) {
    std::vector<Ring> poly{prep.boundary()[c.outer]};
    for (int h : c.holes) poly.push_back(prep.boundary()[h]);
    out.push_back(std::move(poly));
  }
  return out;
}

Shape side_by_side(const Shape& a, const Shape& b, double gap) {
  const Box ba = a.prepared().bounds();
  const Box bb = b.prepared().bounds();
  const Point shift(ba.max.x() + gap - bb.min.x(), ba.min.y() - bb.min.y());
  auto polys = polygons_of(a);
  for (auto poly : polygons_of(b)) {
    for (auto& ring : poly) {
      for (auto& p : ring) p += shift;
    }
    polys.push_back(std::move(poly));
  }
  return Shape::multipolygon(std::move(polys));
}

Shape half_discs(double gap, int n) {
  // Right piece: arc from -a to a with cos(a) = gap/2, closed by the chord.
  const double a = std::acos(std::clamp(0.5 * gap, 0.0, 1.0));
  const int m = std::max(4, static_cast<int>(std::ceil(n * a / std::numbers::pi)));
  Ring right;
  for (int k = 0; k <= m; ++k) {
    const double t = -a + 2.0 * a * k / m;
    right.push_back(Point(std::cos(t), std::sin(t)));
  }
  Ring left = right;
  for (auto& p : left) p.x() = -p.x();
  std::reverse(left.begin(), left.end());
  return Shape::multipolygon({{right}, {left}});
}

Shape notched_square(double depth, double width) {
  const double x0 = 0.5 - 0.5 * width;
  const double x1 = 0.5 + 0.5 * width;
  return Shape::polygon({{0, 0}, {1, 0}, {1, 1}, {x1, 1}, {x1, 1 - depth}, {x0, 1 - depth}, {x0, 1}, {0, 1}});
}

Shape random_convex(Generator& gen, int min_vertices, int max_vertices) {
  const int n = min_vertices + static_cast<int>(gen.below(static_cast<std::uint64_t>(max_vertices - min_vertices + 1)));
  const double rx = gen.uniform(0.5, 2.0);
  const double ry = gen.uniform(0.5, 2.0);
  const double rot = gen.uniform(0.0, std::numbers::pi);
  const Point c(gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0));
  std::vector<double> angles;
  for (int k = 0; k < n; ++k) angles.push_back(gen.uniform(0.0, 2.0 * std::numbers::pi));
  std::sort(angles.begin(), angles.end());
  std::vector<Point> pts;
  const Point e(std::cos(rot), std::sin(rot));
  const Point f(-e.y(), e.x());
  for (double t : angles) pts.push_back(c + rx * std::cos(t) * e + ry * std::sin(t) * f);
  // Points on an ellipse are in convex position; the hull removes near-collinear ones.
  auto hull = monotone_chain<double>(pts, 1e-9);
  if (hull.size() < 3) return Shape::polygon(square(c.x(), c.y(), 1.0));
  return Shape::polygon(std::move(hull));
}

Shape random_star(Generator& gen, int min_vertices, int max_vertices) {
  for (;;) {
    const int n = min_vertices + static_cast<int>(gen.below(static_cast<std::uint64_t>(max_vertices - min_vertices + 1)));
    const Point c(gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0));
    const double scale = gen.uniform(0.5, 2.0);
    Ring ring;
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * (k + gen.uniform(0.1, 0.9)) / n;
      const double r = scale * gen.uniform(0.3, 1.0);
      ring.push_back(c + r * Point(std::cos(t), std::sin(t)));
    }
    const double area = signed_area(ring);
    const double hull = signed_area(monotone_chain<double>(ring));
    if (area < 0.99 * hull) return Shape::polygon(std::move(ring));
  }
}

Shape random_two_part(Generator& gen) {
  const Shape a = random_convex(gen, 4, 10);
  const Shape b = random_convex(gen, 4, 10);
  return side_by_side(a, b, gen.uniform(0.2, 2.0));
}

Shape random_shape(Generator& gen) {
  switch (gen.below(4)) {
    case 0:
      return random_convex(gen);
    case 1:
      return random_star(gen);
    case 2:
      return random_two_part(gen);
    default: {
      std::vector<Point> pts;
      const int n = 3 + static_cast<int>(gen.below(10));
      for (int k = 0; k < n; ++k) pts.push_back(Point(gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0)));
      return Shape::points(std::move(pts));
    }
  }
}

}  // namespace convexity::corpus
