#pragma once

// Scalar-generic planar primitives. Everything here is a free function over
// Eigen expressions so callers can write `cross(b - a, c - a)` directly.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace convexity {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Vec2<double>;
using Ring = std::vector<Point>;

/// z-component of the 3-D cross product of two planar vectors.
template <typename DA, typename DB>
typename DA::Scalar cross(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
template <typename DA, typename DB, typename DC>
typename DA::Scalar orient(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                           const Eigen::MatrixBase<DC>& c) {
  return cross(b - a, c - a);
}

/// Parameter in [0,1] of the point of segment [a,b] closest to q.
template <typename DQ, typename DA, typename DB>
typename DQ::Scalar closest_parameter(const Eigen::MatrixBase<DQ>& q, const Eigen::MatrixBase<DA>& a,
                                      const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DQ::Scalar;
  const Vec2<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  if (len2 <= Scalar(0)) return Scalar(0);
  return std::clamp<Scalar>((q - a).dot(ab) / len2, Scalar(0), Scalar(1));
}

template <typename DQ, typename DA, typename DB>
Vec2<typename DQ::Scalar> closest_point_on_segment(const Eigen::MatrixBase<DQ>& q,
                                                   const Eigen::MatrixBase<DA>& a,
                                                   const Eigen::MatrixBase<DB>& b) {
  const auto t = closest_parameter(q, a, b);
  return a + t * (b - a);
}

template <typename DQ, typename DA, typename DB>
typename DQ::Scalar segment_distance(const Eigen::MatrixBase<DQ>& q, const Eigen::MatrixBase<DA>& a,
                                     const Eigen::MatrixBase<DB>& b) {
  return (q - closest_point_on_segment(q, a, b)).norm();
}

/// Shoelace signed area of a closed ring (first vertex not repeated).
template <typename Scalar>
Scalar signed_area(std::span<const Vec2<Scalar>> ring) {
  Scalar acc(0);
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) acc += cross(ring[i], ring[(i + 1) % n]);
  return acc / Scalar(2);
}

inline double signed_area(const Ring& ring) { return signed_area<double>(std::span<const Point>(ring)); }

template <typename Scalar>
Scalar perimeter(std::span<const Vec2<Scalar>> ring) {
  Scalar acc(0);
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) acc += (ring[(i + 1) % n] - ring[i]).norm();
  return acc;
}

inline double perimeter(const Ring& ring) { return perimeter<double>(std::span<const Point>(ring)); }

/// Axis-aligned bounding box.
template <typename Scalar>
struct Box2 {
  Vec2<Scalar> min{std::numeric_limits<Scalar>::infinity(), std::numeric_limits<Scalar>::infinity()};
  Vec2<Scalar> max{-std::numeric_limits<Scalar>::infinity(), -std::numeric_limits<Scalar>::infinity()};

  bool empty() const { return !(min.x() <= max.x() && min.y() <= max.y()); }
  void extend(const Vec2<Scalar>& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  void extend(const Box2& o) {
    if (o.empty()) return;
    extend(o.min);
    extend(o.max);
  }
  Vec2<Scalar> size() const { return max - min; }
  Vec2<Scalar> center() const { return (min + max) / Scalar(2); }
  Scalar extent() const { return empty() ? Scalar(0) : size().maxCoeff(); }
  bool contains(const Vec2<Scalar>& p, Scalar slack = Scalar(0)) const {
    return p.x() >= min.x() - slack && p.x() <= max.x() + slack && p.y() >= min.y() - slack &&
           p.y() <= max.y() + slack;
  }
};

using Box = Box2<double>;

template <typename Range>
Box bounding_box(const Range& points) {
  Box b;
  for (const auto& p : points) b.extend(p);
  return b;
}

/// Andrew's monotone chain. Returns the hull counterclockwise without collinear
/// vertices; a collinear input yields its two extreme points, a single point
/// yields itself. `rel_eps` scales the collinearity test by the edge lengths.
template <typename Scalar>
std::vector<Vec2<Scalar>> monotone_chain(std::vector<Vec2<Scalar>> pts, Scalar rel_eps = Scalar(1e-12)) {
  std::sort(pts.begin(), pts.end(), [](const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  auto turns_left = [rel_eps](const Vec2<Scalar>& o, const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
    const Vec2<Scalar> u = a - o;
    const Vec2<Scalar> v = b - o;
    return cross(u, v) > rel_eps * u.norm() * v.norm();
  };

  std::vector<Vec2<Scalar>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

/// Rotating calipers over a counterclockwise convex polygon; returns the
/// largest vertex-to-vertex distance.
template <typename Scalar>
Scalar calipers_diameter(std::span<const Vec2<Scalar>> hull) {
  const std::size_t n = hull.size();
  if (n < 2) return Scalar(0);
  if (n == 2) return (hull[1] - hull[0]).norm();
  Scalar best(0);
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<Scalar>& a = hull[i];
    const Vec2<Scalar>& b = hull[(i + 1) % n];
    while (std::abs(orient(a, b, hull[(j + 1) % n])) > std::abs(orient(a, b, hull[j]))) j = (j + 1) % n;
    best = std::max({best, (hull[j] - a).norm(), (hull[j] - b).norm()});
  }
  return best;
}

}  // namespace convexity
