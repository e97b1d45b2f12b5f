#include "convexity/geometry/region.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <Eigen/Geometry>

#include <cmath>
#include <map>
#include <numbers>

namespace convexity {

namespace {

// Tolerance on the implicit Lp form |x|^p + |y|^p around the level 1.
constexpr double kImplicitTol = 1e-9;

bool ring_parity(const Ring& ring, const Point& q) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y() > q.y()) != (b.y() > q.y())) {
      const double x = a.x() + (q.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (x > q.x()) inside = !inside;
    }
  }
  return inside;
}

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// |x(t)|^p + |y(t)|^p along a line in the local frame of an Lp region.
struct LineForm {
  Point a;
  Point d;
  double p;

  double value(double t) const {
    return std::pow(std::abs(a.x() + t * d.x()), p) + std::pow(std::abs(a.y() + t * d.y()), p);
  }
  // Parameter where the line meets the given axis, or NaN.
  double cut(int axis) const {
    return d[axis] != 0.0 ? -a[axis] / d[axis] : std::numeric_limits<double>::quiet_NaN();
  }
  // value(t) with coordinates at their own cut parameter taken as exactly
  // zero. For small p the rounding residue r of a + t d would otherwise add
  // |r|^p, which is far from negligible (1e-17^0.05 is about 0.14).
  double value_snapped(double t) const {
    double v = 0.0;
    for (int axis = 0; axis < 2; ++axis) {
      if (t != cut(axis)) v += std::pow(std::abs(a[axis] + t * d[axis]), p);
    }
    return v;
  }
  // Derivative with the coordinate signs fixed to (sx, sy); an exactly zero
  // coordinate yields the one-sided limit for p < 1.
  double slope(double t, double sx, double sy) const {
    auto term = [&](double x, double dx, double s) {
      if (dx == 0.0) return 0.0;
      return p * std::pow(std::abs(x), p - 1.0) * s * dx;
    };
    return term(a.x() + t * d.x(), d.x(), sx) + term(a.y() + t * d.y(), d.y(), sy);
  }
};

// max over [t0,t1] of a concave f is <= limit. Bisection on the sign of f'
// with the tangent-intersection bound as certificate.
template <typename F, typename DF>
bool concave_max_below(F f, DF df, double t0, double t1, double limit) {
  double flo = f(t0), fhi = f(t1);
  if (flo > limit || fhi > limit) return false;
  double lo = t0, hi = t1;
  double dlo = df(t0), dhi = df(t1);
  if (dlo <= 0 || dhi >= 0) return true;
  for (int it = 0; it < 200; ++it) {
    if (std::isfinite(dlo) && std::isfinite(dhi) && dlo > dhi) {
      const double t = (fhi - flo + dlo * lo - dhi * hi) / (dlo - dhi);
      const double bound = flo + dlo * (t - lo);
      if (bound <= limit) return true;
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return true;
    const double fm = f(mid);
    if (fm > limit) return false;
    const double dm = df(mid);
    if (dm > 0) {
      lo = mid, flo = fm, dlo = dm;
    } else if (dm < 0) {
      hi = mid, fhi = fm, dhi = dm;
    } else {
      return true;
    }
  }
  return true;
}

// min over [t0,t1] of a convex f is >= limit.
template <typename F, typename DF>
bool convex_min_above(F f, DF df, double t0, double t1, double limit) {
  return concave_max_below([&](double t) { return -f(t); }, [&](double t) { return -df(t); }, t0, t1, -limit);
}

}  // namespace

Point ConvexRegion::nearest_point(const Point& q) const {
  if (polygon_.signed_distance(q) <= 0) return q;
  return polygon_.nearest_boundary_point(q);
}

Ring lp_boundary(const LpRegion& region, int n) {
  const int quarter = std::max(1, (n + 3) / 4);
  const int count = 4 * quarter;
  const double q = 2.0 / region.p;
  const Eigen::Rotation2Dd rot(region.angle);
  Ring ring;
  ring.reserve(count);
  for (int k = 0; k < count; ++k) {
    Point local;
    if (k % quarter == 0) {
      static constexpr int tips[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      local = Point(tips[k / quarter][0], tips[k / quarter][1]);
    } else {
      const double theta = 2.0 * std::numbers::pi * k / count;
      const double c = std::cos(theta), s = std::sin(theta);
      local = Point(sgn(c) * std::pow(std::abs(c), q), sgn(s) * std::pow(std::abs(s), q));
    }
    const Point world = region.center + region.scale * (rot * local);
    if (ring.empty() || ring.back() != world) ring.push_back(world);
  }
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  return ring;
}

double lp_unit_area(double p) {
  // x = u^(1/p) maps the quarter ball onto (1/p) * int_0^1 u^(1/p-1) (1-u)^(1/p) du.
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double a = 1.0 / p - 1.0;
  const double b = 1.0 / p;
  auto f = [&](double u, double complement) {
    const double one_minus_u = complement > 0 ? complement : 1.0 - u;
    return std::pow(u, a) * std::pow(one_minus_u, b);
  };
  const double quarter = integrator.integrate(f, 0.0, 1.0) / p;
  return 4.0 * quarter;
}

namespace {

// Bound on the distance between an arc of |x|^p+|y|^p=1 inside one quadrant
// and its chord: the arc lies in the chord's bounding box and, being convex
// as a curve, in the triangle cut by the end tangents.
double lp_chord_error(double p, int count) {
  const double q = 2.0 / p;
  auto point = [&](double th) {
    const double c = std::cos(th), s = std::sin(th);
    return Point(sgn(c) * std::pow(std::abs(c), q), sgn(s) * std::pow(std::abs(s), q));
  };
  auto tangent = [&](double th) {
    const double c = std::cos(th), s = std::sin(th);
    return Point(-q * std::pow(std::abs(c), q - 1.0) * s, q * std::pow(std::abs(s), q - 1.0) * c);
  };
  const int quarter = count / 4;
  double worst = 0.0;
  // One quadrant suffices: the polygonization is symmetric.
  for (int k = 0; k < quarter; ++k) {
    const double t0 = std::numbers::pi / 2 * k / quarter;
    const double t1 = std::numbers::pi / 2 * (k + 1) / quarter;
    const Point p0 = k == 0 ? Point(1, 0) : point(t0);
    const Point p1 = k + 1 == quarter ? Point(0, 1) : point(t1);
    const Point chord = p1 - p0;
    const double len = chord.norm();
    if (len == 0.0) continue;
    double bound = std::abs(chord.x() * chord.y()) / len;
    const Point d0 = tangent(t0);
    const Point d1 = tangent(t1);
    const double den = cross(d0, d1);
    if (d0.norm() > 0 && d1.norm() > 0 && std::abs(den) > 1e-14 * d0.norm() * d1.norm()) {
      const double s = cross(chord, d1) / den;
      const double w = cross(chord, d0) / den;
      if (s >= 0 && w <= 0) {
        const Point apex = p0 + s * d0;
        bound = std::min(bound, std::abs(orient(p0, p1, apex)) / len);
      }
    }
    worst = std::max(worst, bound);
  }
  return worst;
}

}  // namespace

PreparedShape::PreparedShape(const Shape::Geometry& geometry) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PolygonSet>) {
          kind_ = Kind::Polygonal;
          rings_ = g.rings;
          finish_polygonal();
          area_ = 0.0;
          for (const auto& c : components_) area_ += c.area;
        } else if constexpr (std::is_same_v<T, Raster>) {
          kind_ = Kind::Polygonal;
          rings_ = trace_raster(g);
          finish_polygonal();
          const auto cells = std::count_if(g.mask.begin(), g.mask.end(), [](std::uint8_t v) { return v != 0; });
          area_ = static_cast<double>(cells) * g.cell * g.cell;
        } else if constexpr (std::is_same_v<T, PointSet>) {
          kind_ = Kind::Points;
          vertices_ = g.points;
          bounds_ = bounding_box(vertices_);
          tol_ = 1e-9 * bounds_.extent();
          std::vector<Segment> segs;
          for (const auto& p : vertices_) segs.push_back({p, p});
          grid_ = EdgeGrid(std::move(segs), tol_);
          hull_ = ConvexPolygon::hull_of(vertices_);
          hull_area_ = hull_.area();
        } else {
          kind_ = Kind::Implicit;
          lp_ = g;
          Ring ring = lp_boundary(g, g.boundary_vertices);
          const int count = 4 * ((g.boundary_vertices + 3) / 4);
          boundary_error_ = g.scale * (lp_chord_error(g.p, count) + 1e-15);
          rings_.push_back(ring);
          vertices_ = ring;
          bounds_ = bounding_box(vertices_);
          tol_ = 1e-9 * bounds_.extent();
          std::vector<Segment> segs;
          for (std::size_t i = 0; i < ring.size(); ++i) segs.push_back({ring[i], ring[(i + 1) % ring.size()]});
          grid_ = EdgeGrid(std::move(segs), 4 * tol_);
          area_ = g.scale * g.scale * lp_unit_area(g.p);
          components_.push_back({0, {}, area_});
          seeds_.push_back(g.center);
          if (g.p < 1.0) {
            const Eigen::Rotation2Dd rot(g.angle);
            std::vector<Point> tips;
            for (const Point& t : {Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)}) {
              tips.push_back(g.center + g.scale * (rot * t));
            }
            hull_ = ConvexPolygon::hull_of(tips);
            hull_area_ = 2.0 * g.scale * g.scale;
          } else {
            hull_ = ConvexPolygon::hull_of(vertices_);
            hull_area_ = area_;
          }
        }
      },
      geometry);
}

void PreparedShape::finish_polygonal() {
  for (const auto& r : rings_) vertices_.insert(vertices_.end(), r.begin(), r.end());
  bounds_ = bounding_box(vertices_);
  tol_ = 1e-9 * bounds_.extent();
  std::vector<Segment> segs;
  for (const auto& r : rings_) {
    for (std::size_t i = 0; i < r.size(); ++i) segs.push_back({r[i], r[(i + 1) % r.size()]});
  }
  grid_ = EdgeGrid(std::move(segs), 4 * tol_);
  hull_ = ConvexPolygon::hull_of(vertices_);
  hull_area_ = hull_.area();

  std::vector<double> areas;
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    areas.push_back(signed_area(rings_[i]));
    if (areas.back() > 0) components_.push_back({static_cast<int>(i), {}, areas.back()});
  }
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    if (areas[i] > 0) continue;
    hole_vertices_.insert(hole_vertices_.end(), rings_[i].begin(), rings_[i].end());
    Component* owner = nullptr;
    for (auto& c : components_) {
      if (ring_parity(rings_[c.outer], rings_[i].front()) &&
          (owner == nullptr || areas[c.outer] < areas[owner->outer])) {
        owner = &c;
      }
    }
    if (owner != nullptr) {
      owner->holes.push_back(static_cast<int>(i));
      owner->area += areas[i];
    }
  }

  // A deep interior point per component from a coarse scan of its outer ring box.
  for (const auto& c : components_) {
    const Ring& outer = rings_[c.outer];
    const Box box = bounding_box(outer);
    Point best = outer.front();
    double clearance = 0.0;
    constexpr int kScan = 24;
    for (int i = 0; i < kScan; ++i) {
      for (int j = 0; j < kScan; ++j) {
        const Point q = box.min + Point((i + 0.5) / kScan * box.size().x(), (j + 0.5) / kScan * box.size().y());
        if (!ring_parity(outer, q)) continue;
        const double sd = signed_distance(q);
        if (-sd > clearance) {
          clearance = -sd;
          best = q;
        }
      }
    }
    seeds_.push_back(best);
  }
}

Point PreparedShape::to_local(const Point& q) const {
  return Eigen::Rotation2Dd(-lp_.angle) * (q - lp_.center) / lp_.scale;
}

double PreparedShape::implicit_value(const Point& q) const {
  const Point u = to_local(q);
  return std::pow(std::abs(u.x()), lp_.p) + std::pow(std::abs(u.y()), lp_.p);
}

bool PreparedShape::parity_inside(const Point& q) const { return (grid_.ray_crossings(q) & 1) != 0; }

bool PreparedShape::contains(const Point& q) const {
  switch (kind_) {
    case Kind::Implicit:
      return implicit_value(q) <= 1.0 + kImplicitTol;
    case Kind::Points:
      return grid_.nearest(q).distance <= tol_;
    case Kind::Polygonal:
      return parity_inside(q) || grid_.nearest(q).distance <= tol_;
  }
  return false;
}

bool PreparedShape::contains_open(const Point& q) const {
  switch (kind_) {
    case Kind::Implicit:
      return implicit_value(q) <= 1.0;
    case Kind::Points:
      return false;
    case Kind::Polygonal:
      return parity_inside(q);
  }
  return false;
}

bool PreparedShape::in_interior(const Point& q) const {
  switch (kind_) {
    case Kind::Implicit:
      return implicit_value(q) < 1.0 - kImplicitTol;
    case Kind::Points:
      return false;
    case Kind::Polygonal:
      return parity_inside(q) && grid_.nearest(q).distance > tol_;
  }
  return false;
}

PreparedShape::Location PreparedShape::locate(const Point& q) const {
  if (in_interior(q)) return Location::Inside;
  return contains(q) ? Location::Boundary : Location::Outside;
}

double PreparedShape::signed_distance(const Point& q) const {
  const double d = grid_.nearest(q).distance;
  if (kind_ == Kind::Points) return d;
  return parity_inside(q) ? -d : d;
}

Point PreparedShape::nearest_point(const Point& q) const {
  if (kind_ != Kind::Points && parity_inside(q)) return q;
  return grid_.nearest(q).point;
}

bool PreparedShape::polygonal_segment_test(const Point& a, const Point& b, bool closed) const {
  auto ok = [&](const Point& q) { return closed ? contains(q) : !in_interior(q); };
  if (!ok(a) || !ok(b)) return false;
  const Point ab = b - a;
  const double len = ab.norm();
  if (len <= tol_) return true;

  std::vector<double> ts{0.0, 1.0};
  auto add_param = [&](const Point& x) {
    const double t = (x - a).dot(ab) / (len * len);
    if (t > 0.0 && t < 1.0) ts.push_back(t);
  };
  bool crossed = false;
  grid_.visit_along(a, b, [&](std::int32_t idx) {
    const auto& s = grid_.segments()[idx];
    const double o1 = orient(a, b, s.a) / len;
    const double o2 = orient(a, b, s.b) / len;
    if ((o1 > tol_ && o2 > tol_) || (o1 < -tol_ && o2 < -tol_)) return true;
    const double elen = (s.b - s.a).norm();
    if (elen > 0.0) {
      const double o3 = orient(s.a, s.b, a) / elen;
      const double o4 = orient(s.a, s.b, b) / elen;
      const bool clear = std::abs(o1) > tol_ && std::abs(o2) > tol_ && std::abs(o3) > tol_ && std::abs(o4) > tol_;
      if (clear && o1 * o2 < 0 && o3 * o4 < 0) {
        crossed = true;
        return false;
      }
    }
    if (std::abs(o1) <= tol_) add_param(s.a);
    if (std::abs(o2) <= tol_) add_param(s.b);
    if (o1 * o2 < 0) add_param(s.a + (o1 / (o1 - o2)) * (s.b - s.a));
    return true;
  });
  if (crossed) return false;
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 1e-12) continue;
    if (!ok(a + 0.5 * (ts[i] + ts[i + 1]) * ab)) return false;
  }
  return true;
}

bool PreparedShape::implicit_segment_contained(const Point& a, const Point& b) const {
  const Point la = to_local(a);
  const Point lb = to_local(b);
  const LineForm line{la, lb - la, lp_.p};
  const double limit = 1.0 + kImplicitTol;
  if (line.value(0.0) > limit || line.value(1.0) > limit) return false;
  if (lp_.p >= 1.0) return true;  // convex region

  std::vector<double> cuts{0.0, 1.0};
  for (int axis = 0; axis < 2; ++axis) {
    const double t = line.cut(axis);
    if (t > 0.0 && t < 1.0) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double t0 = cuts[i], t1 = cuts[i + 1];
    if (t1 <= t0) continue;
    const double tm = 0.5 * (t0 + t1);
    const double sx = sgn(line.a.x() + tm * line.d.x());
    const double sy = sgn(line.a.y() + tm * line.d.y());
    const bool ok = concave_max_below([&](double t) { return line.value_snapped(t); },
                                      [&](double t) { return line.slope(t, sx, sy); }, t0, t1, limit);
    if (!ok) return false;
  }
  return true;
}

bool PreparedShape::implicit_segment_avoids(const Point& a, const Point& b) const {
  const Point la = to_local(a);
  const Point lb = to_local(b);
  const LineForm line{la, lb - la, lp_.p};
  const double limit = 1.0 - kImplicitTol;
  if (line.value(0.0) < limit || line.value(1.0) < limit) return false;
  if (lp_.p < 1.0) {
    // Concave between axis crossings: the minimum sits at a cut point.
    for (int axis = 0; axis < 2; ++axis) {
      const double t = line.cut(axis);
      if (t > 0.0 && t < 1.0 && line.value_snapped(t) < limit) return false;
    }
    return true;
  }
  auto slope = [&](double t) {
    return line.slope(t, sgn(line.a.x() + t * line.d.x()), sgn(line.a.y() + t * line.d.y()));
  };
  return convex_min_above([&](double t) { return line.value(t); }, slope, 0.0, 1.0, limit);
}

bool PreparedShape::contains_segment(const Point& a, const Point& b) const {
  switch (kind_) {
    case Kind::Implicit:
      return implicit_segment_contained(a, b);
    case Kind::Points:
      return (b - a).norm() <= tol_ && contains(a);
    case Kind::Polygonal:
      return polygonal_segment_test(a, b, true);
  }
  return false;
}

bool PreparedShape::segment_avoids_interior(const Point& a, const Point& b) const {
  switch (kind_) {
    case Kind::Implicit:
      return implicit_segment_avoids(a, b);
    case Kind::Points:
      return true;
    case Kind::Polygonal:
      return polygonal_segment_test(a, b, false);
  }
  return true;
}

std::vector<Ring> trace_raster(const Raster& raster) {
  using Key = std::pair<int, int>;
  struct DirectedEdge {
    Key from;
    Key to;
    bool used = false;
  };
  std::vector<DirectedEdge> edges;
  std::multimap<Key, std::size_t> outgoing;
  auto add = [&](Key a, Key b) {
    outgoing.emplace(a, edges.size());
    edges.push_back({a, b});
  };
  // Set cell on the left of every directed edge.
  for (int r = 0; r < raster.rows; ++r) {
    for (int c = 0; c < raster.cols; ++c) {
      if (!raster.at(c, r)) continue;
      if (!raster.at(c, r - 1)) add({c, r}, {c + 1, r});
      if (!raster.at(c + 1, r)) add({c + 1, r}, {c + 1, r + 1});
      if (!raster.at(c, r + 1)) add({c + 1, r + 1}, {c, r + 1});
      if (!raster.at(c - 1, r)) add({c, r + 1}, {c, r});
    }
  }

  auto direction = [](const DirectedEdge& e) { return Key{e.to.first - e.from.first, e.to.second - e.from.second}; };
  std::vector<Ring> rings;
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (edges[start].used) continue;
    std::vector<Key> loop;
    std::size_t cur = start;
    while (!edges[cur].used) {
      edges[cur].used = true;
      loop.push_back(edges[cur].from);
      const Key din = direction(edges[cur]);
      // Prefer the left turn so cells touching at a corner stay separate rings.
      std::size_t next = edges.size();
      int best_rank = 3;
      auto [lo, hi] = outgoing.equal_range(edges[cur].to);
      for (auto it = lo; it != hi; ++it) {
        if (edges[it->second].used && it->second != start) continue;
        const Key dout = direction(edges[it->second]);
        const int turn = din.first * dout.second - din.second * dout.first;
        const int rank = turn > 0 ? 0 : (turn == 0 ? 1 : 2);
        if (rank < best_rank) {
          best_rank = rank;
          next = it->second;
        }
      }
      if (next == edges.size()) break;
      cur = next;
    }
    // Drop collinear lattice vertices.
    Ring ring;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Key& prev = loop[(i + n - 1) % n];
      const Key& here = loop[i];
      const Key& next = loop[(i + 1) % n];
      const long turn = static_cast<long>(here.first - prev.first) * (next.second - here.second) -
                        static_cast<long>(here.second - prev.second) * (next.first - here.first);
      if (turn != 0) {
        ring.push_back(raster.origin + raster.cell * Point(here.first, here.second));
      }
    }
    if (ring.size() >= 3) rings.push_back(std::move(ring));
  }
  return rings;
}

}  // namespace convexity
