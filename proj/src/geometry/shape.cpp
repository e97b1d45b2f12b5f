#include "convexity/geometry/shape.hpp"

#include "convexity/error.hpp"
#include "convexity/geometry/edge_grid.hpp"
#include "convexity/geometry/region.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <sstream>

namespace convexity {

struct Shape::Impl {
  explicit Impl(Geometry g) : geometry(std::move(g)), prepared(geometry) {}

  Geometry geometry;
  PreparedShape prepared;
  bool singleton = false;
};

Point Similarity::operator()(const Point& p) const {
  return offset + scale * (Eigen::Rotation2Dd(angle) * p);
}

namespace {

bool finite(const Point& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

std::string describe(const Point& p) {
  std::ostringstream os;
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

Ring clean_ring(Ring ring, std::size_t polygon, std::size_t index) {
  for (const auto& p : ring) {
    if (!finite(p)) {
      throw Error(ErrorCode::InvariantViolation, "polygon " + std::to_string(polygon) + " ring " +
                                                     std::to_string(index) + ": non-finite coordinate");
    }
  }
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  if (ring.size() < 3 || signed_area(ring) == 0.0) {
    throw Error(ErrorCode::InvariantViolation, "polygon " + std::to_string(polygon) + " ring " +
                                                   std::to_string(index) + ": ring encloses no area");
  }
  return ring;
}

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

struct EdgeRef {
  std::size_t ring;
  std::size_t index;
};

// Rejects proper crossings and collinear overlaps between any two edges.
// Rings may touch at isolated points.
void check_simple(const std::vector<Ring>& rings, const std::vector<std::size_t>& owner, double tol) {
  std::vector<Segment> segments;
  std::vector<EdgeRef> refs;
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const auto& ring = rings[r];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      segments.push_back({ring[i], ring[(i + 1) % ring.size()]});
      refs.push_back({r, i});
    }
  }
  const EdgeGrid grid(segments, tol);
  auto fail = [&](std::size_t i, std::size_t j, const char* what) {
    std::ostringstream msg;
    msg << "polygon " << owner[refs[i].ring] << ": edge " << refs[i].index << " starting at "
        << describe(segments[i].a) << " " << what << " edge " << refs[j].index << " of ring " << refs[j].ring
        << "; rings must be simple and must not cross";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  };
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Point a = segments[i].a;
    const Point b = segments[i].b;
    const double len1 = (b - a).norm();
    grid.visit_along(a, b, [&](std::int32_t jj) {
      const auto j = static_cast<std::size_t>(jj);
      if (j <= i) return true;
      const Point c = segments[j].a;
      const Point d = segments[j].b;
      const double len2 = (d - c).norm();
      const double o1 = orient(a, b, c) / len1;
      const double o2 = orient(a, b, d) / len1;
      const double o3 = orient(c, d, a) / len2;
      const double o4 = orient(c, d, b) / len2;
      const bool clear = std::abs(o1) > tol && std::abs(o2) > tol && std::abs(o3) > tol && std::abs(o4) > tol;
      if (clear && o1 * o2 < 0 && o3 * o4 < 0) fail(i, j, "crosses");
      if (std::abs(o1) <= tol && std::abs(o2) <= tol) {
        const Point dir = (b - a) / len1;
        const double u0 = (c - a).dot(dir);
        const double u1 = (d - a).dot(dir);
        const double overlap = std::min(len1, std::max(u0, u1)) - std::max(0.0, std::min(u0, u1));
        if (overlap > tol) fail(i, j, "overlaps");
      }
      return true;
    });
  }
}

PolygonSet validate_polygons(std::vector<std::vector<Ring>> polygons) {
  if (polygons.empty()) throw Error(ErrorCode::EmptyShape, "polygon set has no polygons");
  PolygonSet out;
  std::vector<std::size_t> owner;
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // [first ring, ring count) per polygon
  Box box;
  for (std::size_t p = 0; p < polygons.size(); ++p) {
    auto& rings = polygons[p];
    if (rings.empty()) throw Error(ErrorCode::EmptyShape, "polygon " + std::to_string(p) + " has no rings");
    spans.emplace_back(out.rings.size(), rings.size());
    for (std::size_t r = 0; r < rings.size(); ++r) {
      Ring ring = clean_ring(std::move(rings[r]), p, r);
      const bool want_ccw = r == 0;
      if ((signed_area(ring) > 0) != want_ccw) std::reverse(ring.begin(), ring.end());
      for (const auto& v : ring) box.extend(v);
      out.rings.push_back(std::move(ring));
      owner.push_back(p);
    }
  }
  const double tol = 1e-9 * box.extent();
  check_simple(out.rings, owner, tol);

  for (std::size_t p = 0; p < spans.size(); ++p) {
    const auto [first, count] = spans[p];
    const Ring& outer = out.rings[first];
    for (std::size_t h = first + 1; h < first + count; ++h) {
      const Ring& hole = out.rings[h];
      if (!ring_parity(outer, hole.front()) || std::abs(signed_area(hole)) >= signed_area(outer)) {
        throw Error(ErrorCode::InvariantViolation, "polygon " + std::to_string(p) + ": hole " +
                                                       std::to_string(h - first) + " is not inside its outer ring");
      }
      for (std::size_t k = first + 1; k < first + count; ++k) {
        if (k != h && ring_parity(out.rings[k], hole.front())) {
          throw Error(ErrorCode::InvariantViolation,
                      "polygon " + std::to_string(p) + ": holes " + std::to_string(h - first) + " and " +
                          std::to_string(k - first) + " are nested");
        }
      }
    }
    // An outer ring may sit inside another polygon only within one of its holes.
    for (std::size_t q = 0; q < spans.size(); ++q) {
      if (q == p) continue;
      const auto [qf, qc] = spans[q];
      bool inside = ring_parity(out.rings[qf], outer.front());
      for (std::size_t h = qf + 1; h < qf + qc && inside; ++h) {
        if (ring_parity(out.rings[h], outer.front())) inside = false;
      }
      if (inside) {
        throw Error(ErrorCode::InvariantViolation,
                    "polygon " + std::to_string(p) + " overlaps polygon " + std::to_string(q));
      }
    }
  }
  return out;
}

}  // namespace

Shape Shape::make(Geometry geometry) {
  auto impl = std::make_shared<Impl>(std::move(geometry));
  if (const auto* ps = std::get_if<PointSet>(&impl->geometry)) {
    impl->singleton = std::all_of(ps->points.begin(), ps->points.end(),
                                  [&](const Point& p) { return p == ps->points.front(); });
  }
  return Shape(std::move(impl));
}

Shape Shape::polygon(Ring outer, std::vector<Ring> holes) {
  std::vector<Ring> rings;
  rings.push_back(std::move(outer));
  for (auto& h : holes) rings.push_back(std::move(h));
  std::vector<std::vector<Ring>> polys;
  polys.push_back(std::move(rings));
  return make(validate_polygons(std::move(polys)));
}

Shape Shape::multipolygon(std::vector<std::vector<Ring>> polygons) {
  return make(validate_polygons(std::move(polygons)));
}

Shape Shape::points(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyShape, "point set is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!finite(points[i])) {
      throw Error(ErrorCode::InvariantViolation, "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  return make(PointSet{std::move(points)});
}

Shape Shape::lp(const LpRegion& region) {
  if (!(region.p > 0.0 && region.p <= 2.0)) {
    std::ostringstream msg;
    msg << "lp region exponent p = " << region.p << " is outside (0, 2]";
    throw Error(ErrorCode::BadP, msg.str());
  }
  if (!(region.scale > 0.0) || !std::isfinite(region.scale)) {
    throw Error(ErrorCode::InvariantViolation, "lp region scale must be positive and finite");
  }
  if (!finite(region.center) || !std::isfinite(region.angle)) {
    throw Error(ErrorCode::InvariantViolation, "lp region center/angle must be finite");
  }
  if (region.boundary_vertices < 16) {
    throw Error(ErrorCode::InvariantViolation, "lp region needs at least 16 boundary vertices");
  }
  return make(region);
}

Shape Shape::lp(double p, double scale, Point center) {
  LpRegion r;
  r.p = p;
  r.scale = scale;
  r.center = center;
  return lp(r);
}

Shape Shape::raster(Raster raster) {
  if (!(raster.cell > 0.0) || !std::isfinite(raster.cell)) {
    throw Error(ErrorCode::InvariantViolation, "raster cell size must be positive");
  }
  if (raster.cols <= 0 || raster.rows <= 0 ||
      raster.mask.size() != static_cast<std::size_t>(raster.cols) * static_cast<std::size_t>(raster.rows)) {
    throw Error(ErrorCode::InvariantViolation, "raster mask size does not match rows x cols");
  }
  if (!finite(raster.origin)) throw Error(ErrorCode::InvariantViolation, "raster origin must be finite");
  if (std::none_of(raster.mask.begin(), raster.mask.end(), [](std::uint8_t v) { return v != 0; })) {
    throw Error(ErrorCode::EmptyShape, "raster has no set cell");
  }
  return make(std::move(raster));
}

Shape Shape::convex(const ConvexPolygon& polygon) {
  if (polygon.is_degenerate()) {
    throw Error(ErrorCode::InvariantViolation, "degenerate convex polygon has no area");
  }
  return make(PolygonSet{{polygon.vertices()}});
}

const Shape::Geometry& Shape::geometry() const { return impl_->geometry; }
bool Shape::is_singleton() const { return impl_->singleton; }
const PreparedShape& Shape::prepared() const { return impl_->prepared; }

Shape transformed(const Shape& shape, const Similarity& s) {
  auto map_rings = [&](const std::vector<Ring>& rings) {
    std::vector<Ring> out;
    for (const auto& r : rings) {
      Ring m;
      m.reserve(r.size());
      for (const auto& p : r) m.push_back(s(p));
      out.push_back(std::move(m));
    }
    return out;
  };
  // Group rings back into {outer, holes...} using the prepared components.
  auto regroup = [&](const std::vector<Ring>& mapped, const PreparedShape& prep) {
    std::vector<std::vector<Ring>> polys;
    for (const auto& c : prep.components()) {
      std::vector<Ring> rings{mapped[c.outer]};
      for (int h : c.holes) rings.push_back(mapped[h]);
      polys.push_back(std::move(rings));
    }
    return Shape::multipolygon(std::move(polys));
  };

  return std::visit(
      [&](const auto& g) -> Shape {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PolygonSet>) {
          return regroup(map_rings(g.rings), shape.prepared());
        } else if constexpr (std::is_same_v<T, PointSet>) {
          std::vector<Point> pts;
          for (const auto& p : g.points) pts.push_back(s(p));
          return Shape::points(std::move(pts));
        } else if constexpr (std::is_same_v<T, LpRegion>) {
          LpRegion r = g;
          r.center = s(g.center);
          r.scale = g.scale * s.scale;
          r.angle = g.angle + s.angle;
          return Shape::lp(r);
        } else {
          if (s.angle == 0.0) {
            Raster r = g;
            r.origin = s(g.origin);
            r.cell = g.cell * s.scale;
            return Shape::raster(std::move(r));
          }
          return regroup(map_rings(shape.prepared().boundary()), shape.prepared());
        }
      },
      shape.geometry());
}

}  // namespace convexity
