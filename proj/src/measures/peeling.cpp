#include "convexity/measures/peeling.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace convexity {

PocketDomain::PocketDomain(const PreparedShape& shape) : shape_(shape) {
  if (const auto& seeds = shape.interior_seeds(); shape.kind() == PreparedShape::Kind::Implicit) {
    obstacles_ = seeds;
  } else {
    obstacles_ = shape.vertices();
  }
}

bool PocketDomain::contains(const Point& q) const {
  return shape_.hull().contains(q, shape_.tolerance()) && !shape_.in_interior(q);
}

bool PocketDomain::segment_ok(const Point& a, const Point& b) const {
  return contains(a) && contains(b) && shape_.segment_avoids_interior(a, b);
}

double PocketDomain::clearance(const Point& q) const {
  return std::min(-shape_.hull().signed_distance(q), shape_.signed_distance(q));
}

std::vector<Point> PocketDomain::vertices() const {
  std::vector<Point> out = shape_.hull().vertices();
  out.insert(out.end(), shape_.vertices().begin(), shape_.vertices().end());
  return out;
}

namespace {

double polygon_tolerance(const PeelDomain& domain) { return 1e-9 * std::max(domain.bounds().extent(), 1e-300); }

bool strictly_inside(const std::vector<Point>& poly, const Point& q, double tol) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const double len = (b - a).norm();
    if (len == 0.0) continue;
    if (orient(a, b, q) / len <= tol) return false;
  }
  return true;
}

Point centroid(const std::vector<Point>& poly) {
  Point c = Point::Zero();
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    const double w = cross(p, q);
    a += w;
    c += w * (p + q);
  }
  if (std::abs(a) < 1e-300) {
    return std::accumulate(poly.begin(), poly.end(), Point(Point::Zero())) / static_cast<double>(poly.size());
  }
  return c / (3.0 * a);
}

// Point buckets for the obstacle queries of the growing loop.
class PointGrid {
 public:
  PointGrid(const std::vector<Point>& points, const Box& box) : points_(points), box_(box) {
    n_ = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(points.size()))), 1, 256);
    cell_ = std::max(box.size().maxCoeff(), 1e-300) / n_;
    buckets_.resize(static_cast<std::size_t>(n_) * n_);
    for (std::size_t i = 0; i < points.size(); ++i) {
      buckets_[index(cx(points[i].x()), cy(points[i].y()))].push_back(static_cast<int>(i));
    }
  }

  template <typename F>
  bool any_in(const Box& query, F&& pred) const {
    if (points_.empty()) return false;
    for (int j = cy(query.min.y()); j <= cy(query.max.y()); ++j) {
      for (int i = cx(query.min.x()); i <= cx(query.max.x()); ++i) {
        for (int k : buckets_[index(i, j)]) {
          const Point& p = points_[k];
          if (query.contains(p) && pred(p)) return true;
        }
      }
    }
    return false;
  }

 private:
  int cx(double x) const { return std::clamp(static_cast<int>(std::floor((x - box_.min.x()) / cell_)), 0, n_ - 1); }
  int cy(double y) const { return std::clamp(static_cast<int>(std::floor((y - box_.min.y()) / cell_)), 0, n_ - 1); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * n_ + i; }

  const std::vector<Point>& points_;
  Box box_;
  int n_ = 1;
  double cell_ = 1.0;
  std::vector<std::vector<int>> buckets_;
};

struct Labeling {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  Point origin;
  std::vector<int> label;  // -1 outside
  std::vector<std::vector<int>> cells;  // per component

  Point center(int idx) const { return origin + h * Point(idx % nx + 0.5, idx / nx + 0.5); }
  int cell_of(const Point& q) const {
    const int i = static_cast<int>(std::floor((q.x() - origin.x()) / h));
    const int j = static_cast<int>(std::floor((q.y() - origin.y()) / h));
    if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
    return j * nx + i;
  }
};

Labeling label_domain(const PeelDomain& domain, const PeelOptions& options) {
  Labeling lab;
  const Box box = domain.bounds();
  const double extent = std::max(box.size().maxCoeff(), 1e-300);
  lab.h = std::max(options.resolution, extent / options.max_cells_per_axis);
  lab.nx = std::max(1, static_cast<int>(std::ceil(box.size().x() / lab.h)));
  lab.ny = std::max(1, static_cast<int>(std::ceil(box.size().y() / lab.h)));
  // Center the lattice on the box.
  lab.origin = box.center() - 0.5 * lab.h * Point(lab.nx, lab.ny);
  const int total = lab.nx * lab.ny;
  std::vector<char> in(total, 0);
  for (int idx = 0; idx < total; ++idx) in[idx] = domain.contains(lab.center(idx)) ? 1 : 0;

  lab.label.assign(total, -1);
  for (int start = 0; start < total; ++start) {
    if (!in[start] || lab.label[start] >= 0) continue;
    const int id = static_cast<int>(lab.cells.size());
    lab.cells.emplace_back();
    std::queue<int> todo;
    todo.push(start);
    lab.label[start] = id;
    while (!todo.empty()) {
      const int c = todo.front();
      todo.pop();
      lab.cells[id].push_back(c);
      const int i = c % lab.nx, j = c / lab.nx;
      const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (const auto& [a, b] : nb) {
        if (a < 0 || b < 0 || a >= lab.nx || b >= lab.ny) continue;
        const int k = b * lab.nx + a;
        // Neighbours only join when the segment between them stays in the
        // domain; parts touching along a thin excluded sliver stay apart.
        if (in[k] && lab.label[k] < 0 && domain.segment_ok(lab.center(c), lab.center(k))) {
          lab.label[k] = id;
          todo.push(k);
        }
      }
    }
  }
  return lab;
}

class Grower {
 public:
  Grower(const PeelDomain& domain, const PeelOptions& options)
      : domain_(domain),
        options_(options),
        tol_(polygon_tolerance(domain)),
        obstacles_(domain.obstacles(), domain.bounds()) {}

  std::vector<Point> grow(std::vector<Point> poly, double scale) const {
    double step = 0.25 * scale;
    const double min_step = std::max(options_.resolution * options_.step_fraction, 1e-12 * scale);
    while (step >= min_step) {
      for (int pass = 0; pass < 64; ++pass) {
        bool improved = false;
        for (std::size_t i = 0; i < poly.size(); ++i) improved |= move_vertex(poly, i, step);
        if (!improved) break;
      }
      if (static_cast<int>(poly.size()) * 2 <= options_.max_vertices) poly = with_midpoints(poly);
      step *= 0.5;
    }
    return poly;
  }

 private:
  static std::vector<Point> with_midpoints(const std::vector<Point>& poly) {
    std::vector<Point> out;
    out.reserve(2 * poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      out.push_back(poly[i]);
      out.push_back(0.5 * (poly[i] + poly[(i + 1) % poly.size()]));
    }
    return out;
  }

  // Moves vertex i by `step` in the direction of largest feasible area gain.
  // Neighbours that turn reflex are dropped, so the polygon stays convex.
  bool move_vertex(std::vector<Point>& poly, std::size_t i, double step) const {
    const std::size_t n = poly.size();
    if (n < 3 || i >= n) return false;
    const Point v = poly[i];
    const Point e1 = v - poly[(i + n - 1) % n];
    const Point e2 = poly[(i + 1) % n] - v;
    Point n1(e1.y(), -e1.x());
    Point n2(e2.y(), -e2.x());
    if (n1.norm() > 0) n1.normalize();
    if (n2.norm() > 0) n2.normalize();
    Point bis = n1 + n2;
    bis = bis.norm() > 1e-12 ? bis.normalized() : (n1.norm() > 0 ? n1 : Point(1, 0));

    std::vector<Point> dirs{bis};
    for (double a : {0.25, -0.25, 0.5, -0.5, 1.0, -1.0, 1.4, -1.4}) dirs.push_back(Eigen::Rotation2Dd(a) * bis);
    if (e1.norm() > 0) dirs.push_back(e1.normalized());
    if (e2.norm() > 0) dirs.push_back(-e2.normalized());

    const double area = signed_area(poly);
    double best_gain = 1e-12 * step * step;
    std::vector<Point> best;
    for (const Point& d : dirs) {
      const Point cand = v + step * d;
      if (!domain_.contains(cand)) continue;
      std::vector<Point> q = poly;
      q[i] = cand;
      std::size_t at = i;
      while (q.size() > 3) {
        const std::size_t m = q.size();
        const std::size_t p = (at + m - 1) % m;
        if (orient(q[(at + m - 2) % m], q[p], cand) >= 0) break;
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(p));
        if (p < at) --at;
      }
      while (q.size() > 3) {
        const std::size_t m = q.size();
        const std::size_t nx = (at + 1) % m;
        if (orient(cand, q[nx], q[(at + 2) % m]) >= 0) break;
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(nx));
        if (nx < at) --at;
      }
      const std::size_t m = q.size();
      const Point& prev = q[(at + m - 1) % m];
      const Point& next = q[(at + 1) % m];
      if (orient(prev, cand, next) <= 0) continue;
      if (orient(q[(at + m - 2) % m], prev, cand) < 0 || orient(cand, next, q[(at + 2) % m]) < 0) continue;
      const double gain = signed_area(q) - area;
      if (gain <= best_gain) continue;
      if (!domain_.segment_ok(prev, cand) || !domain_.segment_ok(cand, next)) continue;
      if (blocked(prev, cand, next)) continue;
      best_gain = gain;
      best = std::move(q);
    }
    if (best.empty()) return false;
    poly = std::move(best);
    return true;
  }

  // An obstacle in the closed triangle (prev, cand, next) off the two new edges.
  bool blocked(const Point& a, const Point& c, const Point& b) const {
    Box box;
    box.extend(a);
    box.extend(b);
    box.extend(c);
    return obstacles_.any_in(box, [&](const Point& q) {
      const double o1 = orient(a, c, q), o2 = orient(c, b, q), o3 = orient(b, a, q);
      const double s = std::max({(c - a).norm(), (b - c).norm(), (a - b).norm()});
      const double t = tol_ * s;
      const bool inside = o1 >= -t && o2 >= -t && o3 >= -t;
      if (!inside) return false;
      return o1 > t && o2 > t;
    });
  }

  const PeelDomain& domain_;
  const PeelOptions& options_;
  double tol_;
  PointGrid obstacles_;
};

std::vector<Point> regular_polygon(const Point& c, double r, int n, double phase) {
  std::vector<Point> out;
  for (int k = 0; k < n; ++k) {
    const double a = phase + 2.0 * k * std::numbers::pi / n;
    out.push_back(c + r * Point(std::cos(a), std::sin(a)));
  }
  return out;
}

}  // namespace

bool convex_polygon_in_domain(const PeelDomain& domain, const std::vector<Point>& polygon) {
  if (polygon.size() < 3) return false;
  const double tol = polygon_tolerance(domain);
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (!domain.segment_ok(polygon[i], polygon[(i + 1) % polygon.size()])) return false;
  }
  const Box box = bounding_box(polygon);
  for (const Point& q : domain.obstacles()) {
    if (box.contains(q) && strictly_inside(polygon, q, tol)) return false;
  }
  return domain.contains(centroid(polygon));
}

PeelResult largest_convex_subset(const PeelDomain& domain, const PeelOptions& options) {
  PeelResult result;
  const Labeling lab = label_domain(domain, options);
  result.components = static_cast<int>(lab.cells.size());

  // Returns whether the hull of `pts` lies in the domain.
  auto consider = [&](std::vector<Point> pts) {
    auto hull = monotone_chain<double>(std::move(pts));
    if (hull.size() < 3) return false;
    ++result.candidates_checked;
    if (!convex_polygon_in_domain(domain, hull)) return false;
    const double a = signed_area(hull);
    if (a > result.area) {
      result.area = a;
      result.polygon = ConvexPolygon::hull_of(std::move(hull));
    }
    return true;
  };

  // Boundary vertices next to a component's cells belong to its candidate hull.
  std::vector<std::vector<Point>> near(lab.cells.size());
  for (const Point& v : domain.vertices()) {
    const int c = lab.cell_of(v);
    if (c < 0) continue;
    const int i = c % lab.nx, j = c / lab.nx;
    std::vector<int> seen;
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        const int a = i + di, b = j + dj;
        if (a < 0 || b < 0 || a >= lab.nx || b >= lab.ny) continue;
        const int id = lab.label[b * lab.nx + a];
        if (id >= 0 && std::find(seen.begin(), seen.end(), id) == seen.end() &&
            domain.segment_ok(v, lab.center(b * lab.nx + a))) {
          seen.push_back(id);
          near[id].push_back(v);
        }
      }
    }
  }

  std::vector<int> order(lab.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lab.cells[a].size() > lab.cells[b].size(); });

  std::vector<std::vector<Point>> centers(lab.cells.size());
  std::vector<char> convex_component(lab.cells.size(), 0);
  for (std::size_t id = 0; id < lab.cells.size(); ++id) {
    for (int c : lab.cells[id]) centers[id].push_back(lab.center(c));
    std::vector<Point> with_vertices = centers[id];
    with_vertices.insert(with_vertices.end(), near[id].begin(), near[id].end());
    convex_component[id] = consider(std::move(with_vertices));
    if (!convex_component[id]) consider(centers[id]);
  }

  const Grower grower(domain, options);
  auto grow_from = [&](const Point& seed) {
    const double clearance = domain.clearance(seed);
    if (!(clearance > 0.0) || !domain.contains(seed)) return;
    const double scale = std::max(domain.bounds().size().maxCoeff(), clearance);
    // Local optima depend on the start; a few phases of the inscribed polygon
    // are cheap compared with the labeling.
    for (double phase : {0.0, std::numbers::pi / 8.0, std::numbers::pi / 16.0}) {
      auto start = regular_polygon(seed, 0.9 * clearance, 8, phase);
      if (!convex_polygon_in_domain(domain, start)) continue;
      consider(grower.grow(std::move(start), scale));
    }
  };

  const int grown = std::min<int>(options.grown_components, static_cast<int>(order.size()));
  for (int k = 0; k < grown; ++k) {
    const int id = order[k];
    // The hull of a convex component is already the answer for it.
    if (convex_component[id]) continue;
    Point best = centers[id].front();
    double clear = -1.0;
    for (const Point& c : centers[id]) {
      const double v = domain.clearance(c);
      if (v > clear) {
        clear = v;
        best = c;
      }
    }
    grow_from(best);
  }
  for (const Point& s : domain.seeds()) grow_from(s);
  return result;
}

}  // namespace convexity
