#include "convexity/geometry/hausdorff.hpp"

#include "convexity/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

namespace convexity {

namespace {

struct Cell {
  Point center;
  double half = 0.0;
  double ub = 0.0;

  bool operator<(const Cell& o) const { return ub < o.ub; }
};

}  // namespace

Interval directed_hausdorff(const Region& from, const Region& to, const HausdorffOptions& options) {
  const double e_from = from.distance_error();
  const double e_to = to.distance_error();
  auto dist_to = [&](const Point& q) { return std::max(0.0, to.signed_distance(q)); };
  // Floating-point distances are off by a few ulps of the coordinates; the
  // bounds are widened by that much so identical sets enclose 0.
  Box all = from.bounds();
  all.extend(to.bounds());
  const double ulps = 64.0 * std::numeric_limits<double>::epsilon() *
                      std::max(all.min.cwiseAbs().maxCoeff(), all.max.cwiseAbs().maxCoeff());
  auto widened = [&](double lo, double hi) -> Interval { return {std::max(0.0, lo - ulps), hi + ulps}; };

  double lb = 0.0;
  double finite_hi = 0.0;
  for (const Point& v : from.support_points()) {
    const double d = dist_to(v);
    lb = std::max(lb, d - e_to);
    finite_hi = std::max(finite_hi, d + e_to);
  }
  const Box box = from.bounds();
  const double side = box.size().maxCoeff();
  if (from.is_finite() || !(side > 0.0)) return widened(lb, std::max(lb, finite_hi));

  const double min_half = 1e-12 * side;
  const double slack = options.tolerance + 2.0 * e_to + e_from;
  double dropped = 0.0;
  std::priority_queue<Cell> queue;
  std::size_t evaluated = 0;

  auto push = [&](const Point& m, double half) {
    ++evaluated;
    const double rho = half * std::numbers::sqrt2;
    const double s_from = from.signed_distance(m);
    if (s_from - e_from > rho) return;
    const double sd = to.signed_distance(m);
    const double d = std::max(0.0, sd);
    // The signed distance is 1-Lipschitz too, so cells deep inside `to` vanish.
    const double ub = std::max(0.0, sd + e_to + rho);
    if (s_from + e_from <= 0.0) {
      lb = std::max(lb, d - e_to);
    } else {
      const Point near = from.nearest_point(m);
      lb = std::max(lb, dist_to(near) - e_to - e_from);
    }
    if (ub > lb) queue.push({m, half, ub});
  };

  push(box.center(), 0.5 * side);
  while (!queue.empty()) {
    const Cell top = queue.top();
    if (top.ub <= lb + slack) break;
    if (evaluated >= options.max_cells) break;
    queue.pop();
    if (top.ub <= lb) continue;
    if (top.half < min_half) {
      dropped = std::max(dropped, top.ub);
      continue;
    }
    const double h = 0.5 * top.half;
    push(top.center + Point(-h, -h), h);
    push(top.center + Point(h, -h), h);
    push(top.center + Point(-h, h), h);
    push(top.center + Point(h, h), h);
  }
  double hi = std::max(lb, dropped);
  if (!queue.empty()) hi = std::max(hi, queue.top().ub);
  return widened(lb, hi);
}

Interval hausdorff(const Region& a, const Region& b, const HausdorffOptions& options) {
  const Interval ab = directed_hausdorff(a, b, options);
  const Interval ba = directed_hausdorff(b, a, options);
  return {std::max(ab.lo, ba.lo), std::max(ab.hi, ba.hi)};
}

void check_pitch(const Shape& s, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::InvariantViolation, "discretization pitch must be a positive finite number");
  }
  const auto& rings = s.prepared().boundary();
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const double len = perimeter(rings[i]);
    if (len < 1.5 * delta) {
      std::ostringstream msg;
      msg << "pitch " << delta << " is too coarse for boundary ring " << i << " of length " << len
          << " (fewer than 3 samples at pitch delta/2)";
      throw Error(ErrorCode::PitchTooCoarse, msg.str());
    }
  }
}

Interval hausdorff(const Shape& a, const Shape& b, double delta) {
  check_pitch(a, delta);
  check_pitch(b, delta);
  HausdorffOptions options;
  options.tolerance = 0.5 * delta;
  return hausdorff(a.prepared(), b.prepared(), options);
}

}  // namespace convexity
