#pragma once

#include <algorithm>

namespace convexity {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double v) { return {v, v}; }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v, double slack = 0.0) const {
    return v >= lo - slack && v <= hi + slack;
  }
  bool overlaps(const Interval& o, double slack = 0.0) const {
    return lo <= o.hi + slack && o.lo <= hi + slack;
  }
  Interval clamped(double a, double b) const {
    return {std::clamp(lo, a, b), std::clamp(hi, a, b)};
  }
};

}  // namespace convexity
