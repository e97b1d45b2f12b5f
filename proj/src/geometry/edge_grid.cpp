#include "convexity/geometry/edge_grid.hpp"

namespace convexity {

namespace {
constexpr int kMaxCellsPerAxis = 512;
}

EdgeGrid::EdgeGrid(std::vector<Segment> segments, double dilation) : segments_(std::move(segments)) {
  if (segments_.empty()) return;
  for (const auto& s : segments_) {
    bounds_.extend(s.a);
    bounds_.extend(s.b);
  }
  const double extent = std::max(bounds_.extent(), 1e-300);
  const double pad = std::max(dilation, 1e-12 * extent);
  bounds_.min -= Point::Constant(pad);
  bounds_.max += Point::Constant(pad);

  const Point size = bounds_.size();
  const double n = static_cast<double>(segments_.size());
  cell_ = std::sqrt(size.x() * size.y() / n);
  cell_ = std::max(cell_, size.maxCoeff() / kMaxCellsPerAxis);
  nx_ = std::clamp(static_cast<int>(std::ceil(size.x() / cell_)), 1, kMaxCellsPerAxis);
  ny_ = std::clamp(static_cast<int>(std::ceil(size.y() / cell_)), 1, kMaxCellsPerAxis);
  cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});

  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    const Point lo = s.a.cwiseMin(s.b) - Point::Constant(pad);
    const Point hi = s.a.cwiseMax(s.b) + Point::Constant(pad);
    const int x0 = cell_x(lo.x()), x1 = cell_x(hi.x());
    const int y0 = cell_y(lo.y()), y1 = cell_y(hi.y());
    for (int iy = y0; iy <= y1; ++iy) {
      for (int ix = x0; ix <= x1; ++ix) cells_[iy * nx_ + ix].push_back(static_cast<std::int32_t>(i));
    }
  }
}

EdgeGrid::Nearest EdgeGrid::nearest(const Point& q) const {
  Nearest best;
  if (segments_.empty()) return best;
  const int cx = cell_x(q.x());
  const int cy = cell_y(q.y());
  const int max_ring = std::max(nx_, ny_);

  auto scan = [&](int ix, int iy) {
    for (std::int32_t idx : cell(ix, iy)) {
      const auto& s = segments_[idx];
      const Point c = closest_point_on_segment(q, s.a, s.b);
      const double d = (q - c).norm();
      if (d < best.distance) {
        best.distance = d;
        best.point = c;
        best.segment = idx;
      }
    }
  };

  for (int r = 0; r <= max_ring; ++r) {
    if (r >= 1 && best.distance <= (r - 1) * cell_) break;
    const int x0 = cx - r, x1 = cx + r, y0 = cy - r, y1 = cy + r;
    for (int ix = std::max(x0, 0); ix <= std::min(x1, nx_ - 1); ++ix) {
      if (y0 >= 0) scan(ix, y0);
      if (r > 0 && y1 < ny_) scan(ix, y1);
    }
    for (int iy = std::max(y0 + 1, 0); iy <= std::min(y1 - 1, ny_ - 1); ++iy) {
      if (x0 >= 0) scan(x0, iy);
      if (r > 0 && x1 < nx_) scan(x1, iy);
    }
  }
  return best;
}

int EdgeGrid::ray_crossings(const Point& q) const {
  if (segments_.empty() || q.y() < bounds_.min.y() || q.y() > bounds_.max.y() || q.x() > bounds_.max.x()) {
    return 0;
  }
  const int iy = cell_y(q.y());
  int count = 0;
  for (int ix = cell_x(q.x()); ix < nx_; ++ix) {
    for (std::int32_t idx : cell(ix, iy)) {
      const auto& s = segments_[idx];
      if ((s.a.y() > q.y()) == (s.b.y() > q.y())) continue;
      double xc = s.a.x() + (q.y() - s.a.y()) * (s.b.x() - s.a.x()) / (s.b.y() - s.a.y());
      xc = std::clamp(xc, std::min(s.a.x(), s.b.x()), std::max(s.a.x(), s.b.x()));
      if (xc > q.x() && cell_x(xc) == ix) ++count;
    }
  }
  return count;
}

}  // namespace convexity
