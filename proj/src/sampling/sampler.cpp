#include "convexity/sampling/sampler.hpp"

#include "convexity/error.hpp"
#include "convexity/geometry/region.hpp"

#include <boost/random/beta_distribution.hpp>

#include <Eigen/Geometry>

#include <sstream>

namespace convexity {

namespace {

constexpr double kSwitchAcceptance = 1e-3;
constexpr double kMinAcceptance = 1e-6;

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

}  // namespace

std::string_view to_string(UniformSampler::Method method) {
  switch (method) {
    case UniformSampler::Method::BoxRejection:
      return "box-rejection";
    case UniformSampler::Method::ComponentRejection:
      return "component-rejection";
    case UniformSampler::Method::LpRejection:
      return "lp-rejection";
    case UniformSampler::Method::LpMarginal:
      return "lp-marginal";
  }
  return "?";
}

UniformSampler::UniformSampler(const Shape& shape) : shape_(shape) {
  const auto& prep = shape.prepared();
  if (!prep.has_area()) {
    throw Error(ErrorCode::ZeroAreaShape, "uniform sampling needs a shape of positive area");
  }

  if (const auto* lp = std::get_if<LpRegion>(&shape.geometry())) {
    lp_ = *lp;
    acceptance_ = prep.area() / (4.0 * lp->scale * lp->scale);
    if (lp->p < 0.3 || acceptance_ < kSwitchAcceptance) {
      method_ = Method::LpMarginal;
      acceptance_ = 1.0;
    } else {
      method_ = Method::LpRejection;
    }
    return;
  }

  box_ = prep.bounds();
  acceptance_ = prep.area() / (box_.size().x() * box_.size().y());
  method_ = Method::BoxRejection;
  if (acceptance_ >= kSwitchAcceptance || prep.components().size() < 2) {
    if (acceptance_ < kMinAcceptance) {
      std::ostringstream msg;
      msg << "bounding-box rejection acceptance " << acceptance_ << " is below " << kMinAcceptance;
      throw Error(ErrorCode::AcceptanceTooLow, msg.str());
    }
    return;
  }

  method_ = Method::ComponentRejection;
  double total = 0.0;
  double worst = 1.0;
  for (const auto& c : prep.components()) {
    Part part;
    part.box = bounding_box(prep.boundary()[c.outer]);
    part.rings.push_back(c.outer);
    part.rings.insert(part.rings.end(), c.holes.begin(), c.holes.end());
    total += c.area;
    part.cumulative = total;
    worst = std::min(worst, c.area / (part.box.size().x() * part.box.size().y()));
    parts_.push_back(std::move(part));
  }
  for (auto& part : parts_) part.cumulative /= total;
  acceptance_ = worst;
  if (acceptance_ < kMinAcceptance) {
    std::ostringstream msg;
    msg << "per-component rejection acceptance " << acceptance_ << " is below " << kMinAcceptance;
    throw Error(ErrorCode::AcceptanceTooLow, msg.str());
  }
}

bool UniformSampler::owned_by(const Part& part, const Point& q) const {
  const auto& rings = shape_.prepared().boundary();
  bool inside = false;
  for (int r : part.rings) inside ^= ring_parity(rings[r], q);
  return inside;
}

Point UniformSampler::lp_local(Generator& gen) const {
  const double p = lp_.p;
  if (method_ == Method::LpRejection) {
    for (;;) {
      const Point u(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0));
      if (std::pow(std::abs(u.x()), p) + std::pow(std::abs(u.y()), p) <= 1.0) return u;
    }
  }
  // |x|^p ~ Beta(1/p, 1 + 1/p): the x-marginal has density proportional to
  // the chord length 2 (1 - |x|^p)^(1/p).
  const boost::random::beta_distribution<double> beta(1.0 / p, 1.0 + 1.0 / p);
  const double w = beta(gen.engine());
  const double ax = std::pow(w, 1.0 / p);
  const double x = (gen.next() & 1) ? ax : -ax;
  const double h = std::pow(std::max(0.0, 1.0 - w), 1.0 / p);
  return {x, gen.uniform(-h, h)};
}

Point UniformSampler::operator()(Generator& gen) const {
  switch (method_) {
    case Method::LpRejection:
    case Method::LpMarginal:
      return lp_.center + lp_.scale * (Eigen::Rotation2Dd(lp_.angle) * lp_local(gen));
    case Method::BoxRejection: {
      const auto& prep = shape_.prepared();
      for (;;) {
        const Point q = gen.uniform_in(box_);
        if (prep.contains_open(q)) return q;
      }
    }
    case Method::ComponentRejection: {
      const double u = gen.uniform();
      const auto it = std::upper_bound(parts_.begin(), parts_.end(), u,
                                       [](double v, const Part& part) { return v < part.cumulative; });
      const Part& part = it == parts_.end() ? parts_.back() : *it;
      for (;;) {
        const Point q = gen.uniform_in(part.box);
        if (owned_by(part, q)) return q;
      }
    }
  }
  return Point::Zero();
}

std::vector<Point> sample_uniform(const Shape& s, const SeededStream& stream, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvariantViolation, "sample count must be at least 1");
  const UniformSampler sampler(s);
  Generator gen(stream, 0);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler(gen));
  return out;
}

}  // namespace convexity
