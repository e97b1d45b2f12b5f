#include "convexity/measures/measures.hpp"

#include "convexity/error.hpp"
#include "convexity/geometry/hausdorff.hpp"
#include "convexity/geometry/operations.hpp"
#include "convexity/geometry/region.hpp"
#include "convexity/measures/peeling.hpp"
#include "convexity/sampling/monte_carlo.hpp"
#include "convexity/sampling/sampler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace convexity {

namespace {

// Relative area deficit below which a shape counts as its own hull.
constexpr double kConvexAreaSlack = 1e-12;

void require_area(const Shape& s, MeasureId id) {
  if (!s.prepared().has_area()) {
    std::ostringstream msg;
    msg << "measure '" << to_string(id) << "' is an area ratio and is undefined for shapes of zero area";
    throw Error(ErrorCode::ZeroAreaShape, msg.str());
  }
}

bool area_equals_hull(const PreparedShape& prep) {
  return prep.area() >= prep.hull_area() * (1.0 - kConvexAreaSlack);
}

MeasureResult make(MeasureId id, double value, Interval interval, std::string method) {
  MeasureResult r;
  r.id = id;
  r.interval = interval.clamped(0.0, 1.0);
  r.value = std::clamp(value, r.interval.lo, r.interval.hi);
  r.method = std::move(method);
  return r;
}

}  // namespace

std::string_view to_string(MeasureId id) {
  switch (id) {
    case MeasureId::Cihi:
      return "cihi";
    case MeasureId::Prob:
      return "prob";
    case MeasureId::Env:
      return "env";
    case MeasureId::Maxdist:
      return "maxdist";
    case MeasureId::Ce:
      return "ce";
    case MeasureId::Ci:
      return "ci";
  }
  return "?";
}

MeasureId parse_measure(std::string_view name) {
  for (MeasureId id : kAllMeasures) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::UnknownMeasure,
              "unknown measure '" + std::string(name) + "' (expected one of cihi, prob, env, maxdist, ce, ci)");
}

void require_non_singleton(const Shape& s, MeasureId id) {
  if (s.is_singleton()) {
    std::ostringstream msg;
    msg << "measure '" << to_string(id)
        << "' is undefined on a single point: convexity measures are only defined for non-empty compact sets "
           "that are not reduced to a point";
    throw Error(ErrorCode::SingletonShape, msg.str());
  }
}

MeasureResult m_env(const Shape& s) {
  require_non_singleton(s, MeasureId::Env);
  require_area(s, MeasureId::Env);
  const auto& prep = s.prepared();
  const double v = std::min(1.0, prep.area() / prep.hull_area());
  auto r = make(MeasureId::Env, v, Interval::exact(v), "area-ratio");
  r.meta["area"] = prep.area();
  r.meta["hull_area"] = prep.hull_area();
  return r;
}

MeasureResult m_prob(const Shape& s, const SeededStream& stream, std::uint64_t n, unsigned threads) {
  require_non_singleton(s, MeasureId::Prob);
  require_area(s, MeasureId::Prob);
  const auto& prep = s.prepared();
  const UniformSampler sampler(s);
  const McEstimate est = mc_probability(
      [&](Generator& gen) {
        const Point x = sampler(gen);
        const Point y = sampler(gen);
        return prep.contains_segment(x, y);
      },
      stream, n, McOptions{4096, threads});
  const double half = 3.0 * est.std_error;
  auto r = make(MeasureId::Prob, est.value, {est.value - half, est.value + half},
                "monte-carlo/" + std::string(to_string(sampler.method())));
  r.std_error = est.std_error;
  r.meta["samples"] = static_cast<double>(est.n_samples);
  r.meta["hits"] = static_cast<double>(est.n_hits);
  r.meta["acceptance"] = sampler.acceptance();
  return r;
}

MeasureResult m_maxdist(const Shape& s, double grid) {
  require_non_singleton(s, MeasureId::Maxdist);
  if (!(grid > 0.0)) throw Error(ErrorCode::InvariantViolation, "maxdist grid pitch must be positive");
  const auto& prep = s.prepared();
  const ConvexRegion hull(prep.hull());
  HausdorffOptions options;
  options.tolerance = grid * std::numbers::sqrt2 / 2.0;
  const Interval sup = directed_hausdorff(hull, prep, options);
  const double value = 1.0 / (1.0 + sup.lo);
  auto r = make(MeasureId::Maxdist, value, {1.0 / (1.0 + sup.hi), value}, "branch-and-bound");
  r.meta["sup_distance_lo"] = sup.lo;
  r.meta["sup_distance_hi"] = sup.hi;
  r.meta["grid"] = grid;
  return r;
}

MeasureResult m_ce(const Shape& s, double resolution) {
  require_non_singleton(s, MeasureId::Ce);
  require_area(s, MeasureId::Ce);
  const auto& prep = s.prepared();
  const double env = std::min(1.0, prep.area() / prep.hull_area());
  double pocket = 0.0;
  std::string method = "empty-pocket";
  if (!area_equals_hull(prep)) {
    PeelOptions options;
    options.resolution = resolution;
    const PeelResult found = largest_convex_subset(PocketDomain(prep), options);
    pocket = found.area / prep.hull_area();
    method = "pocket-peeling";
  }
  const double score = 1.0 - pocket;
  auto r = make(MeasureId::Ce, score, {std::min(env, score), score}, method);
  r.meta["pocket_ratio"] = pocket;
  r.meta["resolution"] = resolution;
  return r;
}

MeasureResult m_ci(const Shape& s, double resolution) {
  require_non_singleton(s, MeasureId::Ci);
  require_area(s, MeasureId::Ci);
  const auto& prep = s.prepared();
  if (area_equals_hull(prep)) return make(MeasureId::Ci, 1.0, Interval::exact(1.0), "convex-input");

  PeelOptions options;
  options.resolution = resolution;
  const PeelResult found = largest_convex_subset(ShapeDomain(prep), options);
  double largest_component = 0.0;
  for (const auto& c : prep.components()) largest_component = std::max(largest_component, c.area);
  const double ratio = found.area / prep.area();
  const double hi = std::max(ratio, largest_component / prep.area());
  auto r = make(MeasureId::Ci, ratio, {ratio, hi}, "inscribed-peeling");
  r.meta["subset_area"] = found.area;
  r.meta["components"] = found.components;
  r.meta["resolution"] = resolution;
  return r;
}

ConvDistance d_conv_distance(const Shape& s, double delta) {
  require_non_singleton(s, MeasureId::Cihi);
  check_pitch(s, delta);
  const auto& prep = s.prepared();
  HausdorffOptions options;
  options.tolerance = 0.5 * delta;

  ConvDistance out;
  out.best.polygon = prep.hull();
  out.hull_distance = hausdorff(prep, ConvexRegion(prep.hull()), options);
  out.best.hdist = out.hull_distance;
  out.d = {0.5 * out.hull_distance.lo, out.hull_distance.hi};
  if (out.hull_distance.hi <= delta || prep.hull().is_degenerate()) return out;

  // Golden-section search of the eroded-hull family for a better upper bound.
  auto eval = [&](double t) {
    try {
      ConvexPolygon c = erode_convex(prep.hull(), t);
      const Interval h = hausdorff(prep, ConvexRegion(c), options);
      if (h.hi < out.best.hdist.hi) {
        out.best = {std::move(c), h};
        out.offset = t;
      }
      return h.hi;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ErodedToEmpty) throw;
      return std::numeric_limits<double>::infinity();
    }
  };
  const double inradius = prep.hull().inradius();
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0;
  double b = inradius;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  while (b - a > 0.25 * delta) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = eval(x2);
    }
  }
  out.d.hi = std::min(out.d.hi, out.best.hdist.hi);
  out.d.lo = std::min(out.d.lo, out.d.hi);
  return out;
}

MeasureResult m_cihi(const Shape& s, double delta) {
  require_non_singleton(s, MeasureId::Cihi);
  const double diam = diameter(s);
  const ConvDistance cd = d_conv_distance(s, delta);
  const Interval iv{diam / (diam + cd.d.hi), diam / (diam + cd.d.lo)};
  auto r = make(MeasureId::Cihi, iv.mid(), iv, "hull-sandwich/eroded-hull");
  r.meta["diameter"] = diam;
  r.meta["d_lo"] = cd.d.lo;
  r.meta["d_hi"] = cd.d.hi;
  r.meta["hull_distance_lo"] = cd.hull_distance.lo;
  r.meta["hull_distance_hi"] = cd.hull_distance.hi;
  r.meta["erosion"] = cd.offset;
  r.meta["delta"] = delta;
  return r;
}

MeasureResult evaluate(const Shape& s, MeasureId id, const EvalConfig& cfg) {
  require_non_singleton(s, id);
  const double diam = diameter(s);
  switch (id) {
    case MeasureId::Cihi:
      return m_cihi(s, cfg.delta * diam);
    case MeasureId::Prob:
      return m_prob(s, SeededStream{cfg.seed, 0}, cfg.samples, cfg.threads);
    case MeasureId::Env:
      return m_env(s);
    case MeasureId::Maxdist:
      return m_maxdist(s, cfg.resolution * diam);
    case MeasureId::Ce:
      return m_ce(s, cfg.resolution * diam);
    case MeasureId::Ci:
      return m_ci(s, cfg.resolution * diam);
  }
  throw Error(ErrorCode::UnknownMeasure, "unknown measure");
}

}  // namespace convexity
