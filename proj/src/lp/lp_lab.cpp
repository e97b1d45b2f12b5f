#include "convexity/lp/lp_lab.hpp"

#include "convexity/error.hpp"
#include "convexity/experiments/corpus.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace convexity {

namespace {

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require_p(double p, double max_p) {
  if (!(p > 0.0 && p <= max_p)) {
    std::ostringstream msg;
    msg << "p = " << p << " is outside (0, " << max_p << "]";
    throw Error(ErrorCode::BadP, msg.str());
  }
}

double parse_number(const std::string& text, const std::string& spec) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "': '" + text + "' is not a number");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double std_err_of(const MeasureResult& r) { return r.std_error.value_or(0.0); }

}  // namespace

Shape lp_ball(double p, int n_vertices) {
  require_p(p, 2.0);
  if (n_vertices < 16) {
    throw Error(ErrorCode::InvariantViolation, "lp_ball needs at least 16 vertices, got " + std::to_string(n_vertices));
  }
  const int n = 8 * ((n_vertices + 7) / 8);
  const double e = 2.0 / p;
  // Build one octant (0 <= t <= pi/4) and mirror it, so the vertex set is
  // exactly symmetric and the tips are exact.
  const int q = n / 8;
  //
  // For p < 1 the vertices next to a tip have |y| far below the ring
  // validation tolerance, so the two edges meeting at the tip would read as
  // overlapping. Those vertices are skipped; the spike they would outline has
  // negligible area.
  constexpr double kMinTipWidth = 1e-8;
  std::vector<Point> octant{Point(1.0, 0.0)};
  for (int k = 1; k <= q; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const Point v(std::pow(std::cos(t), e), std::pow(std::sin(t), e));
    if (v.y() >= kMinTipWidth) octant.push_back(v);
  }
  if (octant.size() < 2) {
    throw Error(ErrorCode::InvariantViolation,
                "lp_ball: at p = " + std::to_string(p) + " the ball is thinner than the polygon tolerance");
  }
  const std::size_t last = octant.size() - 1;
  Ring ring;
  ring.reserve(8 * last);
  for (std::size_t k = 0; k < last; ++k) ring.push_back(octant[k]);
  for (std::size_t k = last; k > 0; --k) ring.push_back(Point(octant[k].y(), octant[k].x()));
  const std::size_t quarter = ring.size();
  for (std::size_t k = 0; k < quarter; ++k) ring.push_back(Point(-ring[k].y(), ring[k].x()));
  for (std::size_t k = 0; k < 2 * quarter; ++k) ring.push_back(-ring[k]);
  return Shape::polygon(std::move(ring));
}

double closed_form(MeasureId id, double p) {
  require_p(p, 1.0);
  const double r = 1.0 / p;
  switch (id) {
    case MeasureId::Cihi:
      return (std::numbers::sqrt2 + 1.0) / (std::numbers::sqrt2 + 1.5 - std::pow(0.5, r));
    case MeasureId::Env:
      return 1.0 / (std::pow(2.0, r) - 1.0);
    case MeasureId::Maxdist:
      return std::pow(4.0, 1.0 - r);
    case MeasureId::Ce:
      return std::exp(2.0 * std::lgamma(r) - std::lgamma(2.0 * r));
    case MeasureId::Ci:
      return std::pow(2.0, 2.0 - 2.0 * r) * p * std::exp(std::lgamma(2.0 * r) - 2.0 * std::lgamma(r));
    case MeasureId::Prob:
      break;
  }
  throw Error(ErrorCode::NoFormula, "no closed form is published for measure '" + std::string(to_string(id)) + "'");
}

std::optional<double> try_closed_form(MeasureId id, double p) {
  if (id == MeasureId::Prob || !(p > 0.0 && p <= 1.0)) return std::nullopt;
  return closed_form(id, p);
}

std::vector<double> log_grid(double start, double stop, int count) {
  if (!(start > 0.0 && stop >= start) || count < 1 || (count == 1 && stop != start)) {
    throw Error(ErrorCode::BadGridSpec, "log grid needs 0 < start <= stop and count >= 1");
  }
  std::vector<double> out;
  if (count == 1) return {start};
  const double a = std::log(start);
  const double b = std::log(stop);
  for (int k = 0; k < count; ++k) out.push_back(std::exp(a + (b - a) * k / (count - 1)));
  out.front() = start;
  out.back() = stop;
  return out;
}

std::vector<double> default_p_grid() {
  auto grid = log_grid(0.05, 1.0, 20);
  grid.push_back(1.5);
  grid.push_back(2.0);
  return grid;
}

std::vector<double> parse_p_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  std::vector<double> grid;
  if (!parts.empty() && parts[0] == "log") {
    if (parts.size() != 4) throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "' must be log:start:stop:count");
    const double start = parse_number(parts[1], spec);
    const double stop = parse_number(parts[2], spec);
    const double count = parse_number(parts[3], spec);
    if (count != std::floor(count) || count < 1 || count > 1e6) {
      throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "': count must be a positive integer");
    }
    grid = log_grid(start, stop, static_cast<int>(count));
  } else {
    if (parts.size() != 3) throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "' must be start:step:stop");
    const double start = parse_number(parts[0], spec);
    const double step = parse_number(parts[1], spec);
    const double stop = parse_number(parts[2], spec);
    if (!(step > 0.0) || stop < start) {
      throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "' needs step > 0 and stop >= start");
    }
    const double steps = std::floor((stop - start) / step + 1e-9);
    if (steps > 1e6) throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "' has too many points");
    for (int k = 0; k <= static_cast<int>(steps); ++k) grid.push_back(start + k * step);
  }
  for (double p : grid) {
    if (!(p > 0.0 && p <= 2.0)) {
      throw Error(ErrorCode::BadGridSpec, "grid spec '" + spec + "' yields p = " + num(p) + " outside (0, 2]");
    }
  }
  return grid;
}

std::vector<SweepRecord> sweep(const std::vector<double>& p_grid, const std::vector<MeasureId>& measures,
                               const SweepOptions& options) {
  if (p_grid.empty()) throw Error(ErrorCode::BadGridSpec, "p grid is empty");
  if (!std::is_sorted(p_grid.begin(), p_grid.end())) throw Error(ErrorCode::BadGridSpec, "p grid is not sorted");
  std::vector<SweepRecord> out;
  for (double p : p_grid) {
    require_p(p, 2.0);
    LpRegion region;
    region.p = p;
    region.boundary_vertices = options.vertices;
    const Shape ball = Shape::lp(region);
    for (MeasureId id : measures) {
      const auto t0 = std::chrono::steady_clock::now();
      const MeasureResult r = evaluate(ball, id, options.eval);
      const auto t1 = std::chrono::steady_clock::now();

      SweepRecord rec;
      rec.p = p;
      rec.measure = id;
      rec.value = r.value;
      rec.lo = r.interval.lo;
      rec.hi = r.interval.hi;
      rec.std_error = r.std_error;
      rec.oracle = try_closed_form(id, p);
      rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

      std::string diag;
      if (rec.oracle) {
        diag = "oracle_dev=" + num(r.value - *rec.oracle);
        if (!r.interval.contains(*rec.oracle)) diag += ";oracle_outside_interval";
      }
      if (id == MeasureId::Ce) {
        const double pocket = r.meta.count("pocket_ratio") ? r.meta.at("pocket_ratio") : 1.0 - r.value;
        if (!diag.empty()) diag += ';';
        diag += "pocket_ratio=" + num(pocket);
        if (rec.oracle) diag += ";pocket_dev=" + num(pocket - *rec.oracle);
      }
      rec.diagnostic = diag;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<MonotonicityVerdict> monotonicity(const std::vector<SweepRecord>& records) {
  std::vector<MonotonicityVerdict> out;
  std::vector<std::vector<const SweepRecord*>> series;
  for (const auto& rec : records) {
    if (rec.p > 1.0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& v) { return v.measure == rec.measure; });
    if (it == out.end()) {
      out.push_back({rec.measure});
      series.emplace_back();
      it = out.end() - 1;
    }
    series[static_cast<std::size_t>(it - out.begin())].push_back(&rec);
  }
  for (std::size_t m = 0; m < out.size(); ++m) {
    auto& s = series[m];
    std::stable_sort(s.begin(), s.end(), [](const auto* a, const auto* b) { return a->p < b->p; });
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i]->lo > s[i + 1]->hi) ++out[m].descents;
      if (s[i]->hi < s[i + 1]->lo) ++out[m].ascents;
      if (s[i + 1]->value < s[i]->value) ++out[m].point_descents;
    }
  }
  return out;
}

ShapeFamily half_disc_family(const std::vector<double>& gaps) {
  ShapeFamily f{"half-discs", gaps, {}, Shape::polygon(corpus::circle(Point::Zero(), 1.0, 1024))};
  for (double g : gaps) f.members.push_back(corpus::half_discs(g));
  return f;
}

ShapeFamily notch_family(const std::vector<double>& depths) {
  ShapeFamily f{"notched-squares", depths, {}, Shape::polygon(corpus::square(0, 0, 1))};
  for (double d : depths) f.members.push_back(corpus::notched_square(d));
  return f;
}

double compatibility_tolerance(const MeasureResult& a, const MeasureResult& b) {
  const double sa = std_err_of(a);
  const double sb = std_err_of(b);
  return a.interval.width() + b.interval.width() + 3.0 * std::sqrt(sa * sa + sb * sb) + 1e-9;
}

ContinuityReport continuity_experiment(const ShapeFamily& family, MeasureId measure, const EvalConfig& cfg) {
  ContinuityReport rep;
  rep.family = family.name;
  rep.measure = measure;
  rep.parameters = family.parameters;
  rep.limit = evaluate(family.limit, measure, cfg);
  for (const auto& s : family.members) {
    rep.members.push_back(evaluate(s, measure, cfg));
    rep.deviations.push_back(std::abs(rep.members.back().value - rep.limit.value));
    rep.tolerances.push_back(compatibility_tolerance(rep.members.back(), rep.limit));
  }
  if (rep.members.empty()) return rep;
  const double first = rep.deviations.front();
  const double last = rep.deviations.back();
  rep.converges = last <= rep.tolerances.back() || last <= 0.1 * first;
  rep.monotone = true;
  for (std::size_t i = 0; i + 1 < rep.members.size(); ++i) {
    if (rep.deviations[i + 1] > rep.deviations[i] + compatibility_tolerance(rep.members[i], rep.members[i + 1])) {
      rep.monotone = false;
    }
  }
  return rep;
}

RemotenessReport remoteness_experiment(const Shape& a, const Shape& b, const std::vector<double>& separations,
                                       MeasureId measure, const EvalConfig& cfg) {
  RemotenessReport rep;
  rep.measure = measure;
  rep.separations = separations;
  for (double g : separations) {
    if (!(g > 0.0)) throw Error(ErrorCode::InvariantViolation, "separations must be positive, got " + num(g));
    rep.results.push_back(evaluate(corpus::side_by_side(a, b, g), measure, cfg));
  }
  bool up = false;
  bool down = false;
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.results.size(); ++j) {
      rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.results[i].value - rep.results[j].value));
      rep.tolerance = std::max(rep.tolerance, compatibility_tolerance(rep.results[i], rep.results[j]));
    }
    if (i + 1 < rep.results.size()) {
      const double d = rep.results[i + 1].value - rep.results[i].value;
      const double tol = compatibility_tolerance(rep.results[i], rep.results[i + 1]);
      up = up || d > tol;
      down = down || d < -tol;
    }
  }
  rep.constant = rep.max_deviation <= rep.tolerance;
  rep.trend = up && down ? "mixed" : up ? "increasing" : down ? "decreasing" : "flat";
  return rep;
}

}  // namespace convexity
