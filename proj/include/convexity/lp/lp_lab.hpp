#pragma once

#include "convexity/geometry/shape.hpp"
#include "convexity/measures/measures.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace convexity {

/// Polygon approximation of the unit ball {|x|^p + |y|^p <= 1} with vertices
/// (sgn cos t |cos t|^(2/p), sgn sin t |sin t|^(2/p)) at t = 2 pi k / n. n is
/// rounded up to a multiple of 8 so the vertex set keeps the square's
/// symmetries and contains the four axis tips. Vertices closer than 1e-8 to
/// an axis (other than the tips) are dropped, so small p yields fewer than n.
/// Throws BadP unless 0 < p <= 2, and InvariantViolation when n < 16 or when
/// nothing but the tips would remain.
Shape lp_ball(double p, int n_vertices);

/// Published closed form of a measure on the unit Lp ball, p in (0, 1].
/// Throws NoFormula for prob and BadP outside (0, 1].
double closed_form(MeasureId id, double p);

/// closed_form, or nothing when no formula applies to (id, p).
std::optional<double> try_closed_form(MeasureId id, double p);

/// `count` points log-spaced from `start` to `stop` inclusive.
std::vector<double> log_grid(double start, double stop, int count);

/// 20 log-spaced points in [0.05, 1] followed by 1.5 and 2.
std::vector<double> default_p_grid();

/// Parses "start:step:stop" or "log:start:stop:count". Throws BadGridSpec.
std::vector<double> parse_p_grid(const std::string& spec);

struct SweepRecord {
  double p = 1.0;
  MeasureId measure = MeasureId::Env;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> std_error;
  std::optional<double> oracle;
  /// Semicolon-separated key=value notes (oracle deviation, pocket ratio...).
  std::string diagnostic;
  long long wall_ms = 0;
};

struct SweepOptions {
  EvalConfig eval;
  /// Boundary vertex count of the implicit Lp regions.
  int vertices = 4096;
};

/// Evaluates every measure on the unit Lp ball for every p of the grid.
/// Records come out grid-major, in the order of `measures`.
std::vector<SweepRecord> sweep(const std::vector<double>& p_grid, const std::vector<MeasureId>& measures,
                               const SweepOptions& options);

struct MonotonicityVerdict {
  MeasureId measure = MeasureId::Env;
  /// Consecutive pairs whose intervals are strictly ordered the wrong way
  /// (lo(p_i) > hi(p_{i+1})), or the right way (hi(p_i) < lo(p_{i+1})).
  int descents = 0;
  int ascents = 0;
  /// Consecutive point values that decrease, ignoring intervals.
  int point_descents = 0;

  bool non_decreasing() const { return descents == 0; }
  bool non_monotone() const { return descents > 0 && ascents > 0; }
};

/// Per measure, in order of first appearance. Records with p > 1 are ignored.
std::vector<MonotonicityVerdict> monotonicity(const std::vector<SweepRecord>& records);

/// A sequence of shapes converging in Hausdorff distance to `limit`.
struct ShapeFamily {
  std::string name;
  std::vector<double> parameters;
  std::vector<Shape> members;
  Shape limit;
};

/// Unit disc with a vertical slab of width gamma removed, gamma -> 0.
ShapeFamily half_disc_family(const std::vector<double>& gaps = {0.1, 0.01, 0.001});
/// Unit square with a notch of depth d at the top, d -> 0.
ShapeFamily notch_family(const std::vector<double>& depths = {0.1, 0.01, 0.001});

/// Largest difference two results of the same measure may show while still
/// being compatible: both interval widths plus three combined standard errors.
double compatibility_tolerance(const MeasureResult& a, const MeasureResult& b);

struct ContinuityReport {
  std::string family;
  MeasureId measure = MeasureId::Env;
  std::vector<double> parameters;
  std::vector<MeasureResult> members;
  MeasureResult limit;
  /// |m(A_k) - m(limit)| per member.
  std::vector<double> deviations;
  /// compatibility_tolerance(member, limit) per member.
  std::vector<double> tolerances;
  /// The last deviation is within its tolerance or below a tenth of the first.
  bool converges = false;
  /// No consecutive pair of deviations increases beyond their tolerance.
  bool monotone = false;
};

ContinuityReport continuity_experiment(const ShapeFamily& family, MeasureId measure, const EvalConfig& cfg);

struct RemotenessReport {
  MeasureId measure = MeasureId::Env;
  std::vector<double> separations;
  std::vector<MeasureResult> results;
  double max_deviation = 0.0;
  /// Largest pairwise compatibility tolerance.
  double tolerance = 0.0;
  bool constant = false;
  /// "flat", "increasing", "decreasing" or "mixed", from the point values.
  std::string trend;
};

/// Places b to the right of a with the given gaps between their bounding
/// boxes and evaluates the measure on each union.
RemotenessReport remoteness_experiment(const Shape& a, const Shape& b, const std::vector<double>& separations,
                                       MeasureId measure, const EvalConfig& cfg);

}  // namespace convexity
