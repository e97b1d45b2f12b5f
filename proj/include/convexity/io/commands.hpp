#pragma once

#include "convexity/error.hpp"
#include "convexity/measures/measures.hpp"

#include <string>
#include <vector>

namespace convexity {

/// Settings shared by every subcommand. Pitches are relative to the diameter
/// of each shape.
struct RunConfig {
  EvalConfig eval;
  std::vector<MeasureId> measures{kAllMeasures.begin(), kAllMeasures.end()};
  /// Empty means standard output.
  std::string output_path;
  /// Fill the wall_ms columns. Off by default so reruns are byte-identical.
  bool timing = false;
};

/// Checks positivity of the numeric fields. Throws InvariantViolation.
void validate(const RunConfig& cfg);

struct MeasureCommand {
  RunConfig config;
  std::vector<std::string> inputs;
  /// "csv" or "json".
  std::string format = "csv";
};

struct SweepCommand {
  RunConfig config;
  /// Empty means the default grid.
  std::string p_grid;
  int vertices = 4096;
};

struct AxiomsCommand {
  RunConfig config;
  MeasureId measure = MeasureId::Env;
  int trials = 20;
};

/// CSV header name,measure,value,lo,hi,stderr,wall_ms,diagnostics and one row
/// per (shape, measure); or a JSON object {"results": [...]}.
std::string run_measure(const MeasureCommand& cmd);

/// CSV header p,measure,value,lo,hi,stderr,oracle,diagnostic,wall_ms followed
/// by '#'-prefixed monotonicity lines, one per measure.
std::string run_sweep(const SweepCommand& cmd);

/// JSON report with one row per property of the published table.
std::string run_axioms(const AxiomsCommand& cmd);

/// An error raised while reading input shapes. Invalid geometry in an input
/// file counts as bad input (exit 1), not as bad configuration.
class InputError : public Error {
 public:
  using Error::Error;
};

/// 1 parse or invalid input, 2 domain restriction, 3 bad configuration,
/// 4 I/O.
int exit_code(const Error& e);

}  // namespace convexity
