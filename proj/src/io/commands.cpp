#include "convexity/io/commands.hpp"

#include "convexity/experiments/axioms.hpp"
#include "convexity/io/shape_io.hpp"
#include "convexity/lp/lp_lab.hpp"

#include "json.hpp"

#include <chrono>
#include <sstream>

namespace convexity {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::string diagnostics_of(const MeasureResult& r) {
  std::string out = "method=" + r.method;
  for (const auto& [key, value] : r.meta) out += ";" + key + "=" + format_double(value);
  return out;
}

ordered_json result_json(const MeasureResult& r) {
  ordered_json j;
  j["measure"] = std::string(to_string(r.id));
  j["value"] = r.value;
  j["lo"] = r.interval.lo;
  j["hi"] = r.interval.hi;
  j["stderr"] = r.std_error ? ordered_json(*r.std_error) : ordered_json(nullptr);
  return j;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.eval.samples < 100) throw Error(ErrorCode::InvariantViolation, "samples must be at least 100");
  if (!(cfg.eval.delta > 0.0)) throw Error(ErrorCode::InvariantViolation, "delta must be positive");
  if (!(cfg.eval.resolution > 0.0)) throw Error(ErrorCode::InvariantViolation, "resolution must be positive");
  if (cfg.measures.empty()) throw Error(ErrorCode::InvariantViolation, "no measures selected");
}

std::string run_measure(const MeasureCommand& cmd) {
  validate(cmd.config);
  if (cmd.inputs.empty()) throw Error(ErrorCode::InvariantViolation, "no input files");
  if (cmd.format != "csv" && cmd.format != "json") {
    throw Error(ErrorCode::InvariantViolation, "unknown output format '" + cmd.format + "'");
  }
  std::vector<ShapeDocument> docs;
  for (const auto& path : cmd.inputs) {
    try {
      for (auto& d : load_shapes(path)) docs.push_back(std::move(d));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IoError) throw;
      throw InputError(e.code(), e.what());
    }
  }

  std::ostringstream csv;
  csv << "name,measure,value,lo,hi,stderr,wall_ms,diagnostics\n";
  ordered_json rows = ordered_json::array();
  for (const auto& doc : docs) {
    for (MeasureId id : cmd.config.measures) {
      const auto t0 = std::chrono::steady_clock::now();
      const MeasureResult r = evaluate(doc.shape, id, cmd.config.eval);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      const std::string wall = cmd.config.timing ? std::to_string(ms) : std::string();
      const std::string diag = diagnostics_of(r);
      csv << doc.name << ',' << to_string(id) << ',' << format_double(r.value) << ',' << format_double(r.interval.lo)
          << ',' << format_double(r.interval.hi) << ',' << opt(r.std_error) << ',' << wall << ',' << diag << '\n';
      ordered_json j;
      j["name"] = doc.name;
      j.update(result_json(r));
      j["wall_ms"] = cmd.config.timing ? ordered_json(ms) : ordered_json(nullptr);
      j["diagnostics"] = diag;
      rows.push_back(std::move(j));
    }
  }
  if (cmd.format == "json") {
    ordered_json out;
    out["results"] = std::move(rows);
    return out.dump(2) + "\n";
  }
  return csv.str();
}

std::string run_sweep(const SweepCommand& cmd) {
  validate(cmd.config);
  if (cmd.vertices < 16) throw Error(ErrorCode::InvariantViolation, "vertices must be at least 16");
  const auto grid = cmd.p_grid.empty() ? default_p_grid() : parse_p_grid(cmd.p_grid);
  SweepOptions options;
  options.eval = cmd.config.eval;
  options.vertices = cmd.vertices;
  const auto records = sweep(grid, cmd.config.measures, options);

  std::ostringstream out;
  out << "p,measure,value,lo,hi,stderr,oracle,diagnostic,wall_ms\n";
  for (const auto& r : records) {
    out << format_double(r.p) << ',' << to_string(r.measure) << ',' << format_double(r.value) << ','
        << format_double(r.lo) << ',' << format_double(r.hi) << ',' << opt(r.std_error) << ',' << opt(r.oracle) << ','
        << r.diagnostic << ',' << (cmd.config.timing ? std::to_string(r.wall_ms) : std::string()) << '\n';
  }
  for (const auto& v : monotonicity(records)) {
    const char* verdict = v.non_monotone()      ? "non-monotone"
                          : v.non_decreasing() ? "non-decreasing"
                                               : "decreasing";
    out << "# monotonicity," << to_string(v.measure) << ',' << verdict << ",descents=" << v.descents
        << ",ascents=" << v.ascents << ",point_descents=" << v.point_descents << '\n';
  }
  return out.str();
}

std::string run_axioms(const AxiomsCommand& cmd) {
  validate(cmd.config);
  AxiomOptions options;
  options.eval = cmd.config.eval;
  options.trials = cmd.trials;
  const AxiomReport report = run_axioms(cmd.measure, options);

  ordered_json out;
  out["measure"] = std::string(to_string(report.measure));
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  ordered_json rows = ordered_json::array();
  for (const auto& cell : report.cells) {
    ordered_json row;
    row["property"] = std::string(to_string(cell.axiom));
    row["expected"] = std::string(to_string(cell.expected));
    row["measured"] = std::string(to_string(cell.measured));
    row["agrees"] = cell.agrees();
    row["detail"] = cell.detail;
    ordered_json ces = ordered_json::array();
    for (const auto& ce : cell.counterexamples) {
      ordered_json c;
      c["description"] = ce.description;
      ordered_json shapes = ordered_json::array();
      for (const auto& s : ce.shapes) shapes.push_back(ordered_json::parse(serialize_shape({"", s})));
      c["shapes"] = std::move(shapes);
      ordered_json results = ordered_json::array();
      for (const auto& r : ce.results) results.push_back(result_json(r));
      c["results"] = std::move(results);
      ces.push_back(std::move(c));
    }
    row["counterexamples"] = std::move(ces);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

int exit_code(const Error& e) {
  if (dynamic_cast<const InputError*>(&e) != nullptr) return 1;
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::EmptyShape:
      return 1;
    case ErrorCode::UnknownMeasure:
    case ErrorCode::BadGridSpec:
    case ErrorCode::InvariantViolation:
      return 3;
    case ErrorCode::IoError:
      return 4;
    default:
      return e.is_domain_error() ? 2 : 3;
  }
}

}  // namespace convexity
