#include "convexity/experiments/axioms.hpp"

#include "convexity/error.hpp"
#include "convexity/experiments/corpus.hpp"
#include "convexity/geometry/region.hpp"
#include "convexity/lp/lp_lab.hpp"

#include <charconv>
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

bool needs_area(MeasureId id) {
  return id == MeasureId::Prob || id == MeasureId::Env || id == MeasureId::Ce || id == MeasureId::Ci;
}

AxiomCell make_cell(MeasureId id, Axiom a) {
  AxiomCell cell;
  cell.axiom = a;
  cell.expected = published_claim(id, a) ? Verdict::Pass : Verdict::Fail;
  return cell;
}

Generator corpus_generator(const AxiomOptions& options, Axiom a) {
  const SeededStream root{options.eval.seed, 0xC0FFEE};
  return Generator(root.split(static_cast<std::uint64_t>(a)), 0);
}

Shape draw_shape(Generator& gen, MeasureId id) {
  for (;;) {
    Shape s = corpus::random_shape(gen);
    if (!needs_area(id) || s.prepared().has_area()) return s;
  }
}

/// Runs the measure on each random shape and on its image under a random
/// similarity from `pick`; counts incompatible pairs.
template <typename Pick>
AxiomCell invariance_suite(MeasureId id, const AxiomOptions& options, Axiom a, Pick pick) {
  AxiomCell cell = make_cell(id, a);
  Generator gen = corpus_generator(options, a);
  int checked = 0;
  int broken = 0;
  double worst = 0.0;
  for (int t = 0; t < options.trials; ++t) {
    const Shape s = draw_shape(gen, id);
    for (const Similarity& sim : pick(gen)) {
      const Shape image = transformed(s, sim);
      const MeasureResult r0 = evaluate(s, id, options.eval);
      const MeasureResult r1 = evaluate(image, id, options.eval);
      const double dev = std::abs(r0.value - r1.value);
      const double tol = compatibility_tolerance(r0, r1);
      worst = std::max(worst, dev - tol);
      ++checked;
      if (dev > tol) {
        ++broken;
        if (cell.counterexamples.size() < 3) {
          cell.counterexamples.push_back({"trial " + std::to_string(t) + ": scale " + num(sim.scale) + ", angle " +
                                              num(sim.angle) + ", |difference| " + num(dev) + " > tolerance " +
                                              num(tol),
                                          {s, image},
                                          {r0, r1}});
        }
      }
    }
  }
  cell.measured = broken == 0 ? Verdict::Pass : Verdict::Fail;
  cell.detail = std::to_string(broken) + " of " + std::to_string(checked) +
                " pairs differ beyond their tolerance; largest excess " + num(worst);
  return cell;
}

std::string values_of(const std::vector<MeasureResult>& rs) {
  std::string out;
  for (const auto& r : rs) out += (out.empty() ? "" : ", ") + num(r.value);
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::MeasuredOnly:
      return "measured-only";
  }
  return "?";
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Continuity:
      return "continuity";
    case Axiom::Isometry:
      return "isometry";
    case Axiom::Homothety:
      return "homothety";
    case Axiom::Remoteness:
      return "remoteness";
    case Axiom::DefinitionDomain:
      return "definition_domain";
    case Axiom::LpMonotonicity:
      return "lp_monotonicity";
  }
  return "?";
}

bool published_claim(MeasureId id, Axiom a) {
  switch (a) {
    case Axiom::Continuity:
      return id != MeasureId::Prob;
    case Axiom::Isometry:
      return true;
    case Axiom::Homothety:
      return id != MeasureId::Maxdist;
    case Axiom::Remoteness:
      return id == MeasureId::Cihi || id == MeasureId::Prob || id == MeasureId::Ci;
    case Axiom::DefinitionDomain:
      return id != MeasureId::Ci;
    case Axiom::LpMonotonicity:
      return id != MeasureId::Prob;
  }
  return false;
}

AxiomCell check_continuity(MeasureId id, const AxiomOptions& options) {
  AxiomCell cell = make_cell(id, Axiom::Continuity);
  bool all = true;
  for (const ShapeFamily& family : {half_disc_family(), notch_family()}) {
    const ContinuityReport rep = continuity_experiment(family, id, options.eval);
    std::string line = family.name + ": values " + values_of(rep.members) + " against limit " +
                       num(rep.limit.value) + (rep.converges ? " (converges)" : " (does not converge)");
    cell.detail += (cell.detail.empty() ? "" : "; ") + line;
    if (!rep.converges) {
      all = false;
      Counterexample ce{family.name + " with parameters down to " + num(family.parameters.back()) +
                            " stays " + num(rep.deviations.back()) + " away from the limit value",
                        family.members,
                        rep.members};
      ce.shapes.push_back(family.limit);
      ce.results.push_back(rep.limit);
      cell.counterexamples.push_back(std::move(ce));
    }
  }
  cell.measured = all ? Verdict::Pass : Verdict::Fail;
  return cell;
}

AxiomCell check_isometry(MeasureId id, const AxiomOptions& options) {
  return invariance_suite(id, options, Axiom::Isometry, [](Generator& gen) {
    Similarity sim;
    sim.angle = gen.uniform(0.0, 2.0 * std::numbers::pi);
    sim.offset = Point(gen.uniform(-10.0, 10.0), gen.uniform(-10.0, 10.0));
    return std::vector<Similarity>{sim};
  });
}

AxiomCell check_homothety(MeasureId id, const AxiomOptions& options) {
  return invariance_suite(id, options, Axiom::Homothety, [](Generator& gen) {
    Similarity random;
    random.scale = std::exp(gen.uniform(std::log(0.25), std::log(4.0)));
    Similarity twice;
    twice.scale = 2.0;
    return std::vector<Similarity>{random, twice};
  });
}

AxiomCell check_remoteness(MeasureId id, const AxiomOptions& options) {
  AxiomCell cell = make_cell(id, Axiom::Remoteness);
  const Shape unit = Shape::polygon(corpus::square(0, 0, 1));
  const std::vector<double> gaps{1.0, 2.0, 4.0, 8.0};
  const RemotenessReport rep = remoteness_experiment(unit, unit, gaps, id, options.eval);
  cell.detail = "two unit squares at gaps 1, 2, 4, 8: values " + values_of(rep.results) + ", max deviation " +
                num(rep.max_deviation) + ", tolerance " + num(rep.tolerance) + ", trend " + rep.trend;
  if (id == MeasureId::Cihi) {
    cell.measured = Verdict::MeasuredOnly;
    return cell;
  }
  cell.measured = rep.constant ? Verdict::Pass : Verdict::Fail;
  if (!rep.constant) {
    Counterexample ce{"gap " + num(gaps.front()) + " versus gap " + num(gaps.back()), {}, {}};
    ce.shapes = {corpus::two_squares(gaps.front()), corpus::two_squares(gaps.back())};
    ce.results = {rep.results.front(), rep.results.back()};
    cell.counterexamples.push_back(std::move(ce));
  }
  return cell;
}

AxiomCell check_definition_domain(MeasureId id, const AxiomOptions& options) {
  AxiomCell cell = make_cell(id, Axiom::DefinitionDomain);
  const std::vector<std::pair<std::string, Shape>> inputs{
      {"two points", Shape::points({{0, 0}, {1, 0}})},
      {"three collinear points", Shape::points({{0, 0}, {1, 0}, {2, 0}})},
      {"triangle vertices", Shape::points({{0, 0}, {1, 0}, {0, 1}})},
  };
  int accepted = 0;
  for (const auto& [name, shape] : inputs) {
    try {
      const MeasureResult r = evaluate(shape, id, options.eval);
      ++accepted;
      cell.detail += (cell.detail.empty() ? "" : "; ") + name + " -> " + num(r.value);
    } catch (const Error& e) {
      if (!e.is_domain_error()) throw;
      cell.detail += (cell.detail.empty() ? "" : "; ") + name + " rejected (" + std::string(to_string(e.code())) + ")";
      cell.counterexamples.push_back({name + ": " + e.what(), {shape}, {}});
    }
  }
  cell.measured = accepted == static_cast<int>(inputs.size()) ? Verdict::Pass : Verdict::Fail;
  return cell;
}

AxiomCell check_lp_monotonicity(MeasureId id, const AxiomOptions& options) {
  AxiomCell cell = make_cell(id, Axiom::LpMonotonicity);
  SweepOptions sweep_options;
  sweep_options.eval = options.eval;
  sweep_options.vertices = options.lp_vertices;
  const auto grid = log_grid(0.05, 1.0, options.lp_grid_points);
  const auto records = sweep(grid, {id}, sweep_options);
  const MonotonicityVerdict v = monotonicity(records).front();
  cell.detail = std::to_string(grid.size()) + " log-spaced p in [0.05, 1]: " + std::to_string(v.descents) +
                " certain descents, " + std::to_string(v.ascents) + " certain ascents, " +
                std::to_string(v.point_descents) + " point-value descents";
  cell.measured = v.non_decreasing() ? Verdict::Pass : Verdict::Fail;
  if (!v.non_decreasing()) {
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
      if (records[i].lo > records[i + 1].hi) {
        LpRegion a;
        a.p = records[i].p;
        LpRegion b;
        b.p = records[i + 1].p;
        MeasureResult ra;
        ra.id = id;
        ra.value = records[i].value;
        ra.interval = {records[i].lo, records[i].hi};
        ra.std_error = records[i].std_error;
        MeasureResult rb = ra;
        rb.value = records[i + 1].value;
        rb.interval = {records[i + 1].lo, records[i + 1].hi};
        rb.std_error = records[i + 1].std_error;
        cell.counterexamples.push_back(
            {"p = " + num(a.p) + " scores above p = " + num(b.p), {Shape::lp(a), Shape::lp(b)}, {ra, rb}});
        break;
      }
    }
  }
  return cell;
}

AxiomReport run_axioms(MeasureId id, const AxiomOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::InvariantViolation, "axiom suites need at least one trial");
  AxiomReport report;
  report.measure = id;
  report.seed = options.eval.seed;
  report.trials = options.trials;
  for (Axiom a : options.axioms) {
    switch (a) {
      case Axiom::Continuity:
        report.cells.push_back(check_continuity(id, options));
        break;
      case Axiom::Isometry:
        report.cells.push_back(check_isometry(id, options));
        break;
      case Axiom::Homothety:
        report.cells.push_back(check_homothety(id, options));
        break;
      case Axiom::Remoteness:
        report.cells.push_back(check_remoteness(id, options));
        break;
      case Axiom::DefinitionDomain:
        report.cells.push_back(check_definition_domain(id, options));
        break;
      case Axiom::LpMonotonicity:
        report.cells.push_back(check_lp_monotonicity(id, options));
        break;
    }
  }
  return report;
}

}  // namespace convexity
