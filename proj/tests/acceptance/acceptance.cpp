// Acceptance run: one PASS/FAIL line per criterion. `--criterion N` (repeatable)
// selects criteria; the exit status is nonzero when any selected one fails.

#include "convexity/error.hpp"
#include "convexity/experiments/axioms.hpp"
#include "convexity/experiments/corpus.hpp"
#include "convexity/geometry/hausdorff.hpp"
#include "convexity/geometry/operations.hpp"
#include "convexity/io/commands.hpp"
#include "convexity/io/shape_io.hpp"
#include "convexity/lp/lp_lab.hpp"
#include "convexity/measures/measures.hpp"
#include "oracles/frozen.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace convexity;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  // Records a failed check; the first few are kept in the summary line.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 4) notes << (notes.tellp() > 0 ? "; " : "") << "FAILED " << what;
    pass = false;
    ++failures;
  }
  void note(const std::string& text) { notes << (notes.tellp() > 0 ? "; " : "") << text; }

  int failures = 0;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

std::string range(const Interval& i) { return "[" + num(i.lo) + ", " + num(i.hi) + "]"; }

EvalConfig base_config() { return EvalConfig{}; }

// Area of the unit Lp ball from the gamma function, independent of the library.
double lp_area(double p) { return 4.0 * std::pow(std::tgamma(1.0 + 1.0 / p), 2) / std::tgamma(1.0 + 2.0 / p); }

void convex_fixed_point(Outcome& out) {
  Generator gen(SeededStream{101, 1}, 0);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    const Shape s = corpus::random_convex(gen);
    const double diam = diameter(s);
    const std::string tag = "shape " + std::to_string(t) + " ";
    const double env = m_env(s).value;
    out.require(std::abs(env - 1.0) <= 1e-9, tag + "env " + num(env));
    const MeasureResult prob = m_prob(s, SeededStream{42, static_cast<std::uint64_t>(t)}, 100'000);
    out.require(prob.meta.at("hits") == prob.meta.at("samples"), tag + "prob " + num(prob.value));
    const double res = 1e-3 * diam;
    const double md = m_maxdist(s, res).value;
    out.require(std::abs(md - 1.0) <= 1e-6, tag + "maxdist " + num(md));
    const double ce = m_ce(s, res).value;
    out.require(std::abs(ce - 1.0) <= 1e-6, tag + "ce " + num(ce));
    const double ci = m_ci(s, res).value;
    out.require(std::abs(ci - 1.0) <= 1e-6, tag + "ci " + num(ci));
    const Interval cihi = m_cihi(s, 1e-3 * diam).interval;
    out.require(cihi.contains(1.0) && cihi.width() <= 1e-2, tag + "cihi " + range(cihi));
    ++checked;
  }
  out.note(std::to_string(checked) + " convex polygons, prob with 10^5 segments each");
}

void two_square_battery(Outcome& out) {
  const Shape s = corpus::two_squares(1.0);
  const double diam = diameter(s);
  const double grid = 1e-2 * diam;
  const double env = m_env(s).value;
  out.require(std::abs(env - 2.0 / 3.0) <= 1e-9, "env " + num(env));
  const MeasureResult md = m_maxdist(s, grid);
  const double grid_bound = grid * std::numbers::sqrt2 / 2.0;
  out.require(std::abs(md.value - 2.0 / 3.0) <= grid_bound, "maxdist " + num(md.value));
  const MeasureResult ce = m_ce(s, grid);
  const double pocket = ce.meta.at("pocket_ratio");
  out.require(std::abs(pocket - 1.0 / 3.0) <= grid, "ce pocket " + num(pocket));
  const double ci = m_ci(s, grid).value;
  out.require(std::abs(ci - 0.5) <= grid, "ci " + num(ci));
  const MeasureResult prob = m_prob(s, SeededStream{42, 0}, 1'000'000);
  out.require(std::abs(prob.value - 0.5) <= 3.0 * *prob.std_error, "prob " + num(prob.value));
  const Interval cihi = m_cihi(s, 1e-3 * diam).interval;
  out.require(cihi.lo >= 0.86 && cihi.hi <= 0.93, "cihi " + range(cihi));
  out.note("env " + num(env) + ", maxdist " + num(md.value) + ", pocket " + num(pocket) + ", ci " + num(ci) +
           ", prob " + num(prob.value) + " +- " + num(*prob.std_error) + ", cihi " + range(cihi));
}

void lp_oracle_agreement(Outcome& out) {
  for (double p : {0.5, 1.0}) {
    const double tol = p == 0.5 ? 2e-3 : 1e-6;
    const double exact = p == 1.0 ? 1.0 : lp_area(p) / 2.0;
    const double formula = closed_form(MeasureId::Env, p);
    for (const auto& [label, shape] : {std::pair{"implicit", Shape::lp(p)}, std::pair{"4096-gon", lp_ball(p, 4096)}}) {
      const double v = m_env(shape).value;
      out.require(std::abs(v - formula) <= tol, std::string(label) + " p=" + num(p) + " vs formula " + num(v));
      out.require(std::abs(v - exact) <= tol, std::string(label) + " p=" + num(p) + " vs area ratio " + num(v));
      out.note(std::string(label) + " env(L_" + num(p) + ") = " + num(v));
    }
  }
}

void prob_limit(Outcome& out) {
  const MeasureResult at = m_prob(Shape::lp(0.05), SeededStream{42, 0}, 1'000'000);
  out.require(std::abs(at.value - 0.5) <= 0.05,
              "prob(L_0.05) = " + num(at.value) + " +- " + num(*at.std_error) + " is not within 0.05 of 1/2");
  SweepOptions opts;
  const auto records = sweep(log_grid(0.05, 1.0, 20), {MeasureId::Prob}, opts);
  const MonotonicityVerdict v = monotonicity(records).at(0);
  std::string values;
  for (const auto& r : records) values += (values.empty() ? "" : " ") + num(r.value);
  out.require(v.non_monotone(), "prob sweep is not non-monotone (descents " + std::to_string(v.descents) +
                                    ", ascents " + std::to_string(v.ascents) + ")");
  out.note("prob(L_0.05) = " + num(at.value) + "; sweep " + values);
}

void lp_monotonicity(Outcome& out) {
  const std::vector<MeasureId> ids{MeasureId::Env, MeasureId::Maxdist, MeasureId::Ci, MeasureId::Ce, MeasureId::Cihi};
  const auto records = sweep(default_p_grid(), ids, SweepOptions{});
  for (const auto& v : monotonicity(records)) {
    out.require(v.non_decreasing(), std::string(to_string(v.measure)) + " has " + std::to_string(v.descents) +
                                        " interval-separated descents");
    out.note(std::string(to_string(v.measure)) + " descents " + std::to_string(v.descents) + " (point " +
             std::to_string(v.point_descents) + ")");
  }
}

void diameter_lipschitz(Outcome& out) {
  Generator gen(SeededStream{106, 0}, 0);
  double worst = -1e300;
  for (int t = 0; t < 200; ++t) {
    const Shape a = corpus::random_shape(gen);
    const Shape b = corpus::random_shape(gen);
    const double da = diameter(a);
    const double db = diameter(b);
    const Interval h = hausdorff(a, b, 1e-3 * std::max(da, db));
    const double slack = 2.0 * h.hi + 1e-9 - std::abs(da - db);
    worst = std::max(worst, -slack);
    out.require(slack >= 0.0, "pair " + std::to_string(t) + ": |diam difference| " + num(std::abs(da - db)) +
                                  " > 2 * " + num(h.hi));
  }
  out.note("200 pairs, largest |dA - dB| - 2 d_H = " + num(worst));
}

void hausdorff_correctness(Outcome& out) {
  const Shape disc = Shape::lp(2.0);
  const Shape square = Shape::polygon(corpus::square(-1, -1, 2));
  const double delta = 1e-3;
  const Interval d = hausdorff(disc, square, delta);
  out.require(d.contains(oracle::kSqrt2Minus1), "disc vs square " + range(d) + " misses sqrt(2) - 1");
  out.require(d.width() <= delta, "disc vs square width " + num(d.width()) + " > delta");
  out.note("disc vs square " + range(d));

  Generator gen(SeededStream{107, 0}, 0);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    const Shape a = corpus::random_shape(gen);
    const Shape b = corpus::random_shape(gen);
    const Shape c = corpus::random_shape(gen);
    const double pitch = 1e-3 * std::max({diameter(a), diameter(b), diameter(c)});
    const Interval ab = hausdorff(a, b, pitch);
    const Interval ba = hausdorff(b, a, pitch);
    const Interval bc = hausdorff(b, c, pitch);
    const Interval ac = hausdorff(a, c, pitch);
    const bool ok = ab.overlaps(ba) && ac.lo <= ab.hi + bc.hi + 1e-9 && ab.lo <= ac.hi + bc.hi + 1e-9 &&
                    bc.lo <= ab.hi + ac.hi + 1e-9;
    violations += !ok;
    out.require(ok, "triple " + std::to_string(t));
  }
  out.note("100 triples, " + std::to_string(violations) + " metric violations");
}

void sandwich(Outcome& out) {
  Generator gen(SeededStream{108, 0}, 0);
  double tightest = 1e300;
  for (int t = 0; t < 100; ++t) {
    const Shape s = t % 3 == 2 ? corpus::random_two_part(gen) : corpus::random_star(gen);
    const double delta = 1e-3 * diameter(s);
    const ConvDistance cd = d_conv_distance(s, delta);
    const Interval hull = hausdorff(s, Shape::convex(convex_hull(s)), delta);
    const std::string tag = "shape " + std::to_string(t) + " ";
    out.require(cd.d.lo <= cd.d.hi, tag + "empty interval");
    out.require(cd.d.lo >= hull.lo / 2.0 - 1e-9, tag + "lo " + num(cd.d.lo) + " below half the hull distance");
    out.require(cd.d.hi <= hull.hi + 1e-9, tag + "hi " + num(cd.d.hi) + " above the hull distance");
    out.require(cd.d.hi <= cd.hull_distance.hi + 1e-9, tag + "refinement worsened hi");
    out.require(cd.d.lo > 0.0, tag + "lo is not positive");
    tightest = std::min(tightest, cd.d.lo);
  }
  out.note("100 non-convex shapes, smallest lower bound " + num(tightest));
}

void invariance(Outcome& out) {
  for (MeasureId id : kAllMeasures) {
    AxiomOptions o;
    if (id == MeasureId::Prob) o.eval.samples = 200'000;
    const AxiomCell iso = check_isometry(id, o);
    out.require(iso.measured == Verdict::Pass, std::string(to_string(id)) + " isometry: " + iso.detail);
    const AxiomCell hom = check_homothety(id, o);
    const Verdict want = id == MeasureId::Maxdist ? Verdict::Fail : Verdict::Pass;
    out.require(hom.measured == want, std::string(to_string(id)) + " homothety: " + hom.detail);
  }
  const Shape s = corpus::two_squares(1.0);
  Similarity twice;
  twice.scale = 2.0;
  const double grid = 1e-2;
  const MeasureResult a = m_maxdist(s, grid * diameter(s));
  const MeasureResult b = m_maxdist(transformed(s, twice), grid * 2.0 * diameter(s));
  out.require(std::abs(a.value - b.value) > compatibility_tolerance(a, b),
              "maxdist does not vary under scaling by 2");
  out.note("isometry passes for 6 measures; maxdist two squares " + num(a.value) + " vs x2 " + num(b.value));
}

void continuity(Outcome& out) {
  const ShapeFamily fam = half_disc_family({0.1, 0.01, 0.001});
  EvalConfig cfg = base_config();
  std::string probs;
  for (std::size_t k = 0; k < fam.members.size(); ++k) {
    const MeasureResult r = evaluate(fam.members[k], MeasureId::Prob, cfg);
    out.require(std::abs(r.value - 0.5) <= 3.0 * *r.std_error,
                "prob at gap " + num(fam.parameters[k]) + " = " + num(r.value));
    probs += (probs.empty() ? "" : " ") + num(r.value);
  }
  const MeasureResult disc = evaluate(fam.limit, MeasureId::Prob, cfg);
  out.require(disc.value == 1.0, "prob(disc) = " + num(disc.value));
  for (MeasureId id : {MeasureId::Env, MeasureId::Cihi}) {
    const ContinuityReport rep = continuity_experiment(fam, id, cfg);
    out.require(rep.converges && rep.monotone, std::string(to_string(id)) + " does not converge monotonically");
    std::string devs;
    for (double d : rep.deviations) devs += (devs.empty() ? "" : " ") + num(d);
    out.note(std::string(to_string(id)) + " deviations " + devs);
  }
  out.note("prob along the family " + probs + ", prob(disc) " + num(disc.value));
}

void domain_restriction(Outcome& out) {
  const std::vector<Shape> singletons{Shape::points({{0.5, 0.5}}), Shape::points({{2, 3}, {2, 3}, {2, 3}})};
  for (const Shape& s : singletons) {
    for (MeasureId id : kAllMeasures) {
      try {
        const MeasureResult r = evaluate(s, id, base_config());
        out.require(false, std::string(to_string(id)) + " returned " + num(r.value));
      } catch (const Error& e) {
        out.require(e.code() == ErrorCode::SingletonShape,
                    std::string(to_string(id)) + " raised " + std::string(to_string(e.code())));
      }
    }
  }
  out.note("12 singleton evaluations, all rejected with SingletonShape");
}

void reproducibility(Outcome& out) {
  const fs::path dir = fs::temp_directory_path() / "convexity_acceptance";
  fs::create_directories(dir);
  MeasureCommand measure;
  for (const auto& [name, shape] : {std::pair{"two", corpus::two_squares(1.0)},
                                    std::pair{"notch", corpus::notched_square(0.4)},
                                    std::pair{"half", Shape::lp(0.5)}}) {
    const fs::path p = dir / (std::string(name) + ".json");
    std::ofstream(p) << serialize_shape({name, shape});
    measure.inputs.push_back(p.string());
  }
  measure.config.eval.samples = 200'000;
  const std::string m1 = run_measure(measure);
  measure.config.eval.threads = 1;
  const std::string m2 = run_measure(measure);
  out.require(m1 == m2, "measure output differs between runs");

  SweepCommand sw;
  sw.p_grid = "log:0.1:1:4";
  sw.config.eval.samples = 100'000;
  const std::string s1 = run_sweep(sw);
  const std::string s2 = run_sweep(sw);
  out.require(s1 == s2, "sweep output differs between runs");

  AxiomsCommand ax;
  ax.measure = MeasureId::Prob;
  ax.trials = 3;
  ax.config.eval.samples = 20'000;
  const std::string a1 = run_axioms(ax);
  const std::string a2 = run_axioms(ax);
  out.require(a1 == a2, "axioms output differs between runs");
  fs::remove_all(dir);
  out.note("measure " + std::to_string(m1.size()) + " bytes, sweep " + std::to_string(s1.size()) + " bytes, axioms " +
           std::to_string(a1.size()) + " bytes, each identical on rerun");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "convex fixed point", convex_fixed_point},
      {2, "two-square analytic battery", two_square_battery},
      {3, "Lp oracle agreement for env", lp_oracle_agreement},
      {4, "prob limit and non-monotone sweep", prob_limit},
      {5, "Lp monotonicity", lp_monotonicity},
      {6, "diameter Lipschitz", diameter_lipschitz},
      {7, "Hausdorff correctness", hausdorff_correctness},
      {8, "sandwich certification", sandwich},
      {9, "invariance suite", invariance},
      {10, "continuity and discontinuity", continuity},
      {11, "domain restriction", domain_restriction},
      {12, "reproducibility", reproducibility},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number (repeatable); all by default")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << c.id << " " << (out.pass ? "PASS" : "FAIL") << " (" << c.title << ", "
              << std::fixed << std::setprecision(1) << secs << std::defaultfloat << " s): " << out.notes.str() << std::endl;
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
