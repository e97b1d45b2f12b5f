#pragma once

#include "convexity/geometry/shape.hpp"
#include "convexity/measures/measures.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace convexity {

enum class Verdict { Pass, Fail, MeasuredOnly };

std::string_view to_string(Verdict v);

enum class Axiom { Continuity, Isometry, Homothety, Remoteness, DefinitionDomain, LpMonotonicity };

inline constexpr std::array<Axiom, 6> kAllAxioms{Axiom::Continuity,       Axiom::Isometry,   Axiom::Homothety,
                                                 Axiom::Remoteness,       Axiom::DefinitionDomain,
                                                 Axiom::LpMonotonicity};

/// Stable identifiers: continuity, isometry, homothety, remoteness,
/// definition_domain, lp_monotonicity.
std::string_view to_string(Axiom a);

/// The published property table: which measure is claimed to satisfy which
/// axiom.
bool published_claim(MeasureId id, Axiom a);

/// Shapes and values that witness a failed (or notable) cell.
struct Counterexample {
  std::string description;
  std::vector<Shape> shapes;
  std::vector<MeasureResult> results;
};

struct AxiomCell {
  Axiom axiom = Axiom::Continuity;
  /// Pass when the published table claims the property, Fail otherwise.
  Verdict expected = Verdict::Pass;
  Verdict measured = Verdict::Pass;
  std::string detail;
  std::vector<Counterexample> counterexamples;

  bool agrees() const { return measured == Verdict::MeasuredOnly || measured == expected; }
};

struct AxiomReport {
  MeasureId measure = MeasureId::Env;
  std::uint64_t seed = 42;
  int trials = 0;
  std::vector<AxiomCell> cells;
};

struct AxiomOptions {
  EvalConfig eval;
  /// Random shapes per invariance suite.
  int trials = 20;
  /// Points of the log grid on [0.05, 1] used by the monotonicity row.
  int lp_grid_points = 20;
  int lp_vertices = 4096;
  /// Rows to run; all of them by default.
  std::vector<Axiom> axioms{kAllAxioms.begin(), kAllAxioms.end()};
};

AxiomCell check_continuity(MeasureId id, const AxiomOptions& options);
/// Random rotations and translations of seeded corpus shapes.
AxiomCell check_isometry(MeasureId id, const AxiomOptions& options);
/// Random scalings in [1/4, 4] plus a fixed factor 2 on every shape.
AxiomCell check_homothety(MeasureId id, const AxiomOptions& options);
/// Two unit squares at gaps 1, 2, 4, 8.
AxiomCell check_remoteness(MeasureId id, const AxiomOptions& options);
/// Zero-area inputs that are not single points: two points, three collinear
/// points, a triangle's vertices.
AxiomCell check_definition_domain(MeasureId id, const AxiomOptions& options);
AxiomCell check_lp_monotonicity(MeasureId id, const AxiomOptions& options);

AxiomReport run_axioms(MeasureId id, const AxiomOptions& options);

}  // namespace convexity
