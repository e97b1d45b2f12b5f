// convexity: measure, sweep and axioms subcommands.
//
//   convexity measure --input a.json b.json --measures env,prob --out rows.csv
//   convexity sweep --p-grid log:0.05:1:20 --measures env --out sweep.csv
//   convexity axioms --measure maxdist --trials 20 --out maxdist.json
//
// Every flag can also be set through CONVEXITY_<FLAG>, e.g. CONVEXITY_SEED=7.

#include "convexity/io/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace convexity;

std::vector<MeasureId> parse_measures(const std::string& list) {
  std::vector<MeasureId> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_measure(item));
  }
  if (out.empty()) throw Error(ErrorCode::UnknownMeasure, "measure list '" + list + "' is empty");
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

struct Common {
  RunConfig config;
  std::string measures;
};

// Flags shared by all subcommands. `with_measures` adds --measures.
void add_common(CLI::App* app, Common& c, bool with_measures) {
  auto& e = c.config.eval;
  app->add_option("--seed", e.seed, "Random seed")->envname("CONVEXITY_SEED")->capture_default_str();
  app->add_option("--samples", e.samples, "Monte Carlo samples for prob")
      ->envname("CONVEXITY_SAMPLES")
      ->capture_default_str();
  app->add_option("--delta", e.delta, "Hausdorff pitch, relative to the shape diameter")
      ->envname("CONVEXITY_DELTA")
      ->capture_default_str();
  app->add_option("--resolution", e.resolution, "Grid resolution, relative to the shape diameter")
      ->envname("CONVEXITY_RESOLUTION")
      ->capture_default_str();
  app->add_option("--threads", e.threads, "Worker threads for Monte Carlo (0 = hardware)")
      ->envname("CONVEXITY_THREADS")
      ->capture_default_str();
  app->add_option("--out", c.config.output_path, "Output file (default: standard output)")->envname("CONVEXITY_OUT");
  app->add_flag("--timing", c.config.timing, "Fill the wall_ms column")->envname("CONVEXITY_TIMING");
  if (with_measures) {
    c.measures = "cihi,prob,env,maxdist,ce,ci";
    app->add_option("--measures", c.measures, "Comma-separated measure ids")
        ->envname("CONVEXITY_MEASURES")
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convexity measures of planar shapes"};
  app.require_subcommand(1);

  Common measure_common;
  MeasureCommand measure_cmd;
  auto* measure = app.add_subcommand("measure", "Evaluate measures on shape files");
  add_common(measure, measure_common, true);
  measure->add_option("--input", measure_cmd.inputs, "Shape JSON files")->required()->envname("CONVEXITY_INPUT");
  measure->add_option("--format", measure_cmd.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("CONVEXITY_FORMAT")
      ->capture_default_str();

  Common sweep_common;
  SweepCommand sweep_cmd;
  auto* sweep = app.add_subcommand("sweep", "Evaluate measures on unit Lp balls over a grid of p");
  add_common(sweep, sweep_common, true);
  sweep->add_option("--p-grid", sweep_cmd.p_grid, "start:step:stop or log:start:stop:count")
      ->envname("CONVEXITY_P_GRID");
  sweep->add_option("--vertices", sweep_cmd.vertices, "Boundary vertices of each Lp ball")
      ->envname("CONVEXITY_VERTICES")
      ->capture_default_str();

  Common axioms_common;
  AxiomsCommand axioms_cmd;
  std::string axiom_measure;
  auto* axioms = app.add_subcommand("axioms", "Check the measure against the published property table");
  add_common(axioms, axioms_common, false);
  axioms->add_option("--measure", axiom_measure, "Measure id")->required()->envname("CONVEXITY_MEASURE");
  axioms->add_option("--trials", axioms_cmd.trials, "Random shapes per invariance suite")
      ->envname("CONVEXITY_TRIALS")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (measure->parsed()) {
      measure_cmd.config = measure_common.config;
      measure_cmd.config.measures = parse_measures(measure_common.measures);
      const std::string text = run_measure(measure_cmd);
      write_output(measure_cmd.config.output_path, text);
    } else if (sweep->parsed()) {
      sweep_cmd.config = sweep_common.config;
      sweep_cmd.config.measures = parse_measures(sweep_common.measures);
      const std::string text = run_sweep(sweep_cmd);
      write_output(sweep_cmd.config.output_path, text);
    } else {
      axioms_cmd.config = axioms_common.config;
      axioms_cmd.measure = parse_measure(axiom_measure);
      const std::string text = run_axioms(axioms_cmd);
      write_output(axioms_cmd.config.output_path, text);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e);
  }
  return 0;
}
