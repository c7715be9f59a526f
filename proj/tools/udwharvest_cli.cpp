#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "udw/selftest.hpp"
#include "udw/sweep.hpp"

namespace {

std::vector<udw::Measure> parse_measures(const std::vector<std::string>& names) {
  std::vector<udw::Measure> out;
  out.reserve(names.size());
  for (const std::string& n : names) {
    out.push_back(udw::measure_from_name(n));
  }
  return out;
}

int write_records(const std::vector<udw::SweepRecord>& records,
                  const std::string& output) {
  if (output == "-") {
    udw::emit_csv(records, std::cout);
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << output << "' for writing\n";
    return 1;
  }
  udw::emit_csv(records, file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coherence and entanglement harvested by Gaussian-switched detector "
      "pairs and triples"};
  app.require_subcommand(1);

  std::string config_name = "two_detector";
  double coupling = 0.1;
  std::vector<double> gaps;
  double l_min = 0.25, l_max = 10.0;
  double d_min = 0.0, d_max = 10.0;
  int steps = 400;
  double lac = 7.0;
  std::vector<std::string> measure_names;
  std::string output = "-";

  auto* sweep = app.add_subcommand("sweep", "Sweep a separation grid to CSV");
  sweep->add_option("--config", config_name,
                    "two_detector, equilateral, linear or scalene");
  sweep->add_option("--lambda", coupling, "coupling strength");
  sweep->add_option("--omega-sigma", gaps, "gap values (repeatable)");
  sweep->add_option("--l-min", l_min, "smallest separation L/sigma");
  sweep->add_option("--l-max", l_max, "largest separation L/sigma");
  sweep->add_option("--steps", steps, "grid points per gap");
  sweep->add_option("--d-min", d_min, "smallest slide D/sigma (scalene)");
  sweep->add_option("--d-max", d_max, "largest slide D/sigma (scalene)");
  sweep->add_option("--lac", lac, "fixed A-C base separation (scalene)");
  sweep->add_option("--measures", measure_names,
                    "subset of l1, rec, negativity, tripartite_negativity, "
                    "elements (default: all)");
  sweep->add_option("--output", output, "output file, or - for stdout");

  std::string figure_name;
  std::vector<double> figure_gaps;
  std::string figure_output = "-";
  auto* figure = app.add_subcommand("figure", "Run a canned figure-level grid");
  figure->add_option("name", figure_name, "fig1, fig3, fig4 or fig5")->required();
  figure->add_option("--omega-sigma", figure_gaps, "override the gap set");
  figure->add_option("--output", figure_output, "output file, or - for stdout");

  std::string point_config = "two_detector";
  double point_coupling = 0.1;
  double point_gap = 1.0;
  double point_l = 1.0;
  double point_lac = 7.0;
  double point_d = 0.0;
  auto* point = app.add_subcommand("point", "Evaluate a single configuration");
  point->add_option("--config", point_config,
                    "two_detector, equilateral, linear or scalene");
  point->add_option("--lambda", point_coupling, "coupling strength");
  point->add_option("--omega-sigma", point_gap, "gap value");
  point->add_option("--l", point_l, "separation L/sigma");
  point->add_option("--lac", point_lac, "fixed A-C base separation (scalene)");
  point->add_option("--d", point_d, "slide D/sigma (scalene)");

  std::string fault_name = "none";
  auto* selftest = app.add_subcommand("selftest", "Run the internal cross-checks");
  selftest->add_option("--inject-fault", fault_name,
                       "none, spectrum-branch-sign or negativity-c-dependence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(sweep)) {
      udw::SweepSpec spec;
      spec.config = udw::sweep_config_from_name(config_name);
      spec.coupling = coupling;
      if (!gaps.empty()) {
        spec.gaps = gaps;
      }
      const bool slide = spec.config == udw::SweepConfig::scalene;
      spec.sweep_min = slide ? d_min : l_min;
      spec.sweep_max = slide ? d_max : l_max;
      spec.steps = steps;
      spec.l_ac = lac;
      spec.measures = parse_measures(measure_names);
      return write_records(udw::run_sweep(spec), output);
    }
    if (app.got_subcommand(figure)) {
      udw::SweepSpec spec = udw::figure_preset(figure_name);
      if (!figure_gaps.empty()) {
        spec.gaps = figure_gaps;
      }
      return write_records(udw::run_sweep(spec), figure_output);
    }
    if (app.got_subcommand(point)) {
      const auto config = udw::sweep_config_from_name(point_config);
      const bool slide = config == udw::SweepConfig::scalene;
      const auto rec = udw::evaluate_point(config, point_coupling, point_gap,
                                           slide ? point_d : point_l, point_lac, {});
      udw::emit_csv({rec}, std::cout);
      return 0;
    }
    if (app.got_subcommand(selftest)) {
      const auto report = udw::run_selftest(udw::fault_from_name(fault_name));
      std::cout << report.text;
      return report.passed ? 0 : 2;
    }
  } catch (const udw::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
