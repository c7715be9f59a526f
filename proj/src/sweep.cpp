#include "udw/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "udw/three_detector.hpp"
#include "udw/two_detector.hpp"

namespace udw {

const char* const csv_header =
    "config,lambda,omega_sigma,L_over_sigma,D_over_sigma,P,C_AB,C_AC,C_BC,"
    "absX_AB,absX_AC,absX_BC,coherence_l1,coherence_rec,negativity,"
    "tripartite_negativity,warnings";

namespace {

const char* label_of(SweepConfig c) {
  switch (c) {
    case SweepConfig::two_detector:
      return "two_detector";
    case SweepConfig::equilateral:
      return "equilateral";
    case SweepConfig::linear:
      return "linear";
    case SweepConfig::scalene:
      return "scalene";
  }
  return "?";
}

bool wants(const std::vector<Measure>& measures, Measure m) {
  return measures.empty() ||
         std::find(measures.begin(), measures.end(), m) != measures.end();
}

void append_warning(std::string& warnings, std::string text) {
  // Keep the CSV single-line and comma-free.
  for (char& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r') {
      ch = ';';
    }
  }
  if (!warnings.empty()) {
    warnings += ';';
  }
  warnings += text;
}

void collect_flags(SweepRecord& rec, const DetectorParams& params,
                   std::initializer_list<const PairElements*> pairs) {
  if (params.strong_coupling_warning()) {
    append_warning(rec.warnings, "strong-coupling");
  }
  bool warn = false;
  bool hard = false;
  for (const PairElements* e : pairs) {
    const auto report = perturbativity_check(*e);
    warn = warn || report.warn;
    hard = hard || report.hard;
  }
  if (hard) {
    append_warning(rec.warnings, "perturbativity-hard");
  } else if (warn) {
    append_warning(rec.warnings, "perturbativity-warning");
  }
}

void fill_two(SweepRecord& rec, const DetectorParams& params, double l,
              const std::vector<Measure>& measures) {
  const TwoDetectorState state = assemble_two(params, l);
  collect_flags(rec, params, {&state.elems});
  if (wants(measures, Measure::elements)) {
    rec.p = state.elems.p;
    rec.c_ab = state.elems.c;
    rec.abs_x_ab = std::abs(state.elems.x);
  }
  if (wants(measures, Measure::l1)) {
    rec.coherence_l1 = coherence_l1_two(state);
  }
  if (wants(measures, Measure::rec)) {
    rec.coherence_rec = rec_two(state);
  }
  if (wants(measures, Measure::negativity)) {
    rec.negativity = negativity_two(state);
  }
}

void fill_three(SweepRecord& rec, const TriangleConfig& config,
                const DetectorParams& params,
                const std::vector<Measure>& measures) {
  const ThreeDetectorState state = assemble_three(config, params);
  collect_flags(rec, params, {&state.ab, &state.ac, &state.bc});
  if (wants(measures, Measure::elements)) {
    rec.p = state.ab.p;
    rec.c_ab = state.ab.c;
    rec.c_ac = state.ac.c;
    rec.c_bc = state.bc.c;
    rec.abs_x_ab = std::abs(state.ab.x);
    rec.abs_x_ac = std::abs(state.ac.x);
    rec.abs_x_bc = std::abs(state.bc.x);
  }
  if (wants(measures, Measure::l1)) {
    rec.coherence_l1 = coherence_l1_three(state);
  }
  if (wants(measures, Measure::rec)) {
    rec.coherence_rec = rec_three(state);
  }
  if (wants(measures, Measure::negativity)) {
    // Entanglement of the A-B pair after tracing out C; exact at this
    // order and well defined for every configuration.
    rec.negativity = std::max(0.0, std::abs(state.ab.x) - state.ab.p);
  }
  if (config.kind == TriangleKind::equilateral &&
      wants(measures, Measure::tripartite_negativity)) {
    rec.tripartite_negativity = tripartite_negativity(state);
  }
}

}  // namespace

SweepConfig sweep_config_from_name(std::string_view name) {
  if (name == "two_detector" || name == "two") {
    return SweepConfig::two_detector;
  }
  if (name == "equilateral") {
    return SweepConfig::equilateral;
  }
  if (name == "linear") {
    return SweepConfig::linear;
  }
  if (name == "scalene") {
    return SweepConfig::scalene;
  }
  throw UsageError("unknown configuration '" + std::string(name) + "'");
}

Measure measure_from_name(std::string_view name) {
  if (name == "l1") {
    return Measure::l1;
  }
  if (name == "rec") {
    return Measure::rec;
  }
  if (name == "negativity") {
    return Measure::negativity;
  }
  if (name == "tripartite_negativity") {
    return Measure::tripartite_negativity;
  }
  if (name == "elements") {
    return Measure::elements;
  }
  throw UsageError("unknown measure '" + std::string(name) + "'");
}

void validate(const SweepSpec& spec) {
  if (spec.steps < 2) {
    throw UsageError("sweep: steps must be at least 2");
  }
  if (!(spec.coupling > 0.0) || !std::isfinite(spec.coupling)) {
    throw UsageError("sweep: coupling must be positive");
  }
  if (spec.gaps.empty()) {
    throw UsageError("sweep: at least one gap value is required");
  }
  for (double g : spec.gaps) {
    if (!std::isfinite(g)) {
      throw UsageError("sweep: gap values must be finite");
    }
  }
  if (!std::isfinite(spec.sweep_min) || !std::isfinite(spec.sweep_max) ||
      !(spec.sweep_max > spec.sweep_min)) {
    throw UsageError("sweep: need max > min");
  }
  if (spec.config == SweepConfig::scalene) {
    if (spec.sweep_min < 0.0) {
      throw UsageError("sweep: slide distance must be nonnegative");
    }
    if (!(spec.l_ac > 0.0) || !std::isfinite(spec.l_ac)) {
      throw UsageError("sweep: base separation must be positive");
    }
  } else if (!(spec.sweep_min > 0.0)) {
    throw UsageError("sweep: separation must be positive");
  }
}

SweepRecord evaluate_point(SweepConfig config, double coupling, double gap,
                           double sweep_value, double l_ac,
                           const std::vector<Measure>& measures) {
  SweepRecord rec;
  rec.config_label = label_of(config);
  rec.coupling = coupling;
  rec.gap = gap;
  if (config == SweepConfig::scalene) {
    rec.l_over_sigma = l_ac;
    rec.d_over_sigma = sweep_value;
  } else {
    rec.l_over_sigma = sweep_value;
  }
  try {
    const DetectorParams params(coupling, gap);
    switch (config) {
      case SweepConfig::two_detector:
        fill_two(rec, params, sweep_value, measures);
        break;
      case SweepConfig::equilateral:
        fill_three(rec, TriangleConfig::equilateral(sweep_value), params, measures);
        break;
      case SweepConfig::linear:
        fill_three(rec, TriangleConfig::linear(sweep_value), params, measures);
        break;
      case SweepConfig::scalene:
        fill_three(rec, TriangleConfig::scalene(l_ac, sweep_value), params, measures);
        break;
    }
  } catch (const std::exception& e) {
    append_warning(rec.warnings, std::string("error: ") + e.what());
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> gaps = spec.gaps;
  std::sort(gaps.begin(), gaps.end());
  std::vector<SweepRecord> records;
  records.reserve(gaps.size() * static_cast<size_t>(spec.steps));
  for (double gap : gaps) {
    for (int k = 0; k < spec.steps; ++k) {
      const double t = spec.sweep_min + (spec.sweep_max - spec.sweep_min) *
                                            static_cast<double>(k) /
                                            static_cast<double>(spec.steps - 1);
      records.push_back(evaluate_point(spec.config, spec.coupling, gap, t,
                                       spec.l_ac, spec.measures));
    }
  }
  return records;
}

SweepSpec figure_preset(std::string_view name) {
  SweepSpec spec;
  spec.coupling = 0.1;
  spec.gaps = {0.5, 1.0, 1.5, 2.0};
  spec.steps = 400;
  if (name == "fig1") {
    spec.config = SweepConfig::two_detector;
  } else if (name == "fig3") {
    spec.config = SweepConfig::equilateral;
  } else if (name == "fig4") {
    spec.config = SweepConfig::linear;
  } else if (name == "fig5") {
    spec.config = SweepConfig::scalene;
    spec.sweep_min = 0.0;
    spec.sweep_max = 10.0;
    spec.l_ac = 7.0;
  } else {
    throw UsageError("unknown figure '" + std::string(name) +
                     "'; expected fig1, fig3, fig4 or fig5");
  }
  return spec;
}

namespace {

void put_field(std::string& line, const std::optional<double>& v) {
  line += ',';
  if (v.has_value()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", *v);
    line += buf;
  }
}

void put_field(std::string& line, double v) {
  line += ',';
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  if (records.empty()) {
    throw std::invalid_argument("emit_csv: no records");
  }
  out << csv_header << '\n';
  for (const SweepRecord& r : records) {
    std::string line = r.config_label;
    put_field(line, r.coupling);
    put_field(line, r.gap);
    put_field(line, r.l_over_sigma);
    put_field(line, r.d_over_sigma);
    put_field(line, r.p);
    put_field(line, r.c_ab);
    put_field(line, r.c_ac);
    put_field(line, r.c_bc);
    put_field(line, r.abs_x_ab);
    put_field(line, r.abs_x_ac);
    put_field(line, r.abs_x_bc);
    put_field(line, r.coherence_l1);
    put_field(line, r.coherence_rec);
    put_field(line, r.negativity);
    put_field(line, r.tripartite_negativity);
    line += ',';
    line += r.warnings;
    out << line << '\n';
  }
}

}  // namespace udw
