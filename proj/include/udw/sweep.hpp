#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace udw {

// Raised for malformed sweep requests (bad grids, unknown names); the CLI
// maps it to its usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SweepConfig { two_detector, equilateral, linear, scalene };
enum class Measure { l1, rec, negativity, tripartite_negativity, elements };

SweepConfig sweep_config_from_name(std::string_view name);
Measure measure_from_name(std::string_view name);

// A sweep walks one geometric variable over an inclusive uniform grid for
// each gap value: L for the first three configurations, the slide D for
// scalene (whose base stays at `l_ac`). All quantities dimensionless.
struct SweepSpec {
  SweepConfig config = SweepConfig::two_detector;
  double coupling = 0.1;
  std::vector<double> gaps = {1.0};
  double sweep_min = 0.25;
  double sweep_max = 10.0;
  int steps = 400;
  double l_ac = 7.0;
  std::vector<Measure> measures;  // empty selects every applicable measure
};

// Throws UsageError: steps >= 2, max > min, min > 0 (scalene slides may
// start at 0), positive coupling and base, finite nonempty gap list.
void validate(const SweepSpec& spec);

// One evaluated grid point. Fields that do not apply to the configuration
// or were not requested stay empty; `warnings` collects advisory flags and
// any per-row evaluation error (rows never abort a sweep).
struct SweepRecord {
  std::string config_label;
  double coupling = 0.0;
  double gap = 0.0;
  std::optional<double> l_over_sigma;
  std::optional<double> d_over_sigma;
  std::optional<double> p, c_ab, c_ac, c_bc;
  std::optional<double> abs_x_ab, abs_x_ac, abs_x_bc;
  std::optional<double> coherence_l1, coherence_rec;
  std::optional<double> negativity, tripartite_negativity;
  std::string warnings;
};

// Evaluate a single grid point; `sweep_value` is L, or D for scalene.
SweepRecord evaluate_point(SweepConfig config, double coupling, double gap,
                           double sweep_value, double l_ac,
                           const std::vector<Measure>& measures);

// Deterministic: steps x gaps records, ordered by (gap, sweep variable).
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

// Canned figure-level grids: fig1/fig3/fig4 sweep L in [0.25, 10] over 400
// steps for the two-detector, equilateral, and linear configurations; fig5
// slides the scalene apex over D in [0, 10] at base 7. Coupling 0.1, gaps
// {0.5, 1.0, 1.5, 2.0}.
SweepSpec figure_preset(std::string_view name);

// Header plus one line per record, 17 significant digits, byte
// deterministic. Throws std::invalid_argument on an empty record list.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);

extern const char* const csv_header;

}  // namespace udw
