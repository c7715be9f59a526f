#pragma once

#include <array>

#include "udw/detector_elements.hpp"
#include "udw/quantum_linalg.hpp"
#include "udw/two_detector.hpp"

namespace udw {

// Detector arrangements in the plane. `length` is the equilateral side,
// the linear nearest-neighbor spacing, or the fixed A-C base; `offset` is
// the scalene slide distance of B parallel to the base (toward C), from
// the apex position above the base midpoint.
enum class TriangleKind { equilateral, linear, scalene };

struct TriangleConfig {
  TriangleKind kind;
  double length;
  double offset;  // scalene only, >= 0; offset 0 recovers the equilateral layout

  static TriangleConfig equilateral(double side) {
    return {TriangleKind::equilateral, side, 0.0};
  }
  static TriangleConfig linear(double spacing) {
    return {TriangleKind::linear, spacing, 0.0};
  }
  static TriangleConfig scalene(double base, double slide) {
    return {TriangleKind::scalene, base, slide};
  }
};

struct Separations {
  double ab;
  double ac;
  double bc;
};

// Pairwise distances for a configuration. Throws std::domain_error for
// nonpositive lengths or a negative slide.
Separations resolve_geometry(const TriangleConfig& config);

// Basis |000>,|001>,|010>,|100>,|011>,|101>,|110>,|111>, A leftmost.
// Diagonal (1-3p, p, p, p, 0, 0, 0, 0); each single-excitation pair holds
// the exchange correlation of the two detectors that differ, each
// double-excitation column against the ground state holds the x element of
// the two excited detectors.
struct ThreeDetectorState {
  TriangleConfig config;
  Separations seps;
  PairElements ab;
  PairElements ac;
  PairElements bc;
  DensityMatrix rho;
};

ThreeDetectorState assemble_three(const TriangleConfig& config,
                                  const DetectorParams& params);

// Element-level entry point for synthetic blocks; the single-detector
// probabilities must agree across the three pairs (identical detectors).
ThreeDetectorState assemble_three_from_elements(const TriangleConfig& config,
                                                const PairElements& ab,
                                                const PairElements& ac,
                                                const PairElements& bc);

// Sum of off-diagonal magnitudes, 2(|c_ab|+|c_ac|+|c_bc|+|x_ab|+|x_ac|+|x_bc|).
double coherence_l1_three(const ThreeDetectorState& state);

// Closed-form nonzero eigenvalues; three exact zeros complete the spectrum.
// Equilateral: {p-c, p-c, p+2c, corner lower, corner upper}.
std::array<double, 5> closed_spectrum_equilateral(const PairElements& pair);
// Linear chain: {p-c2, symmetric-block lower, symmetric-block upper,
// corner lower, corner upper}, where `nearest` carries the spacing-L
// elements and `outer` the spacing-2L elements.
std::array<double, 5> closed_spectrum_linear(const PairElements& nearest,
                                             const PairElements& outer);

// Relative entropy of coherence in bits. Closed spectra for the symmetric
// configurations, dense diagonalization for scalene; either way the
// order-coupling^4 negative branch of the corner block is truncated and
// reported, matching rec_two.
CoherenceEntropy rec_three_detailed(const ThreeDetectorState& state);
double rec_three(const ThreeDetectorState& state);

// One-vs-rest negativity geometric mean for the equilateral configuration,
// max(0, sqrt(c^2 + 8|x|^2)/2 - c/2 - p). Other configurations throw
// std::domain_error; use negativity_numeric on the full state for those.
double tripartite_negativity(const ThreeDetectorState& state);

// (Sum of pair l1 coherences after tracing out the third detector) minus
// the tripartite l1 coherence. Identically zero up to rounding: every
// off-diagonal element survives exactly one partial trace.
double monogamy_residual(const ThreeDetectorState& state);

}  // namespace udw
