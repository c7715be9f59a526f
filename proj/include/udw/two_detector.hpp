#pragma once

#include <array>

#include "udw/detector_elements.hpp"
#include "udw/quantum_linalg.hpp"

namespace udw {

// Joint state of two identical detectors after one switching cycle, to
// second order in the coupling. Basis |00>,|01>,|10>,|11>, A on the left:
// diagonal (1-2p, p, p, 0), exchange block rho_12 = c, corner rho_03 = x.
struct TwoDetectorState {
  PairElements elems;
  DensityMatrix rho;
};

TwoDetectorState assemble_two(const PairElements& elems);
TwoDetectorState assemble_two(const DetectorParams& params, double separation);

// Closed-form spectrum in the order {p - c, p + c, corner-block lower
// branch, corner-block upper branch}; the lower branch is the one that
// dips below zero at this order.
std::array<double, 4> closed_spectrum_two(const PairElements& elems);

// l1 coherence: sum of off-diagonal magnitudes, 2|c| + 2|x|.
double coherence_l1_two(const TwoDetectorState& state);

// Relative entropy of coherence in bits, with the truncation policy shared
// by every entropy in this library: the analytically nonpositive branch of
// the corner block (order coupling^4) is dropped from the spectrum and its
// magnitude reported back.
struct CoherenceEntropy {
  double value;
  double truncated_weight;
};
CoherenceEntropy rec_two_detailed(const TwoDetectorState& state);
double rec_two(const TwoDetectorState& state);

// Negativity across the A|B cut: max(0, |x| - p). Independent of c.
double negativity_two(const TwoDetectorState& state);

}  // namespace udw
