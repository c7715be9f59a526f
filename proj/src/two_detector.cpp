#include "udw/two_detector.hpp"

#include <cmath>

namespace udw {

namespace {

Matrix build_two(const PairElements& e) {
  Matrix m(4);
  m.at(0, 0) = 1.0 - 2.0 * e.p;
  m.at(1, 1) = e.p;
  m.at(2, 2) = e.p;
  m.at(3, 3) = 0.0;
  m.at(1, 2) = e.c;
  m.at(2, 1) = e.c;
  m.at(0, 3) = e.x;
  m.at(3, 0) = std::conj(e.x);
  return m;
}

}  // namespace

TwoDetectorState assemble_two(const PairElements& elems) {
  return {elems, DensityMatrix(build_two(elems))};
}

TwoDetectorState assemble_two(const DetectorParams& params, double separation) {
  return assemble_two(pair_elements(params, separation));
}

std::array<double, 4> closed_spectrum_two(const PairElements& e) {
  const double d = 1.0 - 2.0 * e.p;
  const double disc = std::sqrt(d * d + 4.0 * std::norm(e.x));
  return {e.p - e.c, e.p + e.c, 0.5 * (d - disc), 0.5 * (d + disc)};
}

double coherence_l1_two(const TwoDetectorState& state) {
  return offdiagonal_abs_sum(state.rho.matrix());
}

CoherenceEntropy rec_two_detailed(const TwoDetectorState& state) {
  const auto& e = state.elems;
  const auto spec = closed_spectrum_two(e);
  const double s_diag =
      detail::entropy_bits_clamped({1.0 - 2.0 * e.p, e.p, e.p});
  // spec[2] = (d - sqrt(d^2 + 4|x|^2))/2 <= 0 exactly; truncate it and keep
  // the rest, which the clamp rule still guards.
  const double s_state =
      detail::entropy_bits_clamped({spec[0], spec[1], spec[3]});
  return {s_diag - s_state, -spec[2]};
}

double rec_two(const TwoDetectorState& state) {
  return rec_two_detailed(state).value;
}

double negativity_two(const TwoDetectorState& state) {
  return std::max(0.0, std::abs(state.elems.x) - state.elems.p);
}

}  // namespace udw
