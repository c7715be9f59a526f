#include "udw/three_detector.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace udw {

namespace {

Matrix build_three(const PairElements& ab, const PairElements& ac,
                   const PairElements& bc) {
  const double p = ab.p;
  Matrix m(8);
  m.at(0, 0) = 1.0 - 3.0 * p;
  m.at(1, 1) = p;
  m.at(2, 2) = p;
  m.at(3, 3) = p;
  // |001><010| etc: the exchanging pair is the one whose excitation moves.
  m.at(1, 2) = bc.c;
  m.at(2, 1) = bc.c;
  m.at(1, 3) = ac.c;
  m.at(3, 1) = ac.c;
  m.at(2, 3) = ab.c;
  m.at(3, 2) = ab.c;
  // |000><011| etc: the doubly excited pair.
  m.at(0, 4) = bc.x;
  m.at(4, 0) = std::conj(bc.x);
  m.at(0, 5) = ac.x;
  m.at(5, 0) = std::conj(ac.x);
  m.at(0, 6) = ab.x;
  m.at(6, 0) = std::conj(ab.x);
  return m;
}

double corner_norm2(const ThreeDetectorState& s) {
  return std::norm(s.ab.x) + std::norm(s.ac.x) + std::norm(s.bc.x);
}

}  // namespace

Separations resolve_geometry(const TriangleConfig& config) {
  if (!(config.length > 0.0) || !std::isfinite(config.length)) {
    throw std::domain_error("resolve_geometry: length must be positive");
  }
  switch (config.kind) {
    case TriangleKind::equilateral:
      return {config.length, config.length, config.length};
    case TriangleKind::linear:
      return {config.length, 2.0 * config.length, config.length};
    case TriangleKind::scalene: {
      if (config.offset < 0.0 || !std::isfinite(config.offset)) {
        throw std::domain_error("resolve_geometry: slide must be nonnegative");
      }
      // A at the origin, C at (base, 0), B above the base midpoint at the
      // equilateral height, slid by `offset` toward C and beyond.
      const double base = config.length;
      const double d = config.offset;
      const double h2 = 0.75 * base * base;
      const double ab = std::sqrt((0.5 * base + d) * (0.5 * base + d) + h2);
      const double bc = std::sqrt((d - 0.5 * base) * (d - 0.5 * base) + h2);
      return {ab, base, bc};
    }
  }
  throw std::domain_error("resolve_geometry: unknown configuration kind");
}

ThreeDetectorState assemble_three(const TriangleConfig& config,
                                  const DetectorParams& params) {
  const Separations seps = resolve_geometry(config);
  return assemble_three_from_elements(config, pair_elements(params, seps.ab),
                                      pair_elements(params, seps.ac),
                                      pair_elements(params, seps.bc));
}

ThreeDetectorState assemble_three_from_elements(const TriangleConfig& config,
                                                const PairElements& ab,
                                                const PairElements& ac,
                                                const PairElements& bc) {
  if (std::abs(ab.p - ac.p) > 1e-12 || std::abs(ab.p - bc.p) > 1e-12) {
    throw std::invalid_argument(
        "assemble_three_from_elements: identical detectors require one "
        "transition probability");
  }
  return {config, Separations{ab.separation, ac.separation, bc.separation},
          ab,     ac,
          bc,     DensityMatrix(build_three(ab, ac, bc))};
}

double coherence_l1_three(const ThreeDetectorState& state) {
  return offdiagonal_abs_sum(state.rho.matrix());
}

std::array<double, 5> closed_spectrum_equilateral(const PairElements& e) {
  const double d = 1.0 - 3.0 * e.p;
  const double disc = std::sqrt(d * d + 12.0 * std::norm(e.x));
  return {e.p - e.c, e.p - e.c, e.p + 2.0 * e.c, 0.5 * (d - disc),
          0.5 * (d + disc)};
}

std::array<double, 5> closed_spectrum_linear(const PairElements& nearest,
                                             const PairElements& outer) {
  const double p = nearest.p;
  const double c1 = nearest.c;
  const double c2 = outer.c;
  const double d = 1.0 - 3.0 * p;
  const double q = std::sqrt(8.0 * c1 * c1 + c2 * c2);
  const double r =
      std::sqrt(d * d + 8.0 * std::norm(nearest.x) + 4.0 * std::norm(outer.x));
  return {p - c2, 0.5 * (2.0 * p + c2 - q), 0.5 * (2.0 * p + c2 + q),
          0.5 * (d - r), 0.5 * (d + r)};
}

CoherenceEntropy rec_three_detailed(const ThreeDetectorState& state) {
  const double p = state.ab.p;
  const double s_diag =
      detail::entropy_bits_clamped({1.0 - 3.0 * p, p, p, p});
  // In every configuration the corner block contributes one analytically
  // nonpositive eigenvalue of order coupling^4; it is truncated here and
  // its magnitude reported, as in rec_two.
  switch (state.config.kind) {
    case TriangleKind::equilateral: {
      const auto spec = closed_spectrum_equilateral(state.ab);
      const double s_state = detail::entropy_bits_clamped(
          {spec[0], spec[1], spec[2], spec[4]});
      return {s_diag - s_state, -spec[3]};
    }
    case TriangleKind::linear: {
      const auto spec = closed_spectrum_linear(state.ab, state.ac);
      const double s_state = detail::entropy_bits_clamped(
          {spec[0], spec[1], spec[2], spec[4]});
      return {s_diag - s_state, -spec[3]};
    }
    case TriangleKind::scalene: {
      std::vector<double> eigs = hermitian_eigenvalues(state.rho.matrix());
      const double d = 1.0 - 3.0 * p;
      const double known =
          0.5 * (d - std::sqrt(d * d + 4.0 * corner_norm2(state)));
      if (std::abs(eigs.front() - known) > 1e-9) {
        throw std::runtime_error(
            "rec_three: dense spectrum does not match the corner block");
      }
      const double truncated = std::max(0.0, -eigs.front());
      eigs.front() = 0.0;
      return {s_diag - detail::entropy_bits_clamped(eigs), truncated};
    }
  }
  throw std::domain_error("rec_three: unknown configuration kind");
}

double rec_three(const ThreeDetectorState& state) {
  return rec_three_detailed(state).value;
}

double tripartite_negativity(const ThreeDetectorState& state) {
  if (state.config.kind != TriangleKind::equilateral) {
    throw std::domain_error(
        "tripartite_negativity: closed form covers the equilateral "
        "configuration only");
  }
  // One-vs-rest partial transposition couples the two x corners into the
  // single-excitation block; on the symmetric subspace that leaves the
  // 2x2 pair p + (c -+ sqrt(c^2 + 8|x|^2))/2, whose lower branch is the
  // only negative eigenvalue at second order. The remaining corner-block
  // dip is order coupling^4 and is truncated, consistent with the entropy
  // policy.
  const double c = state.ab.c;
  const double p = state.ab.p;
  const double x2 = std::norm(state.ab.x);
  return std::max(0.0, 0.5 * std::sqrt(c * c + 8.0 * x2) - 0.5 * c - p);
}

double monogamy_residual(const ThreeDetectorState& state) {
  const Matrix& rho = state.rho.matrix();
  double pair_sum = 0.0;
  for (DetectorPair keep : {DetectorPair::ab, DetectorPair::ac, DetectorPair::bc}) {
    pair_sum += offdiagonal_abs_sum(partial_trace(rho, keep));
  }
  return pair_sum - coherence_l1_three(state);
}

}  // namespace udw
