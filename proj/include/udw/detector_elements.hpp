#pragma once

#include <complex>
#include <string>

namespace udw {

// Everything is dimensionless: `coupling` is the interaction strength,
// `gap` is the energy gap times the switching width (Omega*sigma), and
// separations are in units of the switching width (L/sigma). Negative gaps
// describe initially inverted detectors and are accepted.
struct DetectorParams {
  double coupling;
  double gap;

  // coupling must be positive and finite; gap must be finite.
  DetectorParams(double coupling_, double gap_);

  // Above 0.3 the second-order treatment degrades quickly.
  bool strong_coupling_warning() const { return coupling > 0.3; }
};

// Second-order matrix elements for one pair of identical detectors:
// p is the single-detector transition probability, c the (real) exchange
// correlation, x the ground/double-excitation correlation.
struct PairElements {
  double p;
  double c;
  std::complex<double> x;
  double separation;
};

double transition_probability(const DetectorParams& params);

// Exchange correlation; separation must be positive (std::domain_error).
// Real by construction; an odd Taylor expansion takes over below
// separation 1e-3 where the 1/separation prefactor would amplify
// cancellation.
double correlation_c(const DetectorParams& params, double separation);

// Ground/double-excitation correlation; separation must be positive.
// Evaluated through the scaled complementary error function, so large
// separations stay overflow-free.
std::complex<double> correlation_x(const DetectorParams& params, double separation);

PairElements pair_elements(const DetectorParams& params, double separation);

// Advisory sanity check: the closed forms stay valid only while every
// element is small against 1. Never throws.
struct PerturbativityReport {
  bool warn = false;   // largest element above 0.05
  bool hard = false;   // largest element above 0.25
  double max_element = 0.0;
  std::string note;
};
PerturbativityReport perturbativity_check(const PairElements& elems);

}  // namespace udw
