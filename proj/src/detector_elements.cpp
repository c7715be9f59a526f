#include "udw/detector_elements.hpp"

#include <cmath>
#include <stdexcept>

#include "udw/special_functions.hpp"

namespace udw {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double sqrt_pi = 1.77245385090551602730;
constexpr double two_over_sqrt_pi = 1.12837916709551257388;

// exp(-a^2) - sqrt(pi) a erfc(a), evaluated without cancellation on either
// side of zero. The two terms agree to O(1/a^2) for large positive a, so
// that regime needs the asymptotic series of the difference itself.
double p_bracket(double a) {
  if (a < 0.0) {
    return std::exp(-a * a) + sqrt_pi * (-a) * (2.0 - std::erfc(-a));
  }
  if (a <= 6.0) {
    return std::exp(-a * a) * (1.0 - sqrt_pi * a * erfcx_scaled(a));
  }
  // exp(-a^2) * sum_{n>=1} (-1)^{n+1} (2n-1)!! / (2a^2)^n
  const double t = 0.5 / (a * a);
  double term = t;
  double acc = t;
  for (int n = 1; n < 40; ++n) {
    const double next = -term * (2.0 * n + 1.0) * t;
    if (std::abs(next) < 1e-18 * std::abs(acc) || std::abs(next) > std::abs(term)) {
      break;
    }
    acc += next;
    term = next;
  }
  return std::exp(-a * a) * acc;
}

// Im erfcx(a + ib) through fifth order in b, via the derivative recurrence
// f' = 2 a f - 2/sqrt(pi) of the scaled complementary error function.
double erfcx_im_small(double a, double b) {
  const double f0 = erfcx_scaled(a);
  const double f1 = 2.0 * a * f0 - two_over_sqrt_pi;
  const double f2 = 2.0 * f0 + 2.0 * a * f1;
  const double f3 = 4.0 * f1 + 2.0 * a * f2;
  const double f4 = 6.0 * f2 + 2.0 * a * f3;
  const double f5 = 8.0 * f3 + 2.0 * a * f4;
  const double b2 = b * b;
  return b * (f1 - (b2 / 6.0) * (f3 - (b2 / 20.0) * f5));
}

void require_separation(double separation, const char* who) {
  if (!(separation > 0.0) || !std::isfinite(separation)) {
    throw std::domain_error(std::string(who) + ": separation must be positive");
  }
}

}  // namespace

DetectorParams::DetectorParams(double coupling_, double gap_)
    : coupling(coupling_), gap(gap_) {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("DetectorParams: coupling must be positive");
  }
  if (!std::isfinite(gap)) {
    throw std::invalid_argument("DetectorParams: gap must be finite");
  }
}

double transition_probability(const DetectorParams& params) {
  return params.coupling * params.coupling / (4.0 * pi) * p_bracket(params.gap);
}

double correlation_c(const DetectorParams& params, double separation) {
  require_separation(separation, "correlation_c");
  const double a = params.gap;
  if (a * a > 700.0) {
    return 0.0;  // exp(-a^2) underflows; the whole element is below 1e-300
  }
  const double b = 0.5 * separation;
  const double pref = params.coupling * params.coupling / (4.0 * sqrt_pi) *
                      std::exp(-a * a) / separation;
  if (separation < 1e-3) {
    return -pref * erfcx_im_small(a, b);
  }
  return -pref * erfcx_scaled(std::complex<double>(a, b)).imag();
}

std::complex<double> correlation_x(const DetectorParams& params, double separation) {
  require_separation(separation, "correlation_x");
  const double a = params.gap;
  if (a * a > 700.0) {
    return {0.0, 0.0};
  }
  const double b = 0.5 * separation;
  const double pref = params.coupling * params.coupling / (4.0 * sqrt_pi) *
                      std::exp(-a * a) / separation;
  return std::complex<double>(0.0, -pref) * erfcx_scaled(std::complex<double>(0.0, b));
}

PairElements pair_elements(const DetectorParams& params, double separation) {
  return {transition_probability(params), correlation_c(params, separation),
          correlation_x(params, separation), separation};
}

PerturbativityReport perturbativity_check(const PairElements& elems) {
  PerturbativityReport r;
  r.max_element = std::max({elems.p, std::abs(elems.c), std::abs(elems.x)});
  r.warn = r.max_element > 0.05;
  r.hard = r.max_element > 0.25;
  if (r.hard) {
    r.note = "matrix elements exceed 0.25; second order in the coupling is unreliable here";
  } else if (r.warn) {
    r.note = "matrix elements exceed 0.05; treat second-order results with caution";
  }
  if (r.warn && std::abs(elems.x) >= r.max_element && elems.separation < 1.0) {
    r.note += "; the pair correlation grows as 1/separation at short range";
  }
  return r;
}

}  // namespace udw
