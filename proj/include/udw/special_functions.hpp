#pragma once

#include <complex>

namespace udw {

// Error function family on the complex plane.
//
// erf_complex and erfc_complex accept |z| <= 30 and throw std::domain_error
// beyond that; within the domain they throw std::overflow_error where the
// unscaled value exceeds double range (e.g. erf(i*y) for y^2 > 709).
// erfcx_scaled is the exp(z^2)*erfc(z) form that stays bounded along the
// imaginary axis and for Re(z) >= 0, which is what the detector matrix
// elements need at large separations.

// Faddeeva function w(z) = exp(-z^2) erfc(-i z), upper half plane only
// (Im(z) >= 0; throws std::invalid_argument otherwise).
std::complex<double> faddeeva_w(std::complex<double> z);

// Real-axis scaled complementary error function. Overflows (throws) for
// x < -26.6 where 2 exp(x^2) leaves double range.
double erfcx_scaled(double x);

// Complex scaled complementary error function, exp(z^2) erfc(z).
// Bounded for Re(z) >= 0; throws std::overflow_error when Re(z) < 0 and
// Re(z^2) > 709.
std::complex<double> erfcx_scaled(std::complex<double> z);

std::complex<double> erf_complex(std::complex<double> z);
std::complex<double> erfc_complex(std::complex<double> z);

}  // namespace udw
