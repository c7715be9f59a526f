#include "mp_erf_oracle.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

constexpr mpfr_prec_t kPrec = 320;

// Minimal complex arithmetic on mpfr pairs; only what the series needs.
struct MpComplex {
  mpfr_t re, im;
  MpComplex() {
    mpfr_init2(re, kPrec);
    mpfr_init2(im, kPrec);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
  }
  ~MpComplex() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
  MpComplex(const MpComplex&) = delete;
  MpComplex& operator=(const MpComplex&) = delete;
};

struct MpReal {
  mpfr_t v;
  MpReal() { mpfr_init2(v, kPrec); }
  ~MpReal() { mpfr_clear(v); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
};

// out = a * b; out must not alias a or b.
void cmul(MpComplex& out, const MpComplex& a, const MpComplex& b, MpReal& t1,
          MpReal& t2) {
  mpfr_mul(t1.v, a.re, b.re, MPFR_RNDN);
  mpfr_mul(t2.v, a.im, b.im, MPFR_RNDN);
  mpfr_sub(out.re, t1.v, t2.v, MPFR_RNDN);
  mpfr_mul(t1.v, a.re, b.im, MPFR_RNDN);
  mpfr_mul(t2.v, a.im, b.re, MPFR_RNDN);
  mpfr_add(out.im, t1.v, t2.v, MPFR_RNDN);
}

}  // namespace

std::complex<double> erf_extended(std::complex<double> z) {
  if (std::abs(z) > 8.5) {
    throw std::domain_error("erf_extended: series oracle limited to |z| <= 8.5");
  }
  MpComplex zv, mz2, term, next, acc;
  MpReal t1, t2, mag, accmag;

  mpfr_set_d(zv.re, z.real(), MPFR_RNDN);
  mpfr_set_d(zv.im, z.imag(), MPFR_RNDN);
  cmul(mz2, zv, zv, t1, t2);
  mpfr_neg(mz2.re, mz2.re, MPFR_RNDN);
  mpfr_neg(mz2.im, mz2.im, MPFR_RNDN);

  // term_0 = z; term_n = term_{n-1} * (-z^2) / n; erf = (2/sqrt(pi)) *
  // sum term_n / (2n+1).
  mpfr_set(term.re, zv.re, MPFR_RNDN);
  mpfr_set(term.im, zv.im, MPFR_RNDN);
  mpfr_set(acc.re, zv.re, MPFR_RNDN);
  mpfr_set(acc.im, zv.im, MPFR_RNDN);

  for (unsigned long n = 1; n <= 600; ++n) {
    cmul(next, term, mz2, t1, t2);
    mpfr_div_ui(term.re, next.re, n, MPFR_RNDN);
    mpfr_div_ui(term.im, next.im, n, MPFR_RNDN);
    mpfr_div_ui(t1.v, term.re, 2 * n + 1, MPFR_RNDN);
    mpfr_div_ui(t2.v, term.im, 2 * n + 1, MPFR_RNDN);
    mpfr_add(acc.re, acc.re, t1.v, MPFR_RNDN);
    mpfr_add(acc.im, acc.im, t2.v, MPFR_RNDN);
    if (n > 8) {
      mpfr_hypot(mag.v, t1.v, t2.v, MPFR_RNDN);
      mpfr_hypot(accmag.v, acc.re, acc.im, MPFR_RNDN);
      mpfr_mul_2si(accmag.v, accmag.v, -340, MPFR_RNDN);
      if (mpfr_cmp(mag.v, accmag.v) < 0) {
        break;
      }
    }
  }

  // times 2/sqrt(pi)
  mpfr_const_pi(t1.v, MPFR_RNDN);
  mpfr_sqrt(t1.v, t1.v, MPFR_RNDN);
  mpfr_ui_div(t2.v, 2, t1.v, MPFR_RNDN);
  mpfr_mul(acc.re, acc.re, t2.v, MPFR_RNDN);
  mpfr_mul(acc.im, acc.im, t2.v, MPFR_RNDN);

  return {mpfr_get_d(acc.re, MPFR_RNDN), mpfr_get_d(acc.im, MPFR_RNDN)};
}

}  // namespace oracle
