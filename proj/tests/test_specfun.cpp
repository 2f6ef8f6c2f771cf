#include <doctest.h>

#include <cmath>
#include <complex>

#include "fracwave/specfun.hpp"

using namespace fracwave::specfun;
using cdouble = std::complex<double>;

namespace {
double rel(cdouble got, cdouble want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

// Reference values computed with 25-digit arbitrary-precision arithmetic.

TEST_CASE("log_gamma and gamma") {
  CHECK(rel(log_gamma(cdouble(2.5, 3.0)),
            cdouble(-1.4709546103488417, 2.8226156382607995)) < 1e-14);
  CHECK(rel(gamma(cdouble(0.5, -2.0)),
            cdouble(0.089855176706431636, 0.060493760292887568)) < 1e-13);
  CHECK(gamma_real(-0.7) ==
        doctest::Approx(-4.2736699824108438).epsilon(1e-14));
  CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS(gamma_real(-2.0));  // pole
}

TEST_CASE("bessel_k across the three regimes") {
  // Series (|z| <= 2), continued fraction, and asymptotic expansion.
  CHECK(rel(bessel_k(0.4, cdouble(1.5, 0.5)),
            cdouble(0.17255456930410802, -0.13252093558183421)) < 1e-12);
  CHECK(rel(bessel_k(1.3, cdouble(0.05, 9.0)),
            cdouble(-0.36172421561740949, 0.16915513650907961)) < 1e-10);
  CHECK(rel(bessel_k(0.7, cdouble(30.0, 10.0)),
            cdouble(-1.5494694806238675e-14, 1.4070463224187233e-14)) <
        1e-12);
  // Even order symmetry K_{-v} = K_v.
  CHECK(bessel_k(-0.4, cdouble(1.5, 0.5)) == bessel_k(0.4, cdouble(1.5, 0.5)));
  // Underflow region.
  CHECK(bessel_k(0.4, cdouble(800.0, 0.0)) == cdouble(0.0));
}

TEST_CASE("hyp2f1 real and complex") {
  CHECK(hyp2f1(0.3, 1.2, 2.1, 0.0) == 1.0);
  CHECK(hyp2f1(0.3, 1.2, 2.1, -0.5) ==
        doctest::Approx(0.92961665502438817).epsilon(1e-13));
  CHECK(hyp2f1(0.3, 1.2, 2.1, -5.0) ==
        doctest::Approx(0.69005100508804508).epsilon(1e-13));
  CHECK(rel(hyp2f1(cdouble(0.2, 1.0), cdouble(0.4, -1.0), 1.75, -4.0),
            cdouble(0.10770374926191251, -0.094479305987728151)) < 1e-12);
  // Very large |z| (the global AdS boundary-limit regime).
  CHECK(rel(hyp2f1(cdouble(0.55, -1.05), cdouble(0.95, -1.05), 1.5, -1e8),
            cdouble(0.00028587933123876699, 0.00015327832663179263)) < 1e-11);
}
