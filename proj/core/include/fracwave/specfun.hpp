#pragma once

#include <complex>

namespace fracwave {
namespace specfun {

using cdouble = std::complex<double>;

// Principal-branch log-Gamma for complex z (z not a non-positive integer).
cdouble log_gamma(cdouble z);

// Gamma for complex z; throws Error at poles.
cdouble gamma(cdouble z);

// Gamma for real z; throws Error at poles.
double gamma_real(double x);

// Modified Bessel function of the second kind, real order nu (any sign,
// K_{-nu} = K_nu), complex argument with Re z > 0. Relative error ~1e-10 for
// |z| in [1e-3, 1e4]; underflows to 0 for Re z > 700.
cdouble bessel_k(double nu, cdouble z);

// Gauss hypergeometric function for real parameters and real z <= 0.
// Series + Pfaff transformation for |z| <= 1, z -> 1/z connection formula
// beyond (a - b integer is rejected there).
double hyp2f1(double a, double b, double c, double z);

// Overload with complex upper parameters (real c, real z <= 0); needed by the
// radial profiles where a, b carry the spectral parameter s.
cdouble hyp2f1(cdouble a, cdouble b, double c, double z);

}  // namespace specfun
}  // namespace fracwave
