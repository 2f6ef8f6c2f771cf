#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fracwave/fractional.hpp"
#include "fracwave/grid.hpp"

namespace fracwave {

using cdouble = std::complex<double>;

// Per-mode Laplace-Fourier profile of the extension problem and the sampled
// y-traces consumed by the Neumann extraction.
struct ExtensionProfile {
  FractionalOrder alpha;
  cdouble s;                       // Bromwich point, Re s > 0
  double xi_norm = 0.0;
  cdouble boundary_value = 1.0;    // F~(s, xi)
  std::vector<std::pair<double, cdouble>> y_samples;  // filled on extraction
};

// DtN multiplier (|xi|^2 + s^2)^alpha, principal branch; identical to
// sigma_eps(alpha, tau, |xi|, eps) under s = eps + i tau.
cdouble dtn_multiplier(double alpha, cdouble s, double xi_norm);

// Closed-form profile 2^{1-a}/Gamma(a) (y w)^a K_a(y w) F with
// w = sqrt(|xi|^2 + s^2); tends to boundary_value as y -> 0+.
cdouble profile_eval(const FractionalOrder& alpha, cdouble s, double xi_norm,
                     cdouble boundary_value, double y);

// Weighted Neumann limit c_a lim y^{2(1-a0)} (y^{-1} d_y)^{m+1} U via
// composed log-coordinate finite-difference stencils on a geometric ladder
// plus a noise-weighted exponent fit. Fills profile.y_samples with the
// ladder traces it used. Contract: equals dtn_multiplier * boundary_value.
cdouble neumann_extract_profile(ExtensionProfile& profile);

// Route C on spacetime data: damped transform, multiplier, inverse, undamp,
// evaluated on an internal descending eps-ladder and extrapolated in eps
// with the known error exponents {a, 1, 1+a, 2, 2+a}.
ScalarField dtn_spacetime(const ScalarField& f, double alpha, double eps);

}  // namespace fracwave
