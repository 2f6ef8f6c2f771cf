#pragma once

#include <complex>
#include <vector>

#include "fracwave/fractional.hpp"
#include "fracwave/grid.hpp"

namespace fracwave {

// Symbol of the fractional wave operator:
//   sigma_alpha(tau, xi) = (|xi|^2 - tau^2)^alpha          (spacelike)
//                        = e^{i pi alpha sgn tau} (tau^2 - |xi|^2)^alpha
//                                                          (timelike)
//                        = 0                               (light cone)
// Integer alpha yields exactly real phases (+1 / -1).
std::complex<double> sigma(double alpha, double tau, double xi_norm);

// Regularized symbol (|xi|^2 - (tau - i eps)^2)^alpha, principal branch;
// converges to sigma as eps -> 0+ and equals the extension multiplier
// (|xi|^2 + s^2)^alpha under s = eps + i tau.
std::complex<double> sigma_eps(double alpha, double tau, double xi_norm,
                               double eps);

// Symbol values tabulated over the frequency grid of `grid`.
struct SymbolGrid {
  SpacetimeGrid grid;
  double alpha = 0.0;
  std::vector<std::complex<double>> values;

  SymbolGrid(const SpacetimeGrid& g, double alpha_);
};

// Route A: diagonal application of sigma_alpha in Fourier space.
ScalarField apply_box_alpha_spectral(const ScalarField& f, double alpha);

// Integer-order wave operator d_tt - Laplacian; same code path as
// apply_box_alpha_spectral(f, 1), so the two agree bit for bit.
ScalarField wave_apply(const ScalarField& f);

}  // namespace fracwave
