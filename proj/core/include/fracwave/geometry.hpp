#pragma once

#include <complex>
#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

using cdouble = std::complex<double>;

// Eigenvalue ladders of the cross-section manifold. Only the eigenvalues
// enter the DtN coefficients; mode data arrive as coefficient time series.
struct EigenBasis {
  enum class Manifold { Circle, Sphere };
  Manifold manifold = Manifold::Circle;
  int n = 3;  // sphere convention: lambda_j^2 = j (j + n - 3)

  double eigenvalue(int j) const;  // lambda_j >= 0, nondecreasing in |j|
};

// Product-space DtN on one mode: the time series is transformed, multiplied
// by sigma(alpha, tau, lambda) (or sigma_eps when eps > 0), and transformed
// back. dt is the sample step; the series is treated as one period.
std::vector<cdouble> product_dtn_coeffs(const std::vector<cdouble>& series,
                                        double dt, double alpha, double lambda,
                                        double eps = 0.0);

// Convenience: full DtN on R x S^1 data (dx must be 2 pi / nx so that the
// spatial frequencies are the integer circle eigenvalues). Decomposes into
// circle modes, applies product_dtn_coeffs per mode, and reassembles. Must
// match apply_box_alpha_spectral on the same grid to machine precision.
ScalarField product_dtn_apply(const ScalarField& f, double alpha,
                              double eps = 0.0);

// One angular mode of the scattering problem on global anti-de Sitter space.
struct GlobalAdsMode {
  int n = 3;
  double alpha = 0.0;
  double lambda = 0.0;  // cross-section eigenvalue, >= 0
  double beta = 0.0;    // (2 - n + sqrt(4 lambda^2 + (n-2)^2)) / 2

  GlobalAdsMode(int n_, double alpha_, double lambda_);
};

// Scattering multiplier of the mode at Laplace parameter s:
//   Gamma(-a) Gamma((b - is + n/2 + a)/2) Gamma((b + is + n/2 + a)/2)
//   ---------------------------------------------------------------- (-2a)
//   Gamma( a) Gamma((b - is + n/2 - a)/2) Gamma((b + is + n/2 - a)/2)
// Conjugate-symmetric under s -> conj(s). Throws NumericalError when a Gamma
// argument sits within 1e-8 of a pole.
cdouble global_ads_multiplier(const GlobalAdsMode& mode, cdouble s);

// Radial profile Phi(r) = c r^b (1 + r^2)^{-is/2}
//   2F1((b - is + n/2 - a)/2, (b - is + n/2 + a)/2; b + n/2; -r^2).
cdouble radial_profile(const GlobalAdsMode& mode, cdouble s, double r,
                       cdouble c = 1.0);

// Relative residual of the radial ODE
//   (1+r^2) Phi'' + ((n-1)/r + (n+1) r) Phi'
//     + (s^2/(1+r^2) - lambda^2/r^2 + a^2 - n^2/4) Phi = 0
// at the point r, via high-order central differences; normalized by the sum
// of the term magnitudes.
double radial_ode_residual(const GlobalAdsMode& mode, cdouble s, double r);

// Weighted Neumann limit lim_{r->inf} r^{1+2a} d_r (r^{n/2-a} Phi) divided
// by the boundary value F = lim r^{n/2-a} Phi, computed on a large-r ladder
// with a power-law fit; verifies the Gamma formula numerically.
cdouble global_ads_neumann_ladder(const GlobalAdsMode& mode, cdouble s);

// multiplier(eps + i tau) / sigma(alpha, tau, lambda) along a tau ladder;
// flattens to a constant at large frequency.
std::vector<cdouble> principal_symbol_ratio(const GlobalAdsMode& mode,
                                            const std::vector<double>& taus,
                                            double eps = 0.1);

}  // namespace fracwave
