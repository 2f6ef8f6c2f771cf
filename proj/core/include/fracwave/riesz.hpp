#pragma once

#include <utility>
#include <vector>

#include "fracwave/interp.hpp"

namespace fracwave {

// Normalization constant C_{n,alpha} = 2^{1-2a} pi^{1-n/2} /
// (Gamma(a) Gamma(a + 1 - n/2)) of the hyperbolic Riesz family. The
// potential below includes it so that the reduction identity
// box I_{alpha+1} = I_alpha holds.
double riesz_constant(int n, double alpha);

// Quadrature parameters for the causal light-cone convolution in log
// coordinates a = e^u, b = e^u' with s = a+b, y = a-b.
struct RieszQuad {
  double du = 0.02;
  double u_lo = -16.0;
  double u_hi = 4.0;
};

// Hyperbolic Riesz potential at one point (n = 2):
//   I_alpha f(t,x) = C_{2,alpha} int_{K++} (s^2-y^2)^{alpha-1} f(t-s,x-y)
// realized as 2 C int (4ab)^{alpha-1} f(t-a-b, x-a+b) da db.
// Requires alpha > n/2 - 1 = 0.
double riesz_potential_at(const FieldSampler& f, double alpha, double t,
                          double x, const RieszQuad& quad = {});

// Potential sampled at probe points (preferred: the kernel convolution is
// O(nodes) per point).
std::vector<double> riesz_potential_points(
    const ScalarField& f, double alpha,
    const std::vector<std::pair<double, double>>& points,
    const RieszQuad& quad = {});

// Full-field version; expensive, meant for small grids / CLI experiments.
ScalarField riesz_potential(const ScalarField& f, double alpha,
                            const RieszQuad& quad = {});

}  // namespace fracwave
