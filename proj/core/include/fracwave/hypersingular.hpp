#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fracwave/interp.hpp"
#include "fracwave/qcalc.hpp"

namespace fracwave {

// Smooth spacetime function of (t, x); FieldSampler converts implicitly.
using Field2D = std::function<double(double, double)>;

// Exp-mapped tensor quadrature parameters for the (s, |y|) integral,
// s = e^u, |y| = e^v. Lower bounds are derived from eps_truncation: below
// the corresponding scale the integrand is cancellation noise amplified by
// the singular kernel, so it is cut instead of sampled.
struct QuadratureSpec {
  double du = 0.02;
  double dv = 0.02;
  double u_max = 18.0;
  double v_max = 2.0794415416798357;  // ln 8, past any desk-scale support
  double eps_truncation = 1e-7;
};

// The q-regularized finite difference Delta_{s,y}^{l,alpha} f(t,x):
// normalized double sum of f(t - q^k |y|, x - q^k y/(1+q^j s)) with weights
// (-1)^{j+k} C_j^{l*} C_k^l (1+q^j s)^{2 alpha} / (2+q^j s)^{n/2+alpha}.
double difference_operator(const Field2D& f, const QScheme& scheme, double t,
                           double x, double s, double y);

struct IntegralResult {
  std::vector<double> values;
  // |full-density - half-density| at the first probe, as a convergence
  // indicator for the quadrature.
  double error_indicator = 0.0;
};

// Route B: the hypersingular integral
//   C_{n,-alpha} int Delta_{s,y}^{l,alpha} f / (s^{n/2+alpha} |y|^{n+2alpha-1})
// evaluated at the probe points (n = 2: y runs over both signs).
IntegralResult box_alpha_integral(
    const ScalarField& f, const QScheme& scheme,
    const std::vector<std::pair<double, double>>& points,
    const QuadratureSpec& quad = {});

// n = 2 second-difference realization (alpha in (0,1)) with the edge
// profile subtracted so the quadrature stays accurate as alpha -> 1.
// du is the log-coordinate step of the light-cone quadrature.
std::vector<double> box_alpha_kernel2(
    const ScalarField& f, double alpha,
    const std::vector<std::pair<double, double>>& points, double du = 0.01,
    double eps_truncation = 1e-7);

}  // namespace fracwave
