#pragma once

#include <vector>

#include "fracwave/fractional.hpp"

namespace fracwave {

// Gaussian (q-)binomial coefficient [l choose k]_q, q > 0, q != 1.
double q_binomial(int l, int k, double q);

// C_k^l = q^{k((k+1)/2 - l)} [l choose k]_q.
double q_c_coefficient(int l, int k, double q);

// A^l_mu = sum_{k=0}^{l} (-1)^k q^{k mu} C_k^l (sum form).
double a_coefficient(int l, double mu, double q);

// Equivalent product form prod_{k=0}^{l-1} (1 - q^{mu+1-l+k}); vanishes
// exactly at integer mu in [0, l-1].
double a_coefficient_product(int l, double mu, double q);

// Coefficient tables for the hypersingular difference operator.
struct QScheme {
  double q = 2.0;
  int l = 0;       // difference order in |y|; requires alpha < l/2
  int l_star = 0;  // floor((n + l - 1)/2), difference order in s
  FractionalOrder alpha;
  std::vector<double> c_j;  // C_j^{l*}, j = 0..l*
  std::vector<double> c_k;  // C_k^{l},  k = 0..l
  double denom_s = 0.0;     // A^{l*}_{n/2-1+alpha}
  double denom_y = 0.0;     // A^{l}_{2 alpha}

  // l <= 0 selects the default l = ceil(2 alpha) + 1. Rejects q <= 0, q = 1,
  // alpha >= l/2 and half-integer alpha (zero denominator A^l_{2 alpha}).
  QScheme(const FractionalOrder& alpha_, double q_ = 2.0, int l_ = 0);
};

}  // namespace fracwave
