#pragma once

namespace fracwave {

// Fractional order alpha in (0, n/2) with its decomposition alpha = m +
// alpha0, m = ceil(alpha) - 1, alpha0 in (0, 1], and the derived constants
// used by the extension route.
struct FractionalOrder {
  double alpha = 0.0;
  int n = 2;          // spacetime dimension parameter; alpha < n/2
  int m = 0;          // integer part (alpha0 kept in (0,1] so m = ceil-1)
  double alpha0 = 0.0;
  double mu = 0.0;    // alpha^2 - n^2/4
  double c_alpha = 0.0;  // (-1)^{m+1} 2^{alpha+alpha0-1} Gamma(alpha)/Gamma(1-alpha0)

  FractionalOrder() = default;
  explicit FractionalOrder(double alpha_, int n_ = 2);

  bool is_integer() const;
  bool twice_is_integer() const;

  // Throws if 2*alpha is an integer (hypersingular and extension routes
  // reject half-integers and integers explicitly).
  void require_non_half_integer(const char* route) const;
};

}  // namespace fracwave
