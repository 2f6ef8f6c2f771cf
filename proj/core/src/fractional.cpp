#include "fracwave/fractional.hpp"

#include <cmath>
#include <string>

#include "fracwave/errors.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {

FractionalOrder::FractionalOrder(double alpha_, int n_) : alpha(alpha_), n(n_) {
  if (n < 2) throw Error("FractionalOrder: n must be >= 2");
  if (!(alpha > 0.0) || !(alpha < 0.5 * n))
    throw Error("FractionalOrder: alpha must lie in (0, n/2)");
  m = static_cast<int>(std::ceil(alpha)) - 1;
  alpha0 = alpha - m;
  mu = alpha * alpha - 0.25 * n * n;
  if (!is_integer()) {
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    c_alpha = sign * std::pow(2.0, alpha + alpha0 - 1.0) *
              specfun::gamma_real(alpha) / specfun::gamma_real(1.0 - alpha0);
  }  // integer alpha: Gamma(1 - alpha0) pole; c_alpha unused on that path
}

bool FractionalOrder::is_integer() const {
  return std::abs(alpha - std::round(alpha)) < 1e-12;
}

bool FractionalOrder::twice_is_integer() const {
  return std::abs(2.0 * alpha - std::round(2.0 * alpha)) < 1e-12;
}

void FractionalOrder::require_non_half_integer(const char* route) const {
  if (twice_is_integer())
    throw Error(std::string(route) +
                ": 2*alpha must not be an integer on this route");
}

}  // namespace fracwave
