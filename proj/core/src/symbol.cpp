#include "fracwave/symbol.hpp"

#include <cmath>
#include <numbers>

#include "fracwave/errors.hpp"
#include "fracwave/transforms.hpp"

namespace fracwave {

std::complex<double> sigma(double alpha, double tau, double xi_norm) {
  const double d = xi_norm * xi_norm - tau * tau;
  if (d > 0.0) return std::pow(d, alpha);
  if (d < 0.0) {
    const double mag = std::pow(-d, alpha);
    const double r = std::round(alpha);
    if (std::abs(alpha - r) < 1e-14) {
      // Integer order: the phase e^{i pi alpha sgn tau} is exactly +-1, and
      // sigma_1 must reduce to |xi|^2 - tau^2 without rounding residue.
      const bool odd = std::llround(r) % 2 != 0;
      return odd ? -mag : mag;
    }
    const double phase = std::numbers::pi * alpha * (tau > 0.0 ? 1.0 : -1.0);
    return std::polar(mag, phase);
  }
  return 0.0;  // light cone: continuous extension for alpha > 0
}

std::complex<double> sigma_eps(double alpha, double tau, double xi_norm,
                               double eps) {
  if (!(eps > 0.0)) throw Error("sigma_eps: eps must be > 0");
  const std::complex<double> tc(tau, -eps);
  return std::pow(xi_norm * xi_norm - tc * tc, alpha);
}

SymbolGrid::SymbolGrid(const SpacetimeGrid& g, double alpha_)
    : grid(g), alpha(alpha_), values(g.size()) {
  const int n1 = g.nx[0];
  const int n2 = g.spatial_rank() == 2 ? g.nx[1] : 1;
  std::size_t idx = 0;
  for (int it = 0; it < g.nt; ++it) {
    const double tau = g.tau_at(it);
    for (int j = 0; j < n1; ++j) {
      const double xi1 = g.xi_at(0, j);
      for (int k = 0; k < n2; ++k) {
        double xn = std::abs(xi1);
        if (g.spatial_rank() == 2) {
          const double xi2 = g.xi_at(1, k);
          xn = std::sqrt(xi1 * xi1 + xi2 * xi2);
        }
        values[idx++] = sigma(alpha, tau, xn);
      }
    }
  }
}

ScalarField apply_box_alpha_spectral(const ScalarField& f, double alpha) {
  return apply_multiplier(f, [alpha](double tau, double xi_norm) {
    return sigma(alpha, tau, xi_norm);
  });
}

ScalarField wave_apply(const ScalarField& f) {
  return apply_box_alpha_spectral(f, 1.0);
}

}  // namespace fracwave
