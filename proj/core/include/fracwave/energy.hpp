#pragma once

#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

struct EnergyResult {
  double lhs = 0.0;       // eps -> 0 extrapolated weighted extension energy
  double rhs = 0.0;       // Re sum sigma_alpha |f^|^2
  double rhs_imag = 0.0;  // |Im .| of the same sum (symmetry check)
  double ratio = 0.0;     // lhs / rhs
  std::vector<double> lhs_at_eps;  // raw values per requested eps
};

// Checks the Plancherel-type energy identity: the weighted H^1 energy of the
// closed-form extension profile, integrated per Laplace-Fourier mode in y and
// summed over modes, against the symbol-side quadratic form. The ratio tends
// to a constant independent of f (it equals -1/c_alpha up to the finite
// damping eps). lhs is evaluated at each entry of eps_seq and extrapolated
// linearly to eps = 0 from the last two entries. alpha in (0,1); f real, 2D.
EnergyResult energy_check(const ScalarField& f, double alpha,
                          const std::vector<double>& eps_seq = {2e-3, 1e-3});

}  // namespace fracwave
