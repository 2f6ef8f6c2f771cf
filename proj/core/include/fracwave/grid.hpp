#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracwave/errors.hpp"

namespace fracwave {

// Uniform periodic spacetime grid. Time samples are t0 + i*dt, i in [0, nt).
// Spatial axes are centered: x_j = (j - nx/2) * dx, so the origin sits at
// index nx/2. Discrete angular frequencies follow the standard wrap-around
// ordering: tau_k = 2*pi*k/(nt*dt) for k in [0, nt/2], negative thereafter.
struct SpacetimeGrid {
  int nt = 0;
  std::vector<int> nx;   // one or two spatial axes
  double dt = 0.0;
  std::vector<double> dx;
  double t0 = 0.0;

  SpacetimeGrid() = default;
  SpacetimeGrid(int nt_, std::vector<int> nx_, double dt_,
                std::vector<double> dx_, double t0_);

  int spatial_rank() const { return static_cast<int>(nx.size()); }
  int rank() const { return spatial_rank() + 1; }
  std::size_t size() const;

  double time_at(int i) const { return t0 + i * dt; }
  double x_at(int axis, int j) const {
    return (j - nx[axis] / 2) * dx[axis];
  }

  // Angular frequency of index k on an axis with `count` samples and step
  // `step` (wrap-around ordering).
  static double frequency(int k, int count, double step);
  double tau_at(int k) const { return frequency(k, nt, dt); }
  double xi_at(int axis, int k) const {
    return frequency(k, nx[axis], dx[axis]);
  }

  // Cell volume dt * prod(dx).
  double cell_volume() const;

  bool operator==(const SpacetimeGrid& o) const;
};

// Real samples on a SpacetimeGrid, row-major with time as the slowest axis.
struct ScalarField {
  SpacetimeGrid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(SpacetimeGrid g);

  double& at(int it, int ix) {
    return values[static_cast<std::size_t>(it) * grid.nx[0] + ix];
  }
  double at(int it, int ix) const {
    return values[static_cast<std::size_t>(it) * grid.nx[0] + ix];
  }
  double& at(int it, int ix, int iy) {
    return values[(static_cast<std::size_t>(it) * grid.nx[0] + ix) *
                      grid.nx[1] + iy];
  }
  double at(int it, int ix, int iy) const {
    return values[(static_cast<std::size_t>(it) * grid.nx[0] + ix) *
                      grid.nx[1] + iy];
  }

  void check_finite() const;  // throws Error on NaN/Inf
};

// Complex coefficients on the dual frequency grid, same shape as the field.
struct SpectralField {
  SpacetimeGrid grid;
  std::vector<std::complex<double>> coeffs;

  SpectralField() = default;
  explicit SpectralField(SpacetimeGrid g);
};

}  // namespace fracwave
