#pragma once

#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

// Cell-centered y-grid for the degenerate wave solver: y_i = (i + 1/2) dy,
// i = 0..ny-1, with a quadratic outflow sponge near y_max = ny dy.
struct SolverGrid {
  double dy = 0.02;
  int ny = 400;
  double cfl = 0.45;        // dt = cfl * dy, then snapped to divide dt_grid
  int k_fit = 8;            // cells used by the boundary fit
  int sponge_cells = 60;
  double sponge_strength = 3.0;
};

// Near-boundary trace of the solution: u(t_k, x_j, y_i) for the first k_fit
// cells, row-major (t, x, y).
struct SolverResult {
  SpacetimeGrid grid;       // the (t,x) grid of the boundary datum
  double dy = 0.0;
  int k_fit = 0;
  std::vector<double> trace;

  double at(int it, int jx, int iy) const {
    return trace[(static_cast<std::size_t>(it) * grid.nx[0] + jx) * k_fit + iy];
  }
};

// Explicit leapfrog integration of the conservative degenerate wave equation
//   u_tt = Delta_x u + y^{2a-1} d_y (y^{1-2a} d_y u)
// with Dirichlet datum f at y = 0 (mimetic bottom flux, exact on
// c0 + c1 y^{2a}), zero initial data, periodic x. alpha in (0,1); 2D f only.
SolverResult solve_time_domain(const ScalarField& f, double alpha,
                               const SolverGrid& sgrid = {});

// Fits u(t,x,y) ~ a0 + a1 y^2 + b y^{2 alpha} over the first k_fit cells and
// returns Lambda f = c_alpha * 2 alpha * b on the (t,x) grid.
ScalarField boundary_fit_extract(const SolverResult& u, double alpha);

// Discrete weighted energy drift of the homogeneous problem (f = 0, smooth
// interior bump as initial data) over one window; returns the relative
// drift max(E) - min(E) over |E(0)|. Scheme sanity check.
double solver_energy_drift(const SpacetimeGrid& grid, double alpha,
                           const SolverGrid& sgrid = {});

}  // namespace fracwave
