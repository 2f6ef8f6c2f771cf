#include "fracwave/solver.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "fracwave/errors.hpp"
#include "fracwave/fractional.hpp"
#include "fracwave/interp.hpp"

namespace fracwave {
namespace {

struct Scheme {
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  std::vector<double> face_w;   // (i dy)^{1-2a} at interior faces i=1..ny-1
  std::vector<double> cell_w;   // y_i^{2a-1}
  std::vector<double> sponge;   // damping profile
  double cond = 0.0;            // mimetic bottom-flux conductance

  Scheme(const SolverGrid& sg, double alpha, int nx_, double dx_)
      : nx(nx_), ny(sg.ny), dx(dx_), dy(sg.dy) {
    face_w.resize(ny - 1);
    for (int i = 1; i < ny; ++i)
      face_w[i - 1] = std::pow(i * dy, 1.0 - 2.0 * alpha);
    cell_w.resize(ny);
    for (int i = 0; i < ny; ++i)
      cell_w[i] = std::pow((i + 0.5) * dy, 2.0 * alpha - 1.0);
    sponge.assign(ny, 0.0);
    for (int i = 0; i < sg.sponge_cells; ++i) {
      const double t = static_cast<double>(i) / (sg.sponge_cells - 1);
      sponge[ny - sg.sponge_cells + i] = t * t * sg.sponge_strength;
    }
    // exact on c0 + c1 y^{2a}: flux through the bottom face
    cond = 2.0 * alpha / std::pow(0.5 * dy, 2.0 * alpha);
  }

  // out = y-divergence of the weighted flux + periodic x-Laplacian.
  void apply(const std::vector<double>& u, const std::vector<double>& fb,
             std::vector<double>& out) const {
    const double inv_dy2 = 1.0 / (dy * dy);
    const double inv_dx2 = 1.0 / (dx * dx);
    for (int j = 0; j < nx; ++j) {
      const double* uj = u.data() + static_cast<std::size_t>(j) * ny;
      double* oj = out.data() + static_cast<std::size_t>(j) * ny;
      // Interior fluxes carry an implicit 1/dy (divided out below); scale
      // the bottom flux by dy to match.
      double flux_lo = cond * (uj[0] - fb[j]) * dy;
      for (int i = 0; i < ny; ++i) {
        const double flux_hi =
            i + 1 < ny ? face_w[i] * (uj[i + 1] - uj[i]) : 0.0;
        oj[i] = cell_w[i] * (flux_hi - flux_lo) * inv_dy2;
        flux_lo = flux_hi;
      }
      const double* um = u.data() + static_cast<std::size_t>((j + nx - 1) % nx) * ny;
      const double* up = u.data() + static_cast<std::size_t>((j + 1) % nx) * ny;
      for (int i = 0; i < ny; ++i)
        oj[i] += (um[i] - 2.0 * uj[i] + up[i]) * inv_dx2;
    }
  }
};

}  // namespace

SolverResult solve_time_domain(const ScalarField& f, double alpha,
                               const SolverGrid& sg) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error("solve_time_domain: alpha must lie in (0,1)");
  if (f.grid.spatial_rank() != 1)
    throw Error("solve_time_domain: 2D (t,x) data only");
  const SpacetimeGrid& g = f.grid;
  const int nx = g.nx[0];
  const double dx = g.dx[0];

  const double dt0 = sg.cfl * sg.dy;
  const int nsub = static_cast<int>(std::ceil(g.dt / dt0));
  const double dt = g.dt / nsub;
  if (dt > 0.9 * std::min(dx, sg.dy))
    throw Error("solve_time_domain: CFL violation");

  Scheme sch(sg, alpha, nx, dx);
  FieldSampler datum(f);

  std::vector<double> u(static_cast<std::size_t>(nx) * sg.ny, 0.0);
  std::vector<double> uprev(u), rhs(u), fb(nx, 0.0);

  SolverResult res;
  res.grid = g;
  res.dy = sg.dy;
  res.k_fit = sg.k_fit;
  res.trace.assign(static_cast<std::size_t>(g.nt) * nx * sg.k_fit, 0.0);

  const double dt2 = dt * dt;
  for (int k = 1; k < g.nt; ++k) {
    for (int m = 0; m < nsub; ++m) {
      const double tcur = g.time_at(k - 1) + m * dt;
      for (int j = 0; j < nx; ++j) fb[j] = datum(tcur, g.x_at(0, j));
      sch.apply(u, fb, rhs);
      for (std::size_t i = 0; i < u.size(); ++i) {
        const int iy = static_cast<int>(i % sg.ny);
        const double unew = 2.0 * u[i] - uprev[i] + dt2 * rhs[i] -
                            dt * sch.sponge[iy] * (u[i] - uprev[i]);
        uprev[i] = u[i];
        u[i] = unew;
      }
    }
    for (int j = 0; j < nx; ++j)
      for (int iy = 0; iy < sg.k_fit; ++iy)
        res.trace[(static_cast<std::size_t>(k) * nx + j) * sg.k_fit + iy] =
            u[static_cast<std::size_t>(j) * sg.ny + iy];
  }
  return res;
}

ScalarField boundary_fit_extract(const SolverResult& u, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error("boundary_fit_extract: alpha must lie in (0,1)");
  const int kf = u.k_fit;
  Eigen::MatrixXd B(kf, 3);
  for (int i = 0; i < kf; ++i) {
    const double y = (i + 0.5) * u.dy;
    B(i, 0) = 1.0;
    B(i, 1) = y * y;
    B(i, 2) = std::pow(y, 2.0 * alpha);
  }
  const Eigen::MatrixXd pinv = B.completeOrthogonalDecomposition().pseudoInverse();
  const Eigen::VectorXd brow = pinv.row(2);

  const FractionalOrder fo(alpha, 2);
  const double scale = fo.c_alpha * 2.0 * alpha;
  ScalarField out(u.grid);
  const int nx = u.grid.nx[0];
  for (int it = 0; it < u.grid.nt; ++it)
    for (int j = 0; j < nx; ++j) {
      double b = 0.0;
      for (int i = 0; i < kf; ++i) b += brow(i) * u.at(it, j, i);
      out.at(it, j) = scale * b;
    }
  return out;
}

double solver_energy_drift(const SpacetimeGrid& grid, double alpha,
                           const SolverGrid& sg) {
  if (grid.spatial_rank() != 1)
    throw Error("solver_energy_drift: 2D grids only");
  const int nx = grid.nx[0];
  const double dx = grid.dx[0];
  Scheme sch(sg, alpha, nx, dx);

  const double window = grid.nt * grid.dt;
  const double dt0 = sg.cfl * sg.dy;
  const int nst = static_cast<int>(std::ceil(window / dt0));
  const double dt = window / nst;

  // Smooth interior bump, kept clear of the sponge region.
  std::vector<double> u0(static_cast<std::size_t>(nx) * sg.ny, 0.0);
  for (int j = 0; j < nx; ++j) {
    const double x = grid.x_at(0, j);
    for (int i = 0; i < sg.ny - sg.sponge_cells; ++i) {
      const double y = (i + 0.5) * sg.dy;
      u0[static_cast<std::size_t>(j) * sg.ny + i] =
          std::exp(-((x + 1.0) * (x + 1.0) + (y - 2.0) * (y - 2.0)) /
                   (0.3 * 0.3));
    }
  }
  std::vector<double> fb(nx, 0.0), rhs(u0.size(), 0.0);
  std::vector<double> uprev(u0), ucur(u0);
  sch.apply(u0, fb, rhs);
  for (std::size_t i = 0; i < ucur.size(); ++i)
    ucur[i] += 0.5 * dt * dt * rhs[i];

  std::vector<double> wgt(sg.ny);
  for (int i = 0; i < sg.ny; ++i)
    wgt[i] = std::pow((i + 0.5) * sg.dy, 1.0 - 2.0 * alpha) * sg.dy * dx;
  auto energy = [&](const std::vector<double>& ua,
                    const std::vector<double>& ub) {
    sch.apply(ua, fb, rhs);
    double ke = 0.0, pe = 0.0;
    for (std::size_t i = 0; i < ua.size(); ++i) {
      const int iy = static_cast<int>(i % sg.ny);
      const double v = (ub[i] - ua[i]) / dt;
      ke += wgt[iy] * v * v;
      pe -= wgt[iy] * ub[i] * rhs[i];
    }
    return 0.5 * (ke + pe);
  };

  const double e0 = energy(uprev, ucur);
  double emin = e0, emax = e0;
  for (int k = 0; k < nst; ++k) {
    sch.apply(ucur, fb, rhs);
    for (std::size_t i = 0; i < ucur.size(); ++i) {
      const double unew = 2.0 * ucur[i] - uprev[i] + dt * dt * rhs[i];
      uprev[i] = ucur[i];
      ucur[i] = unew;
    }
    if (k % 50 == 0 || k == nst - 1) {
      const double e = energy(uprev, ucur);
      emin = std::min(emin, e);
      emax = std::max(emax, e);
    }
  }
  return (emax - emin) / std::abs(e0);
}

}  // namespace fracwave
