#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracwave/fractional.hpp"
#include "fracwave/riesz.hpp"
#include "fracwave/solver.hpp"
#include "fracwave/specfun.hpp"

using namespace fracwave;

TEST_CASE("boundary fit recovers a synthetic expansion exactly") {
  // u = a0 + a1 y^2 + b y^{2 alpha} must return c_alpha 2 alpha b.
  const double alpha = 0.4, b = -1.7, a0 = 0.3, a1 = 2.2;
  SolverResult u;
  u.grid = SpacetimeGrid(4, {4}, 0.5, {0.5}, 0.0);
  u.dy = 0.02;
  u.k_fit = 8;
  u.trace.assign(4 * 4 * 8, 0.0);
  for (int it = 0; it < 4; ++it)
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 8; ++i) {
        const double y = (i + 0.5) * u.dy;
        u.trace[(static_cast<std::size_t>(it) * 4 + j) * 8 + i] =
            a0 + a1 * y * y + b * std::pow(y, 2.0 * alpha);
      }
  const ScalarField lam = boundary_fit_extract(u, alpha);
  const double want = FractionalOrder(alpha, 2).c_alpha * 2.0 * alpha * b;
  for (double v : lam.values)
    CHECK(v == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("solver rejects out-of-range orders and 3D data") {
  SpacetimeGrid g(8, {8}, 0.5, {0.5}, -2.0);
  ScalarField f(g);
  CHECK_THROWS(solve_time_domain(f, 1.5));
  SpacetimeGrid g3(4, {4, 4}, 0.5, {0.5, 0.5}, -1.0);
  ScalarField f3(g3);
  CHECK_THROWS(solve_time_domain(f3, 0.4));
}

TEST_CASE("homogeneous energy drift is at scheme level") {
  // Short window, coarse grid: the leapfrog energy must be conserved to
  // roundoff (the operator is symmetric negative semidefinite).
  SpacetimeGrid g(16, {32}, 0.125, {0.5}, -1.0);
  const double drift =
      solver_energy_drift(g, 0.4, SolverGrid{0.04, 200, 0.45, 8, 60, 3.0});
  CHECK(drift < 1e-10);
}

TEST_CASE("riesz_constant values") {
  // C_{2,alpha} = 2^{1-2a} / (Gamma(a) Gamma(a)).
  const double a = 0.6;
  const double g = specfun::gamma_real(a);
  CHECK(riesz_constant(2, a) ==
        doctest::Approx(std::pow(2.0, 1.0 - 2.0 * a) / (g * g))
            .epsilon(1e-14));
}

TEST_CASE("riesz potential of a causal point mass behaves causally") {
  // The potential only sees f(t - a - b, .) with a, b > 0: data supported
  // at late times cannot influence earlier probes.
  SpacetimeGrid g(128, {64}, 0.125, {0.25}, -8.0);
  ScalarField f(g);
  for (int it = 0; it < g.nt; ++it)
    for (int j = 0; j < g.nx[0]; ++j) {
      const double t = g.time_at(it), x = g.x_at(0, j);
      f.at(it, j) =
          std::exp(-(t - 3.0) * (t - 3.0) / 0.5 - x * x / 2.25);
    }
  const auto v = riesz_potential_points(f, 0.6, {{-5.0, 0.0}, {5.5, 0.0}});
  CHECK(std::abs(v[1]) > 1e-4);               // after the source switches on
  CHECK(std::abs(v[0]) < 1e-8 * std::abs(v[1]));  // before
}
