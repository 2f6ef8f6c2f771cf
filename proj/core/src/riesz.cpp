#include "fracwave/riesz.hpp"

#include <cmath>
#include <numbers>

#include "fracwave/errors.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/threading.hpp"

namespace fracwave {

double riesz_constant(int n, double alpha) {
  return std::pow(2.0, 1.0 - 2.0 * alpha) *
         std::pow(std::numbers::pi, 1.0 - 0.5 * n) /
         (specfun::gamma_real(alpha) *
          specfun::gamma_real(alpha + 1.0 - 0.5 * n));
}

double riesz_potential_at(const FieldSampler& f, double alpha, double t,
                          double x, const RieszQuad& quad) {
  if (!(alpha > 0.0))
    throw Error("riesz_potential: requires alpha > n/2 - 1");
  // Kernel factorizes on the log grid: (4ab)^{a-1} da db = 4^{a-1} a^al b^al
  // du dv, so the power is precomputed once per node coordinate.
  std::vector<double> av, aw;
  for (double u = quad.u_lo; u < quad.u_hi; u += quad.du) {
    av.push_back(std::exp(u));
    aw.push_back(std::exp(alpha * u));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double a = av[i];
    double row = 0.0;
    for (std::size_t j = 0; j < av.size(); ++j)
      row += aw[j] * f(t - a - av[j], x - a + av[j]);
    sum += row * aw[i];
  }
  return riesz_constant(2, alpha) * 2.0 * std::pow(4.0, alpha - 1.0) * sum *
         quad.du * quad.du;
}

std::vector<double> riesz_potential_points(
    const ScalarField& f, double alpha,
    const std::vector<std::pair<double, double>>& points,
    const RieszQuad& quad) {
  FieldSampler sampler(f);
  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      out[i] =
          riesz_potential_at(sampler, alpha, points[i].first, points[i].second,
                             quad);
  });
  return out;
}

ScalarField riesz_potential(const ScalarField& f, double alpha,
                            const RieszQuad& quad) {
  if (f.grid.spatial_rank() != 1)
    throw Error("riesz_potential: n = 2 only (one spatial axis)");
  FieldSampler sampler(f);
  ScalarField out(f.grid);
  const SpacetimeGrid& g = f.grid;
  parallel_for(static_cast<std::size_t>(g.nt), [&](std::size_t b,
                                                   std::size_t e) {
    for (std::size_t it = b; it < e; ++it)
      for (int j = 0; j < g.nx[0]; ++j)
        out.at(static_cast<int>(it), j) = riesz_potential_at(
            sampler, alpha, g.time_at(static_cast<int>(it)), g.x_at(0, j),
            quad);
  });
  return out;
}

}  // namespace fracwave
