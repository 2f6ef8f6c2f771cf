#include "fracwave/grid.hpp"

#include <cmath>
#include <numbers>

namespace fracwave {

SpacetimeGrid::SpacetimeGrid(int nt_, std::vector<int> nx_, double dt_,
                             std::vector<double> dx_, double t0_)
    : nt(nt_), nx(std::move(nx_)), dt(dt_), dx(std::move(dx_)), t0(t0_) {
  if (nt < 4) throw Error("SpacetimeGrid: nt must be >= 4");
  if (nx.empty() || nx.size() > 2)
    throw Error("SpacetimeGrid: spatial rank must be 1 or 2");
  if (nx.size() != dx.size())
    throw Error("SpacetimeGrid: nx/dx size mismatch");
  for (int c : nx)
    if (c < 4) throw Error("SpacetimeGrid: all counts must be >= 4");
  if (!(dt > 0.0)) throw Error("SpacetimeGrid: dt must be > 0");
  for (double s : dx)
    if (!(s > 0.0)) throw Error("SpacetimeGrid: dx must be > 0");
}

std::size_t SpacetimeGrid::size() const {
  std::size_t n = static_cast<std::size_t>(nt);
  for (int c : nx) n *= static_cast<std::size_t>(c);
  return n;
}

double SpacetimeGrid::frequency(int k, int count, double step) {
  int kk = (k <= count / 2) ? k : k - count;
  return 2.0 * std::numbers::pi * kk / (count * step);
}

double SpacetimeGrid::cell_volume() const {
  double v = dt;
  for (double s : dx) v *= s;
  return v;
}

bool SpacetimeGrid::operator==(const SpacetimeGrid& o) const {
  return nt == o.nt && nx == o.nx && dt == o.dt && dx == o.dx && t0 == o.t0;
}

ScalarField::ScalarField(SpacetimeGrid g)
    : grid(std::move(g)), values(grid.size(), 0.0) {}

void ScalarField::check_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) throw Error("ScalarField: non-finite entry");
}

SpectralField::SpectralField(SpacetimeGrid g)
    : grid(std::move(g)), coeffs(grid.size()) {}

}  // namespace fracwave
