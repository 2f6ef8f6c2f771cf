#include "fracwave/reference.hpp"

#include <cmath>

#include "fracwave/errors.hpp"
#include "fracwave/symbol.hpp"

namespace fracwave {

ScalarField box_alpha_padded(const ScalarField& f, double alpha, int pad) {
  if (pad < 1) throw Error("box_alpha_padded: pad must be >= 1");
  const SpacetimeGrid& g = f.grid;
  if (pad == 1) return apply_box_alpha_spectral(f, alpha);

  std::vector<int> nxp(g.nx);
  int off[2] = {0, 0};
  for (int a = 0; a < g.spatial_rank(); ++a) {
    nxp[a] = g.nx[a] * pad;
    off[a] = (nxp[a] - g.nx[a]) / 2;
  }
  const int ot = (g.nt * pad - g.nt) / 2;
  SpacetimeGrid gp(g.nt * pad, nxp, g.dt, g.dx, g.t0 - ot * g.dt);

  ScalarField fp(gp);
  const int n2 = g.spatial_rank() == 2 ? g.nx[1] : 1;
  const int n2p = g.spatial_rank() == 2 ? gp.nx[1] : 1;
  const int o2 = g.spatial_rank() == 2 ? off[1] : 0;
  for (int it = 0; it < g.nt; ++it)
    for (int j = 0; j < g.nx[0]; ++j)
      for (int k = 0; k < n2; ++k)
        fp.values[(static_cast<std::size_t>(it + ot) * gp.nx[0] + j + off[0]) *
                      n2p +
                  k + o2] =
            f.values[(static_cast<std::size_t>(it) * g.nx[0] + j) * n2 + k];

  ScalarField vp = apply_box_alpha_spectral(fp, alpha);

  ScalarField out(g);
  for (int it = 0; it < g.nt; ++it)
    for (int j = 0; j < g.nx[0]; ++j)
      for (int k = 0; k < n2; ++k)
        out.values[(static_cast<std::size_t>(it) * g.nx[0] + j) * n2 + k] =
            vp.values[(static_cast<std::size_t>(it + ot) * gp.nx[0] + j +
                       off[0]) *
                          n2p +
                      k + o2];
  return out;
}

ScalarField box_alpha_padded_reference(const ScalarField& f, double alpha,
                                       int pad1, int pad2) {
  if (pad2 != 2 * pad1)
    throw Error("box_alpha_padded_reference: requires pad2 = 2 * pad1");
  ScalarField v1 = box_alpha_padded(f, alpha, pad1);
  ScalarField v2 = box_alpha_padded(f, alpha, pad2);
  const double fac = std::pow(2.0, 1.0 + alpha) - 1.0;
  ScalarField out(f.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = v2.values[i] + (v2.values[i] - v1.values[i]) / fac;
  return out;
}

}  // namespace fracwave
