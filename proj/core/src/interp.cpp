#include "fracwave/interp.hpp"

#include <cmath>

#include "fracwave/errors.hpp"
#include "fracwave/transforms.hpp"

namespace fracwave {
namespace {

void require_2d(const ScalarField& field, const char* what) {
  if (field.grid.spatial_rank() != 1)
    throw Error(std::string(what) + ": only 2D (t,x) fields supported");
}

// In-place cubic B-spline prefilter (Unser's recursive filter) along a line
// with stride `stride`. Zero boundary conditions are adequate here because
// fields are compactly supported well inside the window.
void bspline_prefilter_line(double* data, int n, std::size_t stride) {
  constexpr double z = -0.2679491924311227;  // sqrt(3) - 2
  // causal
  double prev = data[0];
  for (int i = 1; i < n; ++i) {
    prev = data[i * stride] + z * prev;
    data[i * stride] = prev;
  }
  // anticausal
  prev = (z / (z * z - 1.0)) * (data[(n - 1) * stride] + z * data[(n - 2) * stride]);
  data[(n - 1) * stride] = prev;
  for (int i = n - 2; i >= 0; --i) {
    prev = z * (prev - data[i * stride]);
    data[i * stride] = prev;
  }
  for (int i = 0; i < n; ++i) data[i * stride] *= 6.0;
}

inline void bspline_weights(double t, double w[4]) {
  const double t2 = t * t, t3 = t2 * t;
  w[0] = (1.0 - 3.0 * t + 3.0 * t2 - t3) / 6.0;
  w[1] = (4.0 - 6.0 * t2 + 3.0 * t3) / 6.0;
  w[2] = (1.0 + 3.0 * t + 3.0 * t2 - 3.0 * t3) / 6.0;
  w[3] = t3 / 6.0;
}

}  // namespace

ScalarField spectral_upsample(const ScalarField& field, int factor) {
  require_2d(field, "spectral_upsample");
  if (factor < 1) throw Error("spectral_upsample: factor must be >= 1");
  if (factor == 1) return field;
  const SpacetimeGrid& g = field.grid;
  SpectralField spec = dft_forward(field);
  SpacetimeGrid fine(g.nt * factor, {g.nx[0] * factor}, g.dt / factor,
                     {g.dx[0] / factor}, g.t0);
  SpectralField padded(fine);
  const int nt = g.nt, nx = g.nx[0];
  const int ht = nt / 2, hx = nx / 2;
  auto dst_index = [](int k, int n, int half, int nfine) {
    return k < half ? k : k + (nfine - n);
  };
  for (int it = 0; it < nt; ++it) {
    const int dt_idx = dst_index(it, nt, ht, fine.nt);
    for (int jx = 0; jx < nx; ++jx) {
      const int dx_idx = dst_index(jx, nx, hx, fine.nx[0]);
      padded.coeffs[static_cast<std::size_t>(dt_idx) * fine.nx[0] + dx_idx] =
          spec.coeffs[static_cast<std::size_t>(it) * nx + jx];
    }
  }
  return dft_inverse(padded);
}

ScalarField spectral_derivative(const ScalarField& field, int axis) {
  require_2d(field, "spectral_derivative");
  if (axis != 0 && axis != 1) throw Error("spectral_derivative: bad axis");
  const SpacetimeGrid& g = field.grid;
  SpectralField spec = dft_forward(field);
  const int nt = g.nt, nx = g.nx[0];
  for (int it = 0; it < nt; ++it) {
    for (int jx = 0; jx < nx; ++jx) {
      const int k = axis == 0 ? it : jx;
      const int count = axis == 0 ? nt : nx;
      double freq = axis == 0 ? g.tau_at(it) : g.xi_at(0, jx);
      // zero the unpaired Nyquist mode so the derivative of a real field
      // stays real
      if (count % 2 == 0 && k == count / 2) freq = 0.0;
      spec.coeffs[static_cast<std::size_t>(it) * nx + jx] *=
          std::complex<double>(0.0, freq);
    }
  }
  return dft_inverse(spec);
}

FieldSampler::FieldSampler(const ScalarField& field, int factor) {
  require_2d(field, "FieldSampler");
  ScalarField fine = spectral_upsample(field, factor);
  const SpacetimeGrid& g = fine.grid;
  nt_ = g.nt;
  nx_ = g.nx[0];
  dt_ = g.dt;
  dx_ = g.dx[0];
  t0_ = g.t0;
  x0_ = g.x_at(0, 0);
  t_hi_ = g.time_at(nt_ - 1);
  x_hi_ = g.x_at(0, nx_ - 1);
  coef_ = std::move(fine.values);
  // prefilter along x (contiguous lines) then along t (strided)
  for (int it = 0; it < nt_; ++it)
    bspline_prefilter_line(coef_.data() + static_cast<std::size_t>(it) * nx_,
                           nx_, 1);
  for (int jx = 0; jx < nx_; ++jx)
    bspline_prefilter_line(coef_.data() + jx, nt_,
                           static_cast<std::size_t>(nx_));
}

double FieldSampler::operator()(double t, double x) const {
  if (t <= t0_ || t >= t_hi_ || x <= x0_ || x >= x_hi_) return 0.0;
  const double ut = (t - t0_) / dt_;
  const double ux = (x - x0_) / dx_;
  const int it = static_cast<int>(ut);
  const int jx = static_cast<int>(ux);
  double wt[4], wx[4];
  bspline_weights(ut - it, wt);
  bspline_weights(ux - jx, wx);
  double acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    int row = it - 1 + a;
    if (row < 0) row = 0;
    if (row >= nt_) row = nt_ - 1;
    const double* line = coef_.data() + static_cast<std::size_t>(row) * nx_;
    double s = 0.0;
    for (int b = 0; b < 4; ++b) {
      int col = jx - 1 + b;
      if (col < 0) col = 0;
      if (col >= nx_) col = nx_ - 1;
      s += wx[b] * line[col];
    }
    acc += wt[a] * s;
  }
  return acc;
}

}  // namespace fracwave
