#include "fracwave/extension.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "fracwave/errors.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/threading.hpp"
#include "fracwave/transforms.hpp"

namespace fracwave {

cdouble dtn_multiplier(double alpha, cdouble s, double xi_norm) {
  return std::pow(xi_norm * xi_norm + s * s, alpha);
}

cdouble profile_eval(const FractionalOrder& alpha, cdouble s, double xi_norm,
                     cdouble boundary_value, double y) {
  if (!(y > 0.0)) throw Error("profile_eval: y must be > 0");
  const cdouble w = std::sqrt(cdouble(xi_norm * xi_norm) + s * s);
  if (!(w.real() > 0.0))
    throw Error("profile_eval: requires Re sqrt(|xi|^2+s^2) > 0");
  const double a = alpha.alpha;
  const cdouble z = y * w;
  return std::pow(2.0, 1.0 - a) / specfun::gamma_real(a) * std::pow(z, a) *
         specfun::bessel_k(a, z) * boundary_value;
}

namespace {

// Composition of the centered stencil D (approximating d/dL, L = ln y) with
// the shifts (d/dL - 2i), i = 0..m: returns the combined stencil on the
// lattice L + k h, k = -K..K, with K = radius (m+1).
std::vector<double> composed_stencil(const std::vector<double>& D, int m,
                                     double h, int& K) {
  const int r = (static_cast<int>(D.size()) - 1) / 2;
  std::vector<double> cur{1.0};
  for (int i = 0; i <= m; ++i) {
    std::vector<double> next(cur.size() + 2 * r, 0.0);
    for (std::size_t k = 0; k < D.size(); ++k)
      if (D[k] != 0.0)
        for (std::size_t j = 0; j < cur.size(); ++j)
          next[k + j] += D[k] / h * cur[j];
    for (std::size_t j = 0; j < cur.size(); ++j)
      next[r + j] += -2.0 * i * cur[j];
    cur = std::move(next);
  }
  K = r * (m + 1);
  return cur;
}

}  // namespace

cdouble neumann_extract_profile(ExtensionProfile& profile) {
  const FractionalOrder& fo = profile.alpha;
  if (fo.is_integer())
    throw Error("neumann_extract_profile: integer alpha unsupported");
  const int m = fo.m;
  if (m > 2)
    throw NumericalError(
        "neumann_extract_profile: orders above m = 2 are roundoff-limited");
  // 6th-order stencil for m <= 1, 8th-order for m = 2; steps tuned so the
  // finite-difference truncation stays below the ladder-fit noise floor.
  static const std::vector<double> d6{-1.0 / 60, 9.0 / 60,  -45.0 / 60, 0.0,
                                      45.0 / 60, -9.0 / 60, 1.0 / 60};
  static const std::vector<double> d8{3.0 / 840,    -32.0 / 840, 168.0 / 840,
                                      -672.0 / 840, 0.0,         672.0 / 840,
                                      -168.0 / 840, 32.0 / 840,  -3.0 / 840};
  const std::vector<double>& D = m == 2 ? d8 : d6;
  const double h = m == 0 ? 0.012 : (m == 1 ? 0.02 : 0.05);
  int K = 0;
  const std::vector<double> W = composed_stencil(D, m, h, K);

  const cdouble w =
      std::sqrt(cdouble(profile.xi_norm * profile.xi_norm) + profile.s * profile.s);
  const double a0 = fo.alpha0;
  const double pref_pow = 2.0 * (1.0 - a0) - 2.0 * (m + 1);

  // Geometric ladder scaled to the mode: y_k = (0.8/|w|) 2^{-0.2 k}.
  const int n_levels = 30;
  const double y_top = 0.8 / std::abs(w);
  std::vector<double> ys(n_levels);
  for (int k = 0; k < n_levels; ++k)
    ys[k] = y_top * std::pow(2.0, -0.2 * k);

  profile.y_samples.clear();
  Eigen::VectorXcd vals(n_levels);
  Eigen::VectorXd noise(n_levels);
  for (int lev = 0; lev < n_levels; ++lev) {
    const double y = ys[lev];
    cdouble acc = 0.0;
    double mag = 0.0;
    for (int k = -K; k <= K; ++k) {
      const double yy = y * std::exp(k * h);
      const cdouble u =
          profile_eval(fo, profile.s, profile.xi_norm, profile.boundary_value,
                       yy);
      profile.y_samples.emplace_back(yy, u);
      acc += W[k + K] * u;
      mag += std::abs(W[k + K]) * std::abs(u);
    }
    const double pref = fo.c_alpha * std::pow(y, pref_pow);
    vals(lev) = pref * acc;
    noise(lev) = std::abs(pref) * mag * 1e-16;
  }

  // Fit value(y) = c0 + sum_j a_j (y/y0)^{2j-2a0} + b_j (y/y0)^{2j} with
  // inverse-noise weights; the constant term is the extracted limit. The
  // same exponential basis also absorbs the log-coordinate FD truncation.
  const int n_pairs = 3;
  Eigen::MatrixXcd A(n_levels, 1 + 2 * n_pairs);
  for (int lev = 0; lev < n_levels; ++lev) {
    A(lev, 0) = 1.0;
    for (int j = 1; j <= n_pairs; ++j) {
      A(lev, 2 * j - 1) = std::pow(ys[lev] / ys[0], 2.0 * j - 2.0 * a0);
      A(lev, 2 * j) = std::pow(ys[lev] / ys[0], 2.0 * j);
    }
  }
  Eigen::VectorXd wt(n_levels);
  const double floor_w = 1e-15 * std::abs(vals(0));
  for (int lev = 0; lev < n_levels; ++lev)
    wt(lev) = 1.0 / (noise(lev) + floor_w);
  Eigen::MatrixXcd Aw = wt.asDiagonal() * A;
  Eigen::VectorXcd bw = wt.asDiagonal() * vals;
  Eigen::VectorXcd coef = Aw.colPivHouseholderQr().solve(bw);
  if (!coef.allFinite())
    throw NumericalError("neumann_extract_profile: ladder fit failed");
  return coef(0);
}

ScalarField dtn_spacetime(const ScalarField& f, double alpha, double eps) {
  if (!(eps > 0.0)) throw Error("dtn_spacetime: eps must be > 0");
  const SpacetimeGrid& g = f.grid;
  static const double ladder[] = {1.0, 0.75, 0.5, 0.375, 0.25, 0.1875};
  const int n_eps = 6;

  // Raw damped-transform answer for one eps value.
  auto raw = [&](double e) {
    SpectralField spec = laplace_forward(f, e);
    const int n1 = g.nx[0];
    const int n2 = g.spatial_rank() == 2 ? g.nx[1] : 1;
    std::size_t idx = 0;
    for (int it = 0; it < g.nt; ++it) {
      const double tau = g.tau_at(it);
      const cdouble s(e, tau);
      for (int j = 0; j < n1; ++j) {
        const double xi1 = g.xi_at(0, j);
        for (int k = 0; k < n2; ++k) {
          double xn = std::abs(xi1);
          if (g.spatial_rank() == 2) {
            const double xi2 = g.xi_at(1, k);
            xn = std::sqrt(xi1 * xi1 + xi2 * xi2);
          }
          spec.coeffs[idx++] *= dtn_multiplier(alpha, s, xn);
        }
      }
    }
    auto cx = dft_inverse_complex(spec);
    ScalarField out(g);
    const std::size_t per_slice = g.size() / g.nt;
    for (int it = 0; it < g.nt; ++it) {
      const double undamp = std::exp(e * (g.time_at(it) - g.t0));
      const std::size_t off = static_cast<std::size_t>(it) * per_slice;
      for (std::size_t j = 0; j < per_slice; ++j)
        out.values[off + j] = cx[off + j].real() * undamp;
    }
    return out;
  };

  std::vector<ScalarField> runs;
  runs.reserve(n_eps);
  for (int i = 0; i < n_eps; ++i) runs.push_back(raw(eps * ladder[i]));

  // Least-squares extrapolation to eps = 0 with the known error exponents;
  // duplicates (integer alpha) are removed.
  std::vector<double> expo{alpha, 1.0, 1.0 + alpha, 2.0, 2.0 + alpha};
  std::sort(expo.begin(), expo.end());
  expo.erase(std::unique(expo.begin(), expo.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             expo.end());
  const int n_cols = 1 + static_cast<int>(expo.size());
  Eigen::MatrixXd A(n_eps, n_cols);
  for (int i = 0; i < n_eps; ++i) {
    A(i, 0) = 1.0;
    for (std::size_t j = 0; j < expo.size(); ++j)
      A(i, 1 + static_cast<int>(j)) = std::pow(eps * ladder[i], expo[j]);
  }
  // Row of the pseudoinverse that extracts the constant term.
  Eigen::MatrixXd pinv = A.completeOrthogonalDecomposition().pseudoInverse();
  Eigen::VectorXd wrow = pinv.row(0);

  ScalarField out(g);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    double acc = 0.0;
    for (int r = 0; r < n_eps; ++r) acc += wrow(r) * runs[r].values[i];
    out.values[i] = acc;
  }
  return out;
}

}  // namespace fracwave
