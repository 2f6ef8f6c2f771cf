#include "fracwave/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "fracwave/errors.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/symbol.hpp"
#include "fracwave/transforms.hpp"

namespace fracwave {

double EigenBasis::eigenvalue(int j) const {
  if (manifold == Manifold::Circle) return std::abs(j);
  if (j < 0) throw Error("EigenBasis: sphere mode index must be >= 0");
  const double lam2 = static_cast<double>(j) * (j + n - 3);
  if (lam2 < 0.0) throw Error("EigenBasis: negative eigenvalue");
  return std::sqrt(lam2);
}

std::vector<cdouble> product_dtn_coeffs(const std::vector<cdouble>& series,
                                        double dt, double alpha, double lambda,
                                        double eps) {
  if (!(dt > 0.0)) throw Error("product_dtn_coeffs: dt must be > 0");
  if (lambda < 0.0) throw Error("product_dtn_coeffs: lambda must be >= 0");
  const std::size_t n = series.size();
  std::vector<cdouble> out(series);
  fft_inplace_1d(out, -1);
  const double base = 2.0 * std::numbers::pi / (n * dt);
  for (std::size_t k = 0; k < n; ++k) {
    // Wrap-around angular frequency, matching SpacetimeGrid::frequency.
    const double tau =
        base * (k <= (n - 1) / 2 ? static_cast<double>(k)
                                 : static_cast<double>(k) - static_cast<double>(n));
    out[k] *= eps > 0.0 ? sigma_eps(alpha, tau, lambda, eps)
                        : sigma(alpha, tau, lambda);
  }
  fft_inplace_1d(out, +1);
  for (auto& c : out) c /= static_cast<double>(n);
  return out;
}

ScalarField product_dtn_apply(const ScalarField& f, double alpha, double eps) {
  const SpacetimeGrid& g = f.grid;
  if (g.spatial_rank() != 1)
    throw Error("product_dtn_apply: 2D (t, circle) data only");
  const int nt = g.nt, nx = g.nx[0];
  if (std::abs(g.dx[0] - 2.0 * std::numbers::pi / nx) > 1e-12)
    throw Error("product_dtn_apply: dx must equal 2 pi / nx (unit circle)");

  // Decompose into circle modes: one length-nx DFT per time slice.
  std::vector<std::vector<cdouble>> modes(
      nx, std::vector<cdouble>(nt));
  {
    std::vector<cdouble> row(nx);
    for (int it = 0; it < nt; ++it) {
      for (int j = 0; j < nx; ++j)
        row[j] = f.values[static_cast<std::size_t>(it) * nx + j];
      fft_inplace_1d(row, -1);
      for (int j = 0; j < nx; ++j) modes[j][it] = row[j];
    }
  }

  // Per-mode DtN with the integer circle eigenvalue (wrap-around index).
  for (int j = 0; j < nx; ++j) {
    const int jj = j <= (nx - 1) / 2 ? j : j - nx;
    modes[j] = product_dtn_coeffs(modes[j], g.dt, alpha, std::abs(jj), eps);
  }

  // Reassemble and check realness.
  ScalarField out(g);
  double re2 = 0.0, im2 = 0.0;
  {
    std::vector<cdouble> row(nx);
    for (int it = 0; it < nt; ++it) {
      for (int j = 0; j < nx; ++j) row[j] = modes[j][it];
      fft_inplace_1d(row, +1);
      for (int j = 0; j < nx; ++j) {
        const cdouble v = row[j] / static_cast<double>(nx);
        out.values[static_cast<std::size_t>(it) * nx + j] = v.real();
        re2 += v.real() * v.real();
        im2 += v.imag() * v.imag();
      }
    }
  }
  if (im2 > 1e-20 * re2 && im2 > 1e-280)
    throw Error("product_dtn_apply: symbol produced a non-real field");
  return out;
}

GlobalAdsMode::GlobalAdsMode(int n_, double alpha_, double lambda_)
    : n(n_), alpha(alpha_), lambda(lambda_) {
  if (n < 2) throw Error("GlobalAdsMode: n must be >= 2");
  if (lambda < 0.0) throw Error("GlobalAdsMode: lambda must be >= 0");
  beta = 0.5 * (2.0 - n +
                std::sqrt(4.0 * lambda * lambda + (n - 2.0) * (n - 2.0)));
}

namespace {

void check_gamma_pole(cdouble z) {
  if (z.real() > 0.5) return;
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 &&
      std::abs(z - cdouble(nearest)) < 1e-8)
    throw NumericalError("global_ads_multiplier: Gamma argument near a pole");
}

}  // namespace

cdouble global_ads_multiplier(const GlobalAdsMode& mode, cdouble s) {
  const double a = mode.alpha;
  const double n2 = 0.5 * mode.n;
  const cdouble is = cdouble(0.0, 1.0) * s;
  const cdouble p = 0.5 * (mode.beta - is + n2);
  const cdouble q = 0.5 * (mode.beta + is + n2);
  const double ah = 0.5 * a;
  const cdouble args[6] = {cdouble(-a), p + ah, q + ah,
                           cdouble(a),  p - ah, q - ah};
  for (const cdouble& z : args) check_gamma_pole(z);
  const cdouble lg = specfun::log_gamma(args[0]) + specfun::log_gamma(args[1]) +
                     specfun::log_gamma(args[2]) - specfun::log_gamma(args[3]) -
                     specfun::log_gamma(args[4]) - specfun::log_gamma(args[5]);
  return std::exp(lg) * (-2.0 * a);
}

cdouble radial_profile(const GlobalAdsMode& mode, cdouble s, double r,
                       cdouble c) {
  if (!(r > 0.0)) throw Error("radial_profile: r must be > 0");
  const double n2 = 0.5 * mode.n;
  const cdouble is = cdouble(0.0, 1.0) * s;
  const cdouble a1 = 0.5 * (mode.beta - is + n2 - mode.alpha);
  const cdouble a2 = 0.5 * (mode.beta - is + n2 + mode.alpha);
  const double cc = mode.beta + n2;
  const cdouble h = specfun::hyp2f1(a1, a2, cc, -r * r);
  return c * std::pow(r, mode.beta) *
         std::pow(cdouble(1.0 + r * r), -is * 0.5) * h;
}

double radial_ode_residual(const GlobalAdsMode& mode, cdouble s, double r) {
  // 8th-order central stencils; step small enough for the truncation and
  // large enough to stay clear of cancellation noise.
  static const double d1[9] = {1.0 / 280,  -4.0 / 105, 1.0 / 5,
                               -4.0 / 5,   0.0,        4.0 / 5,
                               -1.0 / 5,   4.0 / 105,  -1.0 / 280};
  static const double d2[9] = {-1.0 / 560, 8.0 / 315,  -1.0 / 5,
                               8.0 / 5,    -205.0 / 72, 8.0 / 5,
                               -1.0 / 5,   8.0 / 315,  -1.0 / 560};
  const double h = 0.01 * std::max(1.0, r);
  cdouble p1 = 0.0, p2 = 0.0, p0 = 0.0;
  for (int k = -4; k <= 4; ++k) {
    const cdouble v = radial_profile(mode, s, r + k * h);
    p1 += d1[k + 4] * v;
    p2 += d2[k + 4] * v;
    if (k == 0) p0 = v;
  }
  p1 /= h;
  p2 /= h * h;
  const double n = mode.n;
  const cdouble t1 = (1.0 + r * r) * p2;
  const cdouble t2 = ((n - 1.0) / r + (n + 1.0) * r) * p1;
  const cdouble t3 = -(s * s / (1.0 + r * r) +
                       cdouble(mode.lambda * mode.lambda / (r * r)) +
                       cdouble(mode.alpha * mode.alpha - n * n / 4.0)) *
                     p0;
  const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
  if (scale < 1e-300)
    throw NumericalError("radial_ode_residual: degenerate profile");
  return std::abs(t1 + t2 + t3) / scale;
}

cdouble global_ads_neumann_ladder(const GlobalAdsMode& mode, cdouble s) {
  const double a = mode.alpha;
  const double n2 = 0.5 * mode.n;
  // Boundary value F = lim r^{n/2 - a} Phi, read off at large r.
  auto G = [&](double r) {
    return std::pow(r, n2 - a) * radial_profile(mode, s, r);
  };
  // The boundary limit converges like r^{2a-2}; r = 1e12 puts the residual
  // far below the ladder-fit accuracy.
  const cdouble F = G(1e12);
  if (std::abs(F) < 1e-300)
    throw NumericalError("global_ads_neumann_ladder: vanishing boundary value");

  const double rs[3] = {100.0, 1000.0, 10000.0};
  Eigen::MatrixXcd A(3, 3);
  Eigen::VectorXcd b(3);
  for (int i = 0; i < 3; ++i) {
    const double r = rs[i];
    const double h = 1e-3 * r;
    const cdouble dG = (G(r + h) - G(r - h)) / (2.0 * h);
    b(i) = std::pow(r, 1.0 + 2.0 * a) * dG / F;
    // Tail model: constant + r^{2a-2} + r^{-2} corrections.
    A(i, 0) = 1.0;
    A(i, 1) = std::pow(r, 2.0 * a - 2.0);
    A(i, 2) = std::pow(r, -2.0);
  }
  const Eigen::VectorXcd coef = A.colPivHouseholderQr().solve(b);
  if (!coef.allFinite())
    throw NumericalError("global_ads_neumann_ladder: ladder fit failed");
  return coef(0);
}

std::vector<cdouble> principal_symbol_ratio(const GlobalAdsMode& mode,
                                            const std::vector<double>& taus,
                                            double eps) {
  std::vector<cdouble> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    const cdouble m = global_ads_multiplier(mode, cdouble(eps, tau));
    const cdouble sg = sigma(mode.alpha, tau, mode.lambda);
    if (std::abs(sg) < 1e-300)
      throw NumericalError("principal_symbol_ratio: sigma vanishes on ladder");
    out.push_back(m / sg);
  }
  return out;
}

}  // namespace fracwave
