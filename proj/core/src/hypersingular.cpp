#include "fracwave/hypersingular.hpp"

#include <cmath>

#include "fracwave/errors.hpp"
#include "fracwave/riesz.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/symbol.hpp"
#include "fracwave/threading.hpp"

namespace fracwave {
namespace {

double integral_at(const Field2D& f, const QScheme& sch,
                   const QuadratureSpec& quad, double t, double x,
                   double t_lo) {
  const double a = sch.alpha.alpha;
  const int n = sch.alpha.n;
  const double q = sch.q;
  const double u_min = std::log(quad.eps_truncation) / (sch.l_star - a);
  const double v_min = std::log(quad.eps_truncation) / (sch.l - 2.0 * a);

  std::vector<double> ay, ayw;  // |y| nodes and |y|^{-2 alpha} weights
  for (double v = v_min; v < quad.v_max; v += quad.dv) {
    ay.push_back(std::exp(v));
    ayw.push_back(std::exp(-2.0 * a * v));
  }
  std::vector<double> qpow_j(sch.l_star + 1), qpow_k(sch.l + 1);
  for (int j = 0; j <= sch.l_star; ++j) qpow_j[j] = std::pow(q, j);
  for (int k = 0; k <= sch.l; ++k) qpow_k[k] = std::pow(q, k);

  double total = 0.0;
  for (double u = u_min; u < quad.u_max; u += quad.du) {
    const double s = std::exp(u);
    const double s_w = std::exp(-a * u);  // s^{-alpha}
    double row = 0.0;
    for (int j = 0; j <= sch.l_star; ++j) {
      const double c1 = 1.0 + qpow_j[j] * s;
      const double wj = std::pow(c1, 2.0 * a) /
                        std::pow(2.0 + qpow_j[j] * s, 0.5 * n + a);
      double acc_j = 0.0;
      for (int k = 0; k <= sch.l; ++k) {
        const double qk = qpow_k[k];
        const double coef = ((j + k) % 2 == 0 ? 1.0 : -1.0) * sch.c_j[j] *
                            sch.c_k[k];
        double acc = 0.0;
        for (double sign : {1.0, -1.0}) {
          for (std::size_t iv = 0; iv < ay.size(); ++iv) {
            const double t_arg = t - qk * ay[iv];
            if (t_arg <= t_lo) break;  // past the support window
            acc += ayw[iv] * f(t_arg, x - sign * qk * ay[iv] / c1);
          }
        }
        acc_j += coef * acc;
      }
      row += wj * acc_j;
    }
    total += s_w * row;
  }
  const double denom = sch.denom_s * sch.denom_y;
  return riesz_constant(n, -a) * total * quad.du * quad.dv / denom;
}

}  // namespace

double difference_operator(const Field2D& f, const QScheme& sch, double t,
                           double x, double s, double y) {
  if (!(s > 0.0)) throw Error("difference_operator: s must be > 0");
  const double a = sch.alpha.alpha;
  const int n = sch.alpha.n;
  const double q = sch.q;
  const double ay = std::abs(y);
  double sum = 0.0;
  for (int j = 0; j <= sch.l_star; ++j) {
    const double qj = std::pow(q, j);
    const double wj = std::pow(1.0 + qj * s, 2.0 * a) /
                      std::pow(2.0 + qj * s, 0.5 * n + a);
    for (int k = 0; k <= sch.l; ++k) {
      const double qk = std::pow(q, k);
      const double sgn = (j + k) % 2 == 0 ? 1.0 : -1.0;
      sum += sgn * sch.c_j[j] * sch.c_k[k] * wj *
             f(t - qk * ay, x - qk * y / (1.0 + qj * s));
    }
  }
  return sum / (sch.denom_s * sch.denom_y);
}

IntegralResult box_alpha_integral(
    const ScalarField& f, const QScheme& sch,
    const std::vector<std::pair<double, double>>& points,
    const QuadratureSpec& quad) {
  if (points.empty()) throw Error("box_alpha_integral: no probe points");
  FieldSampler sampler(f);
  const double t_lo = f.grid.t0;
  IntegralResult out;
  out.values.resize(points.size());
  parallel_for(points.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      out.values[i] = integral_at(sampler, sch, quad, points[i].first,
                                  points[i].second, t_lo);
  });
  QuadratureSpec half = quad;
  half.du *= 2.0;
  half.dv *= 2.0;
  const double coarse =
      integral_at(sampler, sch, half, points[0].first, points[0].second, t_lo);
  out.error_indicator = std::abs(coarse - out.values[0]);
  return out;
}

std::vector<double> box_alpha_kernel2(
    const ScalarField& f, double alpha,
    const std::vector<std::pair<double, double>>& points, double du,
    double eps_truncation) {
  if (f.grid.spatial_rank() != 1)
    throw Error("box_alpha_kernel2: n = 2 only (one spatial axis)");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error("box_alpha_kernel2: alpha must lie in (0,1)");
  FractionalOrder(alpha, 2).require_non_half_integer("box_alpha_kernel2");

  // Samplers for f, the light-cone edge derivatives d_t -+ d_x f, and the
  // wave operator of f (all spectral, so consistent with route A).
  FieldSampler fS(f);
  ScalarField ft = spectral_derivative(f, 0);
  ScalarField fx = spectral_derivative(f, 1);
  ScalarField dfield(f.grid), gfield(f.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    dfield.values[i] = ft.values[i] - fx.values[i];
    gfield.values[i] = ft.values[i] + fx.values[i];
  }
  FieldSampler dS(dfield), gS(gfield);
  FieldSampler boxS(wave_apply(f));

  const double g1 = specfun::gamma_real(1.0 - alpha);
  const double gm = specfun::gamma_real(-alpha);
  const double ulo = std::log(eps_truncation), uhi = 45.0;
  std::vector<double> nodes, pw, ex;
  for (double u = ulo; u < uhi; u += du) {
    const double v = std::exp(u);
    nodes.push_back(v);
    pw.push_back(std::exp(-alpha * u));           // v^{-alpha}
    ex.push_back(v > 700.0 ? 0.0 : std::exp(-v));  // e^{-v}
  }
  const std::size_t nn = nodes.size();

  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t pb, std::size_t pe) {
    for (std::size_t p = pb; p < pe; ++p) {
      const double t0 = points[p].first, x0 = points[p].second;
      const double f00 = fS(t0, x0);
      const double m0 = boxS(t0, x0);
      const double d0 = dS(t0, x0), g0 = gS(t0, x0);
      // Per-node 1D traces along the two light-cone edges.
      std::vector<double> fa(nn), fb(nn), ea(nn), eb(nn);
      double ia = 0.0, ib = 0.0;
      for (std::size_t i = 0; i < nn; ++i) {
        const double v = nodes[i];
        fa[i] = fS(t0 - v, x0 - v);
        fb[i] = fS(t0 - v, x0 + v);
        ea[i] = d0 - dS(t0 - v, x0 - v);
        eb[i] = g0 - gS(t0 - v, x0 + v);
        ia += (ea[i] - m0 * v * ex[i]) * pw[i];
        ib += (eb[i] - m0 * v * ex[i]) * pw[i];
      }
      ia *= du;
      ib *= du;
      // 2D remainder (T - psi)(ab)^{-1-alpha}, log coordinates.
      double j2 = 0.0;
      for (std::size_t i = 0; i < nn; ++i) {
        const double a = nodes[i];
        double rowsum = 0.0;
        for (std::size_t j = 0; j < nn; ++j) {
          const double b = nodes[j];
          const double tt = fS(t0 - a - b, x0 - a + b);
          const double T = f00 - fa[i] - fb[j] + tt;
          const double psi = b * ex[j] * ea[i] + a * ex[i] * eb[j] -
                             a * b * ex[i] * ex[j] * m0;
          rowsum += (T - psi) * pw[j];
        }
        j2 += rowsum * pw[i];
      }
      j2 *= du * du;
      const double J = m0 * g1 * g1 + g1 * (ia + ib) + j2;
      out[p] = J / (gm * gm);
    }
  });
  return out;
}

}  // namespace fracwave
