#include "fracwave/validation.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "fracwave/energy.hpp"
#include "fracwave/extension.hpp"
#include "fracwave/geometry.hpp"
#include "fracwave/hypersingular.hpp"
#include "fracwave/qcalc.hpp"
#include "fracwave/reference.hpp"
#include "fracwave/riesz.hpp"
#include "fracwave/solver.hpp"
#include "fracwave/symbol.hpp"

namespace fracwave {
namespace {

using cdouble = std::complex<double>;

// Frozen desk-scale configuration: 128x128 window [-8, 8)^2, step 1/8.
SpacetimeGrid desk_grid(int n = 128, double length = 16.0) {
  const double d = length / n;
  return SpacetimeGrid(n, {n}, d, {d}, -0.5 * length);
}

ScalarField gaussian_bump(const SpacetimeGrid& g, double wt, double wx,
                          double tc = 0.0, double xc = 0.0) {
  ScalarField f(g);
  for (int it = 0; it < g.nt; ++it) {
    const double t = g.time_at(it) - tc;
    for (int j = 0; j < g.nx[0]; ++j) {
      const double x = g.x_at(0, j) - xc;
      f.at(it, j) = std::exp(-(t * t / (wt * wt) + x * x / (wx * wx)));
    }
  }
  return f;
}

double rel_l2(const ScalarField& a, const ScalarField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    num += d * d;
    den += b.values[i] * b.values[i];
  }
  return std::sqrt(num / den);
}

template <typename Fn>
CheckRecord timed(int id, const char* name, double tol, Fn&& body) {
  CheckRecord rec;
  rec.id = id;
  rec.name = name;
  rec.tol = tol;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.detail = std::string("exception: ") + e.what();
    rec.error = std::numeric_limits<double>::quiet_NaN();
  }
  rec.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rec;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// Uniform double in [0,1) from the top 53 bits, fixed across platforms.
double unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1p-53;
}

}  // namespace

CheckRecord check_symbol_correctness() {
  return timed(1, "symbol: integer exactness, static reduction, semigroup",
               1e-12, [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid(64);
    int exact_fail = 0;
    double stat = 0.0, semi = 0.0;
    for (int it = 0; it < g.nt; ++it) {
      const double tau = g.tau_at(it);
      for (int j = 0; j < g.nx[0]; ++j) {
        const double xi = std::abs(g.xi_at(0, j));
        // sigma_1 must reproduce |xi|^2 - tau^2 with no rounding residue.
        if (sigma(1.0, tau, xi) != cdouble(xi * xi - tau * tau)) ++exact_fail;
        // Static data: sigma_a(0, xi) = |xi|^{2a}.
        if (xi > 0.0) {
          const double v = std::abs(sigma(0.4, 0.0, xi));
          stat = std::max(stat,
                          std::abs(v - std::pow(xi * xi, 0.4)) /
                              std::pow(xi * xi, 0.4));
        }
        // Semigroup off the cone: sigma_.3 sigma_.4 = sigma_.7.
        const double d = xi * xi - tau * tau;
        if (std::abs(d) > 1e-9) {
          const cdouble lhs = sigma(0.3, tau, xi) * sigma(0.4, tau, xi);
          const cdouble rhs = sigma(0.7, tau, xi);
          semi = std::max(semi, std::abs(lhs - rhs) / std::abs(rhs));
        }
      }
    }
    rec.error = std::max(stat, semi);
    rec.pass = exact_fail == 0 && rec.error <= rec.tol;
    rec.detail = "exact sigma_1 mismatches: " + std::to_string(exact_fail) +
                 ", static " + fmt(stat) + ", semigroup " + fmt(semi);
  });
}

CheckRecord check_route_b_vs_route_a() {
  return timed(2, "route B (hypersingular) vs padded route A reference", 1e-3,
               [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid();
    const ScalarField f = gaussian_bump(g, 0.5, 0.5);
    // 25 grid-snapped probes within |t|, |x| <= 0.75.
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> idx;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        pts.emplace_back(3 * a * g.dt, 3 * b * g.dx[0]);
        idx.emplace_back(g.nt / 2 + 3 * a, g.nx[0] / 2 + 3 * b);
      }
    double worst = 0.0, worst_q = 0.0;
    std::ostringstream det;
    for (double alpha : {0.3, 0.4, 0.7}) {
      const ScalarField ref = box_alpha_padded_reference(f, alpha, 8, 16);
      double scale = 0.0;
      for (auto& ij : idx)
        scale = std::max(scale, std::abs(ref.at(ij.first, ij.second)));
      const QScheme s2(FractionalOrder(alpha), 2.0);
      const QScheme s3(FractionalOrder(alpha), 3.0);
      const auto v2 = box_alpha_integral(f, s2, pts).values;
      const auto v3 = box_alpha_integral(f, s3, pts).values;
      double eb = 0.0, eq = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        eb = std::max(eb, std::abs(v2[i] - ref.at(idx[i].first,
                                                  idx[i].second)) / scale);
        eq = std::max(eq, std::abs(v3[i] - v2[i]) / scale);
      }
      det << "alpha=" << alpha << ": err " << fmt(eb) << ", q2-q3 " << fmt(eq)
          << "; ";
      worst = std::max(worst, eb);
      worst_q = std::max(worst_q, eq);
    }
    rec.error = worst;
    rec.pass = worst <= rec.tol && worst_q <= 1e-4;
    rec.detail = det.str() + "q-independence (tol 1e-04): " + fmt(worst_q);
  });
}

CheckRecord check_kernel2_limit() {
  return timed(3, "kernel2 realization and the alpha -> 1 limit", 2e-2,
               [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid();
    const ScalarField f = gaussian_bump(g, 0.5, 0.8);
    const double wave = wave_apply(f).at(g.nt / 2, g.nx[0] / 2);
    std::vector<double> rels;
    for (double alpha : {0.9, 0.99, 0.999}) {
      const double v = box_alpha_kernel2(f, alpha, {{0.0, 0.0}})[0];
      rels.push_back(std::abs(v - wave) / std::abs(wave));
    }
    rec.error = rels.back();
    rec.pass = rels.back() <= rec.tol && rels[0] > rels[1] &&
               rels[1] > rels[2];
    rec.detail = "rel err at alpha {0.9, 0.99, 0.999}: " + fmt(rels[0]) +
                 ", " + fmt(rels[1]) + ", " + fmt(rels[2]);
  });
}

CheckRecord check_dtn_vs_route_a() {
  return timed(4, "route C (closed-form DtN) vs route A", 1e-3,
               [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid();
    const ScalarField f = gaussian_bump(g, 0.5, 0.5);
    const double alpha = 0.4;
    const ScalarField ref = apply_box_alpha_spectral(f, alpha);
    std::vector<double> errs;
    for (double eps : {0.2, 0.1, 0.05})
      errs.push_back(rel_l2(dtn_spacetime(f, alpha, eps), ref));
    rec.error = errs.back();
    rec.pass = errs.back() <= rec.tol && errs[0] > errs[1] &&
               errs[1] > errs[2];
    rec.detail = "rel L2 at eps {0.2, 0.1, 0.05}: " + fmt(errs[0]) + ", " +
                 fmt(errs[1]) + ", " + fmt(errs[2]);
  });
}

CheckRecord check_neumann_extraction() {
  return timed(5, "Neumann extraction vs the DtN multiplier", 1e-6,
               [](CheckRecord& rec) {
    std::mt19937_64 gen(12345);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double tau = -3.0 + 6.0 * unit(gen);
      const double eps = 0.05 + 0.45 * unit(gen);
      const double xi = 3.0 * unit(gen);
      const cdouble s(eps, tau);
      const struct { double alpha; int n; } cases[] = {
          {0.3, 2}, {0.7, 2}, {1.3, 4}};
      for (const auto& c : cases) {
        ExtensionProfile prof{FractionalOrder(c.alpha, c.n), s, xi, 1.0, {}};
        const cdouble got = neumann_extract_profile(prof);
        const cdouble want = dtn_multiplier(c.alpha, s, xi);
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
      }
    }
    rec.error = worst;
    rec.pass = worst <= rec.tol;
    rec.detail = "20 random (s, xi), alpha in {0.3, 0.7, 1.3}";
  });
}

CheckRecord check_solver_pipeline() {
  return timed(6, "time-domain solver pipeline vs route A", 5e-2,
               [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid();
    const ScalarField f = gaussian_bump(g, 0.5, 0.5);
    const double alpha = 0.4;
    const ScalarField ref = box_alpha_padded_reference(f, alpha, 2, 4);
    std::vector<double> errs;
    for (const SolverGrid sg : {SolverGrid{0.04, 200, 0.45, 8, 60, 3.0},
                                SolverGrid{0.02, 400, 0.45, 8, 60, 3.0}}) {
      const SolverResult u = solve_time_domain(f, alpha, sg);
      errs.push_back(rel_l2(boundary_fit_extract(u, alpha), ref));
    }
    const double order = std::log2(errs[0] / errs[1]);
    const double drift =
        solver_energy_drift(g, alpha, SolverGrid{0.02, 400, 0.45, 8, 60, 3.0});
    rec.error = errs[1];
    rec.pass = errs[1] <= rec.tol && order > 0.0 && drift <= 1e-6;
    rec.detail = "rel L2 " + fmt(errs[0]) + " -> " + fmt(errs[1]) +
                 ", order " + fmt(order) + ", energy drift " + fmt(drift) +
                 " (tol 1e-06)";
  });
}

CheckRecord check_energy_identity() {
  return timed(7, "energy identity: f-independent lhs/rhs ratio", 1e-2,
               [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid();
    const double alpha = 0.4;
    const EnergyResult r1 =
        energy_check(gaussian_bump(g, 0.5, 0.5), alpha);
    const EnergyResult r2 =
        energy_check(gaussian_bump(g, 0.7, 0.7, 1.0, -0.5), alpha);
    rec.error = std::abs(r1.ratio - r2.ratio) / std::abs(r1.ratio);
    const double imag = std::max(r1.rhs_imag / std::abs(r1.rhs),
                                 r2.rhs_imag / std::abs(r2.rhs));
    rec.pass = rec.error <= rec.tol && imag <= 1e-10;
    rec.detail = "ratios " + fmt(r1.ratio) + " vs " + fmt(r2.ratio) +
                 ", rhs imag " + fmt(imag) + " (tol 1e-10)";
  });
}

CheckRecord check_q_identities() {
  return timed(8, "q-calculus identities: vanishing and sum = product", 1e-12,
               [](CheckRecord& rec) {
    double vanish = 0.0, agree = 0.0;
    for (double q : {2.0, 3.0})
      for (int l = 1; l <= 5; ++l) {
        for (int m = 0; m < l; ++m) {
          // Normalize the alternating sum by its term magnitudes: the terms
          // grow with l and q, so the cancellation is what is being tested.
          double terms = 0.0;
          for (int k = 0; k <= l; ++k)
            terms += std::pow(q, k * m) * std::abs(q_c_coefficient(l, k, q));
          vanish = std::max(vanish, std::abs(a_coefficient(l, m, q)) / terms);
        }
        for (double mu : {0.8, 1.7, 2.456, 3.9, 5.25}) {
          const double s = a_coefficient(l, mu, q);
          const double p = a_coefficient_product(l, mu, q);
          agree = std::max(agree, std::abs(s - p) /
                                      std::max(std::abs(p), 1e-30));
        }
      }
    rec.error = std::max(vanish, agree);
    rec.pass = rec.error <= rec.tol;
    rec.detail = "vanishing " + fmt(vanish) + ", sum vs product " + fmt(agree);
  });
}

CheckRecord check_riesz_reduction() {
  return timed(9, "Riesz reduction: box I_{a+1} = I_a", 1e-3,
               [](CheckRecord& rec) {
    const SpacetimeGrid g = desk_grid();
    const ScalarField f = gaussian_bump(g, 0.5, 0.5);
    const double alpha = 0.6;  // n/2 - 0.4
    const double d = 0.05;
    const std::vector<std::pair<double, double>> probes{
        {0.2, 0.1}, {0.5, -0.3}, {1.0, 0.4}};
    // 4th-order second-derivative stencil per axis (9 points per probe).
    static const double c5[5] = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3,
                                 -1.0 / 12};
    std::vector<std::pair<double, double>> sten;
    for (const auto& p : probes)
      for (int k = -2; k <= 2; ++k) {
        sten.emplace_back(p.first + k * d, p.second);
        if (k != 0) sten.emplace_back(p.first, p.second + k * d);
      }
    const auto up = riesz_potential_points(f, alpha + 1.0, sten);
    const auto lo = riesz_potential_points(f, alpha, probes);
    double worst = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const double* v = up.data() + 9 * i;
      // Layout per probe: t-2, t-1 | x-2, t, x-1 ... follow the fill order:
      // k=-2: (t-2d, x), (x-2d); k=-1: (t-d, x), (x-d); k=0: (t, x);
      // k=1: (t+d, x), (x+d); k=2: (t+2d, x), (x+2d).
      const double tt[5] = {v[0], v[2], v[4], v[5], v[7]};
      const double xx[5] = {v[1], v[3], v[4], v[6], v[8]};
      double dtt = 0.0, dxx = 0.0;
      for (int k = 0; k < 5; ++k) {
        dtt += c5[k] * tt[k];
        dxx += c5[k] * xx[k];
      }
      const double box = (dtt - dxx) / (d * d);
      worst = std::max(worst, std::abs(box - lo[i]) / std::abs(lo[i]));
    }
    rec.error = worst;
    rec.pass = worst <= rec.tol;
    rec.detail =
        "3 interior probes, 4th-order second differences, d = 0.05";
  });
}

CheckRecord check_global_ads() {
  return timed(10, "global AdS: ODE residual, Neumann ladder, flattening",
               1e-4, [](CheckRecord& rec) {
    const GlobalAdsMode mode(3, 0.4, 0.0);
    const cdouble s(0.1, 2.0);
    double res = 0.0;
    for (double r : {0.5, 1.0, 2.0, 5.0})
      res = std::max(res, radial_ode_residual(mode, s, r));
    const cdouble mult = global_ads_multiplier(mode, s);
    const cdouble lad = global_ads_neumann_ladder(mode, s);
    const double lerr = std::abs(lad - mult) / std::abs(mult);
    // Principal-symbol flattening on the last frequency decade.
    const GlobalAdsMode mode2(3, 0.4, 3.0);
    const auto ratios =
        principal_symbol_ratio(mode2, {8, 16, 32, 64, 128, 256});
    double flat = 0.0;
    for (std::size_t i = ratios.size() - 3; i < ratios.size(); ++i)
      flat = std::max(flat, std::abs(ratios[i] - ratios[i - 1]) /
                                std::abs(ratios[i]));
    rec.error = lerr;
    rec.pass = lerr <= rec.tol && res <= 1e-7 && flat <= 5e-2;
    rec.detail = "ODE residual " + fmt(res) + " (tol 1e-07), ladder " +
                 fmt(lerr) + ", flattening " + fmt(flat) + " (tol 5e-02)";
  });
}

CheckRecord check_product_space() {
  return timed(11, "product space: circle modes vs 2D spectral route", 1e-12,
               [](CheckRecord& rec) {
    const int nt = 128, nx = 64;
    const SpacetimeGrid g(nt, {nx}, 0.125, {2.0 * std::numbers::pi / nx},
                          -8.0);
    ScalarField f(g);
    for (int it = 0; it < nt; ++it) {
      const double t = g.time_at(it);
      for (int j = 0; j < nx; ++j) {
        const double th = g.x_at(0, j);
        f.at(it, j) = std::exp(-t * t / 0.25) * std::exp(std::cos(th) - 1.0);
      }
    }
    const ScalarField a = product_dtn_apply(f, 0.4);
    const ScalarField b = apply_box_alpha_spectral(f, 0.4);
    rec.error = rel_l2(a, b);
    rec.pass = rec.error <= rec.tol;
    rec.detail = "alpha = 0.4, 128 x 64 grid on R x S^1";
  });
}

std::vector<CheckRecord> run_acceptance(
    const std::function<void(const CheckRecord&)>& progress) {
  std::vector<CheckRecord> out;
  CheckRecord (*checks[])() = {
      check_symbol_correctness, check_route_b_vs_route_a,
      check_kernel2_limit,      check_dtn_vs_route_a,
      check_neumann_extraction, check_solver_pipeline,
      check_energy_identity,    check_q_identities,
      check_riesz_reduction,    check_global_ads,
      check_product_space};
  for (auto* fn : checks) {
    out.push_back(fn());
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace fracwave
