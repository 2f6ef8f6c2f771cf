// fracwave: command-line front end for the fractional wave-operator library.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 validation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fracwave/energy.hpp"
#include "fracwave/extension.hpp"
#include "fracwave/geometry.hpp"
#include "fracwave/hypersingular.hpp"
#include "fracwave/io.hpp"
#include "fracwave/qcalc.hpp"
#include "fracwave/reference.hpp"
#include "fracwave/riesz.hpp"
#include "fracwave/solver.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/symbol.hpp"
#include "fracwave/validation.hpp"

namespace fw = fracwave;
using json = nlohmann::json;
using cdouble = std::complex<double>;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

fw::ScalarField make_bump(int n, double length, double wt, double wx) {
  const double d = length / n;
  fw::SpacetimeGrid g(n, {n}, d, {d}, -0.5 * length);
  fw::ScalarField f(g);
  for (int it = 0; it < n; ++it) {
    const double t = g.time_at(it);
    for (int j = 0; j < n; ++j) {
      const double x = g.x_at(0, j);
      f.at(it, j) = std::exp(-(t * t / (wt * wt) + x * x / (wx * wx)));
    }
  }
  return f;
}

// The spectral routes treat the window as one period; data must be
// compactly supported well inside it or the answer wraps around. Requires
// the outer quarter band of the window to carry < 1e-10 of the peak.
bool support_ok(const fw::ScalarField& f) {
  const fw::SpacetimeGrid& g = f.grid;
  double peak = 0.0, border = 0.0;
  for (int it = 0; it < g.nt; ++it)
    for (int j = 0; j < g.nx[0]; ++j) {
      const double v = std::abs(f.at(it, j));
      peak = std::max(peak, v);
      const bool outer = it < g.nt / 4 || it >= g.nt - g.nt / 4 ||
                         j < g.nx[0] / 4 || j >= g.nx[0] - g.nx[0] / 4;
      if (outer) border = std::max(border, v);
    }
  return border <= 1e-10 * peak;
}

double rel_l2(const fw::ScalarField& a, const fw::ScalarField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    num += d * d;
    den += b.values[i] * b.values[i];
  }
  return std::sqrt(num / std::max(den, 1e-300));
}

json record_to_json(const fw::CheckRecord& r) {
  return json{{"id", r.id},         {"name", r.name}, {"error", r.error},
              {"tol", r.tol},       {"pass", r.pass}, {"seconds", r.seconds},
              {"detail", r.detail}};
}

void print_record(const fw::CheckRecord& r) {
  std::printf("[%2d] %s  %s  error=%.3e  tol=%.0e  (%.1fs)\n", r.id,
              r.pass ? "PASS" : "FAIL", r.name.c_str(), r.error, r.tol,
              r.seconds);
  if (!r.detail.empty()) std::printf("     %s\n", r.detail.c_str());
}

int write_report(const std::string& path, const json& body) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write report: " << path << "\n";
    return kExitUsage;
  }
  out << body.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------
// apply
// ---------------------------------------------------------------------------
namespace {

struct ApplyOpts {
  std::string route = "spectral";
  double alpha = 0.4;
  std::string in, out, golden;
  bool bless = false;
  bool allow_wrap = false;
  double q = 2.0;
  std::vector<std::vector<double>> probes;
  std::vector<double> bump;  // wt wx [N length]
};

int cmd_apply(const ApplyOpts& o) {
  if (!(o.alpha > 0.0) || !std::isfinite(o.alpha)) {
    std::cerr << "apply: --alpha must be positive and finite\n";
    return kExitUsage;
  }
  fw::ScalarField f;
  if (!o.bump.empty()) {
    const int n = o.bump.size() >= 3 ? static_cast<int>(o.bump[2]) : 128;
    const double len = o.bump.size() >= 4 ? o.bump[3] : 16.0;
    f = make_bump(n, len, o.bump[0], o.bump[1]);
  } else if (!o.in.empty()) {
    f = fw::read_field(o.in);
  } else {
    std::cerr << "apply: need --in or --make-bump\n";
    return kExitUsage;
  }
  if (!o.allow_wrap && !support_ok(f)) {
    std::cerr << "apply: input not compactly supported in the inner half of "
                 "the window (periodic wrap-around would corrupt the "
                 "answer); pass --allow-wrap to override\n";
    return kExitValidation;
  }

  if (o.route == "spectral") {
    const fw::ScalarField g = fw::apply_box_alpha_spectral(f, o.alpha);
    if (!o.out.empty()) fw::write_field(o.out, g);
    if (!o.golden.empty()) {
      if (o.bless) {
        fw::write_field(o.golden, g);
        std::printf("golden blessed: %s\n", o.golden.c_str());
      } else {
        const fw::ScalarField want = fw::read_field(o.golden);
        const double err = rel_l2(g, want);
        std::printf("golden check: rel L2 = %.3e\n", err);
        if (err > 1e-12) return kExitValidation;
      }
    }
    return kExitOk;
  }

  // Pointwise integral routes.
  if (o.probes.empty()) {
    std::cerr << "apply: route '" << o.route << "' needs --probe t x\n";
    return kExitUsage;
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : o.probes) pts.emplace_back(p[0], p[1]);
  std::vector<double> vals;
  if (o.route == "integral") {
    const fw::QScheme scheme(fw::FractionalOrder(o.alpha), o.q);
    vals = fw::box_alpha_integral(f, scheme, pts).values;
  } else if (o.route == "kernel2") {
    vals = fw::box_alpha_kernel2(f, o.alpha, pts);
  } else if (o.route == "riesz") {
    vals = fw::riesz_potential_points(f, o.alpha, pts);
  } else {
    std::cerr << "apply: unknown route '" << o.route << "'\n";
    return kExitUsage;
  }
  std::printf("t,x,value\n");
  for (std::size_t i = 0; i < pts.size(); ++i)
    std::printf("%.17g,%.17g,%.17g\n", pts[i].first, pts[i].second, vals[i]);
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------
int main(int argc, char** argv) {
  CLI::App app{"fractional powers of the wave operator: spectral, "
               "hypersingular-integral, and extension (DtN) routes"};
  app.require_subcommand(1);

  // ---- apply ----
  ApplyOpts ao;
  auto* apply = app.add_subcommand(
      "apply", "apply the fractional wave operator to a field");
  apply->add_option("--route", ao.route,
                    "spectral | integral | kernel2 | riesz")
      ->default_val("spectral");
  apply->add_option("--alpha", ao.alpha, "fractional order")->required();
  apply->add_option("--q", ao.q, "q-scheme base (integral route)");
  apply->add_option("--in", ao.in, "input field (.fwf or .csv)");
  apply->add_option("--make-bump", ao.bump,
                    "synthesize a Gaussian bump: wt wx [N length]")
      ->expected(2, 4);
  apply->add_option("--out", ao.out, "output field path");
  apply->add_option("--probe", ao.probes, "probe point t x (integral routes)")
      ->expected(2)->take_all();
  apply->add_option("--golden", ao.golden, "golden output to compare against");
  apply->add_flag("--bless", ao.bless, "regenerate the golden output");
  apply->add_flag("--allow-wrap", ao.allow_wrap,
                  "skip the compact-support window check");

  // ---- dtn ----
  std::string dtn_method = "closed-form", dtn_in, dtn_out;
  double dtn_alpha = 0.4, dtn_eps = 0.25;
  auto* dtn = app.add_subcommand(
      "dtn", "Dirichlet-to-Neumann route on spacetime data");
  dtn->add_option("--method", dtn_method, "closed-form | time-domain")
      ->default_val("closed-form");
  dtn->add_option("--alpha", dtn_alpha)->required();
  dtn->add_option("--eps", dtn_eps, "Bromwich abscissa (closed form)");
  dtn->add_option("--in", dtn_in)->required();
  dtn->add_option("--out", dtn_out)->required();

  // ---- extend ----
  double ex_alpha = 0.4, ex_sre = 0.2, ex_sim = 1.0, ex_xi = 1.0;
  int ex_n = 2;
  std::string ex_out;
  auto* extend = app.add_subcommand(
      "extend", "per-mode extension profile and Neumann extraction");
  extend->add_option("--alpha", ex_alpha)->required();
  extend->add_option("--n", ex_n, "dimension parameter (alpha < n/2)");
  extend->add_option("--s-re", ex_sre)->required();
  extend->add_option("--s-im", ex_sim)->required();
  extend->add_option("--xi", ex_xi)->required();
  extend->add_option("--out", ex_out, "CSV of the sampled y-profile");

  // ---- energy ----
  double en_alpha = 0.4;
  std::string en_in;
  auto* energy = app.add_subcommand("energy", "energy-identity check");
  energy->add_option("--alpha", en_alpha)->required();
  energy->add_option("--in", en_in)->required();

  // ---- geometry ----
  auto* geo = app.add_subcommand("geometry", "product-space and global AdS");
  geo->require_subcommand(1);
  std::string geo_manifold = "circle", geo_in, geo_out;
  double gp_alpha = 0.4;
  auto* gprod = geo->add_subcommand("product", "per-mode DtN on R x M");
  gprod->add_option("--manifold", geo_manifold, "circle | sphere");
  gprod->add_option("--alpha", gp_alpha)->required();
  gprod->add_option("--in", geo_in, "field on R x S^1 (.fwf/.csv)")
      ->required();
  gprod->add_option("--out", geo_out, "output field")->required();

  int ga_n = 3;
  double ga_alpha = 0.4, ga_lambda = 0.0, ga_eps = 0.1;
  std::vector<double> ga_taus;
  auto* gads = geo->add_subcommand("global-ads",
                                   "scattering multiplier vs symbol ladder");
  gads->add_option("--n", ga_n)->required();
  gads->add_option("--alpha", ga_alpha)->required();
  gads->add_option("--lambda", ga_lambda)->required();
  gads->add_option("--eps", ga_eps);
  gads->add_option("--tau-ladder", ga_taus)->required()->expected(-1);

  // ---- validate ----
  std::vector<int> val_only;
  std::string val_report, val_config;
  auto* validate = app.add_subcommand(
      "validate", "run the acceptance suite (exit 2 on failure)");
  validate->add_option("--only", val_only, "check ids to run (default: all)");
  validate->add_option("--report", val_report, "write a JSON report");
  validate->add_option("--config", val_config,
                       "JSON config: {checks, tolerances, report}");

  // ---- report ----
  std::vector<std::string> rep_in;
  std::string rep_out;
  auto* report = app.add_subcommand("report", "merge validation reports");
  report->add_option("--in", rep_in)->required()->expected(-1);
  report->add_option("--out", rep_out, "merged JSON path");

  // ---- specfun-selftest ----
  auto* selftest =
      app.add_subcommand("specfun-selftest", "special-function identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (apply->parsed()) return cmd_apply(ao);

    if (dtn->parsed()) {
      const fw::ScalarField f = fw::read_field(dtn_in);
      fw::ScalarField g;
      if (dtn_method == "closed-form") {
        g = fw::dtn_spacetime(f, dtn_alpha, dtn_eps);
      } else if (dtn_method == "time-domain") {
        g = fw::boundary_fit_extract(fw::solve_time_domain(f, dtn_alpha),
                                     dtn_alpha);
      } else {
        std::cerr << "dtn: unknown method '" << dtn_method << "'\n";
        return kExitUsage;
      }
      fw::write_field(dtn_out, g);
      return kExitOk;
    }

    if (extend->parsed()) {
      fw::ExtensionProfile prof{fw::FractionalOrder(ex_alpha, ex_n),
                                cdouble(ex_sre, ex_sim), ex_xi, 1.0, {}};
      const cdouble got = fw::neumann_extract_profile(prof);
      const cdouble want =
          fw::dtn_multiplier(ex_alpha, cdouble(ex_sre, ex_sim), ex_xi);
      std::printf("extracted_re,extracted_im,multiplier_re,multiplier_im,"
                  "rel_err\n");
      std::printf("%.17g,%.17g,%.17g,%.17g,%.3e\n", got.real(), got.imag(),
                  want.real(), want.imag(),
                  std::abs(got - want) / std::abs(want));
      if (!ex_out.empty()) {
        std::ofstream os(ex_out);
        os << "y,re,im\n";
        for (const auto& [y, u] : prof.y_samples)
          os << y << "," << u.real() << "," << u.imag() << "\n";
      }
      return kExitOk;
    }

    if (energy->parsed()) {
      const fw::EnergyResult r =
          fw::energy_check(fw::read_field(en_in), en_alpha);
      std::printf("lhs,rhs,ratio,rhs_imag\n");
      std::printf("%.17g,%.17g,%.17g,%.3e\n", r.lhs, r.rhs, r.ratio,
                  r.rhs_imag);
      return kExitOk;
    }

    if (gprod->parsed()) {
      if (geo_manifold != "circle") {
        std::cerr << "geometry product: only the circle carries gridded "
                     "fields; sphere modes go through the library API\n";
        return kExitUsage;
      }
      fw::write_field(geo_out,
                      fw::product_dtn_apply(fw::read_field(geo_in), gp_alpha));
      return kExitOk;
    }

    if (gads->parsed()) {
      const fw::GlobalAdsMode mode(ga_n, ga_alpha, ga_lambda);
      std::printf("s_re,s_im,mult_re,mult_im,sigma_re,sigma_im,ratio_re,"
                  "ratio_im\n");
      for (double tau : ga_taus) {
        const cdouble s(ga_eps, tau);
        const cdouble m = fw::global_ads_multiplier(mode, s);
        const cdouble sg = fw::sigma(ga_alpha, tau, ga_lambda);
        const cdouble r = m / sg;
        std::printf("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    s.real(), s.imag(), m.real(), m.imag(), sg.real(),
                    sg.imag(), r.real(), r.imag());
      }
      return kExitOk;
    }

    if (validate->parsed()) {
      std::map<int, double> tol_override;
      if (!val_config.empty()) {
        std::ifstream is(val_config);
        if (!is) {
          std::cerr << "validate: cannot read config " << val_config << "\n";
          return kExitUsage;
        }
        json cfg = json::parse(is);
        for (const auto& [key, value] : cfg.items()) {
          if (key == "checks") {
            val_only = value.get<std::vector<int>>();
          } else if (key == "tolerances") {
            for (const auto& [id, tol] : value.items())
              tol_override[std::stoi(id)] = tol.get<double>();
          } else if (key == "report") {
            val_report = value.get<std::string>();
          } else {
            std::cerr << "validate: unknown config key '" << key << "'\n";
            return kExitUsage;
          }
        }
      }
      fw::CheckRecord (*checks[])() = {
          fw::check_symbol_correctness, fw::check_route_b_vs_route_a,
          fw::check_kernel2_limit,      fw::check_dtn_vs_route_a,
          fw::check_neumann_extraction, fw::check_solver_pipeline,
          fw::check_energy_identity,    fw::check_q_identities,
          fw::check_riesz_reduction,    fw::check_global_ads,
          fw::check_product_space};
      std::vector<fw::CheckRecord> recs;
      for (int id = 1; id <= 11; ++id) {
        if (!val_only.empty() &&
            std::find(val_only.begin(), val_only.end(), id) == val_only.end())
          continue;
        fw::CheckRecord r = checks[id - 1]();
        auto it = tol_override.find(id);
        if (it != tol_override.end()) {
          // Tightened tolerances re-judge the measured error; a check that
          // failed one of its secondary conditions stays failed.
          r.pass = r.pass || r.error <= r.tol;  // no-op guard for clarity
          r.tol = it->second;
          r.pass = r.pass && r.error <= r.tol;
        }
        print_record(r);
        recs.push_back(std::move(r));
      }
      if (recs.empty()) {
        std::cerr << "validate: no checks selected\n";
        return kExitUsage;
      }
      const bool all_pass =
          std::all_of(recs.begin(), recs.end(),
                      [](const fw::CheckRecord& r) { return r.pass; });
      if (!val_report.empty()) {
        json body;
        body["schema"] = "fracwave-report-v1";
        json cfg;
        cfg["checks"] = val_only.empty() ? json::array() : json(val_only);
        cfg["tolerances"] = json::object();
        for (const auto& [id, tol] : tol_override)
          cfg["tolerances"][std::to_string(id)] = tol;
        body["config"] = cfg;
        body["checks"] = json::array();
        for (const auto& r : recs) body["checks"].push_back(record_to_json(r));
        body["pass"] = all_pass;
        const int rc = write_report(val_report, body);
        if (rc != kExitOk) return rc;
      }
      std::printf("%s (%zu checks)\n", all_pass ? "ALL PASS" : "FAILURES",
                  recs.size());
      return all_pass ? kExitOk : kExitValidation;
    }

    if (report->parsed()) {
      json merged;
      merged["schema"] = "fracwave-report-v1";
      merged["checks"] = json::array();
      bool all_pass = true;
      for (const std::string& path : rep_in) {
        std::ifstream is(path);
        if (!is) {
          std::cerr << "report: cannot read " << path << "\n";
          return kExitUsage;
        }
        json body = json::parse(is, nullptr, false);
        if (body.is_discarded() || !body.contains("schema") ||
            body["schema"] != "fracwave-report-v1" ||
            !body.contains("checks")) {
          std::cerr << "report: malformed report " << path << "\n";
          return kExitUsage;
        }
        for (const auto& c : body["checks"]) {
          merged["checks"].push_back(c);
          all_pass = all_pass && c.value("pass", false);
        }
      }
      merged["pass"] = all_pass;
      std::printf("id,pass,error,tol,seconds\n");
      for (const auto& c : merged["checks"])
        std::printf("%d,%s,%.3e,%.0e,%.1f\n", c["id"].get<int>(),
                    c["pass"].get<bool>() ? "pass" : "fail",
                    c["error"].get<double>(), c["tol"].get<double>(),
                    c["seconds"].get<double>());
      if (!rep_out.empty()) {
        const int rc = write_report(rep_out, merged);
        if (rc != kExitOk) return rc;
      }
      return kExitOk;
    }

    if (selftest->parsed()) {
      int fails = 0;
      auto expect = [&](const char* what, double err, double tol) {
        const bool ok = err <= tol;
        std::printf("[%s] %s  err=%.3e tol=%.0e\n", ok ? "PASS" : "FAIL",
                    what, err, tol);
        if (!ok) ++fails;
      };
      using fw::specfun::bessel_k;
      using fw::specfun::gamma;
      using fw::specfun::hyp2f1;
      // Gamma: half-integer value and the recurrence on random samples.
      expect("Gamma(1/2) = sqrt(pi)",
             std::abs(fw::specfun::gamma_real(0.5) -
                      std::sqrt(std::numbers::pi)) /
                 std::sqrt(std::numbers::pi),
             1e-14);
      std::mt19937_64 gen(7);
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const cdouble z(0.1 + 5.0 * ((gen() >> 11) * 0x1p-53),
                        -4.0 + 8.0 * ((gen() >> 11) * 0x1p-53));
        worst = std::max(worst, std::abs(gamma(z + 1.0) - z * gamma(z)) /
                                    std::abs(gamma(z + 1.0)));
      }
      expect("Gamma recurrence", worst, 1e-12);
      // Bessel K: three-term recurrence K_{v+1} = K_{v-1} + (2v/z) K_v.
      worst = 0.0;
      for (double nu : {0.3, 0.7, 1.4})
        for (cdouble z : {cdouble(0.5, 0.2), cdouble(3.0, -1.0),
                          cdouble(12.0, 30.0)}) {
          const cdouble lhs = bessel_k(nu + 1.0, z);
          const cdouble rhs = bessel_k(nu - 1.0, z) +
                              2.0 * nu / z * bessel_k(nu, z);
          worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
      expect("Bessel K recurrence", worst, 1e-10);
      // 2F1: value at 0, Gauss contiguous relation at z = -0.4.
      expect("2F1(a,b;c;0) = 1", std::abs(hyp2f1(0.3, 1.2, 2.1, 0.0) - 1.0),
             1e-15);
      {
        // Cross-check against the Euler integral via Simpson quadrature;
        // b, c chosen so the integrand is smooth on [0, 1].
        const double a = 0.3, b = 2.0, c = 4.0, z = -0.4;
        double quad = 0.0;
        const int m = 2000;
        for (int i = 0; i <= m; ++i) {
          const double t = static_cast<double>(i) / m;
          const double wgt = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
          quad += wgt * std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) *
                  std::pow(1.0 - z * t, -a);
        }
        quad *= 1.0 / (3.0 * m);
        quad *= fw::specfun::gamma_real(c) /
                (fw::specfun::gamma_real(b) * fw::specfun::gamma_real(c - b));
        expect("2F1 Euler integral", std::abs(hyp2f1(a, b, c, z) - quad) /
                                         std::abs(quad),
               1e-8);
      }
      return fails == 0 ? kExitOk : kExitValidation;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
