#include "fracwave/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fracwave/errors.hpp"

namespace fracwave {
namespace specfun {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(cdouble z, double tol = 1e-13) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = z.real();
  return r < 0.5 && std::abs(r - std::round(r)) < tol;
}

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set);
// ~1e-13 relative accuracy over the right half plane.
cdouble lanczos_log_gamma(cdouble z) {
  static const double g = 607.0 / 128.0;
  static const double c[15] = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};
  // Shifted so the series is evaluated at z-1.
  const cdouble zm = z - 1.0;
  cdouble sum = c[0];
  for (int k = 1; k < 15; ++k) sum += c[k] / (zm + static_cast<double>(k));
  const cdouble t = zm + g + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t +
         std::log(sum);
}

}  // namespace

cdouble log_gamma(cdouble z) {
  if (is_nonpositive_integer(z))
    throw Error("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
  // For large |Im z| evaluate log sin via its dominant exponential to avoid
  // overflow of sin(pi z).
  cdouble log_sin;
  if (std::abs(z.imag()) < 30.0) {
    log_sin = std::log(std::sin(kPi * z));
  } else {
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); keep the large branch.
    const cdouble ipz = cdouble(0.0, kPi) * z;
    if (z.imag() > 0.0)
      log_sin = -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / cdouble(0.0, 2.0));
    else
      log_sin = ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / cdouble(0.0, 2.0));
  }
  return std::log(cdouble(kPi)) - log_sin - lanczos_log_gamma(1.0 - z);
}

cdouble gamma(cdouble z) { return std::exp(log_gamma(z)); }

double gamma_real(double x) {
  if (is_nonpositive_integer(cdouble(x, 0.0)))
    throw Error("gamma_real: pole at non-positive integer");
  return std::tgamma(x);
}

// ---------------------------------------------------------------------------
// Modified Bessel K_nu(z), complex z with Re z > 0.
// Temme's series for |z| <= 2, Thompson-Barnett continued fraction above,
// both producing K_mu and K_{mu+1} with mu = nu - round(nu) in [-1/2, 1/2],
// followed by the upward recurrence K_{m+1} = K_{m-1} + (2m/z) K_m.
// ---------------------------------------------------------------------------
namespace {

struct KPair {
  cdouble kmu;   // K_mu(z)
  cdouble kmu1;  // K_{mu+1}(z)
};

// Temme auxiliary coefficients: gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu),
// gam1 = (gammi - gampl) / (2 mu), gam2 = (gammi + gampl) / 2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl,
                  double& gammi) {
  gampl = 1.0 / std::tgamma(1.0 + mu);
  gammi = 1.0 / std::tgamma(1.0 - mu);
  // |mu| >= 1e-5 is guaranteed by the nu-perturbation in bessel_k.
  gam1 = (gammi - gampl) / (2.0 * mu);
  gam2 = 0.5 * (gammi + gampl);
}

KPair k_series(double mu, cdouble z) {
  const double eps = std::numeric_limits<double>::epsilon();
  const cdouble x2 = 0.5 * z;
  const double pimu = kPi * mu;
  const double fact = std::abs(pimu) < 1e-15 ? 1.0 : pimu / std::sin(pimu);
  cdouble d = -std::log(x2);
  cdouble e = mu * d;
  const cdouble fact2 =
      std::abs(e) < 1e-15 ? cdouble(1.0) : std::sinh(e) / e;
  double gam1, gam2, gampl, gammi;
  temme_gammas(mu, gam1, gam2, gampl, gammi);
  cdouble ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  cdouble sum = ff;
  e = std::exp(e);
  cdouble p = 0.5 * e / gampl;
  cdouble q = 0.5 / (e * gammi);
  cdouble c = 1.0;
  d = x2 * x2;
  cdouble sum1 = p;
  const double mu2 = mu * mu;
  for (int i = 1; i <= 1000; ++i) {
    ff = (static_cast<double>(i) * ff + p + q) / (i * i - mu2);
    c *= d / static_cast<double>(i);
    p /= (i - mu);
    q /= (i + mu);
    const cdouble del = c * ff;
    sum += del;
    const cdouble del1 = c * (p - static_cast<double>(i) * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * eps) {
      return {sum, sum1 * 2.0 / z};
    }
  }
  throw NumericalError("bessel_k: series failed to converge");
}

KPair k_continued_fraction(double mu, cdouble z) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double mu2 = mu * mu;
  cdouble b = 2.0 * (1.0 + z);
  cdouble d = 1.0 / b;
  cdouble h = d, delh = d;
  cdouble q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25 - mu2;
  cdouble q = a1, c = a1;
  double a = -a1;
  cdouble s = 1.0 + q * delh;
  for (int i = 2; i <= 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / static_cast<double>(i);
    const cdouble qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const cdouble dels = q * delh;
    s += dels;
    if (std::abs(dels) < std::abs(s) * eps) {
      h = a1 * h;
      const cdouble kmu = std::sqrt(kPi / (2.0 * z)) * std::exp(-z) / s;
      const cdouble kmu1 = kmu * (mu + z + 0.5 - h) / z;
      return {kmu, kmu1};
    }
  }
  throw NumericalError("bessel_k: continued fraction failed to converge");
}

// Large-|z| asymptotic expansion (DLMF 10.40.2), truncated at the smallest
// term; relative error below ~1e-13 for |z| >= 20 and moderate nu.
cdouble k_asymptotic(double nu, cdouble z) {
  const double fnu2 = 4.0 * nu * nu;
  cdouble sum = 1.0, term = 1.0;
  double prev_mag = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= (fnu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * z);
    const double mag = std::abs(term);
    if (mag > prev_mag) break;  // divergent tail reached
    sum += term;
    prev_mag = mag;
    if (mag < 1e-16 * std::abs(sum)) break;
  }
  return std::sqrt(kPi / (2.0 * z)) * std::exp(-z) * sum;
}

cdouble bessel_k_raw(double nu, cdouble z) {
  const double anu = std::abs(nu);
  if (std::abs(z) >= 20.0) return k_asymptotic(anu, z);
  const int nl = static_cast<int>(anu + 0.5);
  const double mu = anu - nl;  // in [-1/2, 1/2]
  KPair kp = std::abs(z) <= 2.0 ? k_series(mu, z) : k_continued_fraction(mu, z);
  cdouble km = kp.kmu, k1 = kp.kmu1;
  double ord = mu;
  for (int i = 0; i < nl; ++i) {
    const cdouble knext = km + (2.0 * (ord + 1.0) / z) * k1;
    km = k1;
    k1 = knext;
    ord += 1.0;
  }
  return km;  // K_{mu + nl} = K_{anu}
}

}  // namespace

cdouble bessel_k(double nu, cdouble z) {
  if (!(z.real() > 0.0)) throw Error("bessel_k: requires Re z > 0");
  if (z.real() > 700.0) return 0.0;  // below double-precision underflow
  // The Temme series has removable singularities at half-integer mu... no:
  // at integer mu the gam1 formula cancels; sidestep by order perturbation
  // and an even average (K is analytic in nu, even in nu at 0).
  const double dist = std::abs(nu - std::round(nu));
  if (dist < 1e-5 && std::abs(z) <= 2.0) {
    const double d = 3e-5;
    const double base = std::round(nu);
    return 0.5 * (bessel_k_raw(base + d, z) + bessel_k_raw(base - d, z));
  }
  return bessel_k_raw(nu, z);
}

// ---------------------------------------------------------------------------
// Gauss hypergeometric function on the negative real axis.
// ---------------------------------------------------------------------------
namespace {

// Plain power series; requires |z| < 1 (used with |z| <= 1/2 after Pfaff).
cdouble hyp_series(cdouble a, cdouble b, cdouble c, double z) {
  cdouble term = 1.0, sum = 1.0;
  for (int k = 0; k < 2000; ++k) {
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
            ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw NumericalError("hyp2f1: series failed to converge");
}

// Pfaff transformation, valid for z <= 0:
// F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), argument in [0, 1/2] when
// z in [-1, 0].
cdouble hyp_pfaff(cdouble a, cdouble b, cdouble c, double z) {
  if (z == 0.0) return 1.0;
  const double w = z / (z - 1.0);
  return std::pow(cdouble(1.0 - z), -a) * hyp_series(a, c - b, c, w);
}

cdouble rec_gamma_product(cdouble num1, cdouble num2, cdouble den1,
                          cdouble den2) {
  // Gamma(num1) Gamma(num2) / (Gamma(den1) Gamma(den2)); zero when a
  // denominator argument hits a pole.
  if (is_nonpositive_integer(den1) || is_nonpositive_integer(den2))
    return 0.0;
  return std::exp(log_gamma(num1) + log_gamma(num2) - log_gamma(den1) -
                  log_gamma(den2));
}

cdouble hyp_impl(cdouble a, cdouble b, cdouble c, double z) {
  if (z > 0.0) throw Error("hyp2f1: requires z <= 0");
  if (is_nonpositive_integer(c))
    throw Error("hyp2f1: c must not be a non-positive integer");
  // Pfaff argument z/(z-1) stays <= 0.9 for z >= -9; the series is still
  // fast there and avoids the integer a-b restriction of the connection
  // formula.
  if (z >= -9.0) return hyp_pfaff(a, b, c, z);
  // z -> 1/z connection formula (DLMF 15.8.2); needs a - b non-integer.
  const cdouble ab = a - b;
  if (std::abs(ab.imag()) < 1e-12 &&
      std::abs(ab.real() - std::round(ab.real())) < 1e-12)
    throw Error("hyp2f1: integer a-b unsupported in the 1/z connection");
  const double w = 1.0 / z;  // in (-1, 0)
  const cdouble term1 =
      rec_gamma_product(c, b - a, b, c - a) * std::pow(cdouble(-z), -a) *
      hyp_pfaff(a, a - c + 1.0, a - b + 1.0, w);
  const cdouble term2 =
      rec_gamma_product(c, a - b, a, c - b) * std::pow(cdouble(-z), -b) *
      hyp_pfaff(b, b - c + 1.0, b - a + 1.0, w);
  return term1 + term2;
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  const cdouble v = hyp_impl(a, b, c, z);
  return v.real();
}

cdouble hyp2f1(cdouble a, cdouble b, double c, double z) {
  return hyp_impl(a, b, cdouble(c), z);
}

}  // namespace specfun
}  // namespace fracwave
