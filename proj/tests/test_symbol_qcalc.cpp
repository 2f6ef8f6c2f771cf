#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "fracwave/extension.hpp"
#include "fracwave/qcalc.hpp"
#include "fracwave/symbol.hpp"

using namespace fracwave;
using cdouble = std::complex<double>;

TEST_CASE("sigma: regions, integer orders, continuity at the cone") {
  CHECK(sigma(0.4, 1.0, 2.0).imag() == 0.0);                // spacelike
  CHECK(sigma(0.4, 2.0, 1.0).imag() != 0.0);                // timelike
  CHECK(sigma(1.0, 2.0, 1.0) == cdouble(-3.0));             // exact integer
  CHECK(sigma(2.0, 2.0, 1.0) == cdouble(9.0));
  CHECK(sigma(0.4, 1.5, 1.5) == cdouble(0.0));              // light cone
  // Conjugate symmetry under tau -> -tau.
  CHECK(sigma(0.4, 2.0, 1.0) == std::conj(sigma(0.4, -2.0, 1.0)));
}

TEST_CASE("sigma_eps equals the DtN multiplier under s = eps + i tau") {
  std::mt19937_64 gen(99);
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1p-53; };
  for (int i = 0; i < 100; ++i) {
    const double tau = -4.0 + 8.0 * unit();
    const double xi = 4.0 * unit();
    const double eps = 0.01 + unit();
    const double alpha = 0.1 + 2.0 * unit();
    const cdouble a = sigma_eps(alpha, tau, xi, eps);
    const cdouble b = dtn_multiplier(alpha, cdouble(eps, tau), xi);
    CHECK(std::abs(a - b) <= 1e-14 * std::abs(b));
  }
}

TEST_CASE("sigma_eps converges to sigma") {
  const double alpha = 0.4, tau = 2.0, xi = 1.0;
  const cdouble exact = sigma(alpha, tau, xi);
  double prev = 1e9;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const double err = std::abs(sigma_eps(alpha, tau, xi, eps) - exact);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("q-binomials and coefficient tables") {
  CHECK(q_binomial(4, 2, 2.0) == doctest::Approx(35.0).epsilon(1e-14));
  CHECK(q_binomial(3, 0, 2.0) == doctest::Approx(1.0));
  CHECK(q_binomial(3, 3, 2.0) == doctest::Approx(1.0));
  // Sum vs product form of A^l_mu.
  for (double mu : {0.8, 2.3})
    CHECK(a_coefficient(3, mu, 2.0) ==
          doctest::Approx(a_coefficient_product(3, mu, 2.0)).epsilon(1e-13));
}

TEST_CASE("QScheme construction and rejection") {
  const QScheme s(FractionalOrder(0.4), 2.0);
  CHECK(s.l == 2);       // ceil(0.8) + 1
  CHECK(s.l_star == 1);  // (n + l - 1) / 2 with n = 2
  CHECK(s.c_k.size() == 3);
  CHECK_THROWS(QScheme(FractionalOrder(0.5), 2.0));   // half-integer
  CHECK_THROWS(QScheme(FractionalOrder(0.4), 1.0));   // q = 1
  CHECK_THROWS(QScheme(FractionalOrder(0.4), -2.0));  // q <= 0
}

TEST_CASE("FractionalOrder decomposition") {
  const FractionalOrder a(2.4, 6);
  CHECK(a.m == 2);
  CHECK(a.alpha0 == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(a.mu == doctest::Approx(2.4 * 2.4 - 9.0).epsilon(1e-14));
  CHECK_THROWS(FractionalOrder(1.2, 2));  // alpha >= n/2
  CHECK_THROWS(FractionalOrder(-0.1, 2));
}
