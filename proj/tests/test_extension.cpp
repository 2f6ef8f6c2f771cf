#include <doctest.h>

#include <cmath>
#include <complex>

#include "fracwave/extension.hpp"

using namespace fracwave;
using cdouble = std::complex<double>;

TEST_CASE("profile tends to the boundary value as y -> 0") {
  const FractionalOrder a(0.7, 2);
  const cdouble s(0.3, 1.2);
  const cdouble F(2.0, -1.0);
  double prev = 1e9;
  for (double y : {1e-2, 1e-3, 1e-4}) {
    const double err = std::abs(profile_eval(a, s, 0.8, F, y) - F);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-4);
  CHECK_THROWS(profile_eval(a, s, 0.8, F, 0.0));
}

TEST_CASE("Neumann extraction recovers the multiplier, including m = 2") {
  const struct { double alpha; int n; double tol; } cases[] = {
      {0.3, 2, 1e-6}, {0.7, 2, 1e-6}, {1.3, 4, 1e-6},
      // m = 2 composes three weighted derivatives; roundoff-limited.
      {2.4, 6, 5e-6}};
  const cdouble s(0.2, 1.5);
  const double xi = 0.9;
  for (const auto& c : cases) {
    ExtensionProfile prof{FractionalOrder(c.alpha, c.n), s, xi, 1.0, {}};
    const cdouble got = neumann_extract_profile(prof);
    const cdouble want = dtn_multiplier(c.alpha, s, xi);
    CHECK(std::abs(got - want) / std::abs(want) < c.tol);
    CHECK(!prof.y_samples.empty());
  }
}

TEST_CASE("extraction rejects unsupported orders") {
  ExtensionProfile integer_alpha{FractionalOrder(1.0, 4), cdouble(0.2, 1.0),
                                 0.5, 1.0, {}};
  CHECK_THROWS(neumann_extract_profile(integer_alpha));
  ExtensionProfile deep{FractionalOrder(3.4, 8), cdouble(0.2, 1.0),
                        0.5, 1.0, {}};
  CHECK_THROWS_AS(neumann_extract_profile(deep), NumericalError);
}

TEST_CASE("extraction scales linearly in the boundary value") {
  const cdouble s(0.2, 1.5);
  ExtensionProfile one{FractionalOrder(0.7, 2), s, 0.9, 1.0, {}};
  ExtensionProfile two{FractionalOrder(0.7, 2), s, 0.9, cdouble(0.0, 2.0), {}};
  const cdouble a = neumann_extract_profile(one);
  const cdouble b = neumann_extract_profile(two);
  CHECK(std::abs(b - cdouble(0.0, 2.0) * a) < 1e-10 * std::abs(b));
}
