#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracwave/interp.hpp"

using namespace fracwave;

namespace {

// Band-limited trigonometric field: spectral operations are exact on it.
ScalarField trig_field(int n = 32) {
  SpacetimeGrid g(n, {n}, 16.0 / n, {16.0 / n}, -8.0);
  ScalarField f(g);
  const double k1 = 2.0 * std::numbers::pi * 3.0 / 16.0;
  const double k2 = 2.0 * std::numbers::pi * 2.0 / 16.0;
  for (int it = 0; it < n; ++it)
    for (int j = 0; j < n; ++j)
      f.at(it, j) =
          std::cos(k1 * g.time_at(it)) * std::sin(k2 * g.x_at(0, j)) +
          0.5 * std::cos(k2 * g.time_at(it));
  return f;
}

}  // namespace

TEST_CASE("spectral_upsample is exact on band-limited data") {
  ScalarField f = trig_field();
  ScalarField up = spectral_upsample(f, 4);
  CHECK(up.grid.nt == 4 * f.grid.nt);
  const double k1 = 2.0 * std::numbers::pi * 3.0 / 16.0;
  const double k2 = 2.0 * std::numbers::pi * 2.0 / 16.0;
  double worst = 0.0;
  for (int it = 0; it < up.grid.nt; ++it)
    for (int j = 0; j < up.grid.nx[0]; ++j) {
      const double want =
          std::cos(k1 * up.grid.time_at(it)) *
              std::sin(k2 * up.grid.x_at(0, j)) +
          0.5 * std::cos(k2 * up.grid.time_at(it));
      worst = std::max(worst, std::abs(up.at(it, j) - want));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("spectral_derivative matches the analytic derivative") {
  ScalarField f = trig_field();
  ScalarField dt = spectral_derivative(f, 0);
  ScalarField dx = spectral_derivative(f, 1);
  const double k1 = 2.0 * std::numbers::pi * 3.0 / 16.0;
  const double k2 = 2.0 * std::numbers::pi * 2.0 / 16.0;
  double worst = 0.0;
  for (int it = 0; it < f.grid.nt; ++it)
    for (int j = 0; j < f.grid.nx[0]; ++j) {
      const double t = f.grid.time_at(it), x = f.grid.x_at(0, j);
      worst = std::max(
          worst, std::abs(dt.at(it, j) - (-k1 * std::sin(k1 * t) *
                                              std::sin(k2 * x) -
                                          0.5 * k2 * std::sin(k2 * t))));
      worst = std::max(worst, std::abs(dx.at(it, j) - k2 * std::cos(k1 * t) *
                                                          std::cos(k2 * x)));
    }
  CHECK(worst < 1e-11);
}

TEST_CASE("FieldSampler reproduces grid values and vanishes outside") {
  ScalarField f = trig_field();
  FieldSampler s(f);
  double worst = 0.0;
  for (int it = 4; it < f.grid.nt - 4; ++it)
    for (int j = 4; j < f.grid.nx[0] - 4; ++j)
      worst = std::max(worst, std::abs(s(f.grid.time_at(it),
                                         f.grid.x_at(0, j)) -
                                       f.at(it, j)));
  CHECK(worst < 1e-10);
  CHECK(s(100.0, 0.0) == 0.0);
  CHECK(s(0.0, -100.0) == 0.0);
}
