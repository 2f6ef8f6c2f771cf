#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "fracwave/grid.hpp"
#include "fracwave/io.hpp"
#include "fracwave/transforms.hpp"

using namespace fracwave;

namespace {

ScalarField sample_field() {
  SpacetimeGrid g(16, {8}, 0.5, {0.25}, -4.0);
  ScalarField f(g);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = std::sin(0.1 * static_cast<double>(i)) + 0.01 * i;
  return f;
}

}  // namespace

TEST_CASE("grid conventions") {
  SpacetimeGrid g(8, {8}, 0.5, {0.25}, -2.0);
  CHECK(g.time_at(0) == -2.0);
  CHECK(g.x_at(0, 4) == 0.0);  // origin at index nx/2
  CHECK(g.tau_at(0) == 0.0);
  // Wrap-around ordering: k = 5 on an 8-sample axis is frequency -3.
  CHECK(g.tau_at(5) ==
        doctest::Approx(2.0 * std::numbers::pi * -3 / (8 * 0.5)));
  CHECK(g.cell_volume() == doctest::Approx(0.125));
}

TEST_CASE("dft roundtrip and normalization") {
  ScalarField f = sample_field();
  SpectralField spec = dft_forward(f);
  // Zero mode = integral of f over the window.
  double integral = 0.0;
  for (double v : f.values) integral += v;
  integral *= f.grid.cell_volume();
  CHECK(spec.coeffs[0].real() == doctest::Approx(integral).epsilon(1e-12));
  ScalarField back = dft_inverse(spec);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    CHECK(back.values[i] == doctest::Approx(f.values[i]).epsilon(1e-12));
}

TEST_CASE("laplace_forward guards") {
  ScalarField f = sample_field();
  CHECK_THROWS_AS(laplace_forward(f, -1.0), Error);
  CHECK_THROWS_AS(laplace_forward(f, 100.0), Error);  // underflow guard
}

TEST_CASE("non-Hermitian inverse is rejected") {
  ScalarField f = sample_field();
  SpectralField spec = dft_forward(f);
  spec.coeffs[1] += std::complex<double>(0.0, 1.0);
  CHECK_THROWS_AS(dft_inverse(spec), Error);
}

TEST_CASE("fwf and csv roundtrip") {
  ScalarField f = sample_field();
  const char* fwf = "roundtrip_test.fwf";
  const char* csv = "roundtrip_test.csv";
  write_field(fwf, f);
  write_field(csv, f);
  for (const char* path : {fwf, csv}) {
    ScalarField r = read_field(path);
    REQUIRE(r.grid == f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i)
      CHECK(r.values[i] == doctest::Approx(f.values[i]).epsilon(1e-14));
  }
  std::remove(fwf);
  std::remove(csv);
}
