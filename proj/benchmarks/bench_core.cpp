#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "fracwave/grid.hpp"
#include "fracwave/hypersingular.hpp"
#include "fracwave/specfun.hpp"
#include "fracwave/symbol.hpp"
#include "fracwave/transforms.hpp"

namespace {

fracwave::ScalarField bump_field(int n) {
  fracwave::SpacetimeGrid g(n, {n}, 16.0 / n, {16.0 / n}, -8.0);
  fracwave::ScalarField f(g);
  for (int it = 0; it < n; ++it)
    for (int j = 0; j < n; ++j) {
      const double t = g.time_at(it), x = g.x_at(0, j);
      f.at(it, j) = std::exp(-(t * t + x * x) / 0.25);
    }
  return f;
}

void BM_dft_roundtrip(benchmark::State& state) {
  fracwave::ScalarField f = bump_field(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto spec = fracwave::dft_forward(f);
    auto back = fracwave::dft_inverse(spec);
    benchmark::DoNotOptimize(back.values.data());
  }
}
BENCHMARK(BM_dft_roundtrip)->Arg(64)->Arg(128)->Arg(256);

void BM_sigma_apply(benchmark::State& state) {
  fracwave::ScalarField f = bump_field(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = fracwave::apply_box_alpha_spectral(f, 0.4);
    benchmark::DoNotOptimize(out.values.data());
  }
}
BENCHMARK(BM_sigma_apply)->Arg(64)->Arg(128);

void BM_bessel_k(benchmark::State& state) {
  const std::complex<double> z(1.5, 0.5);
  double nu = 0.3;
  for (auto _ : state) {
    auto v = fracwave::specfun::bessel_k(nu, z);
    benchmark::DoNotOptimize(v);
    nu = nu < 2.0 ? nu + 1e-6 : 0.3;  // defeat caching without changing range
  }
}
BENCHMARK(BM_bessel_k);

void BM_difference_operator(benchmark::State& state) {
  fracwave::ScalarField f = bump_field(128);
  const fracwave::FieldSampler sampler(f);
  const fracwave::QScheme scheme(fracwave::FractionalOrder(0.4), 2.0);
  for (auto _ : state) {
    double out = fracwave::difference_operator(sampler, scheme, 0.0, 0.0,
                                               1.0, 0.5);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_difference_operator);

}  // namespace

BENCHMARK_MAIN();
