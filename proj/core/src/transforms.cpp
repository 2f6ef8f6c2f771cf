#include "fracwave/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "fracwave/errors.hpp"
#include "fracwave/threading.hpp"

namespace fracwave {
namespace {

// The FFTW planner has global state and is not thread-safe; execution of a
// created plan is. Plans use FFTW_ESTIMATE so planning never touches data.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run_fft(const SpacetimeGrid& g, std::complex<double>* data, int sign) {
  int dims[3] = {g.nt, 0, 0};
  int rank = 1;
  for (int a = 0; a < g.spatial_rank(); ++a) dims[rank++] = g.nx[a];
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(rank, dims, buf, buf, sign, FFTW_ESTIMATE);
  }
  if (!plan) throw Error("transforms: FFTW plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

SpectralField forward_of(const ScalarField& field, const double* damp) {
  const SpacetimeGrid& g = field.grid;
  SpectralField spec(g);
  const std::size_t total = g.size();
  const std::size_t per_slice = total / static_cast<std::size_t>(g.nt);
  for (int it = 0; it < g.nt; ++it) {
    const double w = damp ? damp[it] : 1.0;
    const std::size_t off = static_cast<std::size_t>(it) * per_slice;
    for (std::size_t j = 0; j < per_slice; ++j)
      spec.coeffs[off + j] = w * field.values[off + j];
  }
  run_fft(g, spec.coeffs.data(), FFTW_FORWARD);
  const double scale = g.cell_volume();
  for (auto& c : spec.coeffs) c *= scale;
  return spec;
}

}  // namespace

SpectralField dft_forward(const ScalarField& field) {
  field.check_finite();
  return forward_of(field, nullptr);
}

SpectralField laplace_forward(const ScalarField& field, double eps) {
  if (!(eps > 0.0)) throw Error("laplace_forward: eps must be > 0");
  field.check_finite();
  const SpacetimeGrid& g = field.grid;
  if (eps * g.nt * g.dt > 40.0)
    throw Error("laplace_forward: eps too large, e^{-eps t} underflows");
  std::vector<double> damp(g.nt);
  for (int it = 0; it < g.nt; ++it)
    damp[it] = std::exp(-eps * (g.time_at(it) - g.t0));
  return forward_of(field, damp.data());
}

std::vector<std::complex<double>> dft_inverse_complex(const SpectralField& spec) {
  const SpacetimeGrid& g = spec.grid;
  std::vector<std::complex<double>> out(spec.coeffs);
  run_fft(g, out.data(), FFTW_BACKWARD);
  const double scale = 1.0 / (g.cell_volume() * static_cast<double>(g.size()));
  for (auto& c : out) c *= scale;
  return out;
}

ScalarField dft_inverse(const SpectralField& spec) {
  auto cx = dft_inverse_complex(spec);
  ScalarField out(spec.grid);
  double re2 = 0.0, im2 = 0.0;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    out.values[i] = cx[i].real();
    re2 += cx[i].real() * cx[i].real();
    im2 += cx[i].imag() * cx[i].imag();
  }
  if (im2 > 1e-20 * re2 && im2 > 1e-280)
    throw Error("dft_inverse: input not Hermitian-symmetric for a real field");
  return out;
}

std::vector<std::complex<double>> apply_multiplier_complex(
    const ScalarField& field, const FrequencyMultiplier& mult) {
  const SpacetimeGrid& g = field.grid;
  SpectralField spec = dft_forward(field);
  const int n1 = g.nx[0];
  const int n2 = g.spatial_rank() == 2 ? g.nx[1] : 1;
  parallel_for(static_cast<std::size_t>(g.nt), [&](std::size_t b, std::size_t e) {
    for (std::size_t it = b; it < e; ++it) {
      const double tau = g.tau_at(static_cast<int>(it));
      for (int j = 0; j < n1; ++j) {
        const double xi1 = g.xi_at(0, j);
        for (int k = 0; k < n2; ++k) {
          double xn;
          if (g.spatial_rank() == 2) {
            const double xi2 = g.xi_at(1, k);
            xn = std::sqrt(xi1 * xi1 + xi2 * xi2);
          } else {
            xn = std::abs(xi1);
          }
          const std::size_t idx = (it * n1 + j) * n2 + k;
          spec.coeffs[idx] *= mult(tau, xn);
        }
      }
    }
  });
  return dft_inverse_complex(spec);
}

void fft_inplace_1d(std::vector<std::complex<double>>& data, int sign) {
  if (data.empty()) throw Error("fft_inplace_1d: empty sequence");
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (!plan) throw Error("transforms: FFTW plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

ScalarField apply_multiplier(const ScalarField& field,
                             const FrequencyMultiplier& mult) {
  auto cx = apply_multiplier_complex(field, mult);
  ScalarField out(field.grid);
  double re2 = 0.0, im2 = 0.0;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    out.values[i] = cx[i].real();
    re2 += cx[i].real() * cx[i].real();
    im2 += cx[i].imag() * cx[i].imag();
  }
  if (im2 > 1e-20 * re2 && im2 > 1e-280)
    throw Error("apply_multiplier: symbol produced a non-real field");
  return out;
}

}  // namespace fracwave
