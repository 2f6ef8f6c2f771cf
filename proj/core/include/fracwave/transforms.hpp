#pragma once

#include <complex>
#include <functional>

#include "fracwave/grid.hpp"

namespace fracwave {

// Forward transform of a real field over all axes (time and space).
// Normalization: coeffs = (raw DFT sum) * dt * prod(dx), so coefficients
// approximate the continuous Fourier integral over the window. Frequencies
// follow SpacetimeGrid::frequency (angular, wrap-around ordering).
SpectralField dft_forward(const ScalarField& field);

// Inverse of dft_forward. When a real field is requested the imaginary
// residue must stay below 1e-10 of the output norm, otherwise the input was
// not Hermitian-symmetric and an Error is thrown.
ScalarField dft_inverse(const SpectralField& spec);

// Complex-valued inverse (no Hermitian requirement); used internally.
std::vector<std::complex<double>> dft_inverse_complex(const SpectralField& spec);

// Discrete Laplace transform along t realized as the Fourier transform of
// e^{-eps (t - t0)} * field; s = eps + i*tau on the Bromwich line.
SpectralField laplace_forward(const ScalarField& field, double eps);

// Applies a frequency multiplier m(tau, |xi|) diagonally in Fourier space and
// returns the real part; throws if the imaginary residue exceeds 1e-10 of the
// output norm (symbol not conjugate-symmetric for this data).
using FrequencyMultiplier =
    std::function<std::complex<double>(double tau, double xi_norm)>;
ScalarField apply_multiplier(const ScalarField& field,
                             const FrequencyMultiplier& mult);

// As above but keeps the complex field (no symmetry requirement).
std::vector<std::complex<double>> apply_multiplier_complex(
    const ScalarField& field, const FrequencyMultiplier& mult);

// In-place unnormalized 1D DFT of a complex sequence; sign = -1 forward,
// +1 backward (FFTW convention). Shares the library's planner lock.
void fft_inplace_1d(std::vector<std::complex<double>>& data, int sign);

}  // namespace fracwave
