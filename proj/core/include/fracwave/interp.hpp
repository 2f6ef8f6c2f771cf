#pragma once

#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

// Spectral (zero-padded FFT) upsampling of a 2D (t,x) field by an integer
// factor per axis. Returns the field on the refined grid.
ScalarField spectral_upsample(const ScalarField& field, int factor);

// Spectral derivative along axis 0 (t) or 1 (x) of a 2D field.
ScalarField spectral_derivative(const ScalarField& field, int axis);

// Smooth off-grid sampler for 2D (t,x) fields: spectral upsample (default
// 8x) followed by C^2 cubic B-spline interpolation on the fine grid.
// Evaluations outside the grid window return 0 (fields are compactly
// supported by contract). Thread-safe after construction.
class FieldSampler {
 public:
  explicit FieldSampler(const ScalarField& field, int factor = 8);

  double operator()(double t, double x) const;

 private:
  int nt_ = 0, nx_ = 0;
  double dt_ = 0.0, dx_ = 0.0;
  double t0_ = 0.0, x0_ = 0.0;
  double t_hi_ = 0.0, x_hi_ = 0.0;
  std::vector<double> coef_;  // B-spline coefficients, row-major (t slow)
};

}  // namespace fracwave
