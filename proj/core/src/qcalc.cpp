#include "fracwave/qcalc.hpp"

#include <cmath>

#include "fracwave/errors.hpp"

namespace fracwave {
namespace {

void check_q(double q) {
  if (!(q > 0.0) || q == 1.0) throw Error("qcalc: q must be positive and != 1");
}

double q_number(int m, double q) { return (1.0 - std::pow(q, m)) / (1.0 - q); }

}  // namespace

double q_binomial(int l, int k, double q) {
  check_q(q);
  if (k < 0 || k > l) throw Error("q_binomial: k out of range");
  double r = 1.0;
  for (int i = 1; i <= l; ++i) r *= q_number(i, q);
  for (int i = 1; i <= k; ++i) r /= q_number(i, q);
  for (int i = 1; i <= l - k; ++i) r /= q_number(i, q);
  return r;
}

double q_c_coefficient(int l, int k, double q) {
  return std::pow(q, k * (0.5 * (k + 1) - l)) * q_binomial(l, k, q);
}

double a_coefficient(int l, double mu, double q) {
  double sum = 0.0;
  for (int k = 0; k <= l; ++k) {
    const double term = std::pow(q, k * mu) * q_c_coefficient(l, k, q);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

double a_coefficient_product(int l, double mu, double q) {
  check_q(q);
  double p = 1.0;
  for (int k = 0; k < l; ++k) p *= 1.0 - std::pow(q, mu + 1.0 - l + k);
  return p;
}

QScheme::QScheme(const FractionalOrder& alpha_, double q_, int l_)
    : q(q_), alpha(alpha_) {
  check_q(q);
  alpha.require_non_half_integer("hypersingular");
  l = l_ > 0 ? l_ : static_cast<int>(std::ceil(2.0 * alpha.alpha)) + 1;
  if (!(alpha.alpha < 0.5 * l))
    throw Error("QScheme: requires alpha < l/2");
  l_star = (alpha.n + l - 1) / 2;
  for (int j = 0; j <= l_star; ++j) c_j.push_back(q_c_coefficient(l_star, j, q));
  for (int k = 0; k <= l; ++k) c_k.push_back(q_c_coefficient(l, k, q));
  denom_s = a_coefficient(l_star, 0.5 * alpha.n - 1.0 + alpha.alpha, q);
  denom_y = a_coefficient(l, 2.0 * alpha.alpha, q);
  if (std::abs(denom_s) < 1e-14 || std::abs(denom_y) < 1e-14)
    throw Error("QScheme: vanishing normalization (alpha too close to a "
                "half-integer)");
}

}  // namespace fracwave
