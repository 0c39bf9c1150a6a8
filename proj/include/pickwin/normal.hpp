#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace pickwin::normal {

inline constexpr double log_sqrt_2pi = 0.91893853320467274178032973640562;

inline double log_pdf(double x) { return -0.5 * x * x - log_sqrt_2pi; }

inline double pdf(double x) { return std::exp(log_pdf(x)); }

inline double cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// log Phi(x). Below -8 the asymptotic expansion of erfc is summed directly so
// the result stays finite long after Phi(x) underflows.
inline double log_cdf(double x) {
  if (std::isnan(x)) return x;
  if (x > 5.0) return std::log1p(-0.5 * std::erfc(x / std::numbers::sqrt2));
  if (x >= -8.0) return std::log(0.5 * std::erfc(-x / std::numbers::sqrt2));
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();

  // Phi(x) = phi(x)/|x| * sum_n (-1)^n (2n-1)!! / x^(2n)
  const double inv_x2 = 1.0 / (x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 60; ++n) {
    const double next = -term * (2.0 * n - 1.0) * inv_x2;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * sum) break;
  }
  return log_pdf(x) - std::log(-x) + std::log(sum);
}

// phi(x) / Phi(x), the derivative of log Phi.
inline double inverse_mills(double x) { return std::exp(log_pdf(x) - log_cdf(x)); }

// log(1 - exp(z)) for z <= 0.
inline double log1mexp(double z) {
  if (z >= 0.0) return -std::numeric_limits<double>::infinity();
  return z > -std::numbers::ln2 ? std::log(-std::expm1(z)) : std::log1p(-std::exp(z));
}

}  // namespace pickwin::normal
