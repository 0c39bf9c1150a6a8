#pragma once

// Test-only oracles. Nothing here calls into the library's numerical paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Profile shape f(t) written out independently of the library.
inline double shape(double t, double nu, double tau) {
  return t <= nu ? 1.0 : std::exp(-(t - nu) / tau);
}

/// Integral of the shape over [a, b], split at nu so Simpson sees smooth pieces.
inline double shape_integral(double a, double b, double nu, double tau) {
  auto f = [&](double t) { return shape(t, nu, tau); };
  if (b <= nu || a >= nu) return simpson(f, a, b);
  return simpson(f, a, nu) + simpson(f, nu, b);
}

/// Inverse-Gaussian first-passage law of X(t) = mu t + sigma W(t) to level a:
/// mean a/mu, shape a^2/sigma^2.
inline double inverse_gaussian_cdf(double t, double mu, double sigma_sq, double a) {
  const double lambda = a * a / sigma_sq;
  const double mean = a / mu;
  const double r = std::sqrt(lambda / t);
  return std_normal_cdf(r * (t / mean - 1.0)) +
         std::exp(2.0 * lambda / mean) * std_normal_cdf(-r * (t / mean + 1.0));
}

inline double inverse_gaussian_pdf(double t, double mu, double sigma_sq, double a) {
  return a / std::sqrt(2.0 * std::numbers::pi * sigma_sq * t * t * t) *
         std::exp(-(a - mu * t) * (a - mu * t) / (2.0 * sigma_sq * t));
}

/// Discretized path simulation of the first passage of
/// dX = mu0 f(t) dt + sqrt(sigma0^2 f(t)) dW to level `alpha`, started at v0.
/// Coefficients are frozen at each step's midpoint and crossings between grid
/// points are detected with the Brownian-bridge maximum. Returns, for each of
/// `times`, the fraction of paths that have hit by then.
struct PassageEstimate {
  std::vector<double> fraction;
  std::vector<double> standard_error;
};

inline PassageEstimate simulate_passage(double mu0, double sigma0_sq, double nu, double tau,
                                        double v0, double alpha, const std::vector<double>& times,
                                        int paths, double dt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  double horizon = 0.0;
  for (double t : times) horizon = std::max(horizon, t);
  std::vector<long> hits(times.size(), 0);
  const long steps = std::lround(std::ceil((horizon - v0) / dt - 1e-9));
  for (int p = 0; p < paths; ++p) {
    double x = 0.0;
    double hit_time = INFINITY;
    for (long i = 0; i < steps; ++i) {
      const double t = v0 + static_cast<double>(i) * dt;
      const double h = std::min(dt, horizon - t);
      const double mid = t + 0.5 * h;
      const double f = std::isinf(nu) ? 1.0 : shape(mid, nu, tau);
      const double var = sigma0_sq * f * h;
      const double next = x + mu0 * f * h + std::sqrt(var) * gauss(rng);
      bool crossed = next >= alpha;
      if (!crossed) crossed = unif(rng) < std::exp(-2.0 * (alpha - x) * (alpha - next) / var);
      if (crossed) {
        hit_time = t + h;
        break;
      }
      x = next;
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (hit_time <= times[k] + 1e-9) ++hits[k];
    }
  }
  PassageEstimate out;
  for (long h : hits) {
    const double q = static_cast<double>(h) / paths;
    out.fraction.push_back(q);
    out.standard_error.push_back(std::sqrt(std::max(q * (1.0 - q), 1e-12) / paths));
  }
  return out;
}

}  // namespace oracle
