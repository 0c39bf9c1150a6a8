#pragma once

// First-passage times of a Brownian motion whose drift and diffusion share one
// time profile:
//
//   mu(t) = mu0 * f(t),  sigma^2(t) = sigma0^2 * f(t),
//   f(t)  = 1 for t <= nu, exp(-(t - nu) / tau) afterwards.
//
// With a proportional profile the process is a constant-coefficient Brownian
// motion run on the clock G(t) = int f, so the passage law is the classical
// inverse-Gaussian one evaluated at M = mu0 * G and S = sigma0^2 * G / 2.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pickwin/normal.hpp"

namespace pickwin {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Per-company drift/diffusion magnitudes and the shared timing parameters.
/// `nu = kInf` gives a constant profile.
struct DriftProfile {
  double mu0 = 0.0;
  double sigma0_sq = 1.0;
  double nu = kInf;
  double tau = 1.0;

  void validate() const {
    if (!(sigma0_sq > 0.0) || std::isnan(mu0) || !(nu >= 0.0) || !(tau > 0.0)) {
      throw std::invalid_argument("invalid drift profile: need sigma0_sq > 0, nu >= 0, tau > 0");
    }
  }

  /// f(t), the common shape of drift and diffusion.
  double shape(double t) const {
    if (t <= nu || std::isinf(tau)) return 1.0;
    return std::exp(-(t - nu) / tau);
  }
};

/// Passage of a gap `alpha` starting at time `v0`, evaluated at time `v`.
struct PassageQuery {
  double v0 = 0.0;
  double v = 0.0;
  double alpha = 1.0;

  void validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("passage level gap must be positive");
    if (!(v0 >= 0.0)) throw std::invalid_argument("passage start time must be nonnegative");
    if (!(v >= v0)) {
      throw std::invalid_argument("evaluation time " + std::to_string(v) +
                                  " precedes start time " + std::to_string(v0));
    }
  }
};

/// G(a, b) = int_a^b f(t) dt with its partials in nu and tau.
struct ClockIntegral {
  double value = 0.0;
  double d_nu = 0.0;
  double d_tau = 0.0;
};

inline ClockIntegral clock_integral(double nu, double tau, double a, double b) {
  if (b <= nu || std::isinf(tau)) return {b - a, 0.0, 0.0};
  if (a <= nu) {
    const double x = (b - nu) / tau;
    const double e = std::exp(-x);
    const double one_minus_e = -std::expm1(-x);
    return {(nu - a) + tau * one_minus_e, one_minus_e, one_minus_e - e * x};
  }
  const double xa = (a - nu) / tau;
  const double xb = (b - nu) / tau;
  const double ea = std::exp(-xa);
  const double eb = std::exp(-xb);
  const double diff = ea * -std::expm1(-(xb - xa));
  return {tau * diff, diff, diff + (ea * xa - eb * xb)};
}

/// G(v0, infinity); infinite when the profile never decays.
inline double clock_integral_to_infinity(double nu, double tau, double v0) {
  if (std::isinf(nu) || std::isinf(tau)) return kInf;
  if (v0 <= nu) return (nu - v0) + tau;
  return tau * std::exp(-(v0 - nu) / tau);
}

struct PassageMoments {
  double M = 0.0;  // integrated drift
  double S = 0.0;  // half the integrated diffusion
};

inline PassageMoments profile_integrals(const DriftProfile& profile, double v0, double v) {
  if (!(v >= v0)) throw std::invalid_argument("profile_integrals: v < v0");
  const double g = clock_integral(profile.nu, profile.tau, v0, v).value;
  return {profile.mu0 * g, 0.5 * profile.sigma0_sq * g};
}

namespace detail {

// F0 written in terms of (M, S, alpha). The reflected term exp(M alpha / S) *
// Phi(-(M + alpha) / sqrt(2S)) is formed in log space.
inline double passage_cdf(double M, double S, double alpha) {
  if (!(S > 0.0)) return 0.0;
  const double s = std::sqrt(2.0 * S);
  const double direct = normal::cdf((M - alpha) / s);
  const double reflected = std::exp(M * alpha / S + normal::log_cdf(-(M + alpha) / s));
  const double f = direct + reflected;
  return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

struct SurvivalTerm {
  double value = 0.0;  // log(1 - F0)
  double d_M = 0.0;
  double d_S = 0.0;
};

// log(1 - F0) = log Phi(a) + log(1 - exp(c + log Phi(w) - log Phi(a)))
// with a = (alpha - M)/s, w = -(alpha + M)/s, c = M alpha / S.
inline SurvivalTerm log_passage_survival(double M, double S, double alpha) {
  if (!(S > 0.0)) return {};
  const double s = std::sqrt(2.0 * S);
  const double a = (alpha - M) / s;
  const double w = -(alpha + M) / s;
  const double log_direct = normal::log_cdf(a);
  const double log_reflected = M * alpha / S + normal::log_cdf(w);
  const double value = log_direct + normal::log1mexp(log_reflected - log_direct);
  if (!std::isfinite(value)) return {value, 0.0, 0.0};
  const double reflected_ratio = std::exp(log_reflected - value);
  const double density_ratio = std::exp(normal::log_pdf(a) - value);
  const double c = M * alpha / S;
  return {value, -(alpha / S) * reflected_ratio,
          -(alpha / (s * S)) * density_ratio + (c / S) * reflected_ratio};
}

}  // namespace detail

/// log f0(v; v0, alpha). Returns -inf when v == v0.
inline double fpt_log_pdf(const PassageQuery& q, const DriftProfile& profile) {
  q.validate();
  profile.validate();
  const auto [M, S] = profile_integrals(profile, q.v0, q.v);
  if (!(S > 0.0)) return -kInf;
  const double log_sigma_sq = std::log(profile.sigma0_sq) + std::log(profile.shape(q.v));
  const double gap = q.alpha - M;
  return log_sigma_sq + std::log(q.alpha) - 0.5 * std::log(16.0 * std::numbers::pi) -
         1.5 * std::log(S) - gap * gap / (4.0 * S);
}

inline double fpt_pdf(const PassageQuery& q, const DriftProfile& profile) {
  return std::exp(fpt_log_pdf(q, profile));
}

inline double fpt_cdf(const PassageQuery& q, const DriftProfile& profile) {
  q.validate();
  profile.validate();
  const auto [M, S] = profile_integrals(profile, q.v0, q.v);
  return detail::passage_cdf(M, S, q.alpha);
}

/// log(1 - F0), finite wherever the survival probability is representable in
/// log space.
inline double fpt_log_survival(const PassageQuery& q, const DriftProfile& profile) {
  q.validate();
  profile.validate();
  const auto [M, S] = profile_integrals(profile, q.v0, q.v);
  return detail::log_passage_survival(M, S, q.alpha).value;
}

/// Probability of ever reaching `alpha` above the level held at `v0`.
inline double fpt_cdf_limit(const DriftProfile& profile, double v0, double alpha) {
  profile.validate();
  if (!(alpha > 0.0)) throw std::invalid_argument("fpt_cdf_limit: alpha must be positive");
  if (!(v0 >= 0.0)) throw std::invalid_argument("fpt_cdf_limit: v0 must be nonnegative");
  if (std::isinf(alpha)) return 0.0;
  const double g = clock_integral_to_infinity(profile.nu, profile.tau, v0);
  if (std::isinf(g)) {
    if (profile.mu0 > 0.0) return 1.0;
    throw std::domain_error("fpt_cdf_limit: non-decaying profile with nonpositive drift");
  }
  return detail::passage_cdf(profile.mu0 * g, 0.5 * profile.sigma0_sq * g, alpha);
}

/// A log-probability term together with its partials in the profile fields.
struct ProfileGradientTerm {
  double value = 0.0;
  double d_mu0 = 0.0;
  double d_sigma0_sq = 0.0;
  double d_nu = 0.0;
  double d_tau = 0.0;
};

inline ProfileGradientTerm fpt_log_pdf_with_gradient(const PassageQuery& q,
                                                     const DriftProfile& p) {
  const ClockIntegral g = clock_integral(p.nu, p.tau, q.v0, q.v);
  const double M = p.mu0 * g.value;
  const double S = 0.5 * p.sigma0_sq * g.value;
  if (!(S > 0.0)) return {-kInf, 0.0, 0.0, 0.0, 0.0};

  double log_shape = 0.0;
  double log_shape_d_nu = 0.0;
  double log_shape_d_tau = 0.0;
  if (q.v > p.nu && std::isfinite(p.tau)) {
    log_shape = -(q.v - p.nu) / p.tau;
    log_shape_d_nu = 1.0 / p.tau;
    log_shape_d_tau = (q.v - p.nu) / (p.tau * p.tau);
  }
  const double gap = q.alpha - M;
  const double value = std::log(p.sigma0_sq) + log_shape + std::log(q.alpha) -
                       0.5 * std::log(16.0 * std::numbers::pi) - 1.5 * std::log(S) -
                       gap * gap / (4.0 * S);
  const double d_M = gap / (2.0 * S);
  const double d_S = -1.5 / S + gap * gap / (4.0 * S * S);
  const double d_g = d_M * p.mu0 + d_S * 0.5 * p.sigma0_sq;
  return {value, d_M * g.value, 1.0 / p.sigma0_sq + d_S * 0.5 * g.value,
          d_g * g.d_nu + log_shape_d_nu, d_g * g.d_tau + log_shape_d_tau};
}

inline ProfileGradientTerm fpt_log_survival_with_gradient(const PassageQuery& q,
                                                          const DriftProfile& p) {
  const ClockIntegral g = clock_integral(p.nu, p.tau, q.v0, q.v);
  const double M = p.mu0 * g.value;
  const double S = 0.5 * p.sigma0_sq * g.value;
  const auto term = detail::log_passage_survival(M, S, q.alpha);
  const double d_g = term.d_M * p.mu0 + term.d_S * 0.5 * p.sigma0_sq;
  return {term.value, term.d_M * g.value, term.d_S * 0.5 * g.value, d_g * g.d_nu,
          d_g * g.d_tau};
}

}  // namespace pickwin
