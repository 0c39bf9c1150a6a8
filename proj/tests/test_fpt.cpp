#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pickwin/fpt.hpp"

using pickwin::DriftProfile;
using pickwin::PassageQuery;
using pickwin::kInf;

namespace {

DriftProfile constant(double mu0, double sigma0_sq) { return {mu0, sigma0_sq, kInf, 1.0}; }

DriftProfile random_profile(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mu(-3.0, 5.0), var(0.2, 6.0), nu(0.0, 6.0), tau(0.5, 6.0);
  return {mu(rng), var(rng), nu(rng), tau(rng)};
}

}  // namespace

TEST(ProfileIntegrals, ConstantPhase) {
  const auto [M, S] = pickwin::profile_integrals(constant(1.0, 1.0), 0.0, 2.0);
  EXPECT_DOUBLE_EQ(M, 2.0);
  EXPECT_DOUBLE_EQ(S, 1.0);
}

TEST(ProfileIntegrals, EmptyInterval) {
  const auto [M, S] = pickwin::profile_integrals({1.0, 4.0, 1.0, 2.0}, 1.7, 1.7);
  EXPECT_EQ(M, 0.0);
  EXPECT_EQ(S, 0.0);
}

TEST(ProfileIntegrals, DecayingProfileMatchesQuadrature) {
  const DriftProfile p{1.0, 4.0, 1.0, 2.0};
  const auto [M, S] = pickwin::profile_integrals(p, 0.0, 3.0);
  const double g = oracle::shape_integral(0.0, 3.0, 1.0, 2.0);
  EXPECT_NEAR(M, g, 1e-10);
  EXPECT_NEAR(M, 1.0 + 2.0 * (1.0 - std::exp(-1.0)), 1e-12);
  EXPECT_NEAR(M, 2.2642, 1e-4);
  EXPECT_NEAR(S, 2.0 * M, 1e-12);
}

TEST(ProfileIntegrals, RejectsReversedInterval) {
  EXPECT_THROW(pickwin::profile_integrals(constant(1, 1), 2.0, 1.0), std::invalid_argument);
}

TEST(ClockIntegral, EachBranchMatchesQuadrature) {
  const double nu = 2.0, tau = 1.5;
  // both below nu, straddling nu, both above nu, and the exact boundaries
  const double cases[][2] = {{0.0, 1.0}, {0.5, 2.0}, {1.0, 4.0}, {2.0, 3.0}, {2.5, 7.0}, {0.0, 2.0}};
  for (const auto& c : cases) {
    const auto g = pickwin::clock_integral(nu, tau, c[0], c[1]);
    EXPECT_NEAR(g.value, oracle::shape_integral(c[0], c[1], nu, tau), 1e-10) << c[0] << "," << c[1];
  }
}

TEST(ClockIntegral, ContinuousAcrossBranchBoundaries) {
  const double nu = 3.0, tau = 2.0, eps = 1e-12;
  for (double a : {0.0, 1.0}) {
    const double below = pickwin::clock_integral(nu, tau, a, nu - eps).value;
    const double above = pickwin::clock_integral(nu, tau, a, nu + eps).value;
    EXPECT_NEAR(below, above, 1e-10);
  }
  const double left = pickwin::clock_integral(nu, tau, nu - eps, 5.0).value;
  const double right = pickwin::clock_integral(nu, tau, nu + eps, 5.0).value;
  EXPECT_NEAR(left, right, 1e-10);
}

TEST(ClockIntegral, PartialsMatchFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 8.0), t(0.5, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    const double nu = u(rng), tau = t(rng), h = 1e-6;
    if (std::abs(a - nu) < 1e-3 || std::abs(b - nu) < 1e-3) continue;
    const auto g = pickwin::clock_integral(nu, tau, a, b);
    const double fd_nu = (pickwin::clock_integral(nu + h, tau, a, b).value -
                          pickwin::clock_integral(nu - h, tau, a, b).value) / (2 * h);
    const double fd_tau = (pickwin::clock_integral(nu, tau + h, a, b).value -
                           pickwin::clock_integral(nu, tau - h, a, b).value) / (2 * h);
    EXPECT_NEAR(g.d_nu, fd_nu, 1e-7);
    EXPECT_NEAR(g.d_tau, fd_tau, 1e-7);
  }
}

TEST(FptPdf, ConstantProfileValue) {
  const double f = pickwin::fpt_pdf({0.0, 1.0, 1.0}, constant(1.0, 1.0));
  // M = 1, S = 1/2, so 16 pi S^3 = 2 pi.
  EXPECT_NEAR(f, 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(f, 0.3989, 1e-4);
  EXPECT_NEAR(f, oracle::inverse_gaussian_pdf(1.0, 1.0, 1.0, 1.0), 1e-14);
}

TEST(FptPdf, VanishesAtStart) {
  const DriftProfile p{2.0, 3.0, 4.0, 1.0};
  EXPECT_EQ(pickwin::fpt_pdf({1.0, 1.0, 1.0}, p), 0.0);
  EXPECT_LT(pickwin::fpt_pdf({1.0, 1.0 + 1e-6, 1.0}, p), 1e-100);
}

TEST(FptPdf, IntegratesToInfiniteHorizonLimit) {
  const DriftProfile p{0.8, 2.0, 2.0, 1.5};
  const double v0 = 0.5, alpha = 2.0;
  auto density = [&](double v) { return v <= v0 ? 0.0 : pickwin::fpt_pdf({v0, v, alpha}, p); };
  const double mass = oracle::simpson(density, v0, p.nu, 20000) +
                      oracle::simpson(density, p.nu, 80.0, 200000);
  EXPECT_NEAR(mass, pickwin::fpt_cdf_limit(p, v0, alpha), 1e-6);
}

TEST(FptCdf, ZeroElapsedTime) {
  EXPECT_EQ(pickwin::fpt_cdf({2.0, 2.0, 1.0}, {1.0, 1.0, 3.0, 1.0}), 0.0);
  EXPECT_EQ(pickwin::fpt_log_survival({2.0, 2.0, 1.0}, {1.0, 1.0, 3.0, 1.0}), 0.0);
}

TEST(FptCdf, ConstantProfileValue) {
  const double F = pickwin::fpt_cdf({0.0, 1.0, 1.0}, constant(1.0, 1.0));
  EXPECT_NEAR(F, 0.5 + std::exp(2.0) * oracle::std_normal_cdf(-2.0), 1e-14);
  EXPECT_NEAR(F, 0.6681, 1e-4);
}

TEST(FptCdf, DistantLevel) {
  EXPECT_LT(pickwin::fpt_cdf({0.0, 1.0, 1e3}, constant(1.0, 1.0)), 1e-12);
}

TEST(FptCdf, RejectsInvalidQuery) {
  EXPECT_THROW(pickwin::fpt_cdf({1.0, 0.5, 1.0}, constant(1, 1)), std::invalid_argument);
  EXPECT_THROW(pickwin::fpt_cdf({0.0, 1.0, 0.0}, constant(1, 1)), std::invalid_argument);
  EXPECT_THROW(pickwin::fpt_cdf({0.0, 1.0, 1.0}, constant(1, 0)), std::invalid_argument);
}

TEST(FptCdf, ReflectedTermDoesNotOverflowForSmallDiffusion) {
  // M alpha / S is about 2e6 here; the naive product would be inf * 0.
  const double F = pickwin::fpt_cdf({0.0, 1.0, 1.0}, constant(2.0, 1e-6));
  EXPECT_TRUE(std::isfinite(F));
  EXPECT_NEAR(F, 1.0, 1e-12);
  const double ls = pickwin::fpt_log_survival({0.0, 1.0, 1.0}, constant(0.5, 1e-6));
  EXPECT_NEAR(ls, 0.0, 1e-12);
  const double deep = pickwin::fpt_log_survival({0.0, 1.0, 1.0}, constant(3.0, 0.05));
  EXPECT_TRUE(std::isfinite(deep));
  EXPECT_LT(deep, -40.0);
}

TEST(FptCdf, ConstantProfileMatchesInverseGaussian) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mu(0.05, 4.0), var(0.1, 5.0), a(0.2, 4.0), t(0.05, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double m = mu(rng), s2 = var(rng), alpha = a(rng), v = t(rng);
    const double lib = pickwin::fpt_cdf({0.0, v, alpha}, constant(m, s2));
    EXPECT_NEAR(lib, oracle::inverse_gaussian_cdf(v, m, s2, alpha), 1e-6);
  }
}

TEST(FptCdf, BoundedMonotoneAndBelowLimit) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_profile(rng);
    const double v0 = std::uniform_real_distribution<double>(0.0, 8.0)(rng);
    const double alpha = std::uniform_real_distribution<double>(0.5, 20.0)(rng);
    const double limit = pickwin::fpt_cdf_limit(p, v0, alpha);
    EXPECT_GE(limit, 0.0);
    EXPECT_LE(limit, 1.0);
    double prev = 0.0;
    for (double dv = 0.0; dv < 40.0; dv += 0.37) {
      const double F = pickwin::fpt_cdf({v0, v0 + dv, alpha}, p);
      EXPECT_GE(F, prev - 1e-15);
      EXPECT_LE(F, limit + 1e-12);
      prev = F;
    }
  }
}

TEST(FptCdf, FiniteDifferenceMatchesDensity) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> start(0.0, 6.0), gap(0.2, 6.0), level(0.5, 6.0);
  int checked = 0;
  while (checked < 100) {
    const auto p = random_profile(rng);
    const double v0 = start(rng), v = v0 + gap(rng), alpha = level(rng);
    if (std::abs(v - p.nu) < 1e-3) continue;
    const double h = 1e-4 * (v - v0);
    const double pdf = pickwin::fpt_pdf({v0, v, alpha}, p);
    double fd;
    if (pickwin::fpt_cdf({v0, v, alpha}, p) < 0.5) {
      fd = (pickwin::fpt_cdf({v0, v + h, alpha}, p) - pickwin::fpt_cdf({v0, v - h, alpha}, p)) / (2 * h);
    } else {
      // Same derivative through 1 - F, which keeps its precision near F = 1.
      fd = -(std::exp(pickwin::fpt_log_survival({v0, v + h, alpha}, p)) -
             std::exp(pickwin::fpt_log_survival({v0, v - h, alpha}, p))) / (2 * h);
    }
    if (pdf < 1e-9) continue;
    EXPECT_NEAR(fd / pdf, 1.0, 1e-4) << "mu0=" << p.mu0 << " s2=" << p.sigma0_sq << " nu=" << p.nu
                                     << " tau=" << p.tau << " v0=" << v0 << " v=" << v;
    ++checked;
  }
}

TEST(FptCdf, AgreesWithPathSimulation) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> mu(-1.0, 3.0), var(0.5, 4.0), nu(0.0, 2.0), tau(0.5, 3.0),
      level(0.5, 3.0);
  const double dt = 0.02;
  const std::vector<double> offsets{0.5, 1.5, 3.0};
  for (int trial = 0; trial < 20; ++trial) {
    const DriftProfile p{mu(rng), var(rng), nu(rng), tau(rng)};
    const double v0 = 0.02 * std::uniform_int_distribution<int>(0, 50)(rng);
    const double alpha = level(rng);
    std::vector<double> times;
    for (double o : offsets) times.push_back(v0 + o);
    const auto mc = oracle::simulate_passage(p.mu0, p.sigma0_sq, p.nu, p.tau, v0, alpha, times,
                                             100000, dt, 1000 + trial);
    for (std::size_t k = 0; k < times.size(); ++k) {
      const double F = pickwin::fpt_cdf({v0, times[k], alpha}, p);
      EXPECT_LE(std::abs(F - mc.fraction[k]), 3.0 * mc.standard_error[k])
          << "trial " << trial << " t=" << times[k] << " closed=" << F << " mc=" << mc.fraction[k];
    }
  }
}

TEST(FptCdfLimit, ZeroDriftExample) {
  const DriftProfile p{0.0, 100.0, 6.37, 4.83};
  const double limit = pickwin::fpt_cdf_limit(p, 0.0, 70.0);
  EXPECT_NEAR(limit, 2.0 * oracle::std_normal_cdf(-70.0 / std::sqrt(1120.0)), 1e-14);
  EXPECT_NEAR(limit, 0.0365, 1e-4);
  EXPECT_NEAR(pickwin::fpt_cdf({0.0, 1e4, 70.0}, p), limit, 1e-12);
}

TEST(FptCdfLimit, UnreachableAndDriftDominated) {
  const DriftProfile p{1.0, 1.0, 2.0, 1.0};
  EXPECT_EQ(pickwin::fpt_cdf_limit(p, 0.0, kInf), 0.0);
  EXPECT_LT(pickwin::fpt_cdf_limit(p, 0.0, 1e4), 1e-300);
  // M_inf = 30 * 3 = 90, alpha = 10: (M - alpha) / sqrt(2S) = 80 / sqrt(3) >> 10.
  const DriftProfile strong{30.0, 1.0, 2.0, 1.0};
  EXPECT_NEAR(pickwin::fpt_cdf_limit(strong, 0.0, 10.0), 1.0, 1e-9);
}

TEST(FptCdfLimit, BranchOnStartTime) {
  const DriftProfile p{0.5, 2.0, 3.0, 2.0};
  EXPECT_DOUBLE_EQ(pickwin::clock_integral_to_infinity(p.nu, p.tau, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(pickwin::clock_integral_to_infinity(p.nu, p.tau, 5.0), 2.0 * std::exp(-1.0));
  EXPECT_NEAR(pickwin::fpt_cdf_limit(p, 5.0, 1.0), pickwin::fpt_cdf({5.0, 500.0, 1.0}, p), 1e-12);
}

TEST(FptCdfLimit, NonDecayingProfile) {
  EXPECT_EQ(pickwin::fpt_cdf_limit(constant(0.5, 1.0), 0.0, 3.0), 1.0);
  EXPECT_THROW(pickwin::fpt_cdf_limit(constant(-0.5, 1.0), 0.0, 3.0), std::domain_error);
  EXPECT_THROW(pickwin::fpt_cdf_limit(constant(0.0, 1.0), 0.0, 3.0), std::domain_error);
}

TEST(FptCdfLimit, ZeroDriftStrictlyIncreasingInDiffusion) {
  double prev = -1.0;
  for (double s2 = 1.0; s2 < 400.0; s2 *= 1.3) {
    const double p = pickwin::fpt_cdf_limit({0.0, s2, 6.37, 4.83}, 0.0, 70.0);
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(NormalTail, LogCdfContinuousAtAsymptoticSwitch) {
  const double below = pickwin::normal::log_cdf(std::nextafter(-8.0, -9.0));
  const double at = pickwin::normal::log_cdf(-8.0);
  EXPECT_NEAR(below, at, 1e-12);
  // Deep tail against the leading-order asymptote.
  const double x = -200.0;
  EXPECT_NEAR(pickwin::normal::log_cdf(x), -0.5 * x * x - std::log(-x) - 0.5 * std::log(2 * std::numbers::pi),
              1e-4);
}
