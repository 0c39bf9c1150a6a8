#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pickwin/simulator.hpp"

using namespace pickwin;

namespace {

SimConfig small_config() {
  SimConfig cfg;
  FeatureSampler intercept{"intercept", FeatureSampler::Kind::constant, 1.0};
  FeatureSampler x1{"x1", FeatureSampler::Kind::uniform};
  x1.low = 0.0;
  x1.high = 1.0;
  FeatureSampler x2{"x2", FeatureSampler::Kind::categorical};
  x2.values = {0.0, 1.0};
  x2.weights = {0.7, 0.3};
  cfg.features = {intercept, x1, x2};
  cfg.true_params.beta[2000] = {4.0, 3.0, 2.0};
  cfg.true_params.gamma = {1.5, 0.5, 0.3};
  cfg.true_params.delta = {0.1, 0.1, 0.1};
  cfg.companies_per_year = {{2000, 60}, {2001, 60}, {2002, 60}, {2003, 60}};
  cfg.t_obs = 2005.0;
  cfg.rng_seed = 17;
  return cfg;
}

void expect_well_formed(const FundingHistory& h) {
  ASSERT_NO_THROW(h.validate());
  for (std::size_t i = 1; i < h.round_times.size(); ++i) {
    EXPECT_GT(h.round_times[i], h.round_times[i - 1]);
    EXPECT_EQ(h.round_indices[i], h.round_indices[i - 1] + 1);
  }
  EXPECT_LE(h.round_times.back(), h.t_obs);
  EXPECT_LE(h.round_indices.back(), kExitRound);
}

}  // namespace

TEST(SampleHistory, FrozenPathStaysAtFirstRound) {
  std::mt19937_64 rng(1);
  const DriftProfile p{0.0, kSigmaSqFloor, 6.37, 4.83};
  for (int i = 0; i < 100; ++i) {
    const auto s = sample_history(p, 10.0, 0, 10.0, rng);
    EXPECT_EQ(s.history.round_indices.size(), 1u);
    EXPECT_FALSE(s.eventual_exit);
  }
}

TEST(SampleHistory, LargeDriftExits) {
  const DriftProfile p{1000.0, 1.0, 6.37, 4.83};
  int exits = 0;
  for (int seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed);
    const auto s = sample_history(p, 10.0, 0, 5.0, rng);
    exits += s.history.exited();
    expect_well_formed(s.history);
  }
  EXPECT_GE(exits, 999);
}

TEST(SampleHistory, RejectsBadInputs) {
  std::mt19937_64 rng(1);
  const DriftProfile p{1.0, 1.0, 6.37, 4.83};
  EXPECT_THROW(sample_history(p, 10.0, 0, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(sample_history(p, 10.0, 0, 1.0, rng, {0.0}), std::invalid_argument);
}

TEST(SampleHistory, ExitFractionMatchesLimit) {
  std::mt19937_64 pick(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = 100000;
  for (int trial = 0; trial < 10; ++trial) {
    const DriftProfile p{2.0 + 8.0 * u(pick), 1.0 + 20.0 * u(pick), 2.0 + 6.0 * u(pick), 1.0 + 6.0 * u(pick)};
    const int start = static_cast<int>(u(pick) * 3);
    const double expected = fpt_cdf_limit(p, 0.0, (kExitRound - start) * 10.0);
    std::mt19937_64 rng(trial);
    int exits = 0;
    for (int i = 0; i < n; ++i) exits += sample_history(p, 10.0, start, 2.0, rng, {0.1}).eventual_exit;
    const double frac = static_cast<double>(exits) / n;
    const double se = std::sqrt(std::max(expected * (1 - expected), 1e-12) / n);
    EXPECT_LE(std::abs(frac - expected), 3 * se) << "trial " << trial << " expected " << expected;
  }
}

TEST(SampleHistory, ObservedExitFractionMatchesCdf) {
  const DriftProfile p{9.0, 4.0, 6.37, 4.83};
  const double t_obs = 6.0;
  const double expected = fpt_cdf({0.0, t_obs, 70.0}, p);
  const int n = 20000;
  std::mt19937_64 rng(5);
  int exits = 0;
  for (int i = 0; i < n; ++i) exits += sample_history(p, 10.0, 0, t_obs, rng).history.exited();
  const double frac = static_cast<double>(exits) / n;
  EXPECT_LE(std::abs(frac - expected), 3 * std::sqrt(expected * (1 - expected) / n));
}

TEST(SampleHistory, HalvingStepKeepsExitFraction) {
  const DriftProfile p{7.0, 6.0, 6.37, 4.83};
  const double step = 1.0 / 52.0;
  const int n = 20000;
  std::mt19937_64 rng(9);
  int fine_exits = 0, coarse_exits = 0, fine_obs = 0, coarse_obs = 0;
  for (int i = 0; i < n; ++i) {
    const auto [fine, coarse] = sample_history_coupled(p, 10.0, 0, 8.0, rng, step);
    fine_exits += fine.eventual_exit;
    coarse_exits += coarse.eventual_exit;
    fine_obs += fine.history.exited();
    coarse_obs += coarse.history.exited();
    expect_well_formed(coarse.history);
    ASSERT_EQ(fine.history.round_indices, coarse.history.round_indices);
    for (std::size_t l = 1; l < fine.history.round_times.size(); ++l) {
      EXPECT_LE(std::abs(coarse.history.round_times[l] - fine.history.round_times[l]), 2 * step + 1e-12);
    }
  }
  const double frac = static_cast<double>(fine_obs) / n;
  const double se = std::sqrt(frac * (1 - frac) / n);
  EXPECT_LT(std::abs(fine_obs - coarse_obs) / static_cast<double>(n), se);
  EXPECT_LT(std::abs(fine_exits - coarse_exits) / static_cast<double>(n), se);
}

TEST(SampleHistory, StepSizeDoesNotBiasExits) {
  // Independent streams at two step sizes agree within sampling error.
  const DriftProfile p{7.0, 6.0, 6.37, 4.83};
  const int n = 20000;
  auto run = [&](double step) {
    std::mt19937_64 rng(33);
    int exits = 0;
    for (int i = 0; i < n; ++i) exits += sample_history(p, 10.0, 0, 8.0, rng, {step}).history.exited();
    return static_cast<double>(exits) / n;
  };
  const double a = run(1.0 / 365.0);
  const double b = run(0.5);
  const double se = std::sqrt(a * (1 - a) / n + b * (1 - b) / n);
  EXPECT_LE(std::abs(a - b), 4 * se);
}

TEST(GenerateDataset, WellFormedAndCensored) {
  const auto cfg = small_config();
  const auto d = generate_dataset(cfg);
  ASSERT_EQ(d.histories.size(), 240u);
  EXPECT_EQ(d.features.num_companies(), 240u);
  EXPECT_TRUE(d.features.complete());
  for (std::size_t c = 0; c < d.histories.size(); ++c) {
    const auto& h = d.histories[c];
    expect_well_formed(h);
    EXPECT_EQ(h.company_id, d.features.company_ids[c]);
    EXPECT_NEAR(d.first_round_time[c] + h.t_obs, cfg.t_obs, 1e-9);
    EXPECT_GE(d.first_round_time[c], h.founding_year);
    EXPECT_LT(d.first_round_time[c], h.founding_year + 1);
    if (h.exited()) EXPECT_TRUE(d.eventual_exit[c]);
    EXPECT_TRUE(std::isfinite(company_log_likelihood(h, d.profiles[c], 10.0)));
  }
  for (int y = 2000; y <= 2003; ++y) EXPECT_TRUE(d.params.beta.count(y));
}

TEST(GenerateDataset, ReproducibleAcrossRunsAndThreads) {
  auto cfg = small_config();
  cfg.threads = 1;
  const auto a = generate_dataset(cfg);
  cfg.threads = 4;
  const auto b = generate_dataset(cfg);
  ASSERT_EQ(a.histories.size(), b.histories.size());
  for (std::size_t c = 0; c < a.histories.size(); ++c) {
    EXPECT_EQ(a.histories[c].round_indices, b.histories[c].round_indices);
    EXPECT_EQ(a.histories[c].round_times, b.histories[c].round_times);
    EXPECT_EQ(a.first_round_time[c], b.first_round_time[c]);
  }
  EXPECT_EQ(a.features.values, b.features.values);
  EXPECT_EQ(a.params.beta, b.params.beta);

  cfg.rng_seed = 18;
  const auto c = generate_dataset(cfg);
  EXPECT_NE(a.features.values, c.features.values);
}

TEST(GenerateDataset, ZeroDeltaSharesBeta) {
  auto cfg = small_config();
  cfg.true_params.delta = {0.0, 0.0, 0.0};
  const auto d = generate_dataset(cfg);
  for (const auto& [y, b] : d.params.beta) EXPECT_EQ(b, cfg.true_params.beta.at(2000));
}

TEST(GenerateDataset, ListedYearsAreKept) {
  auto cfg = small_config();
  cfg.true_params.beta[2002] = {1.0, 1.0, 1.0};
  const auto d = generate_dataset(cfg);
  EXPECT_EQ(d.params.beta.at(2002), (std::vector<double>{1.0, 1.0, 1.0}));
  EXPECT_NE(d.params.beta.at(2001), d.params.beta.at(2000));
}

TEST(GenerateDataset, EmptyYearAbsent) {
  auto cfg = small_config();
  cfg.companies_per_year[2001] = 0;
  const auto d = generate_dataset(cfg);
  EXPECT_EQ(d.histories.size(), 180u);
  for (const auto& h : d.histories) EXPECT_NE(h.founding_year, 2001);
}

TEST(GenerateDataset, LaterYearsMoreCensored) {
  auto cfg = small_config();
  cfg.companies_per_year = {{2000, 500}, {2001, 500}, {2002, 500}, {2003, 500}};
  cfg.true_params.delta = {0.0, 0.0, 0.0};
  const auto d = generate_dataset(cfg);
  std::map<int, double> mean_max;
  for (const auto& h : d.histories) mean_max[h.founding_year] += h.round_indices.back() / 500.0;
  for (int y = 2001; y <= 2003; ++y) EXPECT_LT(mean_max[y], mean_max[y - 1]) << y;
}

TEST(GenerateDataset, RejectsInvalidConfig) {
  auto cfg = small_config();
  cfg.path_step = 0.0;
  EXPECT_THROW(generate_dataset(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.companies_per_year.clear();
  EXPECT_THROW(generate_dataset(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.t_obs = 2003.5;
  EXPECT_THROW(generate_dataset(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.true_params.gamma.pop_back();
  EXPECT_THROW(generate_dataset(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.features[2].values.clear();
  EXPECT_THROW(generate_dataset(cfg), std::invalid_argument);
}
