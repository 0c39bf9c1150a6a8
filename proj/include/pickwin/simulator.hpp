#pragma once

// Synthetic funding histories drawn from the latent Brownian model.
//
// The latent value is a constant-coefficient Brownian motion run on the clock
// G(t) = int_0^t f, so each calendar step is sampled exactly. Level crossings
// inside a step are detected with the exact Brownian-bridge maximum.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pickwin/feature_matrix.hpp"
#include "pickwin/fpt.hpp"
#include "pickwin/likelihood.hpp"
#include "pickwin/parallel.hpp"

namespace pickwin {

struct SampledHistory {
  FundingHistory history;      // censored at t_obs
  bool eventual_exit = false;  // exit at any time, observed or not
  double exit_time = kInf;     // relative to the first round
};

struct PathOptions {
  double step = 1.0 / 365.0;
};

namespace detail {

// Levels crossed within one step, as (level index, time). `x` is updated.
struct StepState {
  double t = 0.0;
  double x = 0.0;
  int next_level = 1;  // relative level count still to reach
};

// Samples a step of clock length dg ending at calendar time t_end. Crossed
// levels get evenly spaced times in (t, t_end].
template <typename Rng>
void advance(StepState& s, double dg, double t_end, double mu0, double sigma0_sq, double delta_level,
             int levels, std::vector<std::pair<int, double>>& hits, Rng& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  const double var = sigma0_sq * dg;
  const double x1 = s.x + mu0 * dg + std::sqrt(var) * gauss(rng);
  const double u = 1.0 - unif(rng);  // (0, 1]
  const double diff = x1 - s.x;
  const double peak = 0.5 * (s.x + x1 + std::sqrt(diff * diff - 2.0 * var * std::log(u)));
  int last = s.next_level;
  while (last <= levels && peak >= last * delta_level) ++last;
  const int crossed = last - s.next_level;
  for (int j = 1; j <= crossed; ++j) {
    const double when = j == crossed ? t_end : s.t + (t_end - s.t) * j / crossed;
    hits.emplace_back(s.next_level + j - 1, when);
  }
  s.next_level = last;
  s.x = x1;
  s.t = t_end;
}

}  // namespace detail

/// One company's rounds. X starts at 0 at the first round (index
/// `start_level`); round l is reached when X first hits (l - start_level) * delta_level.
template <typename Rng>
SampledHistory sample_history(const DriftProfile& profile, double delta_level, int start_level,
                              double t_obs, Rng& rng, const PathOptions& opt = {}) {
  profile.validate();
  if (!(t_obs > 0.0)) throw std::invalid_argument("observation time must be positive");
  if (!(opt.step > 0.0)) throw std::invalid_argument("path step must be positive");
  const int levels = kExitRound - start_level;
  SampledHistory out;
  out.history.round_indices.push_back(start_level);
  out.history.round_times.push_back(0.0);
  out.history.t_obs = t_obs;

  detail::StepState s;
  std::vector<std::pair<int, double>> hits;
  const long steps = static_cast<long>(std::ceil(t_obs / opt.step - 1e-9));
  for (long i = 0; i < steps && s.next_level <= levels; ++i) {
    const double t_end = i + 1 == steps ? t_obs : (i + 1) * opt.step;
    const double dg = clock_integral(profile.nu, profile.tau, s.t, t_end).value;
    detail::advance(s, dg, t_end, profile.mu0, profile.sigma0_sq, delta_level, levels, hits, rng);
  }
  for (const auto& [lvl, when] : hits) {
    out.history.round_indices.push_back(start_level + lvl);
    out.history.round_times.push_back(when);
  }
  if (s.next_level > levels) {
    out.eventual_exit = true;
    out.exit_time = out.history.round_times.back();
    return out;
  }
  // Remaining clock in one exact step: decides the eventual outcome.
  if (std::isfinite(profile.nu)) {
    const double rest = clock_integral_to_infinity(profile.nu, profile.tau, s.t);
    hits.clear();
    detail::advance(s, rest, kInf, profile.mu0, profile.sigma0_sq, delta_level, levels, hits, rng);
    out.eventual_exit = s.next_level > levels;
  } else {
    out.eventual_exit = profile.mu0 > 0.0;
  }
  return out;
}

/// Histories at step `step` and `2 * step` from one Brownian path. The coarse
/// history records a level in the coarse step containing the fine crossing.
template <typename Rng>
std::pair<SampledHistory, SampledHistory> sample_history_coupled(const DriftProfile& profile,
                                                                 double delta_level, int start_level,
                                                                 double t_obs, Rng& rng, double step) {
  auto fine = sample_history(profile, delta_level, start_level, t_obs, rng, {step});
  SampledHistory coarse = fine;
  const double coarse_step = 2.0 * step;
  auto& h = coarse.history;
  for (std::size_t l = 1; l < h.round_times.size(); ++l) {
    // Coarse grid: [2j step, 2(j+1) step], truncated at t_obs.
    const double t = h.round_times[l];
    const double end = std::min(t_obs, std::ceil(t / coarse_step - 1e-9) * coarse_step);
    h.round_times[l] = end;
  }
  // Spread rounds that landed in the same coarse step evenly inside it.
  for (std::size_t l = 1; l < h.round_times.size();) {
    std::size_t r = l;
    while (r + 1 < h.round_times.size() && h.round_times[r + 1] == h.round_times[l]) ++r;
    const double end = h.round_times[l];
    const double begin = std::max(end - coarse_step, 0.0);
    const auto n = static_cast<double>(r - l + 1);
    for (std::size_t j = l; j <= r; ++j) h.round_times[j] = j == r ? end : begin + (end - begin) * (j - l + 1) / n;
    l = r + 1;
  }
  if (coarse.eventual_exit && h.round_indices.back() == kExitRound) coarse.exit_time = h.round_times.back();
  return {std::move(fine), std::move(coarse)};
}

/// Per-feature sampling rule.
struct FeatureSampler {
  enum class Kind { constant, uniform, categorical };
  std::string name;
  Kind kind = Kind::constant;
  double value = 1.0;             // constant
  double low = 0.0, high = 1.0;   // uniform
  std::vector<double> values;     // categorical
  std::vector<double> weights;    // categorical, default uniform

  template <typename Rng>
  double sample(Rng& rng) const {
    switch (kind) {
      case Kind::constant: return value;
      case Kind::uniform: return std::uniform_real_distribution<double>(low, high)(rng);
      case Kind::categorical: {
        if (weights.empty()) {
          return values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
        }
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        return values[pick(rng)];
      }
    }
    return 0.0;
  }

  void validate() const {
    if (kind == Kind::uniform && !(high >= low)) throw std::invalid_argument("feature " + name + ": high < low");
    if (kind == Kind::categorical) {
      if (values.empty()) throw std::invalid_argument("feature " + name + ": no categories");
      if (!weights.empty() && weights.size() != values.size()) {
        throw std::invalid_argument("feature " + name + ": weights and values differ in length");
      }
    }
  }
};

struct SimConfig {
  ModelParams true_params;  // beta may list only the first year; later years follow the random walk
  std::vector<FeatureSampler> features;
  std::map<int, int> companies_per_year;
  double t_obs = 0.0;       // absolute, in decimal years
  std::uint64_t rng_seed = 0;
  double path_step = 1.0 / 365.0;
  int start_level = 0;
  unsigned threads = 0;

  void validate() const {
    if (features.empty()) throw std::invalid_argument("simulation needs at least one feature");
    if (true_params.gamma.size() != features.size() || true_params.delta.size() != features.size()) {
      throw std::invalid_argument("gamma/delta lengths must match the number of features");
    }
    if (true_params.beta.empty()) throw std::invalid_argument("true_params.beta needs at least one year");
    for (const auto& [y, b] : true_params.beta) {
      if (b.size() != features.size()) {
        throw std::invalid_argument("beta for year " + std::to_string(y) + " has the wrong length");
      }
    }
    if (companies_per_year.empty()) throw std::invalid_argument("years must be nonempty");
    for (const auto& [y, n] : companies_per_year) {
      if (n < 0) throw std::invalid_argument("negative company count for year " + std::to_string(y));
      if (!(t_obs > y + 1.0)) {
        throw std::invalid_argument("t_obs must fall after the end of every simulated year");
      }
    }
    if (!(path_step > 0.0)) throw std::invalid_argument("path_step must be positive");
    if (start_level < 0 || start_level >= kExitRound) throw std::invalid_argument("start_level out of range");
    for (const auto& f : features) f.validate();
  }
};

/// Completes beta over [first listed year, last simulated year]: listed years
/// are kept, missing ones follow beta_{y+1} = beta_y + N(0, delta^2).
inline ModelParams complete_random_walk(const SimConfig& cfg) {
  ModelParams p = cfg.true_params;
  const int first = std::min(p.first_year(), cfg.companies_per_year.begin()->first);
  const int last = std::max(p.last_year(), cfg.companies_per_year.rbegin()->first);
  if (p.beta.begin()->first > first) {
    throw std::invalid_argument("true_params.beta must start at or before the first simulated year");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                    0xbe7au};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;
  for (int y = first + 1; y <= last; ++y) {
    if (p.beta.count(y)) continue;
    auto next = p.beta.at(y - 1);
    for (std::size_t k = 0; k < next.size(); ++k) next[k] += p.delta[k] * gauss(rng);
    p.beta[y] = std::move(next);
  }
  return p;
}

struct SimDataset {
  std::vector<FundingHistory> histories;
  FeatureMatrix features;
  std::vector<DriftProfile> profiles;
  std::vector<bool> eventual_exit;
  std::vector<double> first_round_time;  // absolute, decimal years
  ModelParams params;                    // with every simulated year filled in
};

inline std::string company_id(int year, int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%d_%05d", year, index);
  return buf;
}

inline SimDataset generate_dataset(const SimConfig& cfg) {
  cfg.validate();
  SimDataset out;
  out.params = complete_random_walk(cfg);

  std::vector<std::pair<int, int>> slots;  // (year, index within year)
  for (const auto& [y, n] : cfg.companies_per_year)
    for (int i = 0; i < n; ++i) slots.emplace_back(y, i);
  const std::size_t n = slots.size();

  std::vector<std::string> names;
  for (const auto& f : cfg.features) names.push_back(f.name);
  std::vector<std::string> ids;
  for (const auto& [y, i] : slots) ids.push_back(company_id(y, i));
  out.features = FeatureMatrix(names, ids);
  out.histories.resize(n);
  out.profiles.resize(n);
  out.eventual_exit.resize(n);
  out.first_round_time.resize(n);

  const std::size_t m = cfg.features.size();
  std::vector<std::vector<double>> x(n, std::vector<double>(m));
  parallel::parallel_for(
      n,
      [&](std::size_t c) {
        const auto [year, index] = slots[c];
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        for (std::size_t k = 0; k < m; ++k) x[c][k] = cfg.features[k].sample(rng);
        const auto profile = company_drift_profile(x[c], year, out.params);
        const double start = year + std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        auto s = sample_history(profile, out.params.delta_level, cfg.start_level, cfg.t_obs - start, rng,
                                {cfg.path_step});
        s.history.company_id = ids[c];
        s.history.founding_year = year;
        out.histories[c] = std::move(s.history);
        out.profiles[c] = profile;
        out.eventual_exit[c] = s.eventual_exit;
        out.first_round_time[c] = start;
      },
      cfg.threads);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < m; ++k) out.features.set(k, c, x[c][k]);
  return out;
}

}  // namespace pickwin
