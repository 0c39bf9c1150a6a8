#pragma once

// Randomized probability spaces and the property suites run by
// `pickwin theory-check` and the acceptance binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pickwin/portfolio.hpp"

namespace pickwin::theory {


/// Integer-weighted space with `m` events over at most `max_outcomes`
/// outcomes; each outcome gets a random event mask.
inline FiniteEventSpace random_exact(std::mt19937_64& rng, int m, int max_outcomes) {
  std::uniform_int_distribution<int> count(1, max_outcomes);
  std::uniform_int_distribution<std::uint64_t> weight(0, 1000);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << m) - 1u);
  const int n = count(rng);
  std::vector<std::uint64_t> w(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> mem(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    w[j] = weight(rng);
    mem[j] = mask(rng);
  }
  if (std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; })) w[0] = 1;
  return FiniteEventSpace::from_weights(std::move(w), std::move(mem), m);
}

/// Distinct marginals in (lo, hi).
inline std::vector<double> distinct_probs(std::mt19937_64& rng, int m, double lo = 0.01, double hi = 0.99) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> p;
  while (static_cast<int>(p.size()) < m) {
    const double v = u(rng);
    bool clash = false;
    for (double q : p) clash = clash || std::abs(q - v) < 1e-6;
    if (!clash) p.push_back(v);
  }
  return p;
}

/// Perturbation of m independent Bernoulli(p_i) events: each joint outcome's
/// probability is scaled by (1 + eta u) with u uniform in [-1, 1], then
/// renormalized.
inline FiniteEventSpace perturbed_independent(std::mt19937_64& rng, std::vector<double> p, double eta) {
  const int m = static_cast<int>(p.size());
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto base = FiniteEventSpace::independent(p);
  std::vector<double> probs(base.probabilities().begin(), base.probabilities().end());
  double total = 0.0;
  for (auto& q : probs) {
    q *= 1.0 + eta * u(rng);
    total += q;
  }
  for (auto& q : probs) q /= total;
  std::vector<std::uint32_t> mem(base.membership().begin(), base.membership().end());
  return FiniteEventSpace::from_probabilities(std::move(probs), std::move(mem), m);
}

struct Theorem5Case {
  double lambda = 0.0;
  double p = 0.0;
  int k = 0;
  double a = 0.0;
  double b = 0.0;
  double gap = 0.0;   // (U(S_W) - U(S_L)) / U(S_W)
  double bound = 0.0;
};

/// Builds a perturbed space satisfying the pattern condition with a measured
/// lambda < 1 and compares the picking-winners / log-optimal gap to the bound.
/// Returns false if the drawn space violates lambda < 1.
inline bool theorem5_case(std::mt19937_64& rng, Theorem5Case& out) {
  std::uniform_int_distribution<int> mdist(4, 8);
  const int m = mdist(rng);
  const int k = std::uniform_int_distribution<int>(2, std::min(4, m - 1))(rng);
  const double p = std::uniform_real_distribution<double>(0.02, 1.0 / k)(rng);
  // Small heterogeneity in the marginals so the two portfolios can differ.
  std::vector<double> marg(static_cast<std::size_t>(m));
  std::uniform_real_distribution<double> jitter(0.9, 1.1);
  for (auto& q : marg) q = std::min(p * jitter(rng), 1.0 / k);
  const double eta = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
  const auto space = perturbed_independent(rng, marg, eta);
  const double lambda = dependence_lambda(space, k, p);
  if (!(lambda < 1.0)) return false;
  const double a = std::exp(std::uniform_real_distribution<double>(-2.0, 1.0)(rng));
  const double b = a * std::exp(std::uniform_real_distribution<double>(0.1, 12.0)(rng));
  const auto winners = brute_force_portfolio(space, k);
  const auto logopt = log_optimal_portfolio(space, k, a, b);
  const double uw = winners.value;
  const double ul = space.union_prob(FiniteEventSpace::mask_of(logopt.members));
  out = {lambda, p, k, a, b, (uw - ul) / uw, theorem5_bound(lambda, k, p, a, b)};
  return true;
}


struct SuiteResult {
  std::string name;
  int cases = 0;
  int violations = 0;
  double seconds = 0.0;
  bool passed() const { return violations == 0 && cases > 0; }
};

namespace detail {

template <typename Fn>
SuiteResult timed(std::string name, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r{std::move(name)};
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// U(S + v) - U(S) >= U(T + v) - U(T) for every S within T, v outside T, in
/// integer weights.
inline SuiteResult submodularity_suite(std::uint64_t seed, int cases = 200, int max_m = 8) {
  return detail::timed("submodularity", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
      const int m = std::uniform_int_distribution<int>(2, max_m)(rng);
      const auto s = random_exact(rng, m, 64);
      const std::uint32_t all = (1u << m) - 1u;
      bool ok = true;
      for (std::uint32_t t = 0; t <= all && ok; ++t) {
        if (s.union_weight(0) > s.union_weight(t)) ok = false;
        for (std::uint32_t sub = t;; sub = (sub - 1) & t) {
          for (int v = 0; v < m && ok; ++v) {
            if (t & (1u << v)) continue;
            const auto gs = s.union_weight(sub | (1u << v)) - s.union_weight(sub);
            const auto gt = s.union_weight(t | (1u << v)) - s.union_weight(t);
            if (gs < gt) ok = false;
          }
          if (sub == 0 || !ok) break;
        }
      }
      ++r.cases;
      r.violations += ok ? 0 : 1;
    }
  });
}

/// Greedy value against the brute-force optimum: e * U(G) >= (e - 1) * U(OPT).
inline SuiteResult greedy_guarantee_suite(std::uint64_t seed, int cases = 100, int max_m = 12, int max_k = 4) {
  return detail::timed("greedy_guarantee", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
      const int m = std::uniform_int_distribution<int>(2, max_m)(rng);
      const int k = std::uniform_int_distribution<int>(1, std::min(max_k, m))(rng);
      const auto s = random_exact(rng, m, 64);
      const auto gw = s.union_weight(FiniteEventSpace::mask_of(greedy_portfolio(s, k).members));
      const auto bw = s.union_weight(FiniteEventSpace::mask_of(brute_force_portfolio(s, k).members));
      ++r.cases;
      if (std::exp(1.0L) * gw < (std::exp(1.0L) - 1.0L) * bw) ++r.violations;
    }
  });
}

/// Independent events: greedy, top-k and brute force pick the same set.
inline SuiteResult independent_optimality_suite(std::uint64_t seed, int cases = 100, int max_m = 14) {
  return detail::timed("independent_optimality", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
      const int m = std::uniform_int_distribution<int>(2, max_m)(rng);
      const int k = std::uniform_int_distribution<int>(1, m)(rng);
      const auto p = distinct_probs(rng, m);
      const auto g = greedy_portfolio(p, k).members;
      const auto t = top_k(p, k);
      const auto b = brute_force_portfolio(p, k).members;
      const std::set<int> gs(g.begin(), g.end()), ts(t.begin(), t.end()), bs(b.begin(), b.end());
      ++r.cases;
      if (gs != ts || bs != ts) ++r.violations;
    }
  });
}

/// Independent events with distinct marginals: the log-optimal set is top-k
/// for random 0 < a < b.
inline SuiteResult log_optimal_suite(std::uint64_t seed, int cases = 100, int max_m = 10) {
  return detail::timed("log_optimal_equivalence", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
      const int m = std::uniform_int_distribution<int>(2, max_m)(rng);
      const int k = std::uniform_int_distribution<int>(1, m)(rng);
      const auto p = distinct_probs(rng, m);
      const double a = std::exp(std::uniform_real_distribution<double>(-3, 2)(rng));
      const double b = a * std::exp(std::uniform_real_distribution<double>(0.05, 15)(rng));
      const auto best = log_optimal_portfolio(p, k, a, b).members;
      const auto t = top_k(p, k);
      ++r.cases;
      if (std::set<int>(best.begin(), best.end()) != std::set<int>(t.begin(), t.end())) ++r.violations;
    }
  });
}

/// Gap between the picking-winners and log-optimal portfolios against the
/// bound, on correlated spaces with measured lambda < 1.
inline SuiteResult theorem5_suite(std::uint64_t seed, int cases = 50, std::vector<Theorem5Case>* log = nullptr) {
  return detail::timed("theorem5_gap", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100 * cases && r.cases < cases; ++attempt) {
      Theorem5Case c;
      if (!theorem5_case(rng, c)) continue;
      ++r.cases;
      if (c.gap < -1e-15 || c.gap > c.bound) ++r.violations;
      if (log) log->push_back(c);
    }
  });
}

}  // namespace pickwin::theory
