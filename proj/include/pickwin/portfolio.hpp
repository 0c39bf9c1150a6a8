#pragma once

// Picking-winners objectives on explicit probability models: independent
// events, finite outcome spaces, greedy and exhaustive selection, expected
// log return and the small-dependence gap bound.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pickwin {

/// 1 - prod(1 - p_i).
inline double union_prob_independent(std::span<const double> probs) {
  double miss = 1.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
    }
    miss *= 1.0 - p;
  }
  return 1.0 - miss;
}

/// Countable sample space with finitely many outcomes. Outcome j carries
/// probability `probability[j]` and the bitmask of events occurring in it.
/// When built from integer weights, `weight` holds them and union
/// probabilities can be compared exactly.
class FiniteEventSpace {
 public:
  static FiniteEventSpace from_weights(std::vector<std::uint64_t> weights,
                                       std::vector<std::uint32_t> membership, int num_events) {
    if (weights.size() != membership.size()) throw std::invalid_argument("weights/membership size mismatch");
    std::uint64_t total = 0;
    for (auto w : weights) {
      if (total + w < total) throw std::overflow_error("outcome weights overflow");
      total += w;
    }
    if (total == 0) throw std::invalid_argument("outcome weights sum to zero");
    FiniteEventSpace s(num_events, std::move(membership));
    s.probability_.reserve(weights.size());
    for (auto w : weights) s.probability_.push_back(static_cast<double>(w) / static_cast<double>(total));
    s.weight_ = std::move(weights);
    s.total_ = total;
    return s;
  }

  static FiniteEventSpace from_probabilities(std::vector<double> probs,
                                             std::vector<std::uint32_t> membership, int num_events) {
    if (probs.size() != membership.size()) throw std::invalid_argument("probability/membership size mismatch");
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0)) throw std::invalid_argument("negative outcome probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("outcome probabilities sum to " + std::to_string(sum));
    }
    FiniteEventSpace s(num_events, std::move(membership));
    s.probability_ = std::move(probs);
    return s;
  }

  /// Product space of independent events with the given marginals.
  static FiniteEventSpace independent(std::span<const double> probs) {
    const int m = static_cast<int>(probs.size());
    if (m > 20) throw std::invalid_argument("independent space limited to 20 events");
    std::vector<double> p(std::size_t{1} << m);
    std::vector<std::uint32_t> mem(p.size());
    for (std::uint32_t w = 0; w < p.size(); ++w) {
      double q = 1.0;
      for (int i = 0; i < m; ++i) q *= (w >> i) & 1u ? probs[i] : 1.0 - probs[i];
      p[w] = q;
      mem[w] = w;
    }
    FiniteEventSpace s(m, std::move(mem));
    s.probability_ = std::move(p);
    return s;
  }

  int num_events() const { return num_events_; }
  std::size_t num_outcomes() const { return membership_.size(); }
  bool exact() const { return !weight_.empty(); }
  std::span<const double> probabilities() const { return probability_; }
  std::span<const std::uint32_t> membership() const { return membership_; }
  std::uint64_t total_weight() const { return total_; }

  static std::uint32_t mask_of(std::span<const int> subset) {
    std::uint32_t mask = 0;
    for (int i : subset) mask |= 1u << i;
    return mask;
  }

  double event_probability(int event) const { return union_prob(1u << event); }

  /// P(at least one event in `mask` occurs).
  double union_prob(std::uint32_t mask) const {
    double u = 0.0;
    for (std::size_t j = 0; j < membership_.size(); ++j) {
      if (membership_[j] & mask) u += probability_[j];
    }
    return u;
  }

  /// Integer numerator of union_prob; requires an exact space.
  std::uint64_t union_weight(std::uint32_t mask) const {
    if (!exact()) throw std::logic_error("space has no integer weights");
    std::uint64_t u = 0;
    for (std::size_t j = 0; j < membership_.size(); ++j) {
      if (membership_[j] & mask) u += weight_[j];
    }
    return u;
  }

  /// P(exactly the events in `hit` occur among those in `subset`).
  double pattern_prob(std::uint32_t subset, std::uint32_t hit) const {
    double s = 0.0;
    for (std::size_t j = 0; j < membership_.size(); ++j) {
      if ((membership_[j] & subset) == hit) s += probability_[j];
    }
    return s;
  }

 private:
  FiniteEventSpace(int num_events, std::vector<std::uint32_t> membership)
      : num_events_(num_events), membership_(std::move(membership)) {
    if (num_events < 0 || num_events > 32) throw std::invalid_argument("between 0 and 32 events supported");
    const std::uint32_t all = num_events == 32 ? ~0u : (1u << num_events) - 1u;
    for (auto w : membership_) {
      if (w & ~all) throw std::invalid_argument("outcome references an unknown event");
    }
  }

  int num_events_ = 0;
  std::vector<std::uint32_t> membership_;
  std::vector<double> probability_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t total_ = 0;
};

struct Selection {
  std::vector<int> members;  // greedy order, or ascending for exhaustive search
  double value = 0.0;
};

inline constexpr int kBruteForceLimit = 20;

/// Calls `visit(mask)` for every k-subset of [m] in colexicographic order.
template <typename Visit>
void for_each_subset(int m, int k, Visit&& visit) {
  if (k < 0 || k > m) throw std::invalid_argument("subset size out of range");
  if (k == 0) {
    visit(0u);
    return;
  }
  std::uint32_t mask = (1u << k) - 1u;
  const std::uint32_t limit = 1u << m;
  while (mask < limit) {
    visit(mask);
    // Gosper's hack: next mask with the same popcount.
    const std::uint32_t c = mask & (~mask + 1u);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

inline std::vector<int> mask_members(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

namespace detail {

inline void check_brute_force(int m, int k) {
  if (m > kBruteForceLimit) {
    throw std::invalid_argument("exhaustive search refused for " + std::to_string(m) +
                                " items (limit " + std::to_string(kBruteForceLimit) + ")");
  }
  if (k < 0 || k > m) throw std::invalid_argument("portfolio size exceeds the number of items");
}

// Exhaustive argmax of `score(mask)`; the first maximizer in enumeration
// order wins ties.
template <typename Score, typename Less>
std::uint32_t argmax_subset(int m, int k, Score&& score, Less&& less) {
  bool have = false;
  std::uint32_t best = 0;
  decltype(score(0u)) best_value{};
  for_each_subset(m, k, [&](std::uint32_t mask) {
    const auto v = score(mask);
    if (!have || less(best_value, v)) {
      best = mask;
      best_value = v;
      have = true;
    }
  });
  return best;
}

}  // namespace detail

inline Selection brute_force_portfolio(const FiniteEventSpace& space, int k) {
  detail::check_brute_force(space.num_events(), k);
  std::uint32_t best;
  if (space.exact()) {
    best = detail::argmax_subset(space.num_events(), k, [&](std::uint32_t s) { return space.union_weight(s); },
                                 std::less<>());
  } else {
    best = detail::argmax_subset(space.num_events(), k, [&](std::uint32_t s) { return space.union_prob(s); },
                                 std::less<>());
  }
  return {mask_members(best), space.union_prob(best)};
}

inline Selection brute_force_portfolio(std::span<const double> probs, int k) {
  const int m = static_cast<int>(probs.size());
  detail::check_brute_force(m, k);
  auto miss = [&](std::uint32_t s) {
    double q = 1.0;
    for (int i : mask_members(s)) q *= 1.0 - probs[i];
    return q;
  };
  const std::uint32_t best = detail::argmax_subset(m, k, miss, std::greater<>());
  return {mask_members(best), 1.0 - miss(best)};
}

/// Greedy maximization of a set function. `gain(i)` is the marginal value of
/// adding item i to the current set, `add(i)` commits it. Ties go to the item
/// with the smaller `rank[i]`.
template <typename Gain, typename Add>
std::vector<int> greedy_select(int n, int k, std::span<const int> rank, Gain&& gain, Add&& add) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("portfolio size " + std::to_string(k) + " exceeds " + std::to_string(n) +
                                " candidates");
  }
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(k));
  for (int step = 0; step < k; ++step) {
    int best = -1;
    decltype(gain(0)) best_gain{};
    for (int i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const auto g = gain(i);
      if (best < 0 || g > best_gain || (g == best_gain && rank[i] < rank[best])) {
        best = i;
        best_gain = g;
      }
    }
    taken[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    add(best);
  }
  return order;
}

inline std::vector<int> identity_rank(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

/// Rank of each id under ascending lexicographic order.
inline std::vector<int> lexicographic_rank(std::span<const std::string> ids) {
  std::vector<int> idx = identity_rank(static_cast<int>(ids.size()));
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  std::vector<int> rank(ids.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[static_cast<std::size_t>(idx[r])] = static_cast<int>(r);
  return rank;
}

/// Greedy selection on a finite space; uses exact integer gains when
/// available.
inline Selection greedy_portfolio(const FiniteEventSpace& space, int k) {
  const int m = space.num_events();
  const auto rank = identity_rank(m);
  std::uint32_t chosen = 0;
  std::vector<int> order;
  if (space.exact()) {
    order = greedy_select(
        m, k, rank, [&](int i) { return space.union_weight(chosen | (1u << i)); },
        [&](int i) { chosen |= 1u << i; });
  } else {
    order = greedy_select(
        m, k, rank, [&](int i) { return space.union_prob(chosen | (1u << i)); },
        [&](int i) { chosen |= 1u << i; });
  }
  return {order, space.union_prob(chosen)};
}

/// Greedy selection for independent events; ties by `rank` (default index).
inline Selection greedy_portfolio(std::span<const double> probs, int k, std::span<const int> rank = {}) {
  const int n = static_cast<int>(probs.size());
  std::vector<int> own;
  if (rank.empty()) {
    own = identity_rank(n);
    rank = own;
  }
  double miss = 1.0;
  auto order = greedy_select(
      n, k, rank, [&](int i) { return miss * probs[i]; }, [&](int i) { miss *= 1.0 - probs[i]; });
  return {order, 1.0 - miss};
}

/// Indices of the k largest probabilities (ties by smaller index).
inline std::vector<int> top_k(std::span<const double> probs, int k) {
  if (k < 0 || k > static_cast<int>(probs.size())) throw std::invalid_argument("k out of range");
  auto idx = identity_rank(static_cast<int>(probs.size()));
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return probs[a] > probs[b]; });
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

namespace detail {

inline void check_returns(double a, double b) {
  if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("returns must satisfy 0 < a < b");
}

}  // namespace detail

/// E[ln(sum_{i in S} X_i / |S|)] with X_i = b on E_i and a otherwise,
/// summed directly over outcomes.
inline double log_return_objective(const FiniteEventSpace& space, std::uint32_t subset, double a, double b) {
  detail::check_returns(a, b);
  const int k = std::popcount(subset);
  if (k == 0) throw std::invalid_argument("log return needs a nonempty portfolio");
  const auto probs = space.probabilities();
  const auto mem = space.membership();
  double v = 0.0;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    if (probs[j] == 0.0) continue;
    const int wins = std::popcount(mem[j] & subset);
    v += probs[j] * std::log((wins * b + (k - wins) * a) / k);
  }
  return v;
}

/// Same quantity via ln a + sum_q P(at least q wins) ln(1 + (b-a)/((q-1)b + (k-q+1)a)).
inline double log_return_objective_by_levels(const FiniteEventSpace& space, std::uint32_t subset, double a,
                                             double b) {
  detail::check_returns(a, b);
  const int k = std::popcount(subset);
  if (k == 0) throw std::invalid_argument("log return needs a nonempty portfolio");
  std::vector<double> exactly(static_cast<std::size_t>(k) + 1, 0.0);
  const auto probs = space.probabilities();
  const auto mem = space.membership();
  for (std::size_t j = 0; j < probs.size(); ++j) exactly[std::popcount(mem[j] & subset)] += probs[j];
  double v = std::log(a);
  double at_least = 0.0;
  for (int q = k; q >= 1; --q) {
    at_least += exactly[static_cast<std::size_t>(q)];
    v += at_least * std::log1p((b - a) / ((q - 1) * b + (k - q + 1) * a));
  }
  return v;
}

/// Expected log return for independent events via the distribution of the
/// number of winners.
inline double log_return_independent(std::span<const double> probs, std::span<const int> subset, double a,
                                     double b) {
  detail::check_returns(a, b);
  const int k = static_cast<int>(subset.size());
  if (k == 0) throw std::invalid_argument("log return needs a nonempty portfolio");
  std::vector<double> dist{1.0};
  for (int i : subset) {
    const double p = probs[i];
    std::vector<double> next(dist.size() + 1, 0.0);
    for (std::size_t c = 0; c < dist.size(); ++c) {
      next[c] += dist[c] * (1.0 - p);
      next[c + 1] += dist[c] * p;
    }
    dist = std::move(next);
  }
  double v = 0.0;
  for (int c = 0; c <= k; ++c) v += dist[static_cast<std::size_t>(c)] * std::log((c * b + (k - c) * a) / k);
  return v;
}

/// Exhaustive maximizer of the expected log return over k-subsets.
inline Selection log_optimal_portfolio(const FiniteEventSpace& space, int k, double a, double b) {
  detail::check_brute_force(space.num_events(), k);
  const auto best = detail::argmax_subset(
      space.num_events(), k, [&](std::uint32_t s) { return log_return_objective(space, s, a, b); },
      std::less<>());
  return {mask_members(best), log_return_objective(space, best, a, b)};
}

inline Selection log_optimal_portfolio(std::span<const double> probs, int k, double a, double b) {
  detail::check_brute_force(static_cast<int>(probs.size()), k);
  const auto score = [&](std::uint32_t s) { return log_return_independent(probs, mask_members(s), a, b); };
  const auto best = detail::argmax_subset(static_cast<int>(probs.size()), k, score, std::less<>());
  return {mask_members(best), score(best)};
}

inline constexpr double kZeta3 = 1.2020569031595943;

/// Upper bound on (U(S_W) - U(S_L)) / U(S_W) for spaces whose k-subset
/// patterns stay within a factor (1 +- lambda) of Binomial(k, p).
inline double theorem5_bound(double lambda, int k, double p, double a, double b) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in [0, 1)");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
  if (p > 1.0 / k) {
    throw std::invalid_argument("the bound assumes p <= 1/k; got p = " + std::to_string(p) +
                                " with k = " + std::to_string(k));
  }
  detail::check_returns(a, b);
  const double spread = std::log1p((b - a) / (k * a));
  const double hit = -std::expm1(k * std::log1p(-p));
  return 2.0 * kZeta3 * lambda * k * p * (1.0 - p) / (spread * (1.0 - lambda) * hit);
}

/// Smallest lambda such that, for every k-subset S and every nonempty T in S,
/// P(exactly T wins within S) lies within (1 +- lambda) p^|T| (1-p)^(k-|T|).
inline double dependence_lambda(const FiniteEventSpace& space, int k, double p) {
  detail::check_brute_force(space.num_events(), k);
  double lambda = 0.0;
  for_each_subset(space.num_events(), k, [&](std::uint32_t s) {
    // Enumerate nonempty submasks of s.
    for (std::uint32_t t = s; t; t = (t - 1) & s) {
      const int l = std::popcount(t);
      const double ref = std::pow(p, l) * std::pow(1.0 - p, k - l);
      lambda = std::max(lambda, std::abs(space.pattern_prob(s, t) / ref - 1.0));
    }
  });
  return lambda;
}

struct CurvePoint {
  int size = 0;
  int exits = 0;
  double random_baseline = 0.0;
  int perfect = 0;
};

/// Cumulative exits along the portfolio order, with the random and perfect
/// reference lines. `exit_fraction` is the exit rate of the whole candidate
/// pool.
inline std::vector<CurvePoint> performance_curve(std::span<const std::string> ordered_ids,
                                                 const std::map<std::string, bool>& outcomes,
                                                 double exit_fraction) {
  std::vector<CurvePoint> out;
  int exits = 0;
  for (std::size_t i = 0; i < ordered_ids.size(); ++i) {
    auto it = outcomes.find(ordered_ids[i]);
    if (it == outcomes.end()) throw std::invalid_argument("no outcome label for company " + ordered_ids[i]);
    exits += it->second ? 1 : 0;
    const int size = static_cast<int>(i) + 1;
    out.push_back({size, exits, size * exit_fraction, size});
  }
  return out;
}

/// Exit fraction of every labeled company.
inline double exit_fraction(const std::map<std::string, bool>& outcomes) {
  if (outcomes.empty()) return 0.0;
  std::size_t n = 0;
  for (const auto& [id, exited] : outcomes) n += exited ? 1 : 0;
  return static_cast<double>(n) / static_cast<double>(outcomes.size());
}

}  // namespace pickwin
