#pragma once

// Exit probabilities of candidate companies under the fitted model, averaged
// over the unknown prediction-year coefficients, and portfolio construction
// on top of them.

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pickwin/feature_matrix.hpp"
#include "pickwin/fpt.hpp"
#include "pickwin/likelihood.hpp"
#include "pickwin/parallel.hpp"
#include "pickwin/portfolio.hpp"

namespace pickwin {

/// Companies founded in `founding_year`, scored with a model trained through
/// the previous year.
struct CandidateSet {
  std::vector<std::string> company_ids;
  FeatureMatrix features;
  int founding_year = 0;
  ModelParams model;
  // Round index each candidate starts from; the exit level is 7 - start.
  int start_level = 0;

  std::size_t size() const { return company_ids.size(); }

  void validate() const {
    model.validate();
    features.validate();
    if (features.company_ids != company_ids) {
      throw std::invalid_argument("candidate ids and feature columns differ");
    }
    if (features.num_features() != model.num_features()) {
      throw std::invalid_argument("candidate features do not match the model's feature count");
    }
    if (!features.complete()) throw std::invalid_argument("candidate features have missing entries");
    (void)model.beta_for(founding_year - 1);
    if (start_level < 0 || start_level >= kExitRound) throw std::invalid_argument("start level out of range");
  }
};

/// Exit probability of a company with features `x` when the drift
/// coefficients equal `beta_draw`.
inline double exit_probability(std::span<const double> x, const ModelParams& model,
                               std::span<const double> beta_draw, int start_level = 0) {
  if (beta_draw.size() != x.size() || model.gamma.size() != x.size()) {
    throw std::invalid_argument("coefficient and feature lengths differ");
  }
  const auto profile = drift_profile(x, beta_draw, model.gamma, model.nu, model.tau);
  return fpt_cdf_limit(profile, 0.0, (kExitRound - start_level) * model.delta_level);
}

enum class Objective { independent, correlated };

inline const char* to_string(Objective o) {
  return o == Objective::independent ? "independent" : "correlated";
}

enum class Marginals {
  monte_carlo,     // average each company's probability over the draws
  point_estimate,  // evaluate at the mean coefficients
};

struct McConfig {
  int draws = 50000;
  std::uint64_t rng_seed = 0;
  unsigned threads = 0;
  Marginals marginals = Marginals::monte_carlo;
};

/// Exit probabilities for D coefficient draws x N candidates, row-major by
/// draw. With zero random-walk scale every draw is identical and a single
/// row is kept.
class ProbabilityTable {
 public:
  ProbabilityTable(const CandidateSet& candidates, const McConfig& mc) : n_(candidates.size()) {
    candidates.validate();
    if (mc.draws < 1) throw std::invalid_argument("need at least one draw");
    const auto& mean = candidates.model.beta_for(candidates.founding_year - 1);
    const auto& delta = candidates.model.delta;
    bool degenerate = true;
    for (double d : delta) degenerate = degenerate && d == 0.0;
    d_ = degenerate ? 1 : static_cast<std::size_t>(mc.draws);

    // Draws are generated sequentially so they do not depend on thread count.
    const std::size_t m = mean.size();
    std::vector<double> betas(d_ * m);
    std::mt19937_64 rng(mc.rng_seed);
    std::normal_distribution<double> gauss;
    for (std::size_t d = 0; d < d_; ++d) {
      for (std::size_t j = 0; j < m; ++j) {
        betas[d * m + j] = degenerate ? mean[j] : mean[j] + delta[j] * gauss(rng);
      }
    }

    std::vector<std::vector<double>> columns;
    columns.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) columns.push_back(candidates.features.column(i));

    table_.resize(d_ * n_);
    parallel::parallel_for(
        d_,
        [&](std::size_t d) {
          const std::span<const double> beta(betas.data() + d * m, m);
          for (std::size_t i = 0; i < n_; ++i) {
            table_[d * n_ + i] = exit_probability(columns[i], candidates.model, beta, candidates.start_level);
          }
        },
        mc.threads);

    point_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      point_[i] = exit_probability(columns[i], candidates.model, mean, candidates.start_level);
    }
  }

  std::size_t draws() const { return d_; }
  std::size_t candidates() const { return n_; }
  double operator()(std::size_t draw, std::size_t candidate) const { return table_[draw * n_ + candidate]; }
  std::span<const double> row(std::size_t draw) const { return {table_.data() + draw * n_, n_}; }

  /// Per-candidate probability averaged over the draws.
  std::vector<double> mean_marginals() const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t d = 0; d < d_; ++d)
      for (std::size_t i = 0; i < n_; ++i) out[i] += table_[d * n_ + i];
    for (auto& v : out) v /= static_cast<double>(d_);
    return out;
  }

  /// Probabilities at the mean coefficients.
  const std::vector<double>& point_estimates() const { return point_; }

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<double> table_;
  std::vector<double> point_;
};

struct McEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// 1 - mean_d prod_{i in subset} (1 - p_i(beta_d)) with its MC standard error.
inline McEstimate union_prob_correlated(const ProbabilityTable& table, std::span<const std::size_t> subset) {
  const std::size_t d_count = table.draws();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t d = 0; d < d_count; ++d) {
    double miss = 1.0;
    for (auto i : subset) miss *= 1.0 - table(d, i);
    sum += miss;
    sum_sq += miss * miss;
  }
  const double n = static_cast<double>(d_count);
  const double mean = sum / n;
  const double var = d_count > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  return {1.0 - mean, std::sqrt(var / n)};
}

struct Portfolio {
  std::vector<std::string> ordered_ids;
  std::vector<std::size_t> ordered_index;
  std::vector<double> exit_probability;  // marginal used for reporting
  std::vector<double> objective_trace;
  std::vector<double> marginal_gains;
  Objective objective = Objective::correlated;
  std::size_t draws = 0;
};

/// Greedy portfolio of size k. The correlated objective reuses one draw set
/// for every evaluation; ties go to the lexicographically smaller id.
inline Portfolio greedy_portfolio(const CandidateSet& candidates, const ProbabilityTable& table, int k,
                                  Objective objective, Marginals marginals = Marginals::monte_carlo) {
  const int n = static_cast<int>(candidates.size());
  if (table.candidates() != candidates.size()) throw std::invalid_argument("table does not match candidates");
  if (k < 0 || k > n) {
    throw std::invalid_argument("portfolio size " + std::to_string(k) + " exceeds " + std::to_string(n) +
                                " candidates");
  }
  const auto rank = lexicographic_rank(candidates.company_ids);
  const std::vector<double> p =
      marginals == Marginals::monte_carlo ? table.mean_marginals() : table.point_estimates();

  Portfolio out;
  out.objective = objective;
  out.draws = table.draws();
  std::vector<int> order;
  if (objective == Objective::independent) {
    double miss = 1.0;
    auto gain = [&](int i) { return miss * p[static_cast<std::size_t>(i)]; };
    order = greedy_select(n, k, rank, gain, [&](int i) {
      out.marginal_gains.push_back(gain(i));
      miss *= 1.0 - p[static_cast<std::size_t>(i)];
      out.objective_trace.push_back(1.0 - miss);
    });
  } else {
    const std::size_t d_count = table.draws();
    std::vector<double> miss(d_count, 1.0);
    // Gains are reported exactly as compared, which keeps them nonincreasing
    // in floating point: miss[d] only ever shrinks.
    auto gain = [&](int i) {
      double g = 0.0;
      for (std::size_t d = 0; d < d_count; ++d) g += miss[d] * table(d, static_cast<std::size_t>(i));
      return g / static_cast<double>(d_count);
    };
    order = greedy_select(n, k, rank, gain, [&](int i) {
      out.marginal_gains.push_back(gain(i));
      double total = 0.0;
      for (std::size_t d = 0; d < d_count; ++d) {
        miss[d] *= 1.0 - table(d, static_cast<std::size_t>(i));
        total += miss[d];
      }
      out.objective_trace.push_back(1.0 - total / static_cast<double>(d_count));
    });
  }
  for (int i : order) {
    const auto idx = static_cast<std::size_t>(i);
    out.ordered_index.push_back(idx);
    out.ordered_ids.push_back(candidates.company_ids[idx]);
    out.exit_probability.push_back(p[idx]);
  }
  return out;
}

inline Portfolio greedy_portfolio(const CandidateSet& candidates, int k, Objective objective,
                                  const McConfig& mc = {}) {
  const ProbabilityTable table(candidates, mc);
  return greedy_portfolio(candidates, table, k, objective, mc.marginals);
}

}  // namespace pickwin
