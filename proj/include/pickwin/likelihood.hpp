#pragma once

// Censored likelihood of funding-round histories, the MAP objective over all
// model parameters, and the multi-start quasi-Newton fit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pickwin/bfgs.hpp"
#include "pickwin/feature_matrix.hpp"
#include "pickwin/fpt.hpp"
#include "pickwin/parallel.hpp"

namespace pickwin {

inline constexpr int kExitRound = 7;
inline constexpr double kSigmaSqFloor = 1e-6;

/// Observed rounds of one company. Times are in years since its first observed
/// round, so `round_times.front() == 0`.
struct FundingHistory {
  std::string company_id;
  int founding_year = 0;
  std::vector<int> round_indices;
  std::vector<double> round_times;
  double t_obs = 0.0;

  bool exited() const { return !round_indices.empty() && round_indices.back() == kExitRound; }

  void validate() const {
    const auto where = [&] { return "history " + company_id + ": "; };
    if (round_indices.empty() || round_indices.size() != round_times.size()) {
      throw std::invalid_argument(where() + "needs equal-length, nonempty round lists");
    }
    if (round_times.front() != 0.0) throw std::invalid_argument(where() + "first round time must be 0");
    for (std::size_t l = 0; l < round_indices.size(); ++l) {
      if (round_indices[l] < 0 || round_indices[l] > kExitRound) {
        throw std::invalid_argument(where() + "round index out of range 0..7");
      }
      if (l > 0 && round_indices[l] <= round_indices[l - 1]) {
        throw std::invalid_argument(where() + "round indices must be strictly increasing");
      }
      if (l > 0 && !(round_times[l] > round_times[l - 1])) {
        throw std::invalid_argument(where() + "round times must be strictly increasing");
      }
    }
    if (!(t_obs >= round_times.back())) {
      throw std::invalid_argument(where() + "observation time precedes the last round");
    }
  }
};

/// Year-indexed drift coefficients plus volatility, random-walk and timing
/// parameters.
struct ModelParams {
  std::map<int, std::vector<double>> beta;
  std::vector<double> gamma;
  std::vector<double> delta;
  double nu = 6.37;
  double tau = 4.83;
  double delta_level = 10.0;

  std::size_t num_features() const { return gamma.size(); }
  int first_year() const { return beta.begin()->first; }
  int last_year() const { return beta.rbegin()->first; }

  const std::vector<double>& beta_for(int year) const {
    auto it = beta.find(year);
    if (it == beta.end()) {
      throw std::out_of_range("no drift coefficients for year " + std::to_string(year));
    }
    return it->second;
  }

  void validate() const {
    if (beta.empty()) throw std::invalid_argument("model has no drift coefficients");
    const std::size_t m = gamma.size();
    if (delta.size() != m) throw std::invalid_argument("gamma and delta lengths differ");
    int expected = first_year();
    for (const auto& [year, coefs] : beta) {
      if (year != expected++) throw std::invalid_argument("beta years must be contiguous");
      if (coefs.size() != m) {
        throw std::invalid_argument("beta for year " + std::to_string(year) + " has wrong length");
      }
    }
    for (double d : delta) {
      if (!(d >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    }
    if (!(nu >= 0.0) || !(tau > 0.0) || !(delta_level > 0.0)) {
      throw std::invalid_argument("need nu >= 0, tau > 0, delta_level > 0");
    }
  }
};

struct PriorConfig {
  double beta_sd = 20.0;
  double gamma_sd = 20.0;
  double delta_mean = 1.0;
  double log_tau_min = -1e4;
  double log_tau_max = 1e4;
  double nu_min = 0.0;
  double nu_max = 100.0;
  // Lower end of the support of each delta. The random-walk normalizer
  // -ln(delta) is unbounded as delta -> 0, so the MAP problem needs a floor.
  double delta_min = 1e-3;

  void validate() const {
    if (!(beta_sd > 0.0) || !(gamma_sd > 0.0) || !(delta_mean > 0.0) || !(delta_min >= 0.0) ||
        !(log_tau_max > log_tau_min) || !(nu_max > nu_min)) {
      throw std::invalid_argument("invalid prior configuration");
    }
  }
};

struct FitConfig {
  int restarts = 100;
  int max_iterations = 500;
  double gradient_tolerance = 1e-6;
  std::uint64_t rng_seed = 0;
  unsigned threads = 0;  // 0: PICKWIN_THREADS or hardware concurrency
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("feature/coefficient length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// mu0 = beta' x, sigma0^2 = max((gamma' x)^2, floor).
inline DriftProfile drift_profile(std::span<const double> x, std::span<const double> beta,
                                  std::span<const double> gamma, double nu, double tau) {
  const double vol = dot(gamma, x);
  return {dot(beta, x), std::max(vol * vol, kSigmaSqFloor), nu, tau};
}

inline DriftProfile company_drift_profile(std::span<const double> x, int founding_year,
                                          const ModelParams& params) {
  if (x.size() != params.num_features()) {
    throw std::invalid_argument("feature vector has length " + std::to_string(x.size()) +
                                ", model expects " + std::to_string(params.num_features()));
  }
  return drift_profile(x, params.beta_for(founding_year), params.gamma, params.nu, params.tau);
}

/// Log-likelihood of one history with partials in its drift profile.
inline ProfileGradientTerm company_log_likelihood_with_gradient(const FundingHistory& h,
                                                                const DriftProfile& profile,
                                                                double delta_level) {
  ProfileGradientTerm total;
  auto add = [&](const ProfileGradientTerm& t) {
    total.value += t.value;
    total.d_mu0 += t.d_mu0;
    total.d_sigma0_sq += t.d_sigma0_sq;
    total.d_nu += t.d_nu;
    total.d_tau += t.d_tau;
  };
  for (std::size_t l = 1; l < h.round_indices.size(); ++l) {
    const PassageQuery q{h.round_times[l - 1], h.round_times[l],
                         delta_level * (h.round_indices[l] - h.round_indices[l - 1])};
    add(fpt_log_pdf_with_gradient(q, profile));
  }
  if (!h.exited()) {
    add(fpt_log_survival_with_gradient({h.round_times.back(), h.t_obs, delta_level}, profile));
  }
  return total;
}

inline double company_log_likelihood(const FundingHistory& h, const DriftProfile& profile,
                                     double delta_level) {
  h.validate();
  profile.validate();
  if (!(delta_level > 0.0)) throw std::invalid_argument("level spacing must be positive");
  return company_log_likelihood_with_gradient(h, profile, delta_level).value;
}

/// Maps ModelParams to the unconstrained vector the optimizer works in:
/// [beta_y0 .. beta_yK, gamma, log(delta - delta_min), logit-scaled nu, log tau].
class ParamLayout {
 public:
  ParamLayout(int first_year, int last_year, std::size_t num_features, const PriorConfig& priors)
      : first_year_(first_year), last_year_(last_year), m_(num_features), priors_(priors) {
    if (last_year < first_year) throw std::invalid_argument("empty year range");
  }

  int first_year() const { return first_year_; }
  int last_year() const { return last_year_; }
  std::size_t num_years() const { return static_cast<std::size_t>(last_year_ - first_year_ + 1); }
  std::size_t num_features() const { return m_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>((num_years() + 3) * m_ + 2); }

  Eigen::Index beta_offset(int year) const {
    return static_cast<Eigen::Index>(static_cast<std::size_t>(year - first_year_) * m_);
  }
  Eigen::Index gamma_offset() const { return static_cast<Eigen::Index>(num_years() * m_); }
  Eigen::Index delta_offset() const { return gamma_offset() + static_cast<Eigen::Index>(m_); }
  Eigen::Index nu_index() const { return delta_offset() + static_cast<Eigen::Index>(m_); }
  Eigen::Index tau_index() const { return nu_index() + 1; }

  /// Throws when a parameter sits on or outside the boundary of its support.
  Eigen::VectorXd pack(const ModelParams& p) const {
    if (p.first_year() != first_year_ || p.last_year() != last_year_ || p.num_features() != m_) {
      throw std::invalid_argument("parameters do not match the layout's years/features");
    }
    Eigen::VectorXd theta(size());
    for (const auto& [year, coefs] : p.beta) {
      for (std::size_t i = 0; i < m_; ++i) theta[beta_offset(year) + static_cast<Eigen::Index>(i)] = coefs[i];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      theta[gamma_offset() + k] = p.gamma[i];
      if (!(p.delta[i] > priors_.delta_min)) {
        throw std::domain_error("delta[" + std::to_string(i) + "] = " + std::to_string(p.delta[i]) +
                                " is not inside its support; project it above " +
                                std::to_string(priors_.delta_min));
      }
      theta[delta_offset() + k] = std::log(p.delta[i] - priors_.delta_min);
    }
    if (!(p.nu > priors_.nu_min && p.nu < priors_.nu_max)) {
      throw std::domain_error("nu = " + std::to_string(p.nu) +
                              " is on or outside its support; project it strictly inside (" +
                              std::to_string(priors_.nu_min) + ", " + std::to_string(priors_.nu_max) + ")");
    }
    const double log_tau = std::log(p.tau);
    if (!(log_tau > priors_.log_tau_min && log_tau < priors_.log_tau_max)) {
      throw std::domain_error("log(tau) is on or outside its support; project it strictly inside");
    }
    theta[nu_index()] = std::log((p.nu - priors_.nu_min) / (priors_.nu_max - p.nu));
    theta[tau_index()] = log_tau;
    return theta;
  }

  ModelParams unpack(const Eigen::VectorXd& theta, double delta_level) const {
    ModelParams p;
    p.delta_level = delta_level;
    for (int y = first_year_; y <= last_year_; ++y) {
      std::vector<double> coefs(m_);
      for (std::size_t i = 0; i < m_; ++i) coefs[i] = theta[beta_offset(y) + static_cast<Eigen::Index>(i)];
      p.beta.emplace(y, std::move(coefs));
    }
    p.gamma.resize(m_);
    p.delta.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      p.gamma[i] = theta[gamma_offset() + k];
      // Keep delta strictly inside its support even when exp() underflows.
      p.delta[i] = std::max(priors_.delta_min + std::exp(theta[delta_offset() + k]),
                            std::nextafter(priors_.delta_min, std::numeric_limits<double>::infinity()));
    }
    const double logistic = 1.0 / (1.0 + std::exp(-theta[nu_index()]));
    p.nu = priors_.nu_min + (priors_.nu_max - priors_.nu_min) * logistic;
    p.tau = std::exp(theta[tau_index()]);
    return p;
  }

 private:
  int first_year_;
  int last_year_;
  std::size_t m_;
  PriorConfig priors_;
};

struct PosteriorValue {
  double log_likelihood = 0.0;
  double log_prior = 0.0;
  double total() const { return log_likelihood + log_prior; }
};

/// Dataset log-posterior bound to one dataset. Feature columns are extracted
/// once; evaluation is a pure function of the parameters.
class PosteriorObjective {
 public:
  PosteriorObjective(std::span<const FundingHistory> histories, const FeatureMatrix& features,
                     const PriorConfig& priors)
      : histories_(histories.begin(), histories.end()), priors_(priors) {
    priors.validate();
    features.validate();
    if (histories.size() != features.num_companies()) {
      throw std::invalid_argument("dataset has " + std::to_string(histories.size()) +
                                  " histories but " + std::to_string(features.num_companies()) +
                                  " feature columns");
    }
    columns_.reserve(histories.size());
    for (std::size_t i = 0; i < histories.size(); ++i) {
      if (histories[i].company_id != features.company_ids[i]) {
        throw std::invalid_argument("feature column " + std::to_string(i) + " belongs to " +
                                    features.company_ids[i] + ", history to " +
                                    histories[i].company_id);
      }
      histories[i].validate();
      columns_.push_back(features.column(i));
    }
    num_features_ = features.num_features();
  }

  std::size_t num_features() const { return num_features_; }
  std::span<const FundingHistory> histories() const { return histories_; }

  std::pair<int, int> year_range() const {
    if (histories_.empty()) throw std::invalid_argument("empty dataset");
    int lo = histories_.front().founding_year;
    int hi = lo;
    for (const auto& h : histories_) {
      lo = std::min(lo, h.founding_year);
      hi = std::max(hi, h.founding_year);
    }
    return {lo, hi};
  }

  void check_coverage(const ModelParams& p) const {
    p.validate();
    if (p.num_features() != num_features_) {
      throw std::invalid_argument("model has " + std::to_string(p.num_features()) +
                                  " features, data has " + std::to_string(num_features_));
    }
    for (const auto& h : histories_) (void)p.beta_for(h.founding_year);
  }

  /// Sum of company log-likelihoods only.
  double log_likelihood(const ModelParams& p) const {
    check_coverage(p);
    double total = 0.0;
    for (std::size_t i = 0; i < histories_.size(); ++i) {
      const auto& h = histories_[i];
      const auto profile = drift_profile(columns_[i], p.beta_for(h.founding_year), p.gamma, p.nu, p.tau);
      total += company_log_likelihood_with_gradient(h, profile, p.delta_level).value;
    }
    return total;
  }

  PosteriorValue evaluate(const ModelParams& p) const {
    check_coverage(p);
    return evaluate_impl(p, nullptr, nullptr);
  }

  /// Value and gradient in the unconstrained coordinates of `layout`.
  PosteriorValue evaluate_with_gradient(const ParamLayout& layout, const Eigen::VectorXd& theta,
                                        double delta_level, Eigen::VectorXd& grad) const {
    const ModelParams p = layout.unpack(theta, delta_level);
    grad = Eigen::VectorXd::Zero(layout.size());
    const PosteriorValue v = evaluate_impl(p, &layout, &grad);
    // Chain rule from natural to unconstrained coordinates.
    for (std::size_t i = 0; i < layout.num_features(); ++i) {
      grad[layout.delta_offset() + static_cast<Eigen::Index>(i)] *= p.delta[i] - priors_.delta_min;
    }
    grad[layout.nu_index()] *=
        (p.nu - priors_.nu_min) * (priors_.nu_max - p.nu) / (priors_.nu_max - priors_.nu_min);
    grad[layout.tau_index()] *= p.tau;
    return v;
  }

 private:
  // With `grad` set, accumulates natural-coordinate partials (beta, gamma,
  // delta, nu, tau) into the layout's slots.
  PosteriorValue evaluate_impl(const ModelParams& p, const ParamLayout* layout,
                               Eigen::VectorXd* grad) const {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    PosteriorValue out;
    const std::size_t m = p.num_features();

    double d_nu = 0.0;
    double d_tau = 0.0;
    for (std::size_t i = 0; i < histories_.size(); ++i) {
      const auto& h = histories_[i];
      const auto& x = columns_[i];
      const auto& beta = p.beta_for(h.founding_year);
      const double vol = dot(p.gamma, x);
      const bool floored = vol * vol < kSigmaSqFloor;
      const DriftProfile profile{dot(beta, x), floored ? kSigmaSqFloor : vol * vol, p.nu, p.tau};
      const auto term = company_log_likelihood_with_gradient(h, profile, p.delta_level);
      out.log_likelihood += term.value;
      if (grad) {
        const Eigen::Index b = layout->beta_offset(h.founding_year);
        const Eigen::Index g = layout->gamma_offset();
        const double d_vol = floored ? 0.0 : term.d_sigma0_sq * 2.0 * vol;
        for (std::size_t k = 0; k < m; ++k) {
          (*grad)[b + static_cast<Eigen::Index>(k)] += term.d_mu0 * x[k];
          (*grad)[g + static_cast<Eigen::Index>(k)] += d_vol * x[k];
        }
        d_nu += term.d_nu;
        d_tau += term.d_tau;
      }
    }

    // Gaussian priors on the earliest year's beta and on gamma.
    const auto gaussian = [](double v, double sd) {
      return -0.5 * (v / sd) * (v / sd) - std::log(sd) - normal::log_sqrt_2pi;
    };
    const auto& root = p.beta.begin()->second;
    for (std::size_t k = 0; k < m; ++k) {
      out.log_prior += gaussian(root[k], priors_.beta_sd) + gaussian(p.gamma[k], priors_.gamma_sd);
      if (grad) {
        (*grad)[layout->beta_offset(p.first_year()) + static_cast<Eigen::Index>(k)] +=
            -root[k] / (priors_.beta_sd * priors_.beta_sd);
        (*grad)[layout->gamma_offset() + static_cast<Eigen::Index>(k)] +=
            -p.gamma[k] / (priors_.gamma_sd * priors_.gamma_sd);
      }
    }

    // Exponential prior on delta, restricted to (delta_min, inf).
    for (std::size_t k = 0; k < m; ++k) {
      if (!(p.delta[k] > priors_.delta_min)) {
        out.log_prior = neg_inf;
        return out;
      }
      out.log_prior += -std::log(priors_.delta_mean) - p.delta[k] / priors_.delta_mean;
      if (grad) (*grad)[layout->delta_offset() + static_cast<Eigen::Index>(k)] += -1.0 / priors_.delta_mean;
    }

    // Random-walk transitions between consecutive years.
    for (auto it = p.beta.begin(); std::next(it) != p.beta.end(); ++it) {
      const auto& prev = it->second;
      const auto& next = std::next(it)->second;
      for (std::size_t k = 0; k < m; ++k) {
        const double d = p.delta[k];
        const double gap = next[k] - prev[k];
        out.log_prior += -gap * gap / (2.0 * d * d) - std::log(d);
        if (grad) {
          const auto kk = static_cast<Eigen::Index>(k);
          (*grad)[layout->beta_offset(std::next(it)->first) + kk] += -gap / (d * d);
          (*grad)[layout->beta_offset(it->first) + kk] += gap / (d * d);
          (*grad)[layout->delta_offset() + kk] += gap * gap / (d * d * d) - 1.0 / d;
        }
      }
    }

    // Uniform supports for nu and log(tau).
    const double log_tau = std::log(p.tau);
    if (p.nu < priors_.nu_min || p.nu > priors_.nu_max || log_tau < priors_.log_tau_min ||
        log_tau > priors_.log_tau_max) {
      out.log_prior = neg_inf;
      return out;
    }
    if (grad) {
      (*grad)[layout->nu_index()] += d_nu;
      (*grad)[layout->tau_index()] += d_tau;
    }
    return out;
  }

  std::vector<FundingHistory> histories_;
  std::vector<std::vector<double>> columns_;
  std::size_t num_features_ = 0;
  PriorConfig priors_;
};

/// Sum of company log-likelihoods plus all prior and random-walk terms;
/// -inf outside the prior supports.
inline double dataset_log_posterior(std::span<const FundingHistory> histories,
                                    const FeatureMatrix& features, const ModelParams& params,
                                    const PriorConfig& priors = {}) {
  return PosteriorObjective(histories, features, priors).evaluate(params).total();
}

/// Gradient of the log-posterior in the unconstrained coordinates
/// (see ParamLayout). The layout spans the years present in `params`.
inline Eigen::VectorXd log_posterior_gradient(std::span<const FundingHistory> histories,
                                              const FeatureMatrix& features,
                                              const ModelParams& params,
                                              const PriorConfig& priors = {}) {
  const PosteriorObjective objective(histories, features, priors);
  objective.check_coverage(params);
  const ParamLayout layout(params.first_year(), params.last_year(), params.num_features(), priors);
  const Eigen::VectorXd theta = layout.pack(params);
  Eigen::VectorXd grad;
  objective.evaluate_with_gradient(layout, theta, params.delta_level, grad);
  return grad;
}

struct RestartSummary {
  int index = 0;
  double log_posterior = -std::numeric_limits<double>::infinity();
  double log_likelihood = -std::numeric_limits<double>::infinity();
  int iterations = 0;
  optim::BfgsStatus status = optim::BfgsStatus::line_search_failed;
  bool failed = true;
};

struct FitResult {
  ModelParams params;
  double log_posterior = 0.0;
  double log_likelihood = 0.0;
  int best_restart = 0;
  std::vector<RestartSummary> restarts;
};

/// Raised when no restart made progress; carries the best partial iterate.
class FitError : public std::runtime_error {
 public:
  FitError(const std::string& what, std::optional<ModelParams> best)
      : std::runtime_error(what), best_partial(std::move(best)) {}
  std::optional<ModelParams> best_partial;
};

/// Randomized starting point for restart `index`; depends only on
/// (seed, index).
inline Eigen::VectorXd random_start(const ParamLayout& layout, const PriorConfig& priors,
                                    std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), 0x5eedu};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> log_delta(-2.0, 2.0);
  std::uniform_real_distribution<double> nu(1.0, 15.0);
  std::uniform_real_distribution<double> log_tau(0.0, 3.0);

  ModelParams p;
  const std::size_t m = layout.num_features();
  for (int y = layout.first_year(); y <= layout.last_year(); ++y) {
    std::vector<double> coefs(m);
    for (auto& c : coefs) c = unit(rng) * priors.beta_sd / 20.0;
    p.beta.emplace(y, std::move(coefs));
  }
  p.gamma.resize(m);
  p.delta.resize(m);
  for (auto& g : p.gamma) g = unit(rng) * priors.gamma_sd / 20.0;
  for (auto& d : p.delta) d = priors.delta_min + std::exp(log_delta(rng));
  p.nu = std::clamp(nu(rng), std::nextafter(priors.nu_min, priors.nu_max),
                    std::nextafter(priors.nu_max, priors.nu_min));
  p.tau = std::exp(log_tau(rng));
  return layout.pack(p);
}

/// Multi-start MAP fit. Every restart is an independent BFGS run; the result
/// is the restart with the largest in-sample log-likelihood (ties: lowest
/// restart index).
inline FitResult fit(std::span<const FundingHistory> histories, const FeatureMatrix& features,
                     const PriorConfig& priors, const FitConfig& config, double delta_level = 10.0) {
  if (config.restarts < 1) throw std::invalid_argument("fit needs at least one restart");
  if (histories.empty()) throw std::invalid_argument("fit needs a nonempty dataset");
  bool any_transition = false;
  for (const auto& h : histories) any_transition = any_transition || h.round_indices.size() > 1;
  if (!any_transition) throw std::invalid_argument("fit needs at least one observed transition");

  const PosteriorObjective objective(histories, features, priors);
  const auto [first, last] = objective.year_range();
  const ParamLayout layout(first, last, objective.num_features(), priors);

  optim::BfgsOptions options;
  options.max_iterations = config.max_iterations;
  options.gradient_tolerance = config.gradient_tolerance;

  const auto n = static_cast<std::size_t>(config.restarts);
  std::vector<RestartSummary> summaries(n);
  std::vector<Eigen::VectorXd> solutions(n);
  parallel::parallel_for(
      n,
      [&](std::size_t r) {
        const Eigen::VectorXd start = random_start(layout, priors, config.rng_seed, static_cast<int>(r));
        auto negative_posterior = [&](const Eigen::VectorXd& theta, Eigen::VectorXd& grad) {
          const auto v = objective.evaluate_with_gradient(layout, theta, delta_level, grad);
          grad = -grad;
          return -v.total();
        };
        const auto result = optim::bfgs_minimize(negative_posterior, start, options);
        auto& s = summaries[r];
        s.index = static_cast<int>(r);
        s.iterations = result.iterations;
        s.status = result.status;
        s.log_posterior = -result.value;
        s.failed = !std::isfinite(result.value) ||
                   (result.status == optim::BfgsStatus::line_search_failed && result.iterations == 0);
        if (std::isfinite(result.value)) {
          s.log_likelihood = objective.log_likelihood(layout.unpack(result.x, delta_level));
        }
        solutions[r] = result.x;
      },
      config.threads);

  std::optional<std::size_t> best;
  std::optional<std::size_t> best_partial;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& s = summaries[r];
    if (std::isfinite(s.log_likelihood) &&
        (!best_partial || s.log_likelihood > summaries[*best_partial].log_likelihood)) {
      best_partial = r;
    }
    if (s.failed) continue;
    if (!best || s.log_likelihood > summaries[*best].log_likelihood) best = r;
  }
  if (!best) {
    std::optional<ModelParams> partial;
    if (best_partial) partial = layout.unpack(solutions[*best_partial], delta_level);
    throw FitError("all " + std::to_string(n) + " restarts failed their line search", partial);
  }

  FitResult out;
  out.params = layout.unpack(solutions[*best], delta_level);
  const auto value = objective.evaluate(out.params);
  out.log_posterior = value.total();
  out.log_likelihood = value.log_likelihood;
  out.best_restart = static_cast<int>(*best);
  out.restarts = std::move(summaries);
  return out;
}

}  // namespace pickwin
