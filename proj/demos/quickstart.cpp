// Simulate a market, fit the model on earlier cohorts, and pick a portfolio
// from the newest cohort. Usage: quickstart [companies_per_year] [restarts]

#include <cstdio>
#include <cstdlib>
#include <map>
#include <vector>

#include "pickwin/pickwin.hpp"

using namespace pickwin;

int main(int argc, char** argv) {
  const int per_year = argc > 1 ? std::atoi(argv[1]) : 400;
  const int restarts = argc > 2 ? std::atoi(argv[2]) : 8;

  SimConfig sim;
  sim.features = {{"intercept", FeatureSampler::Kind::constant, 1.0},
                  {"investor_neighborhood", FeatureSampler::Kind::uniform},
                  {"executive_ipo", FeatureSampler::Kind::categorical}};
  sim.features[2].values = {0.0, 1.0};
  sim.features[2].weights = {0.8, 0.2};
  sim.true_params.beta[2000] = {2.0, 3.0, 2.0};
  sim.true_params.gamma = {2.0, 0.5, 0.5};
  sim.true_params.delta = {0.2, 0.2, 0.2};
  for (int y = 2000; y <= 2004; ++y) sim.companies_per_year[y] = per_year;
  sim.t_obs = 2011.0;
  sim.rng_seed = 42;
  const auto data = generate_dataset(sim);

  // Train on 2000-2003.
  std::vector<FundingHistory> train;
  std::vector<std::size_t> train_cols, test_cols;
  for (std::size_t c = 0; c < data.histories.size(); ++c) {
    if (data.histories[c].founding_year < 2004) {
      train.push_back(data.histories[c]);
      train_cols.push_back(c);
    } else {
      test_cols.push_back(c);
    }
  }
  FitConfig fc;
  fc.restarts = restarts;
  fc.rng_seed = 1;
  const auto fitted = fit(train, data.features.select_companies(train_cols), PriorConfig{}, fc);
  std::printf("fit: log-likelihood %.3f, nu %.2f (true 6.37), tau %.2f (true 4.83)\n", fitted.log_likelihood,
              fitted.params.nu, fitted.params.tau);
  for (const auto& [year, beta] : fitted.params.beta) {
    std::printf("  beta[%d] =", year);
    for (double b : beta) std::printf(" %7.3f", b);
    std::printf("   true:");
    for (double b : data.params.beta.at(year)) std::printf(" %7.3f", b);
    std::printf("\n");
  }

  CandidateSet cands;
  cands.features = data.features.select_companies(test_cols);
  cands.company_ids = cands.features.company_ids;
  cands.founding_year = 2004;
  cands.model = fitted.params;
  McConfig mc;
  mc.draws = 5000;
  mc.rng_seed = 7;
  const auto port = greedy_portfolio(cands, 20, Objective::correlated, mc);

  std::map<std::string, bool> outcomes;
  for (auto c : test_cols) outcomes[data.histories[c].company_id] = data.eventual_exit[c];
  const auto curve = performance_curve(port.ordered_ids, outcomes, exit_fraction(outcomes));
  std::printf("\nrank  company        p(exit)  U(S)     exited\n");
  for (std::size_t i = 0; i < port.ordered_ids.size(); ++i) {
    std::printf("%4zu  %-12s  %.4f   %.4f   %s\n", i + 1, port.ordered_ids[i].c_str(), port.exit_probability[i],
                port.objective_trace[i], outcomes.at(port.ordered_ids[i]) ? "yes" : "no");
  }
  std::printf("\n%d of %zu picks exit; random baseline %.2f\n", curve.back().exits, curve.size(),
              curve.back().random_baseline);
  return 0;
}
