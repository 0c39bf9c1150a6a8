// pickwin: command-line front end.
//
// Exit status: 0 success, 1 runtime failure, 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pickwin/pickwin.hpp"

#ifndef PICKWIN_CONFIG_DIR
#define PICKWIN_CONFIG_DIR "config"
#endif

namespace {

using namespace pickwin;
using io::ConfigError;
using io::json;
namespace fs = std::filesystem;

constexpr int kRuntimeFailure = 1;
constexpr int kUsageError = 2;

std::string options_string(const CLI::App& sub) {
  std::string s = sub.get_name();
  for (const auto* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "--out") continue;
    s += " " + opt->get_name() + "=";
    for (const auto& r : opt->results()) s += r + ";";
  }
  return s;
}

// Candidates for prediction year `year`: feature columns matching the model,
// optionally restricted to companies founded in `year` per `companies_path`.
CandidateSet load_candidates(const std::string& params_path, const std::string& features_path,
                             const std::string& companies_path, int year, int start_level) {
  const auto pj = io::read_json(params_path);
  CandidateSet c;
  c.model = io::params_from_json(pj, params_path);
  const auto names = io::feature_names_from_json(pj, params_path);
  c.founding_year = year;
  c.start_level = start_level;

  auto fm = io::read_features(features_path);
  if (!companies_path.empty()) {
    const auto years = io::read_founding_years(companies_path);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < fm.num_companies(); ++i) {
      const auto it = years.find(fm.company_ids[i]);
      if (it != years.end() && it->second == year) keep.push_back(i);
    }
    fm = fm.select_companies(keep);
  }
  if (fm.num_companies() == 0) throw ConfigError("no candidates founded in " + std::to_string(year));

  std::map<std::string, std::size_t> row;
  for (std::size_t r = 0; r < fm.num_features(); ++r) row[fm.feature_names[r]] = r;
  FeatureMatrix x(names, fm.company_ids);
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto it = row.find(names[k]);
    if (it == row.end()) throw ConfigError(features_path + ": missing feature column '" + names[k] + "'");
    for (std::size_t i = 0; i < fm.num_companies(); ++i) {
      if (!fm.observed(it->second, i)) {
        throw ConfigError(features_path + ": company '" + fm.company_ids[i] + "' has no value for '" + names[k] +
                          "' (run impute first)");
      }
      x.set(k, i, fm.values(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(i)));
    }
  }
  c.company_ids = x.company_ids;
  c.features = std::move(x);
  try {
    c.validate();
  } catch (const std::out_of_range& e) {
    throw ConfigError(params_path + ": " + e.what() + " (needed for prediction year " + std::to_string(year) + ")");
  }
  return c;
}

struct CandidateArgs {
  std::string params, candidates, companies, out;
  int year = 0;
  int start_level = 0;
  int draws = 50000;
  std::uint64_t seed = 0;

  void add(CLI::App* sub) {
    sub->add_option("--params", params, "Fitted parameters (params.json)")->required()->check(CLI::ExistingFile);
    sub->add_option("--candidates", candidates, "Candidate features CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--companies", companies, "companies.csv; keeps candidates founded in --year")
        ->check(CLI::ExistingFile);
    sub->add_option("--year", year, "Prediction (founding) year of the candidates")->required();
    sub->add_option("--start-level", start_level, "Round index the candidates start from")
        ->default_val(0)
        ->check(CLI::Range(0, kExitRound - 1));
    sub->add_option("--draws", draws, "Monte Carlo coefficient draws")->default_val(50000)->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "RNG seed")->default_val(0);
    sub->add_option("--out", out, "Output directory")->required();
  }

  std::vector<std::string> inputs() const {
    std::vector<std::string> v{params, candidates};
    if (!companies.empty()) v.push_back(companies);
    return v;
  }
};

int cmd_simulate(const CLI::App& sub, const std::string& config_path, const std::string& out,
                 std::optional<std::uint64_t> seed) {
  io::Manifest m{"simulate", {config_path}};
  auto cfg = io::sim_config_from_json(io::read_json(config_path), config_path);
  if (seed) cfg.rng_seed = *seed;
  const auto d = m.timings.time("simulate", [&] { return generate_dataset(cfg); });
  io::OutputDir dir(out);
  for (auto& [name, content] : io::dataset_files(d.histories, d.features)) dir.add(name, content);
  dir.add("ground_truth.json", io::ground_truth_json(d).dump(2) + "\n");
  csv::Writer outcomes({"company_id", "exited"});
  for (std::size_t c = 0; c < d.histories.size(); ++c) {
    outcomes.row({d.histories[c].company_id, d.eventual_exit[c] ? "1" : "0"});
  }
  dir.add("outcomes.csv", outcomes.str());
  m.rng_seed = cfg.rng_seed;
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("simulated %zu companies -> %s\n", d.histories.size(), out.c_str());
  return 0;
}

int cmd_features(const CLI::App& sub, const std::string& data, const std::string& out,
                 const std::string& sectors_path, const std::string& schools_path, bool include_self,
                 bool no_intercept, const std::string& leadership) {
  io::Manifest m{"features"};
  const auto raw = io::read_company_data(data);
  FeatureConfig cfg;
  if (!sectors_path.empty()) cfg.sectors = io::read_list(sectors_path);
  if (!schools_path.empty()) {
    const auto s = io::read_list(schools_path);
    cfg.top_schools.insert(s.begin(), s.end());
  }
  cfg.neighborhood.include_self_in_denominator = include_self;
  cfg.intercept = !no_intercept;
  cfg.leadership.leaders = leadership != "executives";
  cfg.leadership.executives = leadership != "leaders";
  const auto fm = m.timings.time("features", [&] {
    return build_features(raw.companies, raw.network, raw.people, raw.inputs, cfg);
  });
  csv::Writer founding({"company_id", "founding_year"});
  for (const auto& c : raw.companies) {
    const auto d = raw.network.founding_date(c);
    founding.row({c, std::to_string(year_of(*d))});
  }
  io::OutputDir dir(out);
  dir.add("features.csv", io::features_csv(fm));
  dir.add("founding.csv", founding.str());
  m.inputs = raw.files;
  if (!sectors_path.empty()) m.inputs.push_back(sectors_path);
  if (!schools_path.empty()) m.inputs.push_back(schools_path);
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("features for %zu companies -> %s\n", fm.num_companies(), out.c_str());
  return 0;
}

int cmd_impute(const CLI::App& sub, const std::string& features, const std::string& out,
               std::optional<double> lambda, double tol, int max_iter, const std::string& group_by) {
  io::Manifest m{"impute", {features}};
  const auto fm = io::read_features(features);
  SoftImputeOptions opt{lambda, tol, max_iter};
  json info;
  FeatureMatrix done;
  if (group_by.empty()) {
    const auto r = m.timings.time("impute", [&] { return soft_impute(fm, opt); });
    done = r.matrix;
    info = {{"lambda", r.lambda}, {"iterations", r.iterations}, {"converged", r.converged}, {"objective", r.objective}};
  } else {
    m.inputs.push_back(group_by);
    const auto years = io::read_founding_years(group_by);
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < fm.num_companies(); ++c) {
      const auto it = years.find(fm.company_ids[c]);
      if (it == years.end()) throw ConfigError(group_by + ": no founding_year for company '" + fm.company_ids[c] + "'");
      groups[it->second].push_back(c);
    }
    std::vector<std::vector<std::size_t>> parts;
    for (auto& [y, g] : groups) parts.push_back(g);
    done = m.timings.time("impute", [&] { return soft_impute_partitioned(fm, parts, opt); });
    info = {{"groups", parts.size()}};
  }
  io::OutputDir dir(out);
  dir.add("features_imputed.csv", io::features_csv(done));
  dir.add("impute.json", info.dump(2) + "\n");
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("imputed %zu x %zu -> %s\n", done.num_features(), done.num_companies(), out.c_str());
  return 0;
}

int cmd_fit(const CLI::App& sub, const std::string& data, const std::string& features, const std::string& out,
            const FitConfig& cfg, double delta_level, std::optional<int> first_year, std::optional<int> last_year) {
  const fs::path d(data);
  io::Manifest m{"fit", {(d / "companies.csv").string(), (d / "rounds.csv").string(),
                         features.empty() ? (d / "features.csv").string() : features}};
  auto ds = io::read_dataset(data, features);
  if (first_year || last_year) {
    std::vector<FundingHistory> kept;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < ds.histories.size(); ++c) {
      const int y = ds.histories[c].founding_year;
      if ((first_year && y < *first_year) || (last_year && y > *last_year)) continue;
      kept.push_back(ds.histories[c]);
      cols.push_back(c);
    }
    ds.features = ds.features.select_companies(cols);
    ds.histories = std::move(kept);
  }
  if (!ds.features.complete()) throw ConfigError("features contain missing values; run impute first");
  const auto r = m.timings.time("fit", [&] { return fit(ds.histories, ds.features, PriorConfig{}, cfg, delta_level); });
  io::OutputDir dir(out);
  dir.add("params.json", io::fit_to_json(r, ds.features.feature_names, cfg).dump(2) + "\n");
  m.rng_seed = cfg.rng_seed;
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("fit %zu companies: log-likelihood %.6f (restart %d) -> %s\n", ds.histories.size(), r.log_likelihood,
              r.best_restart, out.c_str());
  return 0;
}

int cmd_predict(const CLI::App& sub, const CandidateArgs& a) {
  io::Manifest m{"predict", a.inputs()};
  const auto c = load_candidates(a.params, a.candidates, a.companies, a.year, a.start_level);
  const McConfig mc{a.draws, a.seed};
  const auto table = m.timings.time("draws", [&] { return ProbabilityTable(c, mc); });
  const auto mean = table.mean_marginals();
  csv::Writer w({"company_id", "exit_probability", "standard_error", "point_estimate"});
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t idx[] = {i};
    const auto est = union_prob_correlated(table, idx);
    w.row({c.company_ids[i], csv::format_number(mean[i]), csv::format_number(est.standard_error),
           csv::format_number(table.point_estimates()[i])});
  }
  io::OutputDir dir(a.out);
  dir.add("predictions.csv", w.str());
  m.rng_seed = a.seed;
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("predicted %zu candidates -> %s\n", c.size(), a.out.c_str());
  return 0;
}

int cmd_portfolio(const CLI::App& sub, const CandidateArgs& a, int k, const std::string& objective,
                  const std::string& marginals) {
  io::Manifest m{"portfolio", a.inputs()};
  const auto c = load_candidates(a.params, a.candidates, a.companies, a.year, a.start_level);
  if (k > static_cast<int>(c.size())) {
    throw ConfigError("--k " + std::to_string(k) + " exceeds the " + std::to_string(c.size()) + " candidates");
  }
  McConfig mc{a.draws, a.seed};
  mc.marginals = marginals == "point" ? Marginals::point_estimate : Marginals::monte_carlo;
  const auto obj = objective == "independent" ? Objective::independent : Objective::correlated;
  const auto p = m.timings.time("portfolio", [&] { return greedy_portfolio(c, k, obj, mc); });
  io::OutputDir dir(a.out);
  dir.add("portfolio.csv", io::portfolio_csv(p));
  m.rng_seed = a.seed;
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("%s portfolio of %d from %zu candidates: objective %.6f -> %s\n", to_string(obj), k, c.size(),
              p.objective_trace.empty() ? 0.0 : p.objective_trace.back(), a.out.c_str());
  return 0;
}

int cmd_curve(const CLI::App& sub, const std::string& portfolio, const std::string& outcomes,
              const std::string& pool, const std::string& out) {
  io::Manifest m{"curve", {portfolio, outcomes}};
  const auto ids = io::read_portfolio_ids(portfolio);
  const auto labels = io::read_outcomes(outcomes);
  double fraction = exit_fraction(labels);
  if (!pool.empty()) {
    m.inputs.push_back(pool);
    const auto fm = io::read_features(pool);
    std::map<std::string, bool> subset;
    for (const auto& id : fm.company_ids) {
      const auto it = labels.find(id);
      if (it == labels.end()) throw ConfigError(outcomes + ": no outcome label for company " + id);
      subset.insert(*it);
    }
    fraction = exit_fraction(subset);
  }
  std::vector<CurvePoint> curve;
  try {
    curve = performance_curve(ids, labels, fraction);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(outcomes + ": " + e.what());
  }
  csv::Writer w({"size", "exits", "random_baseline", "perfect"});
  for (const auto& p : curve) {
    w.row({std::to_string(p.size), std::to_string(p.exits), csv::format_number(p.random_baseline),
           std::to_string(p.perfect)});
  }
  io::OutputDir dir(out);
  dir.add("curve.csv", w.str());
  dir.add("curve.svg", svg::performance_curve_svg(curve));
  m.config_hash = io::hash_inputs(m.inputs, options_string(sub));
  dir.commit(m);
  std::printf("curve: %d exits in %zu picks (random %.2f) -> %s\n", curve.empty() ? 0 : curve.back().exits,
              curve.size(), curve.empty() ? 0.0 : curve.back().random_baseline, out.c_str());
  return 0;
}

int cmd_theory_check(const CLI::App& sub, double lambda, int k, double p, double a, double b, std::uint64_t seed,
                     double scale, const std::string& out) {
  io::Manifest m{"theory-check"};
  const double bound = theorem5_bound(lambda, k, p, a, b);
  std::printf("theorem5_bound(lambda=%g, k=%d, p=%g, a=%g, b=%g) = %.6f\n", lambda, k, p, a, b, bound);

  auto n = [&](int base) { return std::max(1, static_cast<int>(base * scale)); };
  const std::vector<theory::SuiteResult> suites{
      theory::submodularity_suite(seed, n(200)), theory::greedy_guarantee_suite(seed + 1, n(100)),
      theory::independent_optimality_suite(seed + 2, n(100)), theory::log_optimal_suite(seed + 3, n(100)),
      theory::theorem5_suite(seed + 4, n(50))};
  std::printf("\n%-26s %7s %11s %9s\n", "suite", "cases", "violations", "seconds");
  bool ok = true;
  json js = json::array();
  for (const auto& s : suites) {
    std::printf("%-26s %7d %11d %9.3f\n", s.name.c_str(), s.cases, s.violations, s.seconds);
    ok = ok && s.passed();
    js.push_back({{"name", s.name}, {"cases", s.cases}, {"violations", s.violations}});
  }

  std::printf("\nbound table (p=%g, a=%g, b=%g)\n%8s", p, a, b, "lambda");
  const std::vector<int> ks{2, 5, 10, 20, 50};
  for (int kk : ks) std::printf(" %10s", ("k=" + std::to_string(kk)).c_str());
  std::printf("\n");
  json table = json::array();
  for (double l : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9}) {
    std::printf("%8.2f", l);
    for (int kk : ks) {
      if (p > 1.0 / kk) {
        std::printf(" %10s", "-");
        continue;
      }
      const double v = theorem5_bound(l, kk, p, a, b);
      std::printf(" %10.6f", v);
      table.push_back({{"lambda", l}, {"k", kk}, {"bound", v}});
    }
    std::printf("\n");
  }
  if (!out.empty()) {
    io::OutputDir dir(out);
    dir.add("theory.json", json{{"bound", bound},
                                {"inputs", {{"lambda", lambda}, {"k", k}, {"p", p}, {"a", a}, {"b", b}}},
                                {"suites", js},
                                {"table", table}}
                                   .dump(2) +
                               "\n");
    m.rng_seed = seed;
    m.config_hash = io::hash_inputs({}, options_string(sub));
    dir.commit(m);
  }
  return ok ? 0 : kRuntimeFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picking winners: first-passage funding model and portfolio construction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  auto* sim = app.add_subcommand("simulate", "Generate a synthetic dataset from a JSON config");
  std::string sim_config, sim_out;
  std::optional<std::uint64_t> sim_seed;
  sim->add_option("--config", sim_config, "Simulation config JSON")->required()->check(CLI::ExistingFile);
  sim->add_option("--out", sim_out, "Output directory")->required();
  sim->add_option("--seed", sim_seed, "Override the config rng_seed");

  auto* feat = app.add_subcommand("features", "Build the company feature matrix from raw CSVs");
  std::string feat_data, feat_out, feat_sectors, feat_schools, feat_leadership = "both";
  bool feat_self = false, feat_no_intercept = false;
  feat->add_option("--data", feat_data, "Directory with investments.csv and optional people/events/... CSVs")
      ->required()
      ->check(CLI::ExistingDirectory);
  feat->add_option("--out", feat_out, "Output directory")->required();
  feat->add_option("--sectors", feat_sectors, "Sector list, one per line")
      ->default_val(std::string(PICKWIN_CONFIG_DIR) + "/sectors.txt")
      ->check(CLI::ExistingFile);
  feat->add_option("--top-schools", feat_schools, "Top-school list, one per line")
      ->default_val(std::string(PICKWIN_CONFIG_DIR) + "/top_schools.txt")
      ->check(CLI::ExistingFile);
  feat->add_flag("--include-self", feat_self, "Count the company itself in the neighborhood denominator");
  feat->add_flag("--no-intercept", feat_no_intercept, "Omit the constant intercept column");
  feat->add_option("--leadership", feat_leadership, "Roles forming the leadership group")
      ->default_val("both")
      ->check(CLI::IsMember({"leaders", "executives", "both"}));

  auto* imp = app.add_subcommand("impute", "Fill missing features with Soft-Impute");
  std::string imp_in, imp_out, imp_group;
  std::optional<double> imp_lambda;
  double imp_tol = 1e-3;
  int imp_iter = 1000;
  imp->add_option("--features", imp_in, "Features CSV (empty cell = missing)")->required()->check(CLI::ExistingFile);
  imp->add_option("--out", imp_out, "Output directory")->required();
  imp->add_option("--lambda", imp_lambda, "Shrinkage (default: largest singular value / 100)");
  imp->add_option("--tol", imp_tol, "Relative change tolerance")->default_val(1e-3);
  imp->add_option("--max-iter", imp_iter, "Iteration cap")->default_val(1000);
  imp->add_option("--group-by", imp_group, "CSV with company_id, founding_year; impute each year separately")
      ->check(CLI::ExistingFile);

  auto* fitc = app.add_subcommand("fit", "MAP fit of the funding model");
  std::string fit_data, fit_features, fit_out;
  FitConfig fit_cfg;
  double fit_level = 10.0;
  std::optional<int> fit_first, fit_last;
  fitc->add_option("--data", fit_data, "Dataset directory (companies.csv, rounds.csv, features.csv)")
      ->required()
      ->check(CLI::ExistingDirectory);
  fitc->add_option("--features", fit_features, "Features CSV overriding <data>/features.csv")
      ->check(CLI::ExistingFile);
  fitc->add_option("--out", fit_out, "Output directory")->required();
  fitc->add_option("--restarts", fit_cfg.restarts, "Random restarts")->default_val(100)->check(CLI::PositiveNumber);
  fitc->add_option("--seed", fit_cfg.rng_seed, "RNG seed for the restarts")->default_val(0);
  fitc->add_option("--max-iter", fit_cfg.max_iterations, "BFGS iteration cap per restart")->default_val(500);
  fitc->add_option("--delta-level", fit_level, "Latent distance between rounds")
      ->default_val(10.0)
      ->check(CLI::PositiveNumber);
  fitc->add_option("--first-year", fit_first, "Earliest founding year to train on");
  fitc->add_option("--last-year", fit_last, "Latest founding year to train on");

  auto* pred = app.add_subcommand("predict", "Exit probabilities averaged over coefficient draws");
  CandidateArgs pred_args;
  pred_args.add(pred);

  auto* port = app.add_subcommand("portfolio", "Greedy portfolio construction");
  CandidateArgs port_args;
  port_args.add(port);
  int port_k = 20;
  std::string port_objective = "correlated", port_marginals = "mc";
  port->add_option("--k", port_k, "Portfolio size")->default_val(20)->check(CLI::NonNegativeNumber);
  port->add_option("--objective", port_objective, "Objective")
      ->default_val("correlated")
      ->check(CLI::IsMember({"independent", "correlated"}));
  port->add_option("--marginals", port_marginals, "Independent-objective marginals: mc (draw average) or point")
      ->default_val("mc")
      ->check(CLI::IsMember({"mc", "point"}));

  auto* curve = app.add_subcommand("curve", "Performance curve against realized outcomes");
  std::string curve_port, curve_outcomes, curve_pool, curve_out;
  curve->add_option("--portfolio", curve_port, "portfolio.csv")->required()->check(CLI::ExistingFile);
  curve->add_option("--outcomes", curve_outcomes, "CSV with company_id, exited")->required()->check(CLI::ExistingFile);
  curve->add_option("--pool", curve_pool, "Candidate features CSV; baseline uses its exit fraction")
      ->check(CLI::ExistingFile);
  curve->add_option("--out", curve_out, "Output directory")->required();

  auto* theory = app.add_subcommand("theory-check", "Run the portfolio property suites and print the bound table");
  double th_lambda = 0.5, th_p = 0.01, th_a = 1.0, th_b = 1e9, th_scale = 1.0;
  int th_k = 10;
  std::uint64_t th_seed = 0;
  std::string th_out;
  theory->add_option("--lambda", th_lambda, "Dependence level")->default_val(0.5)->check(CLI::Range(0.0, 1.0));
  theory->add_option("--k", th_k, "Portfolio size")->default_val(10)->check(CLI::PositiveNumber);
  theory->add_option("--p", th_p, "Marginal exit probability")->default_val(0.01);
  theory->add_option("--a", th_a, "Loss-state return")->default_val(1.0);
  theory->add_option("--b", th_b, "Exit return")->default_val(1e9);
  theory->add_option("--seed", th_seed, "Seed for the randomized suites")->default_val(0);
  theory->add_option("--scale", th_scale, "Multiplier on suite case counts")->default_val(1.0)->check(
      CLI::PositiveNumber);
  theory->add_option("--out", th_out, "Optional output directory for theory.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*sim) return cmd_simulate(*sim, sim_config, sim_out, sim_seed);
    if (*feat) {
      return cmd_features(*feat, feat_data, feat_out, feat_sectors, feat_schools, feat_self, feat_no_intercept,
                          feat_leadership);
    }
    if (*imp) return cmd_impute(*imp, imp_in, imp_out, imp_lambda, imp_tol, imp_iter, imp_group);
    if (*fitc) return cmd_fit(*fitc, fit_data, fit_features, fit_out, fit_cfg, fit_level, fit_first, fit_last);
    if (*pred) return cmd_predict(*pred, pred_args);
    if (*port) return cmd_portfolio(*port, port_args, port_k, port_objective, port_marginals);
    if (*curve) return cmd_curve(*curve, curve_port, curve_outcomes, curve_pool, curve_out);
    if (*theory) return cmd_theory_check(*theory, th_lambda, th_k, th_p, th_a, th_b, th_seed, th_scale, th_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const csv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  return kUsageError;
}
