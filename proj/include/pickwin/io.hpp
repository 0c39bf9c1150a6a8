#pragma once

// File formats: dataset CSVs, parameter/config JSON, run manifests, and
// all-or-nothing output directories.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pickwin/csv.hpp"
#include "pickwin/exit_model.hpp"
#include "pickwin/feature_matrix.hpp"
#include "pickwin/features.hpp"
#include "pickwin/likelihood.hpp"
#include "pickwin/simulator.hpp"

namespace pickwin::io {

using nlohmann::json;
namespace fs = std::filesystem;

inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed user input (bad config or schema); maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

inline csv::Table read_csv(const std::string& path) {
  if (!fs::exists(path)) throw ConfigError("cannot open " + path);
  return csv::read_file(path);
}

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---------------------------------------------------------------- JSON fields

inline const json& field(const json& j, const std::string& name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw ConfigError(where + ": missing field '" + name + "'");
  return j.at(name);
}

template <typename T>
T get(const json& j, const std::string& name, const std::string& where) {
  const auto& v = field(j, name, where);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": field '" + name + "' has the wrong type");
  }
}

template <typename T>
T get_or(const json& j, const std::string& name, T fallback, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) return fallback;
  return get<T>(j, name, where);
}

// ------------------------------------------------------------------- params

inline json params_to_json(const ModelParams& p, const std::vector<std::string>& feature_names) {
  json beta = json::object();
  for (const auto& [y, b] : p.beta) beta[std::to_string(y)] = b;
  return {{"feature_names", feature_names}, {"beta", beta},   {"gamma", p.gamma},
          {"delta", p.delta},               {"nu", p.nu},     {"tau", p.tau},
          {"delta_level", p.delta_level}};
}

inline ModelParams params_from_json(const json& j, const std::string& where) {
  ModelParams p;
  const auto& beta = field(j, "beta", where);
  if (!beta.is_object() || beta.empty()) throw ConfigError(where + ": field 'beta' must map years to vectors");
  for (const auto& [key, value] : beta.items()) {
    int year = 0;
    try {
      std::size_t used = 0;
      year = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ConfigError(where + ": beta key '" + key + "' is not a year");
    }
    try {
      p.beta[year] = value.get<std::vector<double>>();
    } catch (const json::exception&) {
      throw ConfigError(where + ": beta[" + key + "] must be a list of numbers");
    }
  }
  p.gamma = get<std::vector<double>>(j, "gamma", where);
  p.delta = get<std::vector<double>>(j, "delta", where);
  p.nu = get_or<double>(j, "nu", 6.37, where);
  p.tau = get_or<double>(j, "tau", 4.83, where);
  p.delta_level = get_or<double>(j, "delta_level", 10.0, where);
  return p;
}

inline std::vector<std::string> feature_names_from_json(const json& j, const std::string& where) {
  return get<std::vector<std::string>>(j, "feature_names", where);
}

inline json fit_to_json(const FitResult& r, const std::vector<std::string>& names, const FitConfig& cfg) {
  json out = params_to_json(r.params, names);
  out["rng_seed"] = cfg.rng_seed;
  out["log_posterior"] = r.log_posterior;
  out["log_likelihood"] = r.log_likelihood;
  out["best_restart"] = r.best_restart;
  json restarts = json::array();
  for (const auto& s : r.restarts) {
    restarts.push_back({{"index", s.index},
                        {"log_posterior", std::isfinite(s.log_posterior) ? json(s.log_posterior) : json()},
                        {"log_likelihood", std::isfinite(s.log_likelihood) ? json(s.log_likelihood) : json()},
                        {"iterations", s.iterations},
                        {"status", optim::to_string(s.status)},
                        {"failed", s.failed}});
  }
  out["restarts"] = restarts;
  return out;
}

// ------------------------------------------------------------ simulator config

inline FeatureSampler sampler_from_json(const json& j, const std::string& where) {
  FeatureSampler f;
  f.name = get<std::string>(j, "name", where);
  const auto w = where + " feature '" + f.name + "'";
  const auto kind = get<std::string>(j, "kind", w);
  if (kind == "constant") {
    f.kind = FeatureSampler::Kind::constant;
    f.value = get<double>(j, "value", w);
  } else if (kind == "uniform") {
    f.kind = FeatureSampler::Kind::uniform;
    f.low = get<double>(j, "low", w);
    f.high = get<double>(j, "high", w);
  } else if (kind == "categorical") {
    f.kind = FeatureSampler::Kind::categorical;
    f.values = get<std::vector<double>>(j, "values", w);
    f.weights = get_or<std::vector<double>>(j, "weights", {}, w);
  } else {
    throw ConfigError(w + ": unknown kind '" + kind + "' (expected constant, uniform or categorical)");
  }
  return f;
}

/// Either {"companies_per_year": n, "years": [first, last]} or
/// {"companies_per_year": {"2000": n, ...}}.
inline SimConfig sim_config_from_json(const json& j, const std::string& where) {
  SimConfig cfg;
  cfg.true_params = params_from_json(field(j, "true_params", where), where + " true_params");
  const auto& features = field(j, "feature_sampler", where);
  if (!features.is_array()) throw ConfigError(where + ": field 'feature_sampler' must be a list");
  for (const auto& f : features) cfg.features.push_back(sampler_from_json(f, where));
  const auto& counts = field(j, "companies_per_year", where);
  if (counts.is_object()) {
    for (const auto& [key, value] : counts.items()) {
      if (!value.is_number_integer()) throw ConfigError(where + ": companies_per_year[" + key + "] must be an integer");
      try {
        cfg.companies_per_year[std::stoi(key)] = value.get<int>();
      } catch (const std::invalid_argument&) {
        throw ConfigError(where + ": companies_per_year key '" + key + "' is not a year");
      }
    }
  } else {
    const int n = get<int>(j, "companies_per_year", where);
    const auto years = get<std::vector<int>>(j, "years", where);
    if (years.size() != 2 || years[1] < years[0]) {
      throw ConfigError(where + ": field 'years' must be [first, last] with first <= last");
    }
    for (int y = years[0]; y <= years[1]; ++y) cfg.companies_per_year[y] = n;
  }
  cfg.t_obs = get<double>(j, "t_obs", where);
  cfg.rng_seed = get<std::uint64_t>(j, "rng_seed", where);
  cfg.path_step = get_or<double>(j, "path_step", 1.0 / 365.0, where);
  cfg.start_level = get_or<int>(j, "start_level", 0, where);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return cfg;
}

// ------------------------------------------------------------------ datasets

inline std::string features_csv(const FeatureMatrix& fm) {
  std::vector<std::string> header{"company_id"};
  header.insert(header.end(), fm.feature_names.begin(), fm.feature_names.end());
  csv::Writer w(header);
  for (std::size_t c = 0; c < fm.num_companies(); ++c) {
    std::vector<std::string> row{fm.company_ids[c]};
    for (std::size_t k = 0; k < fm.num_features(); ++k) {
      row.push_back(fm.observed(k, c) ? csv::format_number(fm.values(static_cast<Eigen::Index>(k),
                                                                        static_cast<Eigen::Index>(c)))
                                      : "");
    }
    w.row(row);
  }
  return w.str();
}

inline FeatureMatrix read_features(const std::string& path) {
  const auto t = read_csv(path);
  const auto id_col = t.column_index("company_id");
  std::vector<std::string> names;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i == id_col) continue;
    names.push_back(t.header[i]);
    cols.push_back(i);
  }
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (!seen.insert(t.at(r, id_col)).second) t.fail(r, id_col, "duplicate company_id '" + t.at(r, id_col) + "'");
    ids.push_back(t.at(r, id_col));
  }
  FeatureMatrix fm(names, ids);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (auto v = t.optional_number(r, cols[k])) fm.set(k, r, *v);
  return fm;
}

struct Dataset {
  std::vector<FundingHistory> histories;
  FeatureMatrix features;  // columns aligned with histories
};

/// companies.csv: company_id, founding_year, t_obs (years since the first round).
/// rounds.csv: company_id, round_index, time (years since the first round).
inline std::map<std::string, std::string> dataset_files(const std::vector<FundingHistory>& histories,
                                                        const FeatureMatrix& features) {
  csv::Writer companies({"company_id", "founding_year", "t_obs"});
  csv::Writer rounds({"company_id", "round_index", "time"});
  for (const auto& h : histories) {
    companies.row({h.company_id, std::to_string(h.founding_year), csv::format_number(h.t_obs)});
    for (std::size_t i = 0; i < h.round_indices.size(); ++i) {
      rounds.row({h.company_id, std::to_string(h.round_indices[i]), csv::format_number(h.round_times[i])});
    }
  }
  return {{"companies.csv", companies.str()}, {"rounds.csv", rounds.str()}, {"features.csv", features_csv(features)}};
}

inline std::vector<FundingHistory> read_histories(const std::string& companies_path, const std::string& rounds_path) {
  const auto ct = read_csv(companies_path);
  const auto c_id = ct.column_index("company_id");
  const auto c_year = ct.column_index("founding_year");
  const auto c_obs = ct.column_index("t_obs");
  std::vector<FundingHistory> out;
  std::map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < ct.rows.size(); ++r) {
    FundingHistory h;
    h.company_id = ct.at(r, c_id);
    h.founding_year = static_cast<int>(ct.integer(r, c_year));
    h.t_obs = ct.number(r, c_obs);
    if (!index.emplace(h.company_id, out.size()).second) ct.fail(r, c_id, "duplicate company_id '" + h.company_id + "'");
    out.push_back(std::move(h));
  }
  const auto rt = read_csv(rounds_path);
  const auto r_id = rt.column_index("company_id");
  const auto r_idx = rt.column_index("round_index");
  const auto r_time = rt.column_index("time");
  for (std::size_t r = 0; r < rt.rows.size(); ++r) {
    const auto it = index.find(rt.at(r, r_id));
    if (it == index.end()) rt.fail(r, r_id, "company '" + rt.at(r, r_id) + "' is not listed in " + companies_path);
    auto& h = out[it->second];
    const long idx = rt.integer(r, r_idx);
    if (idx < 0 || idx > kExitRound) rt.fail(r, r_idx, "round_index must lie in [0, 7]");
    const double time = rt.number(r, r_time);
    if (!h.round_times.empty() && !(time > h.round_times.back() && idx > h.round_indices.back())) {
      rt.fail(r, r_time, "rounds of '" + h.company_id + "' must be listed in increasing time and index order");
    }
    h.round_indices.push_back(static_cast<int>(idx));
    h.round_times.push_back(time);
  }
  for (const auto& h : out) {
    try {
      h.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(rounds_path + ": " + e.what());
    }
  }
  return out;
}

/// Reorders feature columns to follow `ids`; every id must be present.
inline FeatureMatrix align_features(const FeatureMatrix& fm, const std::vector<std::string>& ids,
                                    const std::string& source) {
  std::map<std::string, std::size_t> col;
  for (std::size_t c = 0; c < fm.num_companies(); ++c) col[fm.company_ids[c]] = c;
  std::vector<std::size_t> order;
  for (const auto& id : ids) {
    const auto it = col.find(id);
    if (it == col.end()) throw ConfigError(source + ": no feature row for company '" + id + "'");
    order.push_back(it->second);
  }
  return fm.select_companies(order);
}

inline Dataset read_dataset(const std::string& dir, const std::string& features_path = "") {
  const fs::path d(dir);
  Dataset out;
  out.histories = read_histories((d / "companies.csv").string(), (d / "rounds.csv").string());
  const auto fpath = features_path.empty() ? (d / "features.csv").string() : features_path;
  std::vector<std::string> ids;
  for (const auto& h : out.histories) ids.push_back(h.company_id);
  out.features = align_features(read_features(fpath), ids, fpath);
  return out;
}

inline json ground_truth_json(const SimDataset& d) {
  json companies = json::array();
  for (std::size_t c = 0; c < d.histories.size(); ++c) {
    const auto& p = d.profiles[c];
    const int start = d.histories[c].round_indices.front();
    companies.push_back({{"company_id", d.histories[c].company_id},
                         {"mu0", p.mu0},
                         {"sigma0_sq", p.sigma0_sq},
                         {"first_round_time", d.first_round_time[c]},
                         {"eventual_exit", static_cast<bool>(d.eventual_exit[c])},
                         {"exit_probability", fpt_cdf_limit(p, 0.0, (kExitRound - start) * d.params.delta_level)}});
  }
  return {{"params", params_to_json(d.params, d.features.feature_names)}, {"companies", companies}};
}

/// Outcomes: company_id, exited (0/1).
inline std::map<std::string, bool> read_outcomes(const std::string& path) {
  const auto t = read_csv(path);
  const auto c_id = t.column_index("company_id");
  const auto c_ex = t.column_index("exited");
  std::map<std::string, bool> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (!out.emplace(t.at(r, c_id), t.boolean(r, c_ex)).second) {
      t.fail(r, c_id, "duplicate company_id '" + t.at(r, c_id) + "'");
    }
  }
  return out;
}

/// Candidate founding years: company_id, founding_year.
inline std::map<std::string, int> read_founding_years(const std::string& path) {
  const auto t = read_csv(path);
  const auto c_id = t.column_index("company_id");
  const auto c_year = t.column_index("founding_year");
  std::map<std::string, int> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) out[t.at(r, c_id)] = static_cast<int>(t.integer(r, c_year));
  return out;
}

inline std::string portfolio_csv(const Portfolio& p) {
  csv::Writer w({"rank", "company_id", "exit_probability", "objective_value", "marginal_gain"});
  for (std::size_t i = 0; i < p.ordered_ids.size(); ++i) {
    w.row({std::to_string(i + 1), p.ordered_ids[i], csv::format_number(p.exit_probability[i]),
           csv::format_number(p.objective_trace[i]), csv::format_number(p.marginal_gains[i])});
  }
  return w.str();
}

inline std::vector<std::string> read_portfolio_ids(const std::string& path) {
  const auto t = read_csv(path);
  const auto c_rank = t.column_index("rank");
  const auto c_id = t.column_index("company_id");
  std::vector<std::pair<long, std::string>> ranked;
  for (std::size_t r = 0; r < t.rows.size(); ++r) ranked.emplace_back(t.integer(r, c_rank), t.at(r, c_id));
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> out;
  for (auto& [rank, id] : ranked) out.push_back(std::move(id));
  return out;
}

// ------------------------------------------------------------ raw company data

struct RawCompanyData {
  InvestorNetwork network;
  std::vector<PersonnelRecord> people;
  CompanyInputs inputs;
  std::vector<std::string> companies;  // every company with a funding record, sorted
  std::vector<std::string> files;      // files actually read
};

namespace detail {

template <typename Fn>
auto parse_cell(const csv::Table& t, std::size_t r, std::size_t c, Fn&& fn) {
  try {
    return fn(t.at(r, c));
  } catch (const std::invalid_argument& e) {
    t.fail(r, c, e.what());
  }
}

inline std::map<std::string, std::set<std::string>> read_person_values(const std::string& path) {
  std::map<std::string, std::set<std::string>> out;
  const auto t = read_csv(path);
  const auto c_id = t.column_index("person_id");
  const auto c_v = t.column_index("value");
  for (std::size_t r = 0; r < t.rows.size(); ++r) out[t.at(r, c_id)].insert(t.at(r, c_v));
  return out;
}

}  // namespace detail

/// Reads investments.csv (required) and, when present, events.csv,
/// people.csv, affiliations.csv, schools.csv, majors.csv, sectors.csv and
/// similarity.csv from `dir`.
inline RawCompanyData read_company_data(const std::string& dir) {
  const fs::path d(dir);
  RawCompanyData out;
  auto present = [&](const char* name) {
    const auto p = (d / name).string();
    if (!fs::exists(p)) return std::string();
    out.files.push_back(p);
    return p;
  };

  const auto inv_path = (d / "investments.csv").string();
  out.files.push_back(inv_path);
  const auto inv = read_csv(inv_path);
  std::vector<Investment> edges;
  {
    const auto c_inv = inv.column_index("investor_id");
    const auto c_co = inv.column_index("company_id");
    const auto c_date = inv.column_index("date");
    std::set<std::string> companies;
    for (std::size_t r = 0; r < inv.rows.size(); ++r) {
      edges.push_back({inv.at(r, c_inv), inv.at(r, c_co), detail::parse_cell(inv, r, c_date, parse_date)});
      companies.insert(inv.at(r, c_co));
    }
    out.companies.assign(companies.begin(), companies.end());
  }

  std::map<std::string, std::vector<CompanyEvent>> events;
  if (const auto p = present("events.csv"); !p.empty()) {
    const auto t = read_csv(p);
    const auto c_co = t.column_index("company_id");
    const auto c_ev = t.column_index("event");
    const auto c_date = t.column_index("date");
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      events[t.at(r, c_co)].push_back(
          {detail::parse_cell(t, r, c_ev, parse_event_kind), detail::parse_cell(t, r, c_date, parse_date)});
    }
  }
  out.network = InvestorNetwork(std::move(edges), std::move(events));

  if (const auto p = present("people.csv"); !p.empty()) {
    std::map<std::string, std::set<std::string>> affiliations, schools, majors;
    if (const auto a = present("affiliations.csv"); !a.empty()) affiliations = detail::read_person_values(a);
    if (const auto a = present("schools.csv"); !a.empty()) schools = detail::read_person_values(a);
    if (const auto a = present("majors.csv"); !a.empty()) majors = detail::read_person_values(a);
    const auto t = read_csv(p);
    const auto c_person = t.column_index("person_id");
    const auto c_co = t.column_index("company_id");
    const auto c_role = t.column_index("role");
    const auto c_degree = t.column_index("degree");
    const auto c_year = t.column_index("undergrad_year");
    const auto c_founded = t.column_index("previously_founded");
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      PersonnelRecord rec;
      rec.person_id = t.at(r, c_person);
      rec.company_id = t.at(r, c_co);
      rec.role = detail::parse_cell(t, r, c_role, parse_role);
      rec.degree = detail::parse_cell(t, r, c_degree, parse_degree);
      if (!t.at(r, c_year).empty()) rec.undergrad_year = static_cast<int>(t.integer(r, c_year));
      rec.previously_founded = t.at(r, c_founded).empty() ? false : t.boolean(r, c_founded);
      if (auto it = affiliations.find(rec.person_id); it != affiliations.end()) rec.prior_companies = it->second;
      if (auto it = schools.find(rec.person_id); it != schools.end()) rec.schools = it->second;
      if (auto it = majors.find(rec.person_id); it != majors.end()) rec.majors = it->second;
      out.people.push_back(std::move(rec));
    }
  }

  if (const auto p = present("sectors.csv"); !p.empty()) {
    const auto t = read_csv(p);
    const auto c_co = t.column_index("company_id");
    const auto c_s = t.column_index("sector");
    for (std::size_t r = 0; r < t.rows.size(); ++r) out.inputs.sectors[t.at(r, c_co)].insert(t.at(r, c_s));
  }
  if (const auto p = present("similarity.csv"); !p.empty()) {
    const auto t = read_csv(p);
    const auto c_co = t.column_index("company_id");
    const auto c_v = t.column_index("value");
    for (std::size_t r = 0; r < t.rows.size(); ++r) out.inputs.similarity[t.at(r, c_co)] = t.number(r, c_v);
  }
  return out;
}

/// One entry per non-empty line; '#' starts a comment.
inline std::vector<std::string> read_list(const std::string& path) {
  std::istringstream in(read_text(path));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    if (b < line.size()) out.push_back(line.substr(b));
  }
  return out;
}

// ------------------------------------------------------------------ outputs

struct Timings {
  std::vector<std::pair<std::string, double>> seconds;

  template <typename Fn>
  auto time(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      seconds.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    } else {
      auto r = fn();
      seconds.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      return r;
    }
  }
};

struct Manifest {
  std::string command;
  std::vector<std::string> inputs;
  std::string config_hash;
  std::uint64_t rng_seed = 0;
  Timings timings;

  json to_json() const {
    json t = json::object();
    for (const auto& [k, v] : timings.seconds) t[k] = v;
    return {{"command", command},       {"inputs", inputs},       {"config_hash", config_hash},
            {"rng_seed", rng_seed},     {"tool_version", kToolVersion}, {"timings_seconds", t}};
  }
};

/// Hash of the input file bytes in order, plus the effective options string.
inline std::string hash_inputs(const std::vector<std::string>& paths, const std::string& options) {
  std::string bytes;
  for (const auto& p : paths) {
    bytes += p;
    bytes += '\0';
    bytes += read_text(p);
    bytes += '\0';
  }
  bytes += options;
  return hex64(fnv1a(bytes));
}

/// Files staged in memory and committed together: each is written to a
/// temporary sibling then renamed, and a failure removes what was written.
class OutputDir {
 public:
  explicit OutputDir(std::string dir) : dir_(std::move(dir)) {}

  void add(const std::string& name, std::string content) { files_[name] = std::move(content); }

  void commit(const Manifest& manifest) {
    add("manifest.json", manifest.to_json().dump(2) + "\n");
    fs::create_directories(dir_);
    std::vector<fs::path> temps;
    try {
      for (const auto& [name, content] : files_) {
        const auto tmp = fs::path(dir_) / ("." + name + ".tmp");
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        temps.push_back(tmp);
        out << content;
        out.close();
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
      }
    } catch (...) {
      for (const auto& t : temps) fs::remove(t);
      throw;
    }
    std::size_t i = 0;
    for (const auto& [name, content] : files_) fs::rename(temps[i++], fs::path(dir_) / name);
  }

  const std::map<std::string, std::string>& files() const { return files_; }

 private:
  std::string dir_;
  std::map<std::string, std::string> files_;
};

}  // namespace pickwin::io
