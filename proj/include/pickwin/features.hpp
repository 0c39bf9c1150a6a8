#pragma once

// Company features from the investor network and personnel records. Every
// feature of a company is computed from records dated strictly before its
// first funding date, except the company's own first-round edges.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pickwin/feature_matrix.hpp"

namespace pickwin {

using Date = std::chrono::sys_days;

/// Parses YYYY-MM-DD.
inline Date parse_date(const std::string& text) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d-%u-%u%c", &y, &m, &d, &tail) != 3) {
    throw std::invalid_argument("bad date '" + text + "', expected YYYY-MM-DD");
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) throw std::invalid_argument("invalid calendar date '" + text + "'");
  return Date{ymd};
}

inline std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

inline int year_of(Date d) { return static_cast<int>(std::chrono::year_month_day{d}.year()); }

enum class CompanyEventKind { founded, ipo, acquired };

inline CompanyEventKind parse_event_kind(const std::string& s) {
  if (s == "Founded" || s == "founded") return CompanyEventKind::founded;
  if (s == "IPO" || s == "ipo") return CompanyEventKind::ipo;
  if (s == "Acquired" || s == "acquired") return CompanyEventKind::acquired;
  throw std::invalid_argument("unknown company event '" + s + "' (expected IPO, Acquired or Founded)");
}

struct Investment {
  std::string investor_id;
  std::string company_id;
  Date date;
};

struct CompanyEvent {
  CompanyEventKind kind;
  Date date;
};

/// Investor-company edges and dated company milestones.
class InvestorNetwork {
 public:
  InvestorNetwork() = default;

  InvestorNetwork(std::vector<Investment> edges, std::map<std::string, std::vector<CompanyEvent>> events)
      : edges_(std::move(edges)), events_(std::move(events)) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      by_company_[edges_[e].company_id].push_back(e);
      by_investor_[edges_[e].investor_id].push_back(e);
    }
    std::set<std::string> companies;
    for (const auto& [c, _] : by_company_) companies.insert(c);
    for (const auto& [c, _] : events_) companies.insert(c);
    for (const auto& c : companies) {
      if (auto d = founding_date(c)) founding_dates_.push_back(*d);
    }
    std::sort(founding_dates_.begin(), founding_dates_.end());
  }

  std::span<const Investment> edges() const { return edges_; }

  /// Founded event if present, otherwise the earliest funding date.
  std::optional<Date> founding_date(const std::string& company) const {
    if (auto it = events_.find(company); it != events_.end()) {
      std::optional<Date> best;
      for (const auto& e : it->second) {
        if (e.kind == CompanyEventKind::founded && (!best || e.date < *best)) best = e.date;
      }
      if (best) return best;
    }
    return first_funding_date(company);
  }

  std::optional<Date> first_funding_date(const std::string& company) const {
    auto it = by_company_.find(company);
    if (it == by_company_.end()) return std::nullopt;
    Date best = edges_[it->second.front()].date;
    for (auto e : it->second) best = std::min(best, edges_[e].date);
    return best;
  }

  /// Earliest date of the given outcome, if any.
  std::optional<Date> outcome_date(const std::string& company, CompanyEventKind kind) const {
    auto it = events_.find(company);
    if (it == events_.end()) return std::nullopt;
    std::optional<Date> best;
    for (const auto& e : it->second) {
      if (e.kind == kind && (!best || e.date < *best)) best = e.date;
    }
    return best;
  }

  /// Investors with an edge into `company` dated on or before `t`.
  std::set<std::string> investors_of(const std::string& company, Date t) const {
    std::set<std::string> out;
    if (auto it = by_company_.find(company); it != by_company_.end()) {
      for (auto e : it->second) {
        if (edges_[e].date <= t) out.insert(edges_[e].investor_id);
      }
    }
    return out;
  }

  /// Investors in the company's earliest funding round.
  std::set<std::string> initial_investors(const std::string& company) const {
    const auto first = first_funding_date(company);
    if (!first) return {};
    return investors_of(company, *first);
  }

  /// Companies other than `exclude` backed by `investor` strictly before `t`.
  std::set<std::string> portfolio_of(const std::string& investor, Date t, const std::string& exclude) const {
    std::set<std::string> out;
    if (auto it = by_investor_.find(investor); it != by_investor_.end()) {
      for (auto e : it->second) {
        if (edges_[e].date < t && edges_[e].company_id != exclude) out.insert(edges_[e].company_id);
      }
    }
    return out;
  }

  /// Number of known companies founded strictly before `t`.
  std::size_t companies_founded_before(Date t) const {
    return static_cast<std::size_t>(std::lower_bound(founding_dates_.begin(), founding_dates_.end(), t) -
                                    founding_dates_.begin());
  }

 private:
  std::vector<Investment> edges_;
  std::map<std::string, std::vector<CompanyEvent>> events_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_company_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_investor_;
  std::vector<Date> founding_dates_;
};

struct NeighborhoodOptions {
  // Whether the company itself counts in the "founded before t" denominator.
  bool include_self_in_denominator = false;
};

/// Share of companies founded before `t` that have at least one investor in
/// common with `company`.
inline double investor_neighborhood(const InvestorNetwork& net, const std::string& company, Date t,
                                    const NeighborhoodOptions& opt = {}) {
  const auto investors = net.investors_of(company, t);
  if (investors.empty()) return 0.0;
  std::set<std::string> neighbors;
  for (const auto& j : investors) {
    for (const auto& c : net.portfolio_of(j, t, company)) {
      const auto founded = net.founding_date(c);
      if (founded && *founded < t) neighbors.insert(c);
    }
  }
  std::size_t denom = net.companies_founded_before(t);
  const auto self_founded = net.founding_date(company);
  const bool self_counted = self_founded && *self_founded < t;
  if (self_counted && !opt.include_self_in_denominator) --denom;
  if (!self_counted && opt.include_self_in_denominator) ++denom;
  if (denom == 0) return 0.0;
  return static_cast<double>(neighbors.size()) / static_cast<double>(denom);
}

/// Largest, over the company's initial investors j, of the fraction of j's
/// portfolio (before `t`) that reached `outcome` before `t`.
inline double max_outcome_fraction(const InvestorNetwork& net, const std::string& company, Date t,
                                   CompanyEventKind outcome) {
  double best = 0.0;
  for (const auto& j : net.initial_investors(company)) {
    const auto portfolio = net.portfolio_of(j, t, company);
    if (portfolio.empty()) continue;
    std::size_t hits = 0;
    for (const auto& c : portfolio) {
      const auto d = net.outcome_date(c, outcome);
      if (d && *d < t) ++hits;
    }
    best = std::max(best, static_cast<double>(hits) / static_cast<double>(portfolio.size()));
  }
  return best;
}

struct OverlapStats {
  double mean = 0.0;
  double sd = 0.0;
};

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

/// Mean and population standard deviation of pairwise Jaccard indices;
/// nullopt with fewer than two members.
inline std::optional<OverlapStats> jaccard_overlap_stats(std::span<const std::set<std::string>> members) {
  if (members.size() < 2) return std::nullopt;
  std::vector<double> values;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) values.push_back(jaccard(members[i], members[j]));
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return OverlapStats{mean, std::sqrt(var)};
}

enum class Role { leader, executive, advisor, employee };
enum class Degree { unknown, highschool, bachelors, masters, phd };

inline Role parse_role(const std::string& s) {
  if (s == "leader" || s == "founder") return Role::leader;
  if (s == "executive") return Role::executive;
  if (s == "advisor") return Role::advisor;
  if (s == "employee") return Role::employee;
  throw std::invalid_argument("unknown role '" + s + "'");
}

inline Degree parse_degree(const std::string& s) {
  if (s.empty() || s == "unknown") return Degree::unknown;
  if (s == "highschool") return Degree::highschool;
  if (s == "bachelors") return Degree::bachelors;
  if (s == "masters") return Degree::masters;
  if (s == "phd") return Degree::phd;
  throw std::invalid_argument("unknown degree '" + s + "'");
}

// Lower is stronger. Leaders and executives share the leadership tier.
inline int role_priority(Role r) {
  switch (r) {
    case Role::leader: return 0;
    case Role::executive: return 0;
    case Role::advisor: return 1;
    case Role::employee: return 2;
  }
  return 3;
}

struct PersonnelRecord {
  std::string person_id;
  std::string company_id;
  Role role = Role::employee;
  std::set<std::string> prior_companies;
  std::set<std::string> schools;
  std::set<std::string> majors;
  Degree degree = Degree::unknown;
  std::optional<int> undergrad_year;
  bool previously_founded = false;
};

/// One record per person for `company`; a person listed under several roles
/// keeps the strongest one. Set fields are merged.
inline std::vector<PersonnelRecord> company_members(std::span<const PersonnelRecord> records,
                                                    const std::string& company) {
  std::map<std::string, PersonnelRecord> by_person;
  for (const auto& r : records) {
    if (r.company_id != company) continue;
    auto [it, fresh] = by_person.try_emplace(r.person_id, r);
    if (fresh) continue;
    auto& m = it->second;
    if (role_priority(r.role) < role_priority(m.role) ||
        (role_priority(r.role) == role_priority(m.role) && r.role == Role::leader)) {
      m.role = r.role;
    }
    m.prior_companies.insert(r.prior_companies.begin(), r.prior_companies.end());
    m.schools.insert(r.schools.begin(), r.schools.end());
    m.majors.insert(r.majors.begin(), r.majors.end());
    m.degree = std::max(m.degree, r.degree);
    if (!m.undergrad_year) m.undergrad_year = r.undergrad_year;
    m.previously_founded = m.previously_founded || r.previously_founded;
  }
  std::vector<PersonnelRecord> out;
  for (auto& [_, r] : by_person) {
    r.prior_companies.erase(company);
    out.push_back(std::move(r));
  }
  return out;
}

struct LeadershipOptions {
  bool leaders = true;
  bool executives = true;
};

inline bool in_leadership(const PersonnelRecord& r, const LeadershipOptions& opt = {}) {
  return (opt.leaders && r.role == Role::leader) || (opt.executives && r.role == Role::executive);
}

/// Mean of 22 + founding_year - undergrad_year over members with a known year.
inline std::optional<double> leadership_age(std::span<const PersonnelRecord> members, int founding_year) {
  double sum = 0.0;
  int n = 0;
  for (const auto& m : members) {
    if (!m.undergrad_year) continue;
    sum += 22.0 + founding_year - *m.undergrad_year;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

struct AffiliationFlags {
  bool job_ipo = false;
  bool job_acquired = false;
  bool executive_ipo = false;
  bool executive_acquired = false;
  bool advisory_ipo = false;
  bool advisory_acquired = false;
};

/// Whether someone in each role category was at a prior company that had an
/// IPO or was acquired before `t`.
inline AffiliationFlags binary_affiliation_features(std::span<const PersonnelRecord> members,
                                                    const InvestorNetwork& net, Date t) {
  AffiliationFlags f;
  for (const auto& m : members) {
    bool ipo = false, acq = false;
    for (const auto& c : m.prior_companies) {
      const auto di = net.outcome_date(c, CompanyEventKind::ipo);
      const auto da = net.outcome_date(c, CompanyEventKind::acquired);
      ipo = ipo || (di && *di < t);
      acq = acq || (da && *da < t);
    }
    switch (m.role) {
      case Role::leader:
      case Role::executive:
        f.executive_ipo = f.executive_ipo || ipo;
        f.executive_acquired = f.executive_acquired || acq;
        break;
      case Role::advisor:
        f.advisory_ipo = f.advisory_ipo || ipo;
        f.advisory_acquired = f.advisory_acquired || acq;
        break;
      case Role::employee:
        f.job_ipo = f.job_ipo || ipo;
        f.job_acquired = f.job_acquired || acq;
        break;
    }
  }
  return f;
}

struct FeatureConfig {
  std::vector<std::string> sectors;      // one indicator column per entry
  std::set<std::string> top_schools;
  LeadershipOptions leadership;
  NeighborhoodOptions neighborhood;
  bool intercept = true;
};

struct CompanyInputs {
  std::map<std::string, std::set<std::string>> sectors;  // company -> sector labels
  std::map<std::string, double> similarity;              // optional precomputed column
};

inline std::vector<std::string> feature_names(const FeatureConfig& cfg, bool with_similarity) {
  std::vector<std::string> names;
  if (cfg.intercept) names.push_back("intercept");
  for (const char* n : {"investor_neighborhood", "max_ipo_fraction", "max_acquisition_fraction", "job_ipo",
                        "job_acquired", "executive_ipo", "executive_acquired", "advisory_ipo",
                        "advisory_acquired", "previous_founder", "companies_affiliated", "work_overlap_mean",
                        "work_overlap_sd", "top_school", "degree_highschool", "degree_bachelors",
                        "degree_masters", "degree_phd", "education_overlap_mean", "education_overlap_sd",
                        "major_overlap_mean", "major_overlap_sd", "leadership_age"}) {
    names.emplace_back(n);
  }
  if (with_similarity) names.emplace_back("major_sector_similarity");
  for (const auto& s : cfg.sectors) names.push_back("sector:" + s);
  return names;
}

/// Feature matrix for `companies`, evaluated at each company's first funding
/// date. Cells that cannot be computed are left missing.
inline FeatureMatrix build_features(std::span<const std::string> companies, const InvestorNetwork& net,
                                    std::span<const PersonnelRecord> people, const CompanyInputs& inputs,
                                    const FeatureConfig& cfg) {
  const bool with_similarity = !inputs.similarity.empty();
  FeatureMatrix fm(feature_names(cfg, with_similarity), {companies.begin(), companies.end()});
  std::map<std::string, std::size_t> row;
  for (std::size_t r = 0; r < fm.feature_names.size(); ++r) row[fm.feature_names[r]] = r;

  for (std::size_t c = 0; c < companies.size(); ++c) {
    const auto& id = companies[c];
    auto put = [&](const std::string& name, double v) { fm.set(row.at(name), c, v); };
    auto put_opt = [&](const std::string& name, std::optional<double> v) {
      if (v) put(name, *v);
    };
    if (cfg.intercept) put("intercept", 1.0);

    const auto first = net.first_funding_date(id);
    if (!first) throw std::invalid_argument("company " + id + " has no funding record");
    const Date t = *first;
    const auto founded = net.founding_date(id);
    const int founding_year = year_of(founded ? *founded : t);

    put("investor_neighborhood", investor_neighborhood(net, id, t, cfg.neighborhood));
    put("max_ipo_fraction", max_outcome_fraction(net, id, t, CompanyEventKind::ipo));
    put("max_acquisition_fraction", max_outcome_fraction(net, id, t, CompanyEventKind::acquired));

    const auto members = company_members(people, id);
    const auto flags = binary_affiliation_features(members, net, t);
    put("job_ipo", flags.job_ipo);
    put("job_acquired", flags.job_acquired);
    put("executive_ipo", flags.executive_ipo);
    put("executive_acquired", flags.executive_acquired);
    put("advisory_ipo", flags.advisory_ipo);
    put("advisory_acquired", flags.advisory_acquired);

    std::vector<PersonnelRecord> lead;
    for (const auto& m : members) {
      if (in_leadership(m, cfg.leadership)) lead.push_back(m);
    }
    if (!lead.empty()) {
      const double n = static_cast<double>(lead.size());
      double founders = 0, affiliated = 0, top = 0;
      std::vector<std::set<std::string>> work, school, major;
      for (const auto& m : lead) {
        founders += m.previously_founded ? 1 : 0;
        affiliated += static_cast<double>(m.prior_companies.size());
        bool is_top = false;
        for (const auto& s : m.schools) is_top = is_top || cfg.top_schools.count(s) > 0;
        top += is_top ? 1 : 0;
        work.push_back(m.prior_companies);
        school.push_back(m.schools);
        major.push_back(m.majors);
      }
      put("previous_founder", founders / n);
      put("companies_affiliated", affiliated / n);
      put("top_school", top / n);
      int known = 0;
      double counts[5] = {0, 0, 0, 0, 0};
      for (const auto& m : lead) {
        if (m.degree == Degree::unknown) continue;
        ++known;
        counts[static_cast<int>(m.degree)] += 1;
      }
      if (known > 0) {
        put("degree_highschool", counts[1] / known);
        put("degree_bachelors", counts[2] / known);
        put("degree_masters", counts[3] / known);
        put("degree_phd", counts[4] / known);
      }
      auto overlap = [&](const std::string& prefix, const std::vector<std::set<std::string>>& sets) {
        if (auto s = jaccard_overlap_stats(sets)) {
          put(prefix + "_mean", s->mean);
          put(prefix + "_sd", s->sd);
        }
      };
      overlap("work_overlap", work);
      overlap("education_overlap", school);
      overlap("major_overlap", major);
      put_opt("leadership_age", leadership_age(lead, founding_year));
    }
    if (with_similarity) {
      if (auto it = inputs.similarity.find(id); it != inputs.similarity.end()) {
        put("major_sector_similarity", it->second);
      }
    }
    const auto sec = inputs.sectors.find(id);
    for (const auto& s : cfg.sectors) {
      put("sector:" + s, sec != inputs.sectors.end() && sec->second.count(s) ? 1.0 : 0.0);
    }
  }
  return fm;
}

}  // namespace pickwin
