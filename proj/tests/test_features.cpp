#include <gtest/gtest.h>

#include <random>

#include "pickwin/features.hpp"
#include "pickwin/soft_impute.hpp"

using namespace pickwin;

namespace {

Date d(const char* s) { return parse_date(s); }

std::map<std::string, std::vector<CompanyEvent>> founded(std::initializer_list<std::pair<const char*, const char*>> xs) {
  std::map<std::string, std::vector<CompanyEvent>> ev;
  for (auto [c, date] : xs) ev[c].push_back({CompanyEventKind::founded, d(date)});
  return ev;
}

// "me" raised from investor J on 2012-01-01; J backed a and b earlier, c and
// d were backed by someone else. All four others were founded before 2012.
InvestorNetwork toy_network() {
  std::vector<Investment> edges{
      {"J", "me", d("2012-01-01")}, {"J", "a", d("2010-05-01")}, {"J", "b", d("2011-02-01")},
      {"K", "c", d("2010-01-01")},  {"K", "d", d("2011-07-01")},
  };
  auto ev = founded({{"me", "2011-06-01"}, {"a", "2010-01-01"}, {"b", "2010-06-01"}, {"c", "2009-01-01"},
                     {"d", "2011-01-01"}});
  ev["a"].push_back({CompanyEventKind::ipo, d("2011-03-01")});
  ev["c"].push_back({CompanyEventKind::acquired, d("2011-01-01")});
  return InvestorNetwork(edges, ev);
}

}  // namespace

TEST(Dates, ParseAndFormat) {
  EXPECT_EQ(format_date(d("2012-03-04")), "2012-03-04");
  EXPECT_EQ(year_of(d("1999-12-31")), 1999);
  EXPECT_THROW(parse_date("2012-02-30"), std::invalid_argument);
  EXPECT_THROW(parse_date("2012/02/03"), std::invalid_argument);
  EXPECT_THROW(parse_date("2012-02-03x"), std::invalid_argument);
}

TEST(InvestorNeighborhood, ToyGraph) {
  const auto net = toy_network();
  EXPECT_DOUBLE_EQ(investor_neighborhood(net, "me", d("2012-01-01")), 2.0 / 4.0);
  NeighborhoodOptions with_self;
  with_self.include_self_in_denominator = true;
  EXPECT_DOUBLE_EQ(investor_neighborhood(net, "me", d("2012-01-01"), with_self), 2.0 / 5.0);
}

TEST(InvestorNeighborhood, SoleInvestorAndEarlyTime) {
  const InvestorNetwork net({{"Z", "solo", d("2012-01-01")}, {"K", "x", d("2011-01-01")}}, {});
  EXPECT_EQ(investor_neighborhood(net, "solo", d("2012-01-01")), 0.0);
  EXPECT_EQ(investor_neighborhood(toy_network(), "me", d("2005-01-01")), 0.0);
}

TEST(MaxOutcomeFraction, Examples) {
  const auto net = toy_network();
  // J's portfolio before 2012: a (IPO 2011), b.
  EXPECT_DOUBLE_EQ(max_outcome_fraction(net, "me", d("2012-01-01"), CompanyEventKind::ipo), 0.5);
  EXPECT_EQ(max_outcome_fraction(net, "me", d("2012-01-01"), CompanyEventKind::acquired), 0.0);
  // Before a's IPO nothing has happened.
  EXPECT_EQ(max_outcome_fraction(net, "me", d("2011-01-01"), CompanyEventKind::ipo), 0.0);
}

TEST(MaxOutcomeFraction, TakesMaximumOverInitialInvestors) {
  std::vector<Investment> edges{{"A", "me", d("2015-01-01")}, {"B", "me", d("2015-01-01")}};
  std::map<std::string, std::vector<CompanyEvent>> ev;
  for (int i = 0; i < 10; ++i) {
    const std::string ca = "a" + std::to_string(i), cb = "b" + std::to_string(i);
    edges.push_back({"A", ca, d("2010-01-01")});
    edges.push_back({"B", cb, d("2010-01-01")});
    if (i < 2) ev[ca].push_back({CompanyEventKind::ipo, d("2012-01-01")});
    if (i < 7) ev[cb].push_back({CompanyEventKind::ipo, d("2012-01-01")});
  }
  const InvestorNetwork net(edges, ev);
  EXPECT_DOUBLE_EQ(max_outcome_fraction(net, "me", d("2015-01-01"), CompanyEventKind::ipo), 0.7);
}

TEST(Jaccard, Examples) {
  using S = std::set<std::string>;
  const std::vector<S> same{{"x", "y"}, {"x", "y"}};
  auto s = jaccard_overlap_stats(same);
  EXPECT_EQ(s->mean, 1.0);
  EXPECT_EQ(s->sd, 0.0);
  const std::vector<S> disjoint{{"x"}, {"y"}};
  s = jaccard_overlap_stats(disjoint);
  EXPECT_EQ(s->mean, 0.0);
  EXPECT_EQ(s->sd, 0.0);
  const std::vector<S> three{{"A", "B"}, {"B", "C"}, {"D"}};
  s = jaccard_overlap_stats(three);
  EXPECT_NEAR(s->mean, 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(s->mean, 0.1111, 1e-4);
  EXPECT_NEAR(s->sd, 0.1571, 1e-4);
  const std::vector<S> empties{{}, {}};
  EXPECT_EQ(jaccard_overlap_stats(empties)->mean, 0.0);
  const std::vector<S> one{{"x"}};
  EXPECT_FALSE(jaccard_overlap_stats(one));
}

TEST(Jaccard, PermutationInvariant) {
  using S = std::set<std::string>;
  std::vector<S> sets{{"a", "b"}, {"b", "c", "d"}, {"a"}, {"d", "e"}, {}};
  const auto base = *jaccard_overlap_stats(sets);
  std::sort(sets.begin(), sets.end());
  do {
    const auto s = *jaccard_overlap_stats(sets);
    EXPECT_NEAR(s.mean, base.mean, 1e-15);
    EXPECT_NEAR(s.sd, base.sd, 1e-15);
  } while (std::next_permutation(sets.begin(), sets.end()));
}

TEST(LeadershipAge, Examples) {
  PersonnelRecord a, b, c;
  a.undergrad_year = 2010;
  EXPECT_DOUBLE_EQ(*leadership_age(std::vector<PersonnelRecord>{a}, 2010), 22.0);
  a.undergrad_year = 2000;
  b.undergrad_year = 2010;
  EXPECT_DOUBLE_EQ(*leadership_age(std::vector<PersonnelRecord>{a, b, c}, 2010), 27.0);
  EXPECT_FALSE(leadership_age(std::vector<PersonnelRecord>{c}, 2010));
}

TEST(Affiliation, Flags) {
  const auto net = toy_network();
  EXPECT_FALSE(binary_affiliation_features({}, net, d("2012-01-01")).executive_ipo);

  std::vector<PersonnelRecord> recs(2);
  recs[0] = {"p1", "me", Role::executive, {"a"}, {}, {}, Degree::unknown, std::nullopt, false};
  // p2 is listed as both advisor and executive; only the executive flags count.
  recs[1] = {"p2", "me", Role::advisor, {"c"}, {}, {}, Degree::unknown, std::nullopt, false};
  auto dual = recs[1];
  dual.role = Role::executive;
  recs.push_back(dual);
  const auto members = company_members(recs, "me");
  ASSERT_EQ(members.size(), 2u);
  const auto f = binary_affiliation_features(members, net, d("2012-01-01"));
  EXPECT_TRUE(f.executive_ipo);
  EXPECT_TRUE(f.executive_acquired);
  EXPECT_FALSE(f.advisory_ipo);
  EXPECT_FALSE(f.advisory_acquired);
  EXPECT_FALSE(f.job_ipo);
  // Outcome after t does not count.
  const auto early = binary_affiliation_features(members, net, d("2011-02-01"));
  EXPECT_FALSE(early.executive_ipo);
  EXPECT_TRUE(early.executive_acquired);
}

namespace {

struct World {
  InvestorNetwork net;
  std::vector<PersonnelRecord> people;
  CompanyInputs inputs;
  FeatureConfig cfg;
};

World random_world(std::mt19937_64& rng, int companies) {
  std::uniform_int_distribution<int> day(0, 3000), inv(0, 7), n_inv(1, 3), n_people(0, 4), pick(0, 9);
  std::uniform_real_distribution<double> u;
  std::vector<Investment> edges;
  std::map<std::string, std::vector<CompanyEvent>> ev;
  const Date origin = parse_date("2005-01-01");
  for (int c = 0; c < companies; ++c) {
    const std::string id = "co" + std::to_string(c);
    const int start = day(rng);
    ev[id].push_back({CompanyEventKind::founded, origin + std::chrono::days(start - 200)});
    const int k = n_inv(rng);
    for (int j = 0; j < k; ++j) edges.push_back({"inv" + std::to_string(inv(rng)), id, origin + std::chrono::days(start)});
    if (u(rng) < 0.5) edges.push_back({"inv" + std::to_string(inv(rng)), id, origin + std::chrono::days(start + 300)});
    if (u(rng) < 0.2) ev[id].push_back({CompanyEventKind::ipo, origin + std::chrono::days(start + day(rng))});
    if (u(rng) < 0.2) ev[id].push_back({CompanyEventKind::acquired, origin + std::chrono::days(start + day(rng))});
  }
  World w{InvestorNetwork(edges, ev), {}, {}, {}};
  const char* roles[] = {"leader", "executive", "advisor", "employee"};
  const char* degrees[] = {"unknown", "highschool", "bachelors", "masters", "phd"};
  for (int c = 0; c < companies; ++c) {
    const std::string id = "co" + std::to_string(c);
    const int np = n_people(rng);
    for (int p = 0; p < np; ++p) {
      PersonnelRecord r;
      r.person_id = "p" + std::to_string(c) + "_" + std::to_string(p);
      r.company_id = id;
      r.role = parse_role(roles[pick(rng) % 4]);
      r.degree = parse_degree(degrees[pick(rng) % 5]);
      for (int q = 0; q < 3; ++q) {
        if (u(rng) < 0.5) r.prior_companies.insert("co" + std::to_string(std::uniform_int_distribution<int>(0, companies - 1)(rng)));
        if (u(rng) < 0.5) r.schools.insert(q == 0 ? "Stanford" : "school" + std::to_string(pick(rng)));
        if (u(rng) < 0.5) r.majors.insert("major" + std::to_string(pick(rng)));
      }
      if (u(rng) < 0.7) r.undergrad_year = 1990 + pick(rng);
      r.previously_founded = u(rng) < 0.3;
      w.people.push_back(r);
    }
    if (u(rng) < 0.5) w.inputs.sectors[id] = {"software"};
  }
  w.cfg.sectors = {"software", "fintech"};
  w.cfg.top_schools = {"Stanford"};
  return w;
}

}  // namespace

TEST(BuildFeatures, RangesAndMask) {
  std::mt19937_64 rng(3);
  const auto w = random_world(rng, 60);
  std::vector<std::string> ids;
  for (int c = 0; c < 60; ++c) ids.push_back("co" + std::to_string(c));
  const auto fm = build_features(ids, w.net, w.people, w.inputs, w.cfg);
  EXPECT_EQ(fm.num_companies(), 60u);
  for (std::size_t r = 0; r < fm.num_features(); ++r) {
    const auto& name = fm.feature_names[r];
    if (name == "leadership_age" || name == "companies_affiliated" || name == "intercept") continue;
    for (std::size_t c = 0; c < fm.num_companies(); ++c) {
      if (!fm.observed(r, c)) continue;
      EXPECT_GE(fm.values(r, c), 0.0) << name;
      EXPECT_LE(fm.values(r, c), 1.0) << name;
    }
  }
  // Network, flag and sector features are always defined.
  for (std::size_t c = 0; c < fm.num_companies(); ++c) {
    EXPECT_TRUE(fm.observed(1, c));
    EXPECT_TRUE(fm.observed(fm.num_features() - 1, c));
  }
  EXPECT_FALSE(fm.complete());
}

TEST(BuildFeatures, CausalityUnderLaterRecords) {
  std::mt19937_64 rng(4);
  const auto w = random_world(rng, 40);
  std::vector<std::string> ids;
  for (int c = 0; c < 40; ++c) ids.push_back("co" + std::to_string(c));
  const auto base = build_features(ids, w.net, w.people, w.inputs, w.cfg);
  for (int c = 0; c < 40; ++c) {
    const auto t = *w.net.first_funding_date(ids[c]);
    // Add records dated after t that touch this company's neighborhood.
    std::vector<Investment> edges(w.net.edges().begin(), w.net.edges().end());
    std::map<std::string, std::vector<CompanyEvent>> ev;
    for (const auto& id : ids) {
      for (auto kind : {CompanyEventKind::founded, CompanyEventKind::ipo, CompanyEventKind::acquired}) {
        std::optional<Date> when = kind == CompanyEventKind::founded ? w.net.founding_date(id) : w.net.outcome_date(id, kind);
        if (when && (kind != CompanyEventKind::founded || w.net.first_funding_date(id) != when)) ev[id].push_back({kind, *when});
      }
    }
    for (const auto& j : w.net.investors_of(ids[c], t)) {
      edges.push_back({j, "newco", t + std::chrono::days(1)});
      edges.push_back({j, ids[(c + 1) % 40], t + std::chrono::days(3)});
    }
    ev["newco"].push_back({CompanyEventKind::founded, t + std::chrono::days(1)});
    for (const auto& id : ids) ev[id].push_back({CompanyEventKind::ipo, t + std::chrono::days(2)});
    const InvestorNetwork later(edges, ev);
    const std::vector<std::string> one{ids[c]};
    const auto fm = build_features(one, later, w.people, w.inputs, w.cfg);
    for (std::size_t r = 0; r < fm.num_features(); ++r) {
      ASSERT_EQ(fm.observed(r, 0), base.observed(r, c));
      if (fm.observed(r, 0)) EXPECT_EQ(fm.values(r, 0), base.values(r, c)) << fm.feature_names[r] << " " << ids[c];
    }
  }
}

TEST(SoftImpute, FullyObservedUnchanged) {
  FeatureMatrix fm({"a", "b"}, {"x", "y", "z"});
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) fm.set(r, c, r + 2.0 * c);
  const auto res = soft_impute(fm);
  EXPECT_EQ(res.iterations, 0);
  EXPECT_EQ(res.matrix.values, fm.values);
  EXPECT_TRUE(res.matrix.complete());
}

TEST(SoftImpute, RankOneCompletion) {
  // [[2, 4], [1, ?]]; the exact rank-one completion is 2.
  FeatureMatrix fm({"r0", "r1"}, {"c0", "c1"});
  fm.set(0, 0, 2);
  fm.set(0, 1, 4);
  fm.set(1, 0, 1);
  const auto res = soft_impute(fm);
  EXPECT_NEAR(res.matrix.values(1, 1), 2.0, 0.15 * 2.0);
  EXPECT_EQ(res.matrix.values(0, 0), 2.0);
  EXPECT_EQ(res.matrix.values(0, 1), 4.0);
  EXPECT_EQ(res.matrix.values(1, 0), 1.0);
  EXPECT_TRUE(res.matrix.complete());
}

namespace {

FeatureMatrix low_rank(std::mt19937_64& rng, int rows, int cols, int rank, double missing,
                       Eigen::MatrixXd* truth) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(rows, rank), b(rank, cols);
  for (auto& v : a.reshaped()) v = g(rng);
  for (auto& v : b.reshaped()) v = g(rng);
  *truth = a * b;
  std::vector<std::string> names, ids;
  for (int r = 0; r < rows; ++r) names.push_back("f" + std::to_string(r));
  for (int c = 0; c < cols; ++c) ids.push_back("c" + std::to_string(c));
  FeatureMatrix fm(names, ids);
  std::uniform_real_distribution<double> u;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (u(rng) >= missing) fm.set(r, c, (*truth)(r, c));
  return fm;
}

}  // namespace

TEST(SoftImpute, RankTwoRecovery) {
  std::mt19937_64 rng(12);
  Eigen::MatrixXd truth;
  const auto fm = low_rank(rng, 20, 30, 2, 0.2, &truth);
  const auto res = soft_impute(fm);
  const auto miss = !fm.mask;
  const double err = miss.select(res.matrix.values - truth, 0.0 * truth).norm() /
                     miss.select(truth, 0.0 * truth).norm();
  EXPECT_LE(err, 0.1);
  for (Eigen::Index r = 0; r < 20; ++r)
    for (Eigen::Index c = 0; c < 30; ++c)
      if (fm.mask(r, c)) EXPECT_EQ(res.matrix.values(r, c), fm.values(r, c));
  EXPECT_TRUE(res.converged);
}

TEST(SoftImpute, ObjectiveNonincreasing) {
  std::mt19937_64 rng(13);
  Eigen::MatrixXd truth;
  const auto fm = low_rank(rng, 15, 25, 3, 0.3, &truth);
  SoftImputeOptions opt;
  opt.tolerance = 1e-6;
  const auto res = soft_impute(fm, opt);
  ASSERT_GT(res.objective.size(), 3u);
  for (std::size_t i = 1; i < res.objective.size(); ++i) {
    EXPECT_LE(res.objective[i], res.objective[i - 1] * (1 + 1e-12));
  }
}

TEST(SoftImpute, EmptyRowOrColumnNamed) {
  FeatureMatrix fm({"alpha", "beta"}, {"x", "y"});
  fm.set(0, 0, 1);
  fm.set(0, 1, 1);
  try {
    soft_impute(fm);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("beta"), std::string::npos);
  }
  FeatureMatrix fc({"alpha"}, {"x", "y"});
  fc.set(0, 0, 1);
  try {
    soft_impute(fc);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("'y'"), std::string::npos);
  }
}

TEST(SoftImpute, PartitionedKeepsSplitsApart) {
  std::mt19937_64 rng(14);
  Eigen::MatrixXd truth;
  auto fm = low_rank(rng, 10, 30, 2, 0.2, &truth);
  std::vector<std::size_t> train, test;
  for (std::size_t c = 0; c < 30; ++c) (c < 20 ? train : test).push_back(c);
  const auto a = soft_impute_partitioned(fm, {train, test});
  // Changing the test columns leaves the training block untouched.
  for (auto c : test)
    for (Eigen::Index r = 0; r < 10; ++r)
      if (fm.mask(r, static_cast<Eigen::Index>(c))) fm.values(r, static_cast<Eigen::Index>(c)) += 100.0;
  const auto b = soft_impute_partitioned(fm, {train, test});
  for (auto c : train) EXPECT_EQ(a.values.col(static_cast<Eigen::Index>(c)), b.values.col(static_cast<Eigen::Index>(c)));
  EXPECT_THROW(soft_impute_partitioned(fm, {train}), std::invalid_argument);
}
