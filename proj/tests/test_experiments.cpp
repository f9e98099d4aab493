#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssc/experiments.hpp"
#include "support.hpp"

using namespace ssc;
using namespace ssc::testing;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Drops dp_ms and greedy_ms (columns 12 and 13).
std::string without_runtimes(const SweepRow& r) {
  auto cols = split(to_csv(r));
  cols.erase(cols.begin() + 12, cols.begin() + 14);
  std::string s;
  for (const auto& c : cols) s += c + ',';
  return s;
}

SweepSpec small_spec() {
  SweepSpec s;
  s.experiment_id = "unit";
  s.family = "er";
  s.n = 30;
  s.params = {0.1, 0.2};
  s.leader_counts = {3, 6};
  s.trials = 3;
  s.master_seed = 11;
  return s;
}

}  // namespace

TEST(MakeGraph, Families) {
  EXPECT_EQ(make_graph({"path", 5, std::nullopt, 0, {}}).edge_count(), 4u);
  EXPECT_EQ(make_graph({"cycle", 5, std::nullopt, 0, {}}).edge_count(), 5u);
  EXPECT_EQ(make_graph({"complete", 5, std::nullopt, 0, {}}).edge_count(), 10u);
  EXPECT_TRUE(is_connected(make_graph({"er", 40, 0.08, 3, {}})));
  EXPECT_EQ(make_graph({"ba", 40, 2.0, 3, {}}).edge_count(), 2u * 37u + 2u);
  EXPECT_THROW(make_graph({"er", 40, std::nullopt, 3, {}}), Error);
  EXPECT_THROW(make_graph({"ba", 40, 2.5, 3, {}}), Error);
  EXPECT_THROW(make_graph({"torus", 40, 1.0, 3, {}}), Error);
}

TEST(MakeGraph, FromFile) {
  const auto path = std::filesystem::temp_directory_path() / "ssc_unit_two_leader.edges";
  {
    std::ofstream out(path);
    write_edge_list(two_leader_graph(), out);
  }
  EXPECT_EQ(make_graph({"file", 0, std::nullopt, 0, path.string()}).edges(), two_leader_graph().edges());
  std::filesystem::remove(path);
  EXPECT_THROW(make_graph({"file", 0, std::nullopt, 0, path.string()}), Error);
}

TEST(Methods, Parse) {
  auto all = Methods::parse("all");
  EXPECT_TRUE(all.dp && all.greedy && all.zfs && all.closed_form);
  auto some = Methods::parse("greedy,zfs");
  EXPECT_FALSE(some.dp);
  EXPECT_TRUE(some.greedy);
  EXPECT_TRUE(some.zfs);
  EXPECT_FALSE(some.closed_form);
  EXPECT_THROW(Methods::parse("dp,magic"), Error);
}

TEST(RunBound, TwoLeaderExample) {
  auto r = run_bound(two_leader_graph(), two_leader_leaders(), Methods::parse("all"));
  EXPECT_EQ(r.delta_dp, 5u);
  EXPECT_EQ(r.delta_greedy, 5u);
  EXPECT_EQ(r.zfs_size, 3u);
  EXPECT_FALSE(r.closed_form);
  EXPECT_EQ(r.diameter, 3);
  EXPECT_EQ(r.distinct_points, 6u);
  EXPECT_TRUE(r.violations.empty());

  auto j = to_json(r);
  EXPECT_EQ(j["delta_dp"], 5);
  EXPECT_TRUE(j["closed_form"].is_null());
  EXPECT_EQ(j["solves"]["greedy"]["witness"][0][0], "(3,0)");
  EXPECT_EQ(j["solves"]["greedy"]["witness"].size(), 5u);
  EXPECT_EQ(j["solves"]["dp"]["method"], "dp");
  EXPECT_TRUE(j["solves"]["dp"].contains("table_cells_touched"));
  EXPECT_TRUE(j["solves"]["dp"].contains("runtime_ms"));
}

TEST(RunBound, PathWithEndLeader) {
  auto r = run_bound(gen_path(6), LeaderSet({0}), Methods::parse("all"));
  EXPECT_EQ(r.delta_dp, 6u);
  EXPECT_EQ(r.closed_form, 6);
  EXPECT_EQ(r.zfs_size, 6u);
}

TEST(RunBound, TableLimitBecomesWarning) {
  DpOptions opts;
  opts.state_cap = 1;
  auto r = run_bound(two_leader_graph(), two_leader_leaders(), Methods::parse("all"), opts);
  EXPECT_FALSE(r.delta_dp);
  EXPECT_NE(r.dp_warning.find("TableTooLarge"), std::string::npos);
  EXPECT_EQ(r.delta_greedy, 5u);
  EXPECT_TRUE(to_json(r)["delta_dp"].is_null());
}

TEST(RunBound, Errors) {
  EXPECT_THROW(run_bound(Graph(4, {{0, 1}, {2, 3}}), LeaderSet({0}), Methods{}), Error);
  EXPECT_THROW(run_bound(two_leader_graph(), LeaderSet({7}), Methods{}), Error);
}

TEST(CheckReport, FlagsViolations) {
  auto ps = worked_example_points();
  BoundReport r;
  r.n = 6;
  r.leaders = {0, 5};
  r.delta_dp = 4;
  r.delta_greedy = 5;
  r.zfs_size = 7;
  auto bad = check_report(r, ps);
  EXPECT_NE(std::find(bad.begin(), bad.end(), "greedy>dp"), bad.end());
  EXPECT_NE(std::find(bad.begin(), bad.end(), "zfs>dp"), bad.end());
  EXPECT_NE(std::find(bad.begin(), bad.end(), "delta>n"), bad.end());
  r.delta_greedy = 1;
  bad = check_report(r, ps);
  EXPECT_NE(std::find(bad.begin(), bad.end(), "greedy<max_unique_values"), bad.end());
}

TEST(Csv, HeaderIsExact) {
  std::ostringstream out;
  write_sweep_csv({}, out);
  EXPECT_EQ(out.str(),
            "experiment_id,family,n,param,m_leaders,trial,seed,delta_dp,delta_greedy,zfs_size,"
            "closed_form,diameter,dp_ms,greedy_ms,error\n");
}

TEST(Csv, RowFormatting) {
  SweepRow r;
  r.experiment_id = "a,b";
  r.family = "er";
  r.n = 10;
  r.param = 0.05;
  r.m_leaders = 2;
  r.trial = 1;
  r.seed = 42;
  r.delta_dp = 7;
  r.delta_greedy = 6;
  r.zfs_size = 3;
  r.diameter = 4;
  r.dp_ms = 1.23456;
  r.greedy_ms = 0.5;
  EXPECT_EQ(to_csv(r), "\"a,b\",er,10,0.05,2,1,42,7,6,3,,4,1.235,0.500,");
}

TEST(Sweep, SingleTrialSingleRow) {
  SweepSpec s;
  s.family = "path";
  s.n = 8;
  s.leader_counts = {2};
  auto rows = run_sweep(s);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].param);
  EXPECT_TRUE(rows[0].error.empty()) << rows[0].error;
  EXPECT_TRUE(rows[0].closed_form.has_value());
  EXPECT_GE(*rows[0].delta_dp, static_cast<std::size_t>(*rows[0].closed_form));
}

TEST(Sweep, GridOrderAndSeeds) {
  auto spec = small_spec();
  auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 12u);
  std::size_t i = 0;
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t l = 0; l < 2; ++l)
      for (int t = 0; t < 3; ++t, ++i) {
        EXPECT_EQ(rows[i].param, spec.params[p]);
        EXPECT_EQ(rows[i].m_leaders, spec.leader_counts[l]);
        EXPECT_EQ(rows[i].trial, t);
        EXPECT_EQ(rows[i].seed, derive_seed(11, p * 2 + l, static_cast<std::uint64_t>(t)));
        EXPECT_TRUE(rows[i].error.empty()) << rows[i].error;
      }
}

TEST(Sweep, DeterministicAcrossRunsAndThreadCounts) {
  auto spec = small_spec();
  auto a = run_sweep(spec);
  spec.jobs = 3;
  auto b = run_sweep(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(without_runtimes(a[i]), without_runtimes(b[i]));
}

TEST(Sweep, ErrorsGoToTheErrorColumn) {
  SweepSpec s;
  s.family = "er";
  s.n = 10;
  s.params = {0.0};
  s.leader_counts = {2};
  auto rows = run_sweep(s);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NE(rows[0].error.find("DisconnectedAfterRetries"), std::string::npos);
  EXPECT_FALSE(rows[0].delta_dp);
}

TEST(Sweep, SpecValidation) {
  SweepSpec s;
  s.leader_counts = {};
  EXPECT_THROW(run_sweep(s), Error);
  s.leader_counts = {2};
  s.params = {};
  EXPECT_THROW(run_sweep(s), Error);
  s.params = {0.1};
  s.trials = 0;
  EXPECT_THROW(run_sweep(s), Error);
  s.trials = 1;
  s.family = "grid";
  EXPECT_THROW(run_sweep(s), Error);
}

TEST(RankJson, Fields) {
  RankSample s{5, {1.0, 0.75}, 3, 1e-8};
  auto j = to_json(s, 3);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["delta"], 3);
  EXPECT_EQ(j["ok"], true);
}
