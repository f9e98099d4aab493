#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "ssc/pmi_exact.hpp"
#include "ssc/pmi_greedy.hpp"
#include "support.hpp"

using namespace ssc;
using namespace ssc::testing;

namespace {

std::size_t widest(const DlvPointSet& ps) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < ps.dims(); ++i) w = std::max(w, ps.unique_values(i).size());
  return w;
}

DlvPointSet random_points(Rng& rng, std::size_t m, std::size_t count, int spread) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < count; ++k) {
    Point p(m);
    for (auto& x : p) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(spread)));
    pts.push_back(p);
  }
  return DlvPointSet::from_vectors(m, pts);
}

}  // namespace

TEST(Greedy, GoldenSequence) {
  auto ps = worked_example_points();
  auto seq = pmi_greedy(ps);
  EXPECT_EQ(points_of(ps, seq), (std::vector<Point>{{3, 0}, {2, 1}, {0, 3}, {2, 2}, {1, 3}}));
  std::vector<std::optional<std::size_t>> coords;
  for (const auto& e : seq.entries) coords.push_back(e.coord);
  EXPECT_EQ(coords, (std::vector<std::optional<std::size_t>>{1, 1, 0, 1, 1}));
  EXPECT_TRUE(validate_pmi(ps, seq));
}

TEST(Greedy, GoldenFromGraph) {
  auto ps = build_dlv(two_leader_graph(), two_leader_leaders());
  EXPECT_EQ(points_of(ps, pmi_greedy(ps)),
            (std::vector<Point>{{3, 0}, {2, 1}, {0, 3}, {2, 2}, {1, 3}}));
}

TEST(Greedy, ConflictKeepsOnePointOfSmallestPart) {
  auto ps = DlvPointSet::from_vectors(2, {{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  auto seq = pmi_greedy(ps);
  EXPECT_EQ(seq.length(), 3u);
  EXPECT_TRUE(validate_pmi(ps, seq));
}

TEST(Greedy, EmptyAndSingleton) {
  EXPECT_EQ(pmi_greedy(DlvPointSet::from_vectors(3, {})).length(), 0u);
  EXPECT_EQ(pmi_greedy(DlvPointSet::from_vectors(3, {{1, 2, 3}})).length(), 1u);
}

TEST(GapFamily, Construction) {
  auto k1 = greedy_gap_family(1);
  EXPECT_EQ(k1.size(), 5u);
  for (const Point& p : std::vector<Point>{{2, 2}, {2, 3}, {3, 3}, {1, 2}, {1, 3}})
    EXPECT_TRUE(k1.find(p).has_value());
  EXPECT_EQ(greedy_gap_family(3).size(), 11u);
  EXPECT_THROW(greedy_gap_family(0), Error);
}

TEST(GapFamily, RecordedLengths) {
  const std::vector<std::pair<std::size_t, std::size_t>> dp_greedy{
      {4, 4}, {6, 6}, {8, 7}, {10, 8}, {12, 9}, {14, 10}};
  for (int k = 1; k <= 6; ++k) {
    auto ps = greedy_gap_family(k);
    const auto [dp, greedy] = dp_greedy[static_cast<std::size_t>(k - 1)];
    EXPECT_EQ(pmi_dp_length(ps), dp) << k;
    EXPECT_EQ(pmi_recursive(ps).length(), dp) << k;
    auto seq = pmi_greedy(ps);
    EXPECT_EQ(seq.length(), greedy) << k;
    EXPECT_TRUE(validate_pmi(ps, seq));
  }
}

TEST(Greedy, SoundAndNeverLongerThanExact) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    auto inst = random_instance(rng, 14, 4);
    auto ps = build_dlv(inst.graph, inst.leaders);
    auto seq = pmi_greedy(ps);
    EXPECT_TRUE(validate_pmi(ps, seq));
    EXPECT_LE(seq.length(), pmi_dp_length(ps));
  }
  for (int t = 0; t < 300; ++t) {
    auto ps = random_points(rng, 1 + rng.below(4), 1 + rng.below(25), 6);
    auto seq = pmi_greedy(ps);
    EXPECT_TRUE(validate_pmi(ps, seq));
    EXPECT_LE(seq.length(), pmi_dp_length(ps));
  }
}

TEST(Greedy, FloorsOnGraphInstances) {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    auto inst = random_instance(rng, 20, 5);
    auto ps = build_dlv(inst.graph, inst.leaders);
    const auto len = pmi_greedy(ps).length();
    EXPECT_GE(len, widest(ps));
    EXPECT_GE(len, inst.leaders.size());
    EXPECT_GE(len * ps.dims(), ps.size());
  }
}

// Sets with a full-length sequence: greedy must recover all of it.
TEST(Greedy, FullLengthSetsAreRecovered) {
  Rng rng(21);
  int found = 0;
  for (int t = 0; t < 5000 && found < 150; ++t) {
    auto ps = random_points(rng, 1 + rng.below(3), 2 + rng.below(8), 5);
    if (pmi_dp_length(ps) != ps.size()) continue;
    ++found;
    EXPECT_EQ(pmi_greedy(ps).length(), ps.size());
  }
  EXPECT_GE(found, 100);
}

TEST(Greedy, NearLinearScaling) {
  Rng rng(4);
  auto time_on = [&](std::size_t count) {
    auto ps = random_points(rng, 8, count, static_cast<int>(count));
    const auto t0 = std::chrono::steady_clock::now();
    auto seq = pmi_greedy(ps);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_GT(seq.length(), 0u);
    return s;
  };
  time_on(5000);  // warm-up
  const double small = std::max(time_on(20000), 1e-3);
  const double large = time_on(40000);
  const double model = 2.0 * std::log(40000.0) / std::log(20000.0);
  EXPECT_LE(large, 3.0 * model * small) << small << " " << large;
}
