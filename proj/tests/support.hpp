#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <vector>

#include "ssc/dlv.hpp"
#include "ssc/graph.hpp"
#include "ssc/rng.hpp"

namespace ssc::testing {

/// Six nodes whose distances from nodes 0 and 5 give the two-leader worked
/// example: {(0,3),(1,2),(1,3),(2,1),(2,2),(3,0)}.
inline Graph two_leader_graph() { return Graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}}); }

inline LeaderSet two_leader_leaders() { return LeaderSet({0, 5}); }

inline DlvPointSet worked_example_points() {
  return DlvPointSet::from_vectors(2, {{0, 3}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 0}});
}

inline std::vector<Point> points_of(const DlvPointSet& ps, const PmiSequence& seq) {
  std::vector<Point> out;
  for (const auto& e : seq.entries) out.push_back(ps.vec(e.point));
  return out;
}

struct Instance {
  Graph graph;
  LeaderSet leaders;
};

/// Random connected graph on n nodes, mixing ER, path and cycle, with m random
/// leaders.
inline Instance random_instance(Rng& rng, NodeId n_max, NodeId m_max) {
  const auto n = static_cast<NodeId>(2 + rng.below(static_cast<std::uint64_t>(n_max - 1)));
  Graph g;
  switch (rng.below(3)) {
    case 0: g = gen_path(n); break;
    case 1: g = n >= 3 ? gen_cycle(n) : gen_path(n); break;
    default: {
      const double p = rng.uniform(0.3, 0.9);
      // Fresh seeds until connected; small n makes this quick.
      while (true) {
        g = gen_erdos_renyi(n, p, rng.next());
        if (is_connected(g)) break;
      }
    }
  }
  const auto m = static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(std::min(m_max, n))));
  return {g, random_leaders(n, m, rng)};
}

/// Uncapped exhaustive longest-PMI search, memoised on the strict lower-bound
/// vector. Test-only oracle for sets beyond brute_force_pmi's 10-point cap.
inline std::size_t exhaustive_lpmi(const DlvPointSet& ps) {
  std::map<std::vector<int>, std::size_t> memo;
  auto go = [&](auto&& self, std::vector<int>& bound) -> std::size_t {
    if (auto it = memo.find(bound); it != memo.end()) return it->second;
    std::size_t best = 0;
    for (PointIndex k = 0; k < static_cast<PointIndex>(ps.size()); ++k) {
      bool ok = true;
      for (std::size_t j = 0; j < ps.dims() && ok; ++j) ok = ps.coord(k, j) > bound[j];
      if (!ok) continue;
      for (std::size_t j = 0; j < ps.dims(); ++j) {
        int saved = bound[j];
        bound[j] = ps.coord(k, j);
        best = std::max(best, 1 + self(self, bound));
        bound[j] = saved;
      }
    }
    memo[bound] = best;
    return best;
  };
  std::vector<int> bound(ps.dims(), INT_MIN);
  return go(go, bound);
}

}  // namespace ssc::testing
