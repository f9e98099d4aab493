#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ssc/graph.hpp"

namespace ssc {

enum class Topology { Path, Cycle, Other };

/// Classifies g as a path (n >= 2) or cycle (n >= 3) by degrees and connectivity.
inline Topology classify_topology(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 2 || !is_connected(g)) return Topology::Other;
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg > 2) return Topology::Other;
  const auto e = g.edge_count();
  if (e + 1 == static_cast<std::size_t>(n)) return Topology::Path;
  if (e == static_cast<std::size_t>(n) && n >= 3) return Topology::Cycle;
  return Topology::Other;
}

namespace detail {

inline std::size_t smallest_size(const std::vector<std::vector<NodeId>>& comps) {
  std::size_t a = comps.front().size();
  for (const auto& c : comps) a = std::min(a, c.size());
  return a;
}

}  // namespace detail

/// Longest-PMI length for a path on n nodes (ids 0..n-1 in path order):
/// n if G - leaders has fewer than m+1 components, otherwise n - a with a the
/// smallest component size.
inline int path_bound(NodeId n, const LeaderSet& leaders) {
  leaders.validate(n);
  const auto m = leaders.size();
  auto comps = connected_components(gen_path(n), leaders.ids());
  if (comps.size() > m + 1) throw std::logic_error("path split into more than m+1 components");
  if (comps.size() < m + 1) return n;
  return n - static_cast<int>(detail::smallest_size(comps));
}

/// Cycle analogue with threshold m components. Requires m >= 2.
inline int cycle_bound(NodeId n, const LeaderSet& leaders) {
  leaders.validate(n);
  const auto m = leaders.size();
  if (m < 2) throw Error(Errc::TooFewLeaders, "cycle bound needs at least two leaders");
  auto comps = connected_components(gen_cycle(n), leaders.ids());
  if (comps.size() > m) throw std::logic_error("cycle split into more than m components");
  if (comps.size() < m) return n;
  return n - static_cast<int>(detail::smallest_size(comps));
}

/// n - a, a = smallest pairwise leader distance. g must be a path or cycle.
inline int min_leader_distance_bound(const Graph& g, const LeaderSet& leaders) {
  if (classify_topology(g) == Topology::Other) {
    throw Error(Errc::WrongFamily, "graph is neither a path nor a cycle");
  }
  leaders.validate(g.node_count());
  if (leaders.size() < 2) throw Error(Errc::TooFewLeaders, "need at least two leaders");
  int a = g.node_count();
  for (std::size_t i = 0; i < leaders.size(); ++i) {
    auto dist = bfs_distances(g, leaders[i]);
    for (std::size_t j = i + 1; j < leaders.size(); ++j) a = std::min(a, dist[leaders[j]]);
  }
  return g.node_count() - a;
}

/// Closed form for any graph that is a path or cycle, whatever its node
/// labelling; nullopt for other graphs and for single-leader cycles.
inline std::optional<int> closed_form_bound(const Graph& g, const LeaderSet& leaders) {
  const auto topo = classify_topology(g);
  if (topo == Topology::Other) return std::nullopt;
  leaders.validate(g.node_count());
  const auto m = leaders.size();
  const std::size_t threshold = topo == Topology::Path ? m + 1 : m;
  if (topo == Topology::Cycle && m < 2) return std::nullopt;
  auto comps = connected_components(g, leaders.ids());
  if (comps.size() < threshold) return g.node_count();
  return g.node_count() - static_cast<int>(detail::smallest_size(comps));
}

// --- witness construction -------------------------------------------------------
//
// Node orders whose distance vectors form a PMI sequence of the closed-form
// length. Test support: callers check them with validate_pmi.

namespace detail {

/// Alternating outward walk: `a` steps down, `b` steps up (mod n on a cycle),
/// starting with a, b. On a path the nodes strictly between a and b are skipped.
inline std::vector<NodeId> outward_walk(NodeId n, bool cycle, NodeId a, NodeId b) {
  std::vector<NodeId> order{a, b};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[a] = seen[b] = 1;
  NodeId lo = a, hi = b;
  bool lo_done = false, hi_done = false;
  while (!lo_done || !hi_done) {
    if (!lo_done) {
      NodeId next = cycle ? (lo - 1 + n) % n : lo - 1;
      if (next < 0 || seen[next]) {
        lo_done = true;
      } else {
        seen[next] = 1;
        order.push_back(lo = next);
      }
    }
    if (!hi_done) {
      NodeId next = cycle ? (hi + 1) % n : hi + 1;
      if (next >= n || seen[next]) {
        hi_done = true;
      } else {
        seen[next] = 1;
        order.push_back(hi = next);
      }
    }
  }
  return order;
}

}  // namespace detail

/// Witness order for every path placement and for cycle placements that leave
/// fewer than m components. Returns nullopt for the remaining cycle placements.
inline std::optional<std::vector<NodeId>> closed_form_witness(NodeId n, bool cycle,
                                                              const LeaderSet& leaders) {
  leaders.validate(n);
  std::vector<NodeId> ids = leaders.ids();
  std::sort(ids.begin(), ids.end());
  const auto m = ids.size();
  const Graph g = cycle ? gen_cycle(n) : gen_path(n);
  auto comps = connected_components(g, ids);

  auto sweep_from = [&](NodeId start, int step) {
    std::vector<NodeId> order;
    for (NodeId v = start; v >= 0 && v < n; v += step) order.push_back(v);
    return order;
  };
  auto adjacent_pair = [&]() -> std::optional<std::pair<NodeId, NodeId>> {
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (ids[i + 1] == ids[i] + 1) return std::pair{ids[i], ids[i + 1]};
    if (cycle && m >= 2 && ids.front() == 0 && ids.back() == n - 1) return std::pair{n - 1, 0};
    return std::nullopt;
  };

  if (!cycle) {
    if (comps.size() < m + 1) {
      if (ids.front() == 0) return sweep_from(0, +1);
      if (ids.back() == n - 1) return sweep_from(n - 1, -1);
      auto pr = adjacent_pair();
      if (!pr) return std::nullopt;
      return detail::outward_walk(n, false, pr->first, pr->second);
    }
    const auto a = detail::smallest_size(comps);
    const auto& x = *std::find_if(comps.begin(), comps.end(),
                                  [&](const auto& c) { return c.size() == a; });
    if (x.front() == 0) return sweep_from(x.back() + 1, +1);
    if (x.back() == n - 1) return sweep_from(x.front() - 1, -1);
    return detail::outward_walk(n, false, x.front() - 1, x.back() + 1);
  }

  if (m < 2 || comps.size() >= m) return std::nullopt;
  auto pr = adjacent_pair();
  if (!pr) return std::nullopt;
  return detail::outward_walk(n, true, pr->first, pr->second);
}

}  // namespace ssc
