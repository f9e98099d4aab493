#pragma once

#include <deque>
#include <vector>

#include "ssc/graph.hpp"

namespace ssc {

/// Black nodes in insertion order: the input set first, then forced nodes in
/// the order they turned black.
struct DerivedSet {
  std::vector<NodeId> nodes;

  std::size_t size() const { return nodes.size(); }
};

/// Zero-forcing closure: a black node with exactly one white neighbour turns
/// that neighbour black, repeated until nothing changes.
///
/// Forcers are examined in ascending id; after a force, the newly black node
/// and the black neighbours that lost a white neighbour are re-examined.
/// `descending` reverses the scan order (same final set, different order).
inline DerivedSet derived_set(const Graph& g, const LeaderSet& input, bool descending = false) {
  input.validate(g.node_count());
  const NodeId n = g.node_count();
  std::vector<char> black(static_cast<std::size_t>(n), 0);
  std::vector<int> white_nbrs(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) white_nbrs[v] = static_cast<int>(g.degree(v));

  DerivedSet out;
  auto paint = [&](NodeId v) {
    black[v] = 1;
    out.nodes.push_back(v);
    for (NodeId u : g.neighbors(v)) --white_nbrs[u];
  };
  for (NodeId v : input) paint(v);

  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  std::deque<NodeId> dirty;
  auto enqueue = [&](NodeId v) {
    if (black[v] && !queued[v] && white_nbrs[v] == 1) {
      queued[v] = 1;
      dirty.push_back(v);
    }
  };
  auto seed_scan = [&] {
    if (descending) {
      for (NodeId v = n; v-- > 0;) enqueue(v);
    } else {
      for (NodeId v = 0; v < n; ++v) enqueue(v);
    }
  };
  seed_scan();
  while (!dirty.empty()) {
    NodeId v = dirty.front();
    dirty.pop_front();
    queued[v] = 0;
    if (white_nbrs[v] != 1) continue;
    NodeId target = -1;
    for (NodeId u : g.neighbors(v)) {
      if (!black[u]) target = u;
    }
    paint(target);
    enqueue(target);
    for (NodeId u : g.neighbors(target)) enqueue(u);
  }
  return out;
}

inline bool is_zfs(const Graph& g, const LeaderSet& input) {
  return static_cast<NodeId>(derived_set(g, input).size()) == g.node_count();
}

}  // namespace ssc
