#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ssc/error.hpp"
#include "ssc/rng.hpp"

namespace ssc {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Marker for nodes not reachable from a BFS source.
inline constexpr int kUnreachable = -1;

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range ids throw Errc::InvalidEdge.
  Graph(NodeId n, const std::vector<Edge>& edges) : adj_(static_cast<std::size_t>(n)) {
    if (n <= 0) throw Error(Errc::BadParams, "node count must be positive");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(Errc::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") out of range for n=" + std::to_string(n));
      }
      if (u == v) throw Error(Errc::InvalidEdge, "self-loop at " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }

  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }

  std::size_t degree(NodeId v) const { return adj_[v].size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj_) twice += nbrs.size();
    return twice / 2;
  }

  bool has_edge(NodeId u, NodeId v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (NodeId u = 0; u < node_count(); ++u) {
      for (NodeId v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool valid_node(NodeId v) const { return v >= 0 && v < node_count(); }

 private:
  std::vector<std::vector<NodeId>> adj_;
};

/// Ordered leader list. Order fixes the coordinate order of distance vectors.
class LeaderSet {
 public:
  LeaderSet() = default;
  explicit LeaderSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {}

  const std::vector<NodeId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  NodeId operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  /// Throws Errc::InvalidLeaders unless 1 <= m <= n, ids are valid and distinct.
  void validate(NodeId n) const {
    if (ids_.empty()) throw Error(Errc::InvalidLeaders, "leader set is empty");
    if (static_cast<NodeId>(ids_.size()) > n) {
      throw Error(Errc::InvalidLeaders, "more leaders than nodes");
    }
    std::vector<NodeId> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= n) {
      throw Error(Errc::InvalidLeaders, "leader id out of range");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Errc::InvalidLeaders, "duplicate leader id");
    }
  }

 private:
  std::vector<NodeId> ids_;
};

// --- generators -------------------------------------------------------------

inline Graph gen_path(NodeId n) {
  if (n < 2) throw Error(Errc::TooSmall, "path needs n >= 2");
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph gen_cycle(NodeId n) {
  if (n < 3) throw Error(Errc::TooSmall, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

inline Graph gen_complete(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<std::vector<NodeId>> connected_components(const Graph& g,
                                                             const std::vector<NodeId>& removed);

inline bool is_connected(const Graph& g) { return connected_components(g, {}).size() == 1; }

/// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and each
/// consumes exactly one draw. With `connected`, up to 100 graphs are drawn from
/// the same stream and the first connected one is returned.
inline Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed, bool connected = false) {
  if (n <= 0) throw Error(Errc::BadParams, "node count must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::BadParams, "p must lie in [0, 1]");
  Rng rng(seed);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (!connected || is_connected(g)) return g;
  }
  throw Error(Errc::DisconnectedAfterRetries,
              "no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") in " +
                  std::to_string(kMaxAttempts) + " draws");
}

/// Preferential attachment. Seed graph is a star on nodes 0..m_attach (centre 0);
/// every later node links to m_attach distinct earlier nodes, each drawn with
/// probability proportional to current degree.
inline Graph gen_barabasi_albert(NodeId n, NodeId m_attach, std::uint64_t seed) {
  if (m_attach < 1 || m_attach >= n) throw Error(Errc::BadParams, "need 1 <= m_attach < n");
  Rng rng(seed);
  std::vector<Edge> edges;
  // Each node appears once per incident edge, so a uniform pick is degree-weighted.
  std::vector<NodeId> endpoints;
  for (NodeId leaf = 1; leaf <= m_attach; ++leaf) {
    edges.emplace_back(0, leaf);
    endpoints.push_back(0);
    endpoints.push_back(leaf);
  }
  std::vector<NodeId> targets;
  for (NodeId v = m_attach + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<NodeId>(targets.size()) < m_attach) {
      NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph(n, edges);
}

/// m distinct node ids drawn uniformly without replacement, in draw order.
inline LeaderSet random_leaders(NodeId n, NodeId m, Rng& rng) {
  if (m < 1 || m > n) throw Error(Errc::InvalidLeaders, "need 1 <= m <= n");
  std::vector<NodeId> pool(static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) pool[i] = i;
  for (NodeId i = 0; i < m; ++i) {
    auto j = static_cast<NodeId>(i + rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(m));
  return LeaderSet(std::move(pool));
}

// --- traversal --------------------------------------------------------------

inline std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  if (!g.valid_node(source)) throw Error(Errc::BadParams, "invalid BFS source");
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kUnreachable);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

/// Components of the subgraph induced on V \ removed, each sorted, ordered by
/// smallest member.
inline std::vector<std::vector<NodeId>> connected_components(const Graph& g,
                                                             const std::vector<NodeId>& removed) {
  const NodeId n = g.node_count();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (NodeId v : removed) {
    if (!g.valid_node(v)) throw Error(Errc::BadParams, "removed node out of range");
    gone[v] = 1;
  }
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    std::vector<NodeId> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!gone[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline int eccentricity(const Graph& g, NodeId v) {
  auto dist = bfs_distances(g, v);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw Error(Errc::Disconnected, "graph is disconnected");
  }
  return *std::max_element(dist.begin(), dist.end());
}

/// All-pairs BFS. O(n (n + e)).
inline int diameter(const Graph& g) {
  int best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

// --- edge-list text format --------------------------------------------------
//
//   n e
//   u v     (e lines, 0-indexed)
//
// Lines starting with '#' are ignored.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body.push_back(line);
  }
  if (body.empty()) throw Error(Errc::Parse, "missing header line 'n e'");
  long long n = 0, e = 0;
  {
    std::istringstream header(body[0]);
    if (!(header >> n >> e) || n <= 0 || e < 0) {
      throw Error(Errc::Parse, "bad header line '" + body[0] + "'");
    }
  }
  if (static_cast<long long>(body.size()) - 1 != e) {
    throw Error(Errc::Parse, "header declares " + std::to_string(e) + " edges, found " +
                                 std::to_string(body.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (std::size_t i = 1; i < body.size(); ++i) {
    std::istringstream row(body[i]);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw Error(Errc::Parse, "bad edge line '" + body[i] + "'");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return Graph(static_cast<NodeId>(n), edges);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  auto edges = g.edges();
  out << g.node_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace ssc
