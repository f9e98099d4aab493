#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssc/error.hpp"
#include "ssc/graph.hpp"

namespace ssc {

using PointIndex = std::int32_t;
using Point = std::vector<int>;

/// Deduplicated distance-to-leader vectors.
///
/// Point k is stored row-major in `coords`; `owners(k)` lists the nodes whose
/// vector it is (representative = smallest). `order(i)` is L^i: point indices
/// sorted by coordinate i, ties broken lexicographically by the full vector.
/// `rank(k, i)` is the position of point k's i-th value in `unique_values(i)`.
class DlvPointSet {
 public:
  DlvPointSet() = default;

  /// Builds from raw vectors. Duplicates merge; owner ids are the positions in
  /// `vectors`. Used for graph-free fixtures and by build_dlv.
  static DlvPointSet from_vectors(std::size_t m, const std::vector<Point>& vectors) {
    if (m == 0) throw Error(Errc::BadParams, "points need at least one coordinate");
    std::map<Point, std::vector<NodeId>> grouped;
    for (std::size_t v = 0; v < vectors.size(); ++v) {
      if (vectors[v].size() != m) throw Error(Errc::BadParams, "point has wrong dimension");
      grouped[vectors[v]].push_back(static_cast<NodeId>(v));
    }
    // Canonical point index order: by representative id.
    std::vector<std::pair<Point, std::vector<NodeId>>> rows(grouped.begin(), grouped.end());
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });

    DlvPointSet ps;
    ps.m_ = m;
    for (auto& [pt, owners] : rows) {
      ps.coords_.insert(ps.coords_.end(), pt.begin(), pt.end());
      ps.owners_.push_back(std::move(owners));
    }
    ps.index();
    return ps;
  }

  std::size_t dims() const { return m_; }
  std::size_t size() const { return owners_.size(); }
  bool empty() const { return owners_.empty(); }

  std::span<const int> point(PointIndex k) const {
    return {coords_.data() + static_cast<std::size_t>(k) * m_, m_};
  }
  int coord(PointIndex k, std::size_t i) const {
    return coords_[static_cast<std::size_t>(k) * m_ + i];
  }
  Point vec(PointIndex k) const {
    auto p = point(k);
    return Point(p.begin(), p.end());
  }

  const std::vector<NodeId>& owners(PointIndex k) const { return owners_[k]; }
  NodeId representative(PointIndex k) const { return owners_[k].front(); }

  const std::vector<PointIndex>& order(std::size_t i) const { return orders_[i]; }
  const std::vector<int>& unique_values(std::size_t i) const { return unique_[i]; }
  int rank(PointIndex k, std::size_t i) const {
    return ranks_[static_cast<std::size_t>(k) * m_ + i];
  }

  /// Index of the point equal to `p`, if present.
  std::optional<PointIndex> find(std::span<const int> p) const {
    for (PointIndex k = 0; k < static_cast<PointIndex>(size()); ++k) {
      if (std::equal(p.begin(), p.end(), point(k).begin(), point(k).end())) return k;
    }
    return std::nullopt;
  }

  /// Lexicographic comparison of two points.
  bool lex_less(PointIndex a, PointIndex b) const {
    auto pa = point(a), pb = point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  }

 private:
  void index() {
    const auto n = static_cast<PointIndex>(size());
    orders_.assign(m_, {});
    unique_.assign(m_, {});
    ranks_.assign(coords_.size(), 0);
    for (std::size_t i = 0; i < m_; ++i) {
      auto& ord = orders_[i];
      ord.resize(static_cast<std::size_t>(n));
      for (PointIndex k = 0; k < n; ++k) ord[k] = k;
      std::sort(ord.begin(), ord.end(), [&](PointIndex a, PointIndex b) {
        if (coord(a, i) != coord(b, i)) return coord(a, i) < coord(b, i);
        if (lex_less(a, b) != lex_less(b, a)) return lex_less(a, b);
        return representative(a) < representative(b);
      });
      auto& uv = unique_[i];
      for (PointIndex k : ord) {
        if (uv.empty() || uv.back() != coord(k, i)) uv.push_back(coord(k, i));
        ranks_[static_cast<std::size_t>(k) * m_ + i] = static_cast<int>(uv.size()) - 1;
      }
    }
  }

  std::size_t m_ = 0;
  std::vector<int> coords_;
  std::vector<std::vector<NodeId>> owners_;
  std::vector<std::vector<PointIndex>> orders_;
  std::vector<std::vector<int>> unique_;
  std::vector<int> ranks_;
};

/// Distance-to-leader vectors of every node. Throws Errc::GraphDisconnected if
/// some leader cannot reach some node.
inline DlvPointSet build_dlv(const Graph& g, const LeaderSet& leaders) {
  leaders.validate(g.node_count());
  const std::size_t m = leaders.size();
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<Point> vectors(n, Point(m));
  for (std::size_t j = 0; j < m; ++j) {
    auto dist = bfs_distances(g, leaders[j]);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) {
        throw Error(Errc::GraphDisconnected, "node " + std::to_string(v) +
                                                 " unreachable from leader " +
                                                 std::to_string(leaders[j]));
      }
      vectors[v][j] = dist[v];
    }
  }
  return DlvPointSet::from_vectors(m, vectors);
}

/// "(a,b,...)"
inline std::string format_point(std::span<const int> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// --- PMI sequences ------------------------------------------------------------

/// One sequence element. `coord` is the coordinate at which the point is
/// strictly below every later point; empty when not recorded.
struct PmiEntry {
  PointIndex point = 0;
  std::optional<std::size_t> coord;

  friend bool operator==(const PmiEntry&, const PmiEntry&) = default;
};

struct PmiSequence {
  std::vector<PmiEntry> entries;

  std::size_t length() const { return entries.size(); }
};

/// True iff every entry is strictly smaller than all later entries at its
/// recorded coordinate (or, when unrecorded, at some coordinate). Repeated
/// points always fail.
inline bool validate_pmi(const DlvPointSet& ps, const PmiSequence& seq) {
  const auto& e = seq.entries;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].point < 0 || e[k].point >= static_cast<PointIndex>(ps.size())) return false;
  }
  auto holds_at = [&](std::size_t k, std::size_t j) {
    for (std::size_t later = k + 1; later < e.size(); ++later) {
      if (!(ps.coord(e[k].point, j) < ps.coord(e[later].point, j))) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].coord) {
      if (*e[k].coord >= ps.dims() || !holds_at(k, *e[k].coord)) return false;
    } else {
      bool any = false;
      for (std::size_t j = 0; j < ps.dims() && !any; ++j) any = holds_at(k, j);
      if (!any) return false;
    }
  }
  return true;
}

// --- minima and conflicts -------------------------------------------------------

/// X_i for every coordinate: live points attaining the minimum i-th value,
/// listed in L^i order.
inline std::vector<std::vector<PointIndex>> min_sets(const DlvPointSet& ps,
                                                     std::span<const PointIndex> live) {
  std::vector<std::vector<PointIndex>> parts(ps.dims());
  if (live.empty()) return parts;
  for (std::size_t i = 0; i < ps.dims(); ++i) {
    int lo = ps.coord(live.front(), i);
    for (PointIndex k : live) lo = std::min(lo, ps.coord(k, i));
    for (PointIndex k : ps.order(i)) {
      if (ps.coord(k, i) != lo) continue;
      if (std::find(live.begin(), live.end(), k) != live.end()) parts[i].push_back(k);
    }
  }
  return parts;
}

/// Conflict partition X_1..X_m: no coordinate has a unique minimum. Parts may
/// share a point that is minimal in several coordinates.
struct CPartition {
  std::vector<std::vector<PointIndex>> parts;

  std::size_t point_count() const {
    std::vector<PointIndex> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }
};

inline std::optional<CPartition> detect_conflict(const DlvPointSet& ps,
                                                 std::span<const PointIndex> live) {
  auto parts = min_sets(ps, live);
  for (const auto& x : parts) {
    if (x.size() == 1) return std::nullopt;
  }
  return CPartition{std::move(parts)};
}

/// Most points of the conflict any PMI sequence can contain:
/// |X| - min_i |X_i| + 1.
inline std::size_t conflict_inclusion_bound(const CPartition& cp) {
  std::size_t smallest = cp.parts.front().size();
  for (const auto& x : cp.parts) smallest = std::min(smallest, x.size());
  return cp.point_count() - smallest + 1;
}

inline std::vector<PointIndex> all_points(const DlvPointSet& ps) {
  std::vector<PointIndex> live(ps.size());
  for (std::size_t k = 0; k < live.size(); ++k) live[k] = static_cast<PointIndex>(k);
  return live;
}

}  // namespace ssc
