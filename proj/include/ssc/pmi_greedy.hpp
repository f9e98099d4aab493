#pragma once

#include <cstddef>
#include <vector>

#include "ssc/dlv.hpp"

namespace ssc {

/// Greedy longest-PMI approximation, O(m n log n).
///
/// Each round looks at X_i, the live points at the minimum of coordinate i.
/// If some X_i is a single point, that point is appended and removed.
/// Otherwise j = argmin_i |X_i|, one point of X_j is appended and all of X_j is
/// removed.
///
/// Tie-breaks: among coordinates (unique minima or equal |X_i|) the highest
/// index wins; in a conflict the appended point is the last member of X_j in
/// L^j order. With these the worked two-leader example yields
/// [(3,0),(2,1),(0,3),(2,2),(1,3)].
///
/// The lists L^i are walked by a head cursor that skips removed points (lazy
/// deletion), and |X_i| is read from per-rank live counts.
inline PmiSequence pmi_greedy(const DlvPointSet& ps) {
  const std::size_t m = ps.dims();
  const std::size_t n = ps.size();
  std::vector<char> live(n, 1);
  std::vector<std::size_t> head(m, 0);
  std::vector<std::vector<std::size_t>> count(m);
  for (std::size_t i = 0; i < m; ++i) {
    count[i].assign(ps.unique_values(i).size(), 0);
    for (std::size_t k = 0; k < n; ++k) ++count[i][ps.rank(static_cast<PointIndex>(k), i)];
  }
  auto remove = [&](PointIndex k) {
    live[k] = 0;
    for (std::size_t i = 0; i < m; ++i) --count[i][ps.rank(k, i)];
  };

  PmiSequence seq;
  std::size_t remaining = n;
  std::vector<std::size_t> sizes(m);
  while (remaining > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& ord = ps.order(i);
      while (!live[ord[head[i]]]) ++head[i];
      sizes[i] = count[i][ps.rank(ord[head[i]], i)];
    }

    std::size_t j = m;
    for (std::size_t i = m; i-- > 0;) {
      if (sizes[i] == 1) {
        j = i;
        break;
      }
    }
    if (j < m) {
      PointIndex p = ps.order(j)[head[j]];
      seq.entries.push_back(PmiEntry{p, j});
      remove(p);
      --remaining;
      continue;
    }

    j = m - 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      if (sizes[i] < sizes[j]) j = i;
    }
    const auto& ord = ps.order(j);
    const int level = ps.rank(ord[head[j]], j);
    std::vector<PointIndex> group;
    for (std::size_t pos = head[j]; pos < ord.size() && ps.rank(ord[pos], j) == level; ++pos) {
      if (live[ord[pos]]) group.push_back(ord[pos]);
    }
    seq.entries.push_back(PmiEntry{group.back(), j});
    for (PointIndex k : group) remove(k);
    remaining -= group.size();
  }
  return seq;
}

/// Adversarial two-coordinate family:
///   S = {(2,2),(2,3),(3,3),(3,4),...,(k+1,k+2),(k+2,k+2)}
///   T = {(1,2),(1,3),...,(1,k+2)}
inline DlvPointSet greedy_gap_family(int k) {
  if (k < 1) throw Error(Errc::BadParams, "greedy_gap_family needs k >= 1");
  std::vector<Point> pts;
  for (int a = 2; a <= k + 1; ++a) {
    pts.push_back({a, a});
    pts.push_back({a, a + 1});
  }
  pts.push_back({k + 2, k + 2});
  for (int b = 2; b <= k + 2; ++b) pts.push_back({1, b});
  return DlvPointSet::from_vectors(2, pts);
}

}  // namespace ssc
