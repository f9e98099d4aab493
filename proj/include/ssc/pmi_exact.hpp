#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssc/dlv.hpp"
#include "ssc/error.hpp"

namespace ssc {

/// Threshold value meaning "past every value in this coordinate".
inline constexpr int kSentinel = INT_MAX;

// --- coordinate compression --------------------------------------------------

/// Per-coordinate rank <-> value maps. Between two consecutive present values
/// the longest-PMI function is constant, so thresholds only need to range over
/// present values plus one sentinel rank z_i.
struct CoordinateCompression {
  std::vector<std::vector<int>> values;  // rank -> value, per coordinate

  std::size_t dims() const { return values.size(); }
  int z(std::size_t i) const { return static_cast<int>(values[i].size()); }

  int value(std::size_t i, int rank) const {
    return rank >= z(i) ? kSentinel : values[i][static_cast<std::size_t>(rank)];
  }

  /// Smallest rank whose value is >= v (z(i) if none).
  int rank_of(std::size_t i, int v) const {
    const auto& vals = values[i];
    return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
  }
};

inline CoordinateCompression compress_coordinates(const DlvPointSet& ps) {
  CoordinateCompression cc;
  for (std::size_t i = 0; i < ps.dims(); ++i) cc.values.push_back(ps.unique_values(i));
  return cc;
}

/// 1 iff some point p has p_i == c_i and p_j >= c_j for all j != i.
inline int indicator(const DlvPointSet& ps, std::span<const int> c, std::size_t i) {
  if (c[i] == kSentinel) return 0;
  for (PointIndex k = 0; k < static_cast<PointIndex>(ps.size()); ++k) {
    if (ps.coord(k, i) != c[i]) continue;
    bool dominates = true;
    for (std::size_t j = 0; j < ps.dims() && dominates; ++j) {
      if (j != i && ps.coord(k, j) < c[j]) dominates = false;
    }
    if (dominates) return 1;
  }
  return 0;
}

// --- recursive reference -------------------------------------------------------

namespace detail {

inline PmiSequence pmi_recursive_impl(const DlvPointSet& ps, const std::vector<PointIndex>& live) {
  if (live.empty()) return {};
  if (live.size() == 1) return PmiSequence{{PmiEntry{live.front(), 0}}};

  auto parts = min_sets(ps, live);
  auto take = [&](std::size_t i) {
    const auto& x = parts[i];
    std::vector<PointIndex> rest;
    for (PointIndex k : live) {
      if (std::find(x.begin(), x.end(), k) == x.end()) rest.push_back(k);
    }
    PmiSequence seq{{PmiEntry{x.front(), i}}};
    auto tail = pmi_recursive_impl(ps, rest);
    seq.entries.insert(seq.entries.end(), tail.entries.begin(), tail.entries.end());
    return seq;
  };

  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() == 1) return take(i);
  }
  PmiSequence best;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto cand = take(i);
    if (cand.length() > best.length()) best = std::move(cand);
  }
  return best;
}

}  // namespace detail

/// Exhaustive recursion over conflict branches. Exponential; refuses inputs
/// with more than `max_points` distinct points (Errc::InputTooLarge).
inline PmiSequence pmi_recursive(const DlvPointSet& ps, std::size_t max_points = 20) {
  if (ps.size() > max_points) {
    throw Error(Errc::InputTooLarge, std::to_string(ps.size()) + " points exceeds recursion cap " +
                                         std::to_string(max_points));
  }
  return detail::pmi_recursive_impl(ps, all_points(ps));
}

// --- dynamic program -------------------------------------------------------------

struct DpOptions {
  /// Limit on cells of the dense rank table, prod(z_i + 1).
  std::uint64_t cell_cap = std::uint64_t{1} << 28;
  /// Limit on memoised cells visited by the sparse evaluation.
  std::uint64_t state_cap = std::uint64_t{1} << 22;
};

namespace detail {

inline std::string format_dims(const DlvPointSet& ps) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.dims(); ++i) {
    if (i) s += ',';
    s += std::to_string(ps.unique_values(i).size() + 1);
  }
  return s + "]";
}

/// prod(z_i + 1), saturating at UINT64_MAX.
inline std::uint64_t full_table_cells(const DlvPointSet& ps) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ps.dims(); ++i) {
    std::uint64_t d = ps.unique_values(i).size() + 1;
    if (total > UINT64_MAX / d) return UINT64_MAX;
    total *= d;
  }
  return total;
}

}  // namespace detail

/// Dense lattice of alpha values over rank vectors r, 0 <= r_i <= z_i.
///
/// alpha[r] = max_i (alpha[r + e_i] + 1_{c(r), i}), alpha = 0 when some r_i = z_i,
/// where c(r)_i is the r_i-th smallest value of coordinate i. Cells are stored
/// with coordinate 0 varying fastest, so r + e_i always has a larger flat index
/// and a single descending sweep respects every dependency.
class DpTable {
 public:
  static constexpr std::uint8_t kNoChoice = 0x7f;

  DpTable(const DlvPointSet& ps, const DpOptions& opts = {}) : ps_(&ps) {
    const std::size_t m = ps.dims();
    const std::uint64_t total = detail::full_table_cells(ps);
    if (total > opts.cell_cap) {
      throw Error(Errc::TableTooLarge, "dims " + detail::format_dims(ps) + " need " +
                                           (total == UINT64_MAX ? std::string("> 2^64")
                                                                : std::to_string(total)) +
                                           " cells, cap " + std::to_string(opts.cell_cap));
    }
    if (ps.size() >= 0xffff) throw Error(Errc::TableTooLarge, "too many points for dense table");
    if (m >= kNoChoice) throw Error(Errc::TableTooLarge, "too many coordinates for dense table");

    dims_.resize(m);
    stride_.resize(m);
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < m; ++i) {
      dims_[i] = static_cast<int>(ps.unique_values(i).size()) + 1;
      stride_[i] = static_cast<std::size_t>(s);
      s *= static_cast<std::uint64_t>(dims_[i]);
    }
    alpha_.assign(static_cast<std::size_t>(total), 0);
    choice_.assign(static_cast<std::size_t>(total), kNoChoice);

    // buckets[i][v]: points whose i-th rank is v
    buckets_.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
      buckets_[i].assign(static_cast<std::size_t>(dims_[i]), {});
      for (PointIndex k = 0; k < static_cast<PointIndex>(ps.size()); ++k) {
        buckets_[i][static_cast<std::size_t>(ps.rank(k, i))].push_back(k);
      }
      for (auto& b : buckets_[i]) {
        std::sort(b.begin(), b.end(), [&](PointIndex a, PointIndex c) {
          return ps.representative(a) < ps.representative(c);
        });
      }
    }

    std::vector<int> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = dims_[i] - 1;
    for (std::size_t idx = alpha_.size(); idx-- > 0;) {
      bool boundary = false;
      for (std::size_t i = 0; i < m; ++i) boundary = boundary || r[i] == dims_[i] - 1;
      if (!boundary) {
        int best = -1;
        std::uint8_t pick = kNoChoice;
        for (std::size_t i = 0; i < m; ++i) {
          const bool fired = certifier(r, i) >= 0;
          const int cand = alpha_[idx + stride_[i]] + (fired ? 1 : 0);
          if (cand > best) {
            best = cand;
            pick = static_cast<std::uint8_t>(i | (fired ? 0x80u : 0u));
          }
        }
        alpha_[idx] = static_cast<std::uint16_t>(best);
        choice_[idx] = pick;
      }
      // decrement the mixed-radix counter
      for (std::size_t i = 0; i < m; ++i) {
        if (r[i] > 0) {
          --r[i];
          break;
        }
        r[i] = dims_[i] - 1;
      }
    }
  }

  const std::vector<int>& dims() const { return dims_; }
  std::size_t cell_count() const { return alpha_.size(); }

  std::size_t flat(std::span<const int> r) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i) idx += static_cast<std::size_t>(r[i]) * stride_[i];
    return idx;
  }

  std::vector<int> unflatten(std::size_t idx) const {
    std::vector<int> r(dims_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = static_cast<int>(idx % static_cast<std::size_t>(dims_[i]));
      idx /= static_cast<std::size_t>(dims_[i]);
    }
    return r;
  }

  int alpha(std::span<const int> r) const { return alpha_[flat(r)]; }
  int alpha_flat(std::size_t idx) const { return alpha_[idx]; }

  /// Maximising coordinate at r, or -1 on the boundary.
  int chosen_coord(std::span<const int> r) const {
    auto c = choice_[flat(r)];
    return c == kNoChoice ? -1 : static_cast<int>(c & 0x7fu);
  }
  bool indicator_fired(std::span<const int> r) const {
    auto c = choice_[flat(r)];
    return c != kNoChoice && (c & 0x80u);
  }

  int delta() const { return alpha_.empty() ? 0 : alpha_[0]; }

  /// Follows backpointers from r = 0, emitting the certifying point (smallest
  /// representative id) wherever the indicator fired.
  PmiSequence witness() const {
    PmiSequence seq;
    std::vector<int> r(dims_.size(), 0);
    while (true) {
      int i = chosen_coord(r);
      if (i < 0) break;
      if (indicator_fired(r)) {
        seq.entries.push_back(PmiEntry{certifier(r, static_cast<std::size_t>(i)),
                                       static_cast<std::size_t>(i)});
      }
      ++r[static_cast<std::size_t>(i)];
    }
    return seq;
  }

 private:
  /// Point with rank_i == r_i dominating r elsewhere, smallest representative
  /// first; -1 if none.
  PointIndex certifier(std::span<const int> r, std::size_t i) const {
    for (PointIndex k : buckets_[i][static_cast<std::size_t>(r[i])]) {
      bool ok = true;
      for (std::size_t j = 0; j < r.size() && ok; ++j) {
        if (j != i && ps_->rank(k, j) < r[j]) ok = false;
      }
      if (ok) return k;
    }
    return -1;
  }

  const DlvPointSet* ps_;
  std::vector<int> dims_;
  std::vector<std::size_t> stride_;
  std::vector<std::uint16_t> alpha_;
  std::vector<std::uint8_t> choice_;
  std::vector<std::vector<std::vector<PointIndex>>> buckets_;
};

struct DpSolution {
  PmiSequence witness;
  std::size_t delta = 0;
  std::size_t cells_touched = 0;
};

/// Longest PMI via the alpha recurrence evaluated top-down from r = 0.
///
/// Only normalised cells are memoised: those whose threshold equals the
/// coordinate-wise minimum of the points dominating it. Any other cell has the
/// same alpha as its normalisation (same dominating set), and at a normalised
/// cell every indicator fires, so alpha = 1 + max_i alpha(S \ X_i) where X_i are
/// the live points at the minimum of coordinate i. When some X_i is a single
/// point only that branch is taken. Throws Errc::TableTooLarge once more than
/// `opts.state_cap` cells are memoised.
inline DpSolution solve_dp(const DlvPointSet& ps, const DpOptions& opts = {}) {
  const std::size_t m = ps.dims();
  struct Entry {
    std::uint32_t alpha;
    std::uint32_t coord;
  };
  std::unordered_map<std::string, Entry> memo;

  // Key = minimum rank per coordinate over the live set, 4 bytes each.
  auto corner_key = [&](const std::vector<PointIndex>& live, std::vector<int>& corner) {
    corner.assign(m, INT_MAX);
    for (PointIndex k : live)
      for (std::size_t i = 0; i < m; ++i) corner[i] = std::min(corner[i], ps.rank(k, i));
    return std::string(reinterpret_cast<const char*>(corner.data()), m * sizeof(int));
  };
  auto without = [&](const std::vector<PointIndex>& live, const std::vector<int>& corner,
                     std::size_t i) {
    std::vector<PointIndex> rest;
    rest.reserve(live.size());
    for (PointIndex k : live)
      if (ps.rank(k, i) != corner[i]) rest.push_back(k);
    return rest;
  };

  struct Frame {
    std::string key;
    std::vector<PointIndex> live;
    std::vector<int> corner;
    std::vector<std::size_t> branches;
    std::size_t next = 0;
    int best = -1;
    std::size_t best_coord = 0;
  };
  auto open = [&](std::vector<PointIndex> live, std::string key, std::vector<int> corner) {
    Frame f{std::move(key), std::move(live), std::move(corner), {}, 0, -1, 0};
    std::vector<std::size_t> counts(m, 0);
    for (PointIndex k : f.live)
      for (std::size_t i = 0; i < m; ++i)
        if (ps.rank(k, i) == f.corner[i]) ++counts[i];
    for (std::size_t i = 0; i < m; ++i) {
      if (counts[i] == 1) {
        f.branches = {i};
        return f;
      }
    }
    for (std::size_t i = 0; i < m; ++i) f.branches.push_back(i);
    return f;
  };

  DpSolution out;
  auto root_live = all_points(ps);
  if (root_live.empty()) return out;

  std::vector<int> scratch;
  std::string root_key = corner_key(root_live, scratch);
  std::vector<Frame> stack;
  stack.push_back(open(root_live, root_key, scratch));
  int returned = -1;  // alpha handed back by a finished child frame

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (returned >= 0) {
      std::size_t i = f.branches[f.next];
      if (returned > f.best) {
        f.best = returned;
        f.best_coord = i;
      }
      ++f.next;
      returned = -1;
    }
    if (f.next < f.branches.size()) {
      std::size_t i = f.branches[f.next];
      auto rest = without(f.live, f.corner, i);
      if (rest.empty()) {
        returned = 0;
        continue;
      }
      std::string key = corner_key(rest, scratch);
      if (auto it = memo.find(key); it != memo.end()) {
        returned = static_cast<int>(it->second.alpha);
        continue;
      }
      stack.push_back(open(std::move(rest), std::move(key), scratch));
      continue;
    }
    const int alpha = f.best + 1;
    memo.emplace(f.key, Entry{static_cast<std::uint32_t>(alpha),
                              static_cast<std::uint32_t>(f.best_coord)});
    if (memo.size() > opts.state_cap) {
      auto total = detail::full_table_cells(ps);
      throw Error(Errc::TableTooLarge,
                  "dims " + detail::format_dims(ps) + " (full table " +
                      (total == UINT64_MAX ? std::string("> 2^64") : std::to_string(total)) +
                      " cells): more than " + std::to_string(opts.state_cap) +
                      " memoised cells visited");
    }
    stack.pop_back();
    returned = alpha;
  }
  out.delta = static_cast<std::size_t>(returned);
  out.cells_touched = memo.size();

  // Witness: replay the stored choices from the root.
  std::vector<PointIndex> live = root_live;
  while (!live.empty()) {
    std::string key = corner_key(live, scratch);
    const std::size_t i = memo.at(key).coord;
    PointIndex pick = -1;
    for (PointIndex k : live) {
      if (ps.rank(k, i) != scratch[i]) continue;
      if (pick < 0 || ps.representative(k) < ps.representative(pick)) pick = k;
    }
    out.witness.entries.push_back(PmiEntry{pick, i});
    live = without(live, scratch, i);
  }
  return out;
}

inline std::size_t pmi_dp_length(const DlvPointSet& ps, const DpOptions& opts = {}) {
  return solve_dp(ps, opts).delta;
}

inline PmiSequence pmi_dp(const DlvPointSet& ps, const DpOptions& opts = {}) {
  return solve_dp(ps, opts).witness;
}

}  // namespace ssc
