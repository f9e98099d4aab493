#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "ssc/dlv.hpp"
#include "ssc/error.hpp"
#include "ssc/graph.hpp"
#include "ssc/pmi_exact.hpp"
#include "ssc/rng.hpp"

namespace ssc {

// --- exhaustive PMI search ---------------------------------------------------------

namespace detail {

// Choosing q at coordinate j forces every later point r to have r_j > q_j, so
// the search state is just the vector of strict lower bounds. Points already
// used can never satisfy it again.
inline void bf_extend(const DlvPointSet& ps, std::vector<int>& bound, std::size_t length,
                      std::size_t& best) {
  best = std::max(best, length);
  std::vector<PointIndex> cand;
  for (PointIndex k = 0; k < static_cast<PointIndex>(ps.size()); ++k) {
    bool ok = true;
    for (std::size_t j = 0; j < ps.dims() && ok; ++j) ok = ps.coord(k, j) > bound[j];
    if (ok) cand.push_back(k);
  }
  if (length + cand.size() <= best) return;
  for (PointIndex k : cand) {
    for (std::size_t j = 0; j < ps.dims(); ++j) {
      const int saved = bound[j];
      bound[j] = ps.coord(k, j);
      bf_extend(ps, bound, length + 1, best);
      bound[j] = saved;
      if (best == length + cand.size()) return;
    }
  }
}

}  // namespace detail

/// Exact longest PMI length by depth-first search over ordered selections,
/// pruned by "length so far + admissible points <= best". At most 10 points.
inline std::size_t brute_force_pmi(const DlvPointSet& ps) {
  if (ps.size() > 10) throw Error(Errc::InputTooLarge, "brute force limited to 10 points");
  std::vector<int> bound(ps.dims(), INT_MIN);
  std::size_t best = 0;
  detail::bf_extend(ps, bound, 0, best);
  return best;
}

/// Same quantity with no pruning: every ordered selection of distinct points
/// is checked against the definition directly. At most 7 points.
inline std::size_t brute_force_pmi_unpruned(const DlvPointSet& ps) {
  if (ps.size() > 7) throw Error(Errc::InputTooLarge, "unpruned brute force limited to 7 points");
  const auto n = ps.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<PointIndex> pick;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) pick.push_back(static_cast<PointIndex>(k));
    if (pick.size() <= best) continue;
    do {
      bool pmi = true;
      for (std::size_t a = 0; a < pick.size() && pmi; ++a) {
        bool some_coord = false;
        for (std::size_t j = 0; j < ps.dims() && !some_coord; ++j) {
          bool below_all = true;
          for (std::size_t b = a + 1; b < pick.size() && below_all; ++b)
            below_all = ps.coord(pick[a], j) < ps.coord(pick[b], j);
          some_coord = below_all;
        }
        pmi = some_coord;
      }
      if (pmi) {
        best = pick.size();
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return best;
}

// --- weighted Laplacian and controllability rank -------------------------------------

/// L_w = Delta - A_w for positive weights on g's edges, taken in g.edges() order.
struct WeightedLaplacian {
  Eigen::MatrixXd matrix;
  std::vector<double> weights;
};

inline WeightedLaplacian make_weighted_laplacian(const Graph& g, const std::vector<double>& w) {
  auto edges = g.edges();
  if (w.size() != edges.size()) throw Error(Errc::BadWeights, "one weight per edge required");
  const NodeId n = g.node_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(w[e] > 0.0) || !std::isfinite(w[e])) {
      throw Error(Errc::BadWeights, "edge weights must be finite and positive");
    }
    auto [u, v] = edges[e];
    lap(u, v) -= w[e];
    lap(v, u) -= w[e];
    lap(u, u) += w[e];
    lap(v, v) += w[e];
  }
  return {std::move(lap), w};
}

/// Numeric rank of [B, (-L)B, ..., (-L)^{n-1} B].
///
/// Block Krylov with deflation: each new block is (-L) times the directions
/// accepted from the previous block, orthogonalised (two Gram-Schmidt passes)
/// against the basis so far. A column is accepted when its residual norm
/// exceeds tol times the largest raw column norm seen. Stops when a block adds
/// nothing or the basis spans R^n.
inline int controllability_rank(const Graph& g, const LeaderSet& leaders,
                                const std::vector<double>& weights, double tol = 1e-8) {
  const NodeId n = g.node_count();
  if (n > 12) throw Error(Errc::TooLarge, "rank oracle limited to n <= 12");
  leaders.validate(n);
  const auto lap = make_weighted_laplacian(g, weights);
  const Eigen::MatrixXd step = -lap.matrix;

  Eigen::MatrixXd basis(n, 0);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(leaders.size()));
  for (std::size_t j = 0; j < leaders.size(); ++j) block(leaders[j], static_cast<Eigen::Index>(j)) = 1.0;

  double scale = 0.0;
  for (NodeId power = 0; power < n && basis.cols() < n; ++power) {
    std::vector<Eigen::VectorXd> accepted;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      Eigen::VectorXd w = block.col(c);
      scale = std::max(scale, w.norm());
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index q = 0; q < basis.cols(); ++q) w -= basis.col(q).dot(w) * basis.col(q);
      }
      if (w.norm() > tol * scale) {
        w.normalize();
        basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
        basis.col(basis.cols() - 1) = w;
        accepted.push_back(w);
        if (basis.cols() == n) break;
      }
    }
    if (accepted.empty()) break;
    block.resize(n, static_cast<Eigen::Index>(accepted.size()));
    for (std::size_t c = 0; c < accepted.size(); ++c)
      block.col(static_cast<Eigen::Index>(c)) = step * accepted[c];
  }
  return static_cast<int>(basis.cols());
}

struct RankSample {
  std::uint64_t seed = 0;
  std::vector<double> weights;
  int rank = 0;
  double tol = 0.0;
};

struct RankReport {
  int min_rank = 0;
  std::size_t delta = 0;
  bool ok = true;
  std::vector<RankSample> samples;
};

/// Edge weights i.i.d. uniform on [0.5, 1.5].
inline std::vector<double> sample_weights(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w(g.edge_count());
  for (auto& x : w) x = rng.uniform(0.5, 1.5);
  return w;
}

/// Samples `trials` weightings (seed of sample t = derive_seed(seed, t)) and
/// checks rank >= longest PMI length on each. min_rank over samples is an
/// upper estimate of the dimension of strong structural controllability.
inline RankReport verify_rank_bound(const Graph& g, const LeaderSet& leaders, int trials,
                                      std::uint64_t seed, double tol = 1e-8) {
  if (trials < 1) throw Error(Errc::BadParams, "need at least one trial");
  RankReport report;
  report.delta = pmi_dp_length(build_dlv(g, leaders));
  report.min_rank = INT_MAX;
  for (int t = 0; t < trials; ++t) {
    RankSample s;
    s.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    s.weights = sample_weights(g, s.seed);
    s.tol = tol;
    s.rank = controllability_rank(g, leaders, s.weights, tol);
    report.min_rank = std::min(report.min_rank, s.rank);
    report.ok = report.ok && s.rank >= static_cast<int>(report.delta);
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace ssc
