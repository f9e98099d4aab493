#pragma once

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ssc/dlv.hpp"
#include "ssc/error.hpp"
#include "ssc/graph.hpp"
#include "ssc/oracles.hpp"
#include "ssc/pmi_exact.hpp"
#include "ssc/pmi_greedy.hpp"
#include "ssc/rng.hpp"
#include "ssc/topo_bounds.hpp"
#include "ssc/zfs.hpp"

namespace ssc {

using json = nlohmann::json;

// --- graph source ---------------------------------------------------------------

struct GraphSpec {
  std::string family = "er";  // er | ba | path | cycle | complete | file
  NodeId n = 0;
  std::optional<double> param;  // p for er, m_attach for ba
  std::uint64_t seed = 0;
  std::string file;  // family == "file"
};

/// ER graphs are resampled until connected (at most 100 draws).
inline Graph make_graph(const GraphSpec& spec) {
  const auto& f = spec.family;
  if (f == "file") {
    std::ifstream in(spec.file);
    if (!in) throw Error(Errc::Io, "cannot open '" + spec.file + "'");
    return read_edge_list(in);
  }
  if (f == "path") return gen_path(spec.n);
  if (f == "cycle") return gen_cycle(spec.n);
  if (f == "complete") return gen_complete(spec.n);
  if (!spec.param) throw Error(Errc::BadParams, "family '" + f + "' needs a parameter");
  if (f == "er") return gen_erdos_renyi(spec.n, *spec.param, spec.seed, true);
  if (f == "ba") {
    auto m = static_cast<NodeId>(*spec.param);
    if (static_cast<double>(m) != *spec.param) throw Error(Errc::BadParams, "m_attach must be an integer");
    return gen_barabasi_albert(spec.n, m, spec.seed);
  }
  throw Error(Errc::BadParams, "unknown graph family '" + f + "'");
}

// --- single-instance report -------------------------------------------------------

struct Methods {
  bool dp = true;
  bool greedy = true;
  bool zfs = true;
  bool closed_form = true;

  /// Comma-separated subset of dp,greedy,zfs,closed or "all".
  static Methods parse(const std::string& list) {
    if (list == "all") return {};
    Methods m{false, false, false, false};
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "dp") m.dp = true;
      else if (tok == "greedy") m.greedy = true;
      else if (tok == "zfs") m.zfs = true;
      else if (tok == "closed") m.closed_form = true;
      else throw Error(Errc::BadParams, "unknown method '" + tok + "'");
    }
    return m;
  }
};

struct SolveRecord {
  std::string method;
  std::size_t delta = 0;
  std::vector<std::pair<Point, std::size_t>> witness;  // (point, satisfying coordinate)
  std::size_t cells_touched = 0;
  double runtime_ms = 0.0;
};

struct BoundReport {
  GraphSpec graph;
  NodeId n = 0;
  std::vector<NodeId> leaders;
  std::size_t distinct_points = 0;
  std::optional<std::size_t> delta_dp;
  std::optional<std::size_t> delta_greedy;
  std::optional<std::size_t> zfs_size;
  std::optional<int> closed_form;
  int diameter = 0;
  double dp_ms = 0.0;
  double greedy_ms = 0.0;
  double zfs_ms = 0.0;
  std::optional<SolveRecord> dp;
  std::optional<SolveRecord> greedy;
  std::string dp_warning;               // set when the DP was skipped
  std::vector<std::string> violations;  // broken report invariants, normally empty
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline SolveRecord make_record(std::string method, const DlvPointSet& ps, const PmiSequence& seq,
                               std::size_t cells, double ms) {
  SolveRecord r{std::move(method), seq.length(), {}, cells, ms};
  for (const auto& e : seq.entries) r.witness.emplace_back(ps.vec(e.point), e.coord.value_or(0));
  return r;
}

}  // namespace detail

/// Bound invariants: greedy <= dp, zfs <= dp, every delta <= n, and the greedy
/// floors max_i |unique values of coordinate i| and m.
inline std::vector<std::string> check_report(const BoundReport& r, const DlvPointSet& ps) {
  std::vector<std::string> bad;
  const auto n = static_cast<std::size_t>(r.n);
  if (r.delta_dp && r.delta_greedy && *r.delta_greedy > *r.delta_dp) bad.push_back("greedy>dp");
  if (r.delta_dp && r.zfs_size && *r.zfs_size > *r.delta_dp) bad.push_back("zfs>dp");
  for (auto d : {r.delta_dp, r.delta_greedy, r.zfs_size}) {
    if (d && *d > n) bad.push_back("delta>n");
  }
  if (r.delta_greedy) {
    std::size_t widest = 0;
    for (std::size_t i = 0; i < ps.dims(); ++i) widest = std::max(widest, ps.unique_values(i).size());
    if (*r.delta_greedy < widest) bad.push_back("greedy<max_unique_values");
    if (*r.delta_greedy < r.leaders.size()) bad.push_back("greedy<m");
  }
  return bad;
}

/// Runs the requested methods on one instance. TableTooLarge leaves delta_dp
/// empty and sets dp_warning; every other error propagates.
inline BoundReport run_bound(const Graph& g, const LeaderSet& leaders, const Methods& methods,
                             const DpOptions& dp_opts = {}) {
  using clock = std::chrono::steady_clock;
  BoundReport r;
  r.n = g.node_count();
  r.leaders = leaders.ids();
  r.diameter = diameter(g);

  auto t0 = clock::now();
  const auto ps = build_dlv(g, leaders);
  const double dlv_ms = detail::elapsed_ms(t0);
  r.distinct_points = ps.size();

  if (methods.dp) {
    t0 = clock::now();
    try {
      auto sol = solve_dp(ps, dp_opts);
      r.dp_ms = dlv_ms + detail::elapsed_ms(t0);
      r.delta_dp = sol.delta;
      r.dp = detail::make_record("dp", ps, sol.witness, sol.cells_touched, r.dp_ms);
    } catch (const Error& e) {
      if (e.code() != Errc::TableTooLarge) throw;
      r.dp_ms = dlv_ms + detail::elapsed_ms(t0);
      r.dp_warning = e.what();
    }
  }
  if (methods.greedy) {
    t0 = clock::now();
    auto seq = pmi_greedy(ps);
    r.greedy_ms = dlv_ms + detail::elapsed_ms(t0);
    r.delta_greedy = seq.length();
    r.greedy = detail::make_record("greedy", ps, seq, 0, r.greedy_ms);
  }
  if (methods.zfs) {
    t0 = clock::now();
    r.zfs_size = derived_set(g, leaders).size();
    r.zfs_ms = detail::elapsed_ms(t0);
  }
  if (methods.closed_form) r.closed_form = closed_form_bound(g, leaders);
  r.violations = check_report(r, ps);
  return r;
}

inline json to_json(const SolveRecord& s) {
  json witness = json::array();
  for (const auto& [pt, coord] : s.witness) witness.push_back(json::array({format_point(pt), coord}));
  return {{"method", s.method},
          {"delta", s.delta},
          {"witness", witness},
          {"table_cells_touched", s.cells_touched},
          {"runtime_ms", s.runtime_ms}};
}

inline json to_json(const BoundReport& r) {
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  json j;
  j["graph"] = {{"family", r.graph.family}, {"n", r.n}, {"param", opt(r.graph.param)},
                {"seed", r.graph.seed}};
  if (r.graph.family == "file") j["graph"]["file"] = r.graph.file;
  j["leaders"] = r.leaders;
  j["distinct_points"] = r.distinct_points;
  j["delta_dp"] = opt(r.delta_dp);
  j["delta_greedy"] = opt(r.delta_greedy);
  j["zfs_size"] = opt(r.zfs_size);
  j["closed_form"] = opt(r.closed_form);
  j["diameter"] = r.diameter;
  j["runtime_ms"] = {{"dp", r.dp_ms}, {"greedy", r.greedy_ms}, {"zfs", r.zfs_ms}};
  json solves = json::object();
  if (r.dp) solves["dp"] = to_json(*r.dp);
  if (r.greedy) solves["greedy"] = to_json(*r.greedy);
  j["solves"] = solves;
  if (!r.dp_warning.empty()) j["dp_warning"] = r.dp_warning;
  j["violations"] = r.violations;
  return j;
}

// --- sweeps ------------------------------------------------------------------------

inline constexpr const char* kCsvHeader =
    "experiment_id,family,n,param,m_leaders,trial,seed,delta_dp,delta_greedy,zfs_size,"
    "closed_form,diameter,dp_ms,greedy_ms,error";

struct SweepSpec {
  std::string experiment_id = "sweep";
  std::string family = "er";       // er | ba | path | cycle
  NodeId n = 100;
  std::vector<double> params;      // p or m_attach; ignored (may be empty) for path/cycle
  std::vector<NodeId> leader_counts;
  int trials = 1;
  std::uint64_t master_seed = 0;
  Methods methods;
  DpOptions dp_options;
  unsigned jobs = 1;

  void validate() const {
    if (leader_counts.empty()) throw Error(Errc::BadParams, "leader grid is empty");
    if (trials < 1) throw Error(Errc::BadParams, "trials must be >= 1");
    const bool needs_param = family == "er" || family == "ba";
    if (needs_param && params.empty()) throw Error(Errc::BadParams, "parameter grid is empty");
    if (!needs_param && family != "path" && family != "cycle") {
      throw Error(Errc::BadParams, "unknown sweep family '" + family + "'");
    }
  }
};

struct SweepRow {
  std::string experiment_id;
  std::string family;
  NodeId n = 0;
  std::optional<double> param;
  NodeId m_leaders = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> delta_dp, delta_greedy, zfs_size;
  std::optional<int> closed_form;
  std::optional<int> diameter;
  double dp_ms = 0.0, greedy_ms = 0.0;
  std::string error;
};

namespace detail {

inline std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string fixed3(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 3);
  return std::string(buf, res.ptr);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return q + "\"";
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace detail

/// One CSV line (no newline). Runtime columns are dp_ms and greedy_ms.
inline std::string to_csv(const SweepRow& r) {
  std::string s;
  s += detail::csv_field(r.experiment_id) + ',';
  s += r.family + ',';
  s += std::to_string(r.n) + ',';
  s += (r.param ? detail::shortest(*r.param) : std::string()) + ',';
  s += std::to_string(r.m_leaders) + ',';
  s += std::to_string(r.trial) + ',';
  s += std::to_string(r.seed) + ',';
  s += detail::opt_str(r.delta_dp) + ',';
  s += detail::opt_str(r.delta_greedy) + ',';
  s += detail::opt_str(r.zfs_size) + ',';
  s += detail::opt_str(r.closed_form) + ',';
  s += detail::opt_str(r.diameter) + ',';
  s += detail::fixed3(r.dp_ms) + ',';
  s += detail::fixed3(r.greedy_ms) + ',';
  s += detail::csv_field(r.error);
  return s;
}

/// Trial seed = derive_seed(master, grid index, trial). The graph is drawn
/// from that seed; leaders are drawn afresh per trial from
/// derive_seed(trial seed, 1).
inline SweepRow run_trial(const SweepSpec& spec, std::size_t param_idx, std::size_t leader_idx,
                          int trial) {
  SweepRow row;
  row.experiment_id = spec.experiment_id;
  row.family = spec.family;
  row.n = spec.n;
  if (!spec.params.empty()) row.param = spec.params[param_idx];
  row.m_leaders = spec.leader_counts[leader_idx];
  row.trial = trial;
  const std::size_t grid = param_idx * spec.leader_counts.size() + leader_idx;
  row.seed = derive_seed(spec.master_seed, grid, static_cast<std::uint64_t>(trial));
  try {
    GraphSpec gs{spec.family, spec.n, row.param, row.seed, {}};
    Graph g = make_graph(gs);
    Rng leader_rng(derive_seed(row.seed, 1));
    LeaderSet leaders = random_leaders(g.node_count(), row.m_leaders, leader_rng);
    BoundReport rep = run_bound(g, leaders, spec.methods, spec.dp_options);
    row.delta_dp = rep.delta_dp;
    row.delta_greedy = rep.delta_greedy;
    row.zfs_size = rep.zfs_size;
    row.closed_form = rep.closed_form;
    row.diameter = rep.diameter;
    row.dp_ms = rep.dp_ms;
    row.greedy_ms = rep.greedy_ms;
    std::string err = rep.dp_warning;
    for (const auto& v : rep.violations) err += (err.empty() ? "" : "; ") + ("InvariantViolation: " + v);
    row.error = err;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

/// All rows in (param, leader count, trial) order. Trials run on `spec.jobs`
/// threads; the row order does not depend on completion order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t np = spec.params.empty() ? 1 : spec.params.size();
  const std::size_t nl = spec.leader_counts.size();
  const auto nt = static_cast<std::size_t>(spec.trials);
  const std::size_t total = np * nl * nt;
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      rows[i] = run_trial(spec, i / (nl * nt), (i / nt) % nl, static_cast<int>(i % nt));
    }
  };
  const unsigned jobs = std::max(1u, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << to_csv(r) << '\n';
}

inline json to_json(const RankSample& s, std::size_t delta) {
  return {{"seed", s.seed}, {"weights", s.weights}, {"rank", s.rank},
          {"tol", s.tol},   {"delta", delta},       {"ok", s.rank >= static_cast<int>(delta)}};
}

}  // namespace ssc
