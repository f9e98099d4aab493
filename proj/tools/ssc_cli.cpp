// ssc: distance-based lower bounds on strong structural controllability.
//
//   ssc gen    --family er --n 200 --param 0.075 --seed 1 --out g.edges
//   ssc bound  --graph g.edges --leaders 0,5
//   ssc sweep  --family er --n 100 --param-range 0.05:0.1:0.01 --leaders 8 --trials 20 --out er_greedy.csv
//   ssc verify --family path --n 5 --leaders 0 --trials 20

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssc/experiments.hpp"
#include "ssc/oracles.hpp"

namespace {

using namespace ssc;

struct GraphArgs {
  std::string file;
  std::string family = "er";
  int n = 0;
  std::optional<double> param;
};

struct LeaderArgs {
  std::string list;
  int random = 0;
};

void add_graph_options(CLI::App* cmd, GraphArgs& g) {
  cmd->add_option("--graph", g.file, "Edge-list file (overrides --family)");
  cmd->add_option("--family", g.family, "er | ba | path | cycle | complete");
  cmd->add_option("--n", g.n, "Node count");
  cmd->add_option("--param", g.param, "p for er, m_attach for ba");
}

void add_leader_options(CLI::App* cmd, LeaderArgs& l) {
  auto* list = cmd->add_option("--leaders", l.list, "Comma-separated leader ids");
  auto* rnd = cmd->add_option("--random-leaders", l.random, "Draw K leaders uniformly");
  list->excludes(rnd);
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::istringstream item(tok);
    T v{};
    if (!(item >> v)) throw Error(Errc::Parse, "bad list item '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

/// "lo:hi:step", inclusive, values rounded to 1e-9.
std::vector<double> parse_range(const std::string& text) {
  auto parts = text;
  for (auto& c : parts) if (c == ':') c = ',';
  auto v = parse_list<double>(parts);
  if (v.size() != 3 || v[2] <= 0 || v[1] < v[0]) throw Error(Errc::Parse, "range must be lo:hi:step");
  const auto count = static_cast<long>(std::llround((v[1] - v[0]) / v[2])) + 1;
  std::vector<double> out;
  for (long i = 0; i < count; ++i) out.push_back(std::round((v[0] + i * v[2]) * 1e9) / 1e9);
  return out;
}

GraphSpec graph_spec(const GraphArgs& a, std::uint64_t seed) {
  if (!a.file.empty()) return GraphSpec{"file", 0, std::nullopt, seed, a.file};
  return GraphSpec{a.family, a.n, a.param, seed, {}};
}

LeaderSet leaders_for(const LeaderArgs& a, const Graph& g, std::uint64_t seed) {
  if (a.random > 0) {
    Rng rng(derive_seed(seed, 1));
    return random_leaders(g.node_count(), a.random, rng);
  }
  if (a.list.empty()) throw Error(Errc::InvalidLeaders, "give --leaders or --random-leaders");
  return LeaderSet(parse_list<NodeId>(a.list));
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::Io, "cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-based lower bounds on the dimension of strong structural controllability"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out;

  // gen
  GraphArgs gen_graph;
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  add_graph_options(gen, gen_graph);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  // bound
  GraphArgs bound_graph;
  LeaderArgs bound_leaders;
  std::string bound_methods = "all";
  std::uint64_t state_cap = DpOptions{}.state_cap;
  auto* bound = app.add_subcommand("bound", "Compute bounds for one instance (JSON)");
  add_graph_options(bound, bound_graph);
  add_leader_options(bound, bound_leaders);
  bound->add_option("--methods", bound_methods, "all or a subset of dp,greedy,zfs,closed");
  bound->add_option("--state-cap", state_cap, "Max memoised DP cells");
  bound->add_option("--seed", seed);
  bound->add_option("--out", out);

  // sweep
  SweepSpec spec;
  std::string params_text, range_text, leader_text = "8", sweep_methods = "all";
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep (CSV)");
  sweep->add_option("--id", spec.experiment_id, "experiment_id column");
  sweep->add_option("--family", spec.family, "er | ba | path | cycle");
  sweep->add_option("--n", spec.n)->required();
  auto* params_opt = sweep->add_option("--params", params_text, "Comma-separated p / m_attach values");
  sweep->add_option("--param-range", range_text, "lo:hi:step (inclusive)")->excludes(params_opt);
  sweep->add_option("--leaders", leader_text, "Comma-separated leader counts");
  sweep->add_option("--trials", spec.trials);
  sweep->add_option("--methods", sweep_methods);
  sweep->add_option("--jobs", spec.jobs, "Worker threads");
  sweep->add_option("--state-cap", spec.dp_options.state_cap);
  sweep->add_option("--seed", spec.master_seed);
  sweep->add_option("--out", out);

  // verify
  GraphArgs verify_graph;
  LeaderArgs verify_leaders;
  int verify_trials = 20;
  double tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "Sample controllability ranks against the PMI bound (JSON)");
  add_graph_options(verify, verify_graph);
  add_leader_options(verify, verify_leaders);
  verify->add_option("--trials", verify_trials);
  verify->add_option("--tol", tol);
  verify->add_option("--seed", seed);
  verify->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      Graph g = make_graph(graph_spec(gen_graph, seed));
      std::ostringstream text;
      text << "# family=" << gen_graph.family << " n=" << g.node_count() << " seed=" << seed << '\n';
      write_edge_list(g, text);
      emit(out, text.str());
    } else if (bound->parsed()) {
      auto gs = graph_spec(bound_graph, seed);
      Graph g = make_graph(gs);
      LeaderSet leaders = leaders_for(bound_leaders, g, seed);
      DpOptions opts;
      opts.state_cap = state_cap;
      BoundReport rep = run_bound(g, leaders, Methods::parse(bound_methods), opts);
      rep.graph = gs;
      if (!rep.dp_warning.empty()) std::cerr << "warning: " << rep.dp_warning << '\n';
      emit(out, to_json(rep).dump(2) + "\n");
    } else if (sweep->parsed()) {
      if (!range_text.empty()) spec.params = parse_range(range_text);
      else if (!params_text.empty()) spec.params = parse_list<double>(params_text);
      spec.leader_counts = parse_list<NodeId>(leader_text);
      spec.methods = Methods::parse(sweep_methods);
      std::ostringstream text;
      write_sweep_csv(run_sweep(spec), text);
      emit(out, text.str());
    } else if (verify->parsed()) {
      Graph g = make_graph(graph_spec(verify_graph, seed));
      LeaderSet leaders = leaders_for(verify_leaders, g, seed);
      auto rep = verify_rank_bound(g, leaders, verify_trials, seed, tol);
      json arr = json::array();
      for (const auto& s : rep.samples) arr.push_back(to_json(s, rep.delta));
      emit(out, arr.dump(2) + "\n");
      if (!rep.ok) {
        std::cerr << "sampled rank below delta=" << rep.delta << '\n';
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
