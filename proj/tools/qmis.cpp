// Command-line front end: solve, gen, oracle, check, bench.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qmis/bench.hpp"
#include "qmis/checker.hpp"
#include "qmis/config.hpp"
#include "qmis/errors.hpp"
#include "qmis/generators.hpp"
#include "qmis/io.hpp"
#include "qmis/objective.hpp"
#include "qmis/optimizer.hpp"
#include "qmis/oracle.hpp"
#include "qmis/report.hpp"

namespace {

using namespace qmis;

struct SolveOptions {
  std::string graph_path;
  std::string preset;
  std::string gamma;
  std::optional<double> lr;
  std::optional<std::size_t> iters;
  std::optional<std::size_t> batch_size;
  std::optional<std::size_t> batches;
  std::string init;
  std::optional<double> eta;
  std::uint64_t seed = 0;
  std::optional<double> time_limit;
  bool no_complement_term = false;
  unsigned workers = 0;
  std::string output = "json";
};

SolverConfig build_config(const SolveOptions& o) {
  SolverConfig cfg;
  if (!o.preset.empty()) apply_preset(cfg, o.preset);
  if (!o.gamma.empty()) cfg.gamma = parse_gamma_rule(o.gamma);
  if (o.lr) cfg.learning_rate = *o.lr;
  if (o.iters) cfg.iterations = *o.iters;
  if (o.batch_size) cfg.batch_size = *o.batch_size;
  if (o.batches) cfg.batches = *o.batches;
  if (!o.init.empty()) parse_init_option(cfg, o.init);
  if (o.eta) cfg.eta = *o.eta;
  cfg.seed = o.seed;
  cfg.time_limit_seconds = o.time_limit;
  cfg.complement_term = !o.no_complement_term;
  cfg.workers = o.workers;
  cfg.validate();
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

NodeSet parse_node_list(const std::string& text) {
  std::vector<node_t> members;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream t(token);
    long v;
    if (!(t >> v) || v < 0) throw ContractViolation("bad node index '" + token + "'");
    members.push_back(static_cast<node_t>(v));
  }
  return NodeSet(std::move(members));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient-based maximum independent set solver"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one graph with projected Adam");
  solve_cmd->add_option("graph", solve_opts.graph_path, "DIMACS or edge-list file")->required();
  solve_cmd->add_option("--preset", solve_opts.preset, "er | satlib | gnm");
  solve_cmd->add_option("--gamma", solve_opts.gamma, "wei | n | <value>");
  solve_cmd->add_option("--lr", solve_opts.lr, "Adam learning rate");
  solve_cmd->add_option("--iters", solve_opts.iters, "Iterations per initialization (T)");
  solve_cmd->add_option("--batch-size", solve_opts.batch_size, "Initializations per batch (K)");
  solve_cmd->add_option("--batches", solve_opts.batches, "Number of batches (B)");
  solve_cmd->add_option("--init", solve_opts.init, "random | degree | mean:<file>");
  solve_cmd->add_option("--eta", solve_opts.eta, "Gaussian exploration variance");
  solve_cmd->add_option("--seed", solve_opts.seed, "Initialization seed");
  solve_cmd->add_option("--time-limit", solve_opts.time_limit, "Soft wall-clock limit in seconds");
  solve_cmd->add_flag("--no-complement-term", solve_opts.no_complement_term,
                      "Drop the complement-graph reward");
  solve_cmd->add_option("--workers", solve_opts.workers, "Worker threads (0: QMIS_NUM_WORKERS or all cores)");
  solve_cmd->add_option("--output", solve_opts.output, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  std::string solve_out;
  solve_cmd->add_option("-o,--out", solve_out, "Write the report here instead of stdout");

  std::string gen_kind;
  std::size_t gen_n = 0;
  double gen_p = 0.15;
  std::optional<std::size_t> gen_m;
  std::uint64_t gen_seed = 0;
  std::string gen_format = "dimacs";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random graph");
  gen_cmd->add_option("kind", gen_kind, "er | gnm")->required()->check(CLI::IsMember({"er", "gnm"}));
  gen_cmd->add_option("-n,--nodes", gen_n, "Node count")->required();
  gen_cmd->add_option("-p,--prob", gen_p, "Edge probability (er)");
  gen_cmd->add_option("-m,--edges", gen_m, "Edge count (gnm, default ceil(n(n-1)/4))");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("--format", gen_format, "dimacs | edgelist")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  gen_cmd->add_option("-o,--out", gen_out, "Output file (default stdout)");

  std::string oracle_path;
  bool oracle_all = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact MIS by branch and bound (n <= 64) and greedy baseline");
  oracle_cmd->add_option("graph", oracle_path, "Graph file")->required();
  oracle_cmd->add_flag("--all", oracle_all, "List every maximum independent set (n <= 16)");

  std::string check_path;
  std::string check_set;
  std::string check_gamma = "n";
  auto* check_cmd = app.add_subcommand("check", "Check whether a node set is a maximal independent set");
  check_cmd->add_option("graph", check_path, "Graph file")->required();
  check_cmd->add_option("--set", check_set, "Comma-separated 0-based node indices")->required();
  check_cmd->add_option("--gamma", check_gamma, "wei | n | <value> for the fixed-point test");

  std::string bench_path;
  std::string bench_output = "json";
  bool bench_parallel = false;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite described by a JSON file");
  bench_cmd->add_option("suite", bench_path, "Suite descriptor")->required();
  bench_cmd->add_option("--output", bench_output, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_flag("--parallel", bench_parallel, "Solve instances concurrently");
  bench_cmd->add_option("-o,--out", bench_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      const Graph g = load_graph(solve_opts.graph_path);
      const SolverConfig cfg = build_config(solve_opts);
      const SolveReport report = solve(g, cfg);
      InstanceInfo info{g.num_nodes(), g.num_edges(), solve_opts.graph_path, std::nullopt};
      const auto format = solve_opts.output == "csv" ? ReportFormat::csv : ReportFormat::json;
      write_output(solve_out, write_report(info, cfg, report, format));
    } else if (*gen_cmd) {
      const Graph g = gen_kind == "er" ? gen_er(gen_n, gen_p, gen_seed)
                                       : gen_gnm(gen_n, gen_m.value_or(half_density_edges(gen_n)), gen_seed);
      write_output(gen_out, gen_format == "dimacs" ? write_dimacs(g) : write_edge_list(g));
    } else if (*oracle_cmd) {
      const Graph g = load_graph(oracle_path);
      const NodeSet greedy = greedy_min_degree(g);
      const OracleResult r = exact_mis(g, oracle_all);
      nlohmann::ordered_json doc;
      doc["n"] = g.num_nodes();
      doc["m"] = g.num_edges();
      doc["optimum_size"] = r.optimum_size;
      doc["optimum"] = std::vector<node_t>(r.one_optimum.begin(), r.one_optimum.end());
      doc["greedy_size"] = greedy.size();
      doc["wei_bound_gamma"] = gamma_floor_wei(g);
      if (r.all_optima) {
        auto all = nlohmann::ordered_json::array();
        for (const auto& s : *r.all_optima) all.push_back(std::vector<node_t>(s.begin(), s.end()));
        doc["all_optima"] = std::move(all);
      }
      std::cout << doc.dump(2) << '\n';
    } else if (*check_cmd) {
      const Graph g = load_graph(check_path);
      const NodeSet s = parse_node_list(check_set);
      const BinaryVector z = BinaryVector::indicator(g.num_nodes(), s);
      const ObjectiveParams p = gamma_select(g, parse_gamma_rule(check_gamma));
      nlohmann::ordered_json doc;
      doc["size"] = s.size();
      doc["independent"] = is_independent(g, s);
      doc["maximal"] = direct_mis_check(g, z);
      doc["fixed_point"] = fast_mis_check(g, p, z);
      doc["gamma"] = p.gamma;
      std::cout << doc.dump(2) << '\n';
      return doc["maximal"].get<bool>() ? 0 : 3;
    } else if (*bench_cmd) {
      std::ifstream in(bench_path);
      if (!in) throw Error("cannot open '" + bench_path + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
      }
      SuiteDescriptor suite = SuiteDescriptor::from_json(doc);
      suite.parallel = suite.parallel || bench_parallel;
      const SuiteResult result = bench_suite(suite);
      write_output(bench_out, bench_output == "csv" ? suite_to_csv(result)
                                                    : suite_to_json(suite, result).dump(2) + "\n");
      return result.summary.failed == 0 ? 0 : 1;
    }
  } catch (const qmis::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
