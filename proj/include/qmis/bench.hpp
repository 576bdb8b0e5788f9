#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmis/graph.hpp"
#include "qmis/optimizer.hpp"
#include "qmis/report.hpp"

namespace qmis {

struct InstanceSpec {
  enum class Kind { er, gnm, file };
  Kind kind = Kind::gnm;
  std::size_t n = 0;
  double p = 0.0;                 // er
  std::optional<std::size_t> m;   // gnm; defaults to ceil(n(n-1)/4)
  std::uint64_t seed = 0;         // er, gnm
  std::string path;               // file

  Graph build() const;
  InstanceInfo info(const Graph& g) const;
};

struct SuiteDescriptor {
  std::vector<InstanceSpec> instances;
  SolverConfig config;
  bool parallel = false;  // run instances concurrently

  // {"preset": "gnm", "config": {...}, "time_limit": 120, "parallel": false,
  //  "instances": [{"generator": "gnm", "n": 50, "m": 613, "seed": 1},
  //                {"generator": "er", "n": 700, "p": 0.15, "seed": 2},
  //                {"path": "graph.dimacs"}]}
  // Config keys: gamma, lr, iters, batch_size, batches, init, eta, seed,
  // complement_term, workers.
  static SuiteDescriptor from_json(const nlohmann::json& doc);
};

struct InstanceOutcome {
  InstanceInfo info;
  std::optional<SolveReport> report;
  std::string error;
};

struct SuiteSummary {
  std::size_t instances = 0;
  std::size_t solved = 0;
  std::size_t failed = 0;
  std::size_t total_best_size = 0;
  double mean_best_size = 0.0;  // over solved instances
  double total_wall_ms = 0.0;
};

struct SuiteResult {
  std::vector<InstanceOutcome> outcomes;
  SuiteSummary summary;
};

// Solves every instance (sequentially unless the descriptor opts in to
// parallelism). A failing instance is recorded and the suite continues.
SuiteResult bench_suite(const SuiteDescriptor& suite);

nlohmann::ordered_json suite_to_json(const SuiteDescriptor& suite, const SuiteResult& result);
// One row per instance plus a final summary row.
std::string suite_to_csv(const SuiteResult& result);

}  // namespace qmis
