#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qmis/checker.hpp"
#include "qmis/graph.hpp"
#include "qmis/init.hpp"
#include "qmis/objective.hpp"

namespace qmis {

struct AdamParams {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m1;
  std::vector<double> m2;
  std::uint64_t step = 0;

  AdamState() = default;
  explicit AdamState(std::size_t n) : m1(n, 0.0), m2(n, 0.0) {}
};

// One bias-corrected Adam update on f followed by projection onto [0,1]^n.
// `grad` is scratch of length n. Throws NumericalError on a non-finite
// gradient, leaving x and the state untouched.
void adam_step(const Graph& g, const ObjectiveParams& p, std::span<double> x, AdamState& st,
               double alpha, std::span<double> grad, const AdamParams& hp = {});
void adam_step(const Graph& g, const ObjectiveParams& p, std::span<double> x, AdamState& st,
               double alpha, const AdamParams& hp = {});

struct ObjectivePoint {
  std::size_t iteration;
  double value;
};

struct RunOutcome {
  std::optional<NodeSet> found;  // always a maximal independent set
  std::size_t iterations_used = 0;
  std::vector<ObjectivePoint> trace;  // filled when requested
};

// Runs up to `iterations` projected Adam steps from x0, stopping at the first
// iterate whose support {v : x_v > 0} passes fast_mis_check.
RunOutcome run_single(const Graph& g, const ObjectiveParams& p, Assignment x0,
                      std::size_t iterations, double alpha, bool record_trace = false);

struct SolverConfig {
  GammaRule gamma = GammaRule::strict_n();
  double learning_rate = 0.5;
  std::size_t iterations = 350;  // T
  std::size_t batch_size = 64;   // K
  std::size_t batches = 1;       // B
  InitScheme init = InitScheme::random;
  double eta = 2.25;
  std::vector<double> external_mean;
  bool include_mean_as_first = true;
  std::uint64_t seed = 0;
  std::optional<double> time_limit_seconds;
  bool complement_term = true;
  // 0 selects QMIS_NUM_WORKERS from the environment, else hardware concurrency.
  unsigned workers = 0;

  void validate() const;
};

struct BatchTracePoint {
  std::size_t batch;
  std::size_t runs_completed;
  double elapsed_ms;
  std::size_t best_size;
};

struct SolveReport {
  NodeSet best;
  std::optional<std::size_t> best_initialization;
  double gamma = 0.0;
  std::size_t runs_completed = 0;
  std::size_t mis_found = 0;
  std::size_t numerical_failures = 0;
  std::size_t batches_completed = 0;
  std::uint64_t total_iterations = 0;
  bool time_limit_reached = false;
  DegreeMeanNote init_note = DegreeMeanNote::none;
  double wall_time_ms = 0.0;
  std::vector<BatchTracePoint> trace;  // best size after each batch
};

unsigned resolve_workers(unsigned requested);

// Batched multi-start solve: K * B initializations, run K at a time across
// the worker pool, largest set found wins (ties go to the lowest index).
SolveReport solve(const Graph& g, const SolverConfig& cfg);

struct RestartOutcome {
  std::size_t mis_found = 0;
  NodeSet best;
  std::size_t iterations_used = 0;
  // (iteration at which a set was found, best size so far)
  std::vector<std::pair<std::size_t, std::size_t>> trace;
};

// Single chain with a global iteration budget: whenever a set is found the
// chain restarts from a fresh uniform sample (initialization index r for the
// r-th start) until the budget is spent.
RestartOutcome run_with_restarts(const Graph& g, const ObjectiveParams& p,
                                 std::size_t iteration_budget, double alpha, std::uint64_t seed);

}  // namespace qmis
