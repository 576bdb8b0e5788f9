#include "qmis/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "qmis/errors.hpp"

namespace qmis {

void adam_step(const Graph& g, const ObjectiveParams& p, std::span<double> x, AdamState& st,
               double alpha, std::span<double> grad, const AdamParams& hp) {
  const std::size_t n = x.size();
  if (st.m1.size() != n || st.m2.size() != n) {
    throw DimensionError("Adam state does not match assignment length");
  }
  gradient_into(g, p, x, grad);
  for (double gv : grad) {
    if (!std::isfinite(gv)) throw NumericalError("non-finite gradient at step " + std::to_string(st.step + 1));
  }

  ++st.step;
  const double t = static_cast<double>(st.step);
  const double bias1 = 1.0 - std::pow(hp.beta1, t);
  const double bias2 = 1.0 - std::pow(hp.beta2, t);
  for (std::size_t v = 0; v < n; ++v) {
    st.m1[v] = hp.beta1 * st.m1[v] + (1.0 - hp.beta1) * grad[v];
    st.m2[v] = hp.beta2 * st.m2[v] + (1.0 - hp.beta2) * grad[v] * grad[v];
    const double m1_hat = st.m1[v] / bias1;
    const double m2_hat = st.m2[v] / bias2;
    const double next = x[v] - alpha * m1_hat / (std::sqrt(m2_hat) + hp.epsilon);
    x[v] = std::clamp(next, 0.0, 1.0);
  }
}

void adam_step(const Graph& g, const ObjectiveParams& p, std::span<double> x, AdamState& st,
               double alpha, const AdamParams& hp) {
  std::vector<double> grad(x.size());
  adam_step(g, p, x, st, alpha, grad, hp);
}

namespace {

// Line-6/7 test on the current iterate. The fast check certifies maximality
// only when gamma >= n; the direct check keeps the contract for smaller gamma
// and runs once per accepted candidate.
std::optional<NodeSet> extract_mis(const Graph& g, const ObjectiveParams& p,
                                   std::span<const double> x, BinaryVector& z) {
  z.assign_threshold(x);
  if (!fast_mis_check(g, p, z)) return std::nullopt;
  NodeSet s = support(z);
  if (!is_maximal_independent(g, s)) return std::nullopt;
  return s;
}

}  // namespace

RunOutcome run_single(const Graph& g, const ObjectiveParams& p, Assignment x0,
                      std::size_t iterations, double alpha, bool record_trace) {
  if (x0.size() != g.num_nodes()) {
    throw DimensionError("initial assignment has length " + std::to_string(x0.size()) +
                         ", graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
  if (iterations < 1) throw ContractViolation("iteration count must be at least 1");
  if (!(alpha > 0.0)) throw ContractViolation("learning rate must be positive");

  const std::size_t n = g.num_nodes();
  Assignment x = std::move(x0);
  AdamState st(n);
  std::vector<double> grad(n);
  BinaryVector z(n);

  RunOutcome out;
  for (std::size_t t = 1; t <= iterations; ++t) {
    adam_step(g, p, x, st, alpha, grad);
    out.iterations_used = t;
    if (record_trace) out.trace.push_back({t, evaluate(g, p, x)});
    if (auto s = extract_mis(g, p, x, z)) {
      out.found = std::move(s);
      break;
    }
  }
  return out;
}

void SolverConfig::validate() const {
  if (!(learning_rate > 0.0)) throw ContractViolation("learning rate must be positive");
  if (iterations < 1) throw ContractViolation("iterations must be at least 1");
  if (batch_size < 1 || batches < 1) throw ContractViolation("batch size and batch count must be at least 1");
  if (!(eta >= 0.0)) throw ContractViolation("eta must be non-negative");
  if (time_limit_seconds && !(*time_limit_seconds > 0.0)) {
    throw ContractViolation("time limit must be positive");
  }
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QMIS_NUM_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct RunSlot {
  std::optional<NodeSet> found;
  std::size_t iterations = 0;
  bool failed = false;
};

}  // namespace

SolveReport solve(const Graph& g, const SolverConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  cfg.validate();
  const ObjectiveParams params = gamma_select(g, cfg.gamma, cfg.complement_term);

  InitSpec spec;
  spec.scheme = cfg.init;
  spec.eta = cfg.eta;
  spec.seed = cfg.seed;
  spec.count = cfg.batch_size * cfg.batches;
  spec.external_mean = cfg.external_mean;
  spec.include_mean_as_first = cfg.include_mean_as_first;
  const InitSampler sampler(g, std::move(spec));

  const unsigned workers = resolve_workers(cfg.workers);

  SolveReport report;
  report.gamma = params.gamma;
  report.init_note = sampler.note();

  std::vector<RunSlot> slots(cfg.batch_size);
  for (std::size_t b = 0; b < cfg.batches; ++b) {
    if (cfg.time_limit_seconds && elapsed_ms() >= *cfg.time_limit_seconds * 1000.0) {
      report.time_limit_reached = true;
      break;
    }
    const std::size_t base = b * cfg.batch_size;
    std::fill(slots.begin(), slots.end(), RunSlot{});

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t i = next++; i < cfg.batch_size; i = next++) {
        try {
          auto outcome = run_single(g, params, sampler(base + i), cfg.iterations, cfg.learning_rate);
          slots[i].found = std::move(outcome.found);
          slots[i].iterations = outcome.iterations_used;
        } catch (const NumericalError&) {
          slots[i].failed = true;
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const std::size_t pool_size = std::min<std::size_t>(workers, cfg.batch_size);
    if (pool_size <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(pool_size);
      for (std::size_t w = 0; w < pool_size; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < cfg.batch_size; ++i) {
      RunSlot& slot = slots[i];
      ++report.runs_completed;
      report.total_iterations += slot.iterations;
      if (slot.failed) {
        ++report.numerical_failures;
        continue;
      }
      if (!slot.found) continue;
      ++report.mis_found;
      if (!report.best_initialization || slot.found->size() > report.best.size()) {
        report.best = std::move(*slot.found);
        report.best_initialization = base + i;
      }
    }
    ++report.batches_completed;
    report.trace.push_back({b, report.runs_completed, elapsed_ms(), report.best.size()});
  }
  report.wall_time_ms = elapsed_ms();
  return report;
}

RestartOutcome run_with_restarts(const Graph& g, const ObjectiveParams& p,
                                 std::size_t iteration_budget, double alpha, std::uint64_t seed) {
  if (!(alpha > 0.0)) throw ContractViolation("learning rate must be positive");
  const std::size_t n = g.num_nodes();
  std::size_t restart = 0;
  Assignment x = random_assignment(n, seed, restart);
  AdamState st(n);
  std::vector<double> grad(n);
  BinaryVector z(n);

  RestartOutcome out;
  bool have_best = false;
  for (std::size_t t = 1; t <= iteration_budget; ++t) {
    adam_step(g, p, x, st, alpha, grad);
    out.iterations_used = t;
    if (auto s = extract_mis(g, p, x, z)) {
      ++out.mis_found;
      if (!have_best || s->size() > out.best.size()) {
        out.best = std::move(*s);
        have_best = true;
      }
      out.trace.emplace_back(t, out.best.size());
      x = random_assignment(n, seed, ++restart);
      st = AdamState(n);
    }
  }
  return out;
}

}  // namespace qmis
