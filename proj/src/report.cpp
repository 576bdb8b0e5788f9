#include "qmis/report.hpp"

#include <sstream>

#include "qmis/config.hpp"

namespace qmis {

nlohmann::ordered_json report_to_json(const InstanceInfo& info, const SolverConfig& cfg,
                                      const SolveReport& report) {
  using nlohmann::ordered_json;
  ordered_json instance;
  instance["n"] = info.n;
  instance["m"] = info.m;
  instance["source"] = info.source;
  instance["seed"] = info.seed ? ordered_json(*info.seed) : ordered_json(nullptr);

  ordered_json config;
  config["gamma_rule"] = to_string(cfg.gamma);
  config["gamma"] = report.gamma;
  config["lr"] = cfg.learning_rate;
  config["iters"] = cfg.iterations;
  config["batch_size"] = cfg.batch_size;
  config["batches"] = cfg.batches;
  config["init"] = to_string(cfg.init);
  config["eta"] = cfg.eta;
  config["seed"] = cfg.seed;
  config["complement_term"] = cfg.complement_term;
  config["time_limit_s"] =
      cfg.time_limit_seconds ? ordered_json(*cfg.time_limit_seconds) : ordered_json(nullptr);

  ordered_json trace = ordered_json::array();
  for (const auto& pt : report.trace) trace.push_back({pt.elapsed_ms, pt.best_size});

  ordered_json doc;
  doc["instance"] = std::move(instance);
  doc["config"] = std::move(config);
  doc["best_set"] = std::vector<node_t>(report.best.begin(), report.best.end());
  doc["best_size"] = report.best.size();
  doc["mis_found_count"] = report.mis_found;
  doc["runs_completed"] = report.runs_completed;
  doc["numerical_failures"] = report.numerical_failures;
  doc["time_limit_reached"] = report.time_limit_reached;
  doc["wall_time_ms"] = report.wall_time_ms;
  doc["trace"] = std::move(trace);
  return doc;
}

std::string write_report(const InstanceInfo& info, const SolverConfig& cfg,
                         const SolveReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(info, cfg, report).dump(2) + "\n";

  std::ostringstream out;
  out << "# n=" << info.n << "\n# m=" << info.m << "\n# source=" << info.source << '\n';
  if (info.seed) out << "# instance_seed=" << *info.seed << '\n';
  out << "# gamma=" << report.gamma << "\n# lr=" << cfg.learning_rate << "\n# iters=" << cfg.iterations
      << "\n# batch_size=" << cfg.batch_size << "\n# batches=" << cfg.batches
      << "\n# init=" << to_string(cfg.init) << "\n# eta=" << cfg.eta << "\n# seed=" << cfg.seed
      << "\n# complement_term=" << (cfg.complement_term ? "true" : "false") << '\n';
  out << "# best_size=" << report.best.size() << "\n# best_set=";
  for (std::size_t i = 0; i < report.best.size(); ++i) {
    out << (i ? " " : "") << report.best.members()[i];
  }
  out << "\n# mis_found_count=" << report.mis_found << "\n# wall_time_ms=" << report.wall_time_ms
      << '\n';
  out << "elapsed_ms,best_size\n";
  for (const auto& pt : report.trace) out << pt.elapsed_ms << ',' << pt.best_size << '\n';
  return out.str();
}

}  // namespace qmis
