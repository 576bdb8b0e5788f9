#include "qmis/bench.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "qmis/config.hpp"
#include "qmis/errors.hpp"
#include "qmis/generators.hpp"
#include "qmis/io.hpp"

namespace qmis {

Graph InstanceSpec::build() const {
  switch (kind) {
    case Kind::er:
      return gen_er(n, p, seed);
    case Kind::gnm:
      return gen_gnm(n, m.value_or(half_density_edges(n)), seed);
    case Kind::file:
      return load_graph(path);
  }
  throw ContractViolation("unknown instance kind");
}

InstanceInfo InstanceSpec::info(const Graph& g) const {
  InstanceInfo out;
  out.n = g.num_nodes();
  out.m = g.num_edges();
  switch (kind) {
    case Kind::er: {
      std::ostringstream name;
      name << "er(" << n << "," << p << ")";
      out.source = name.str();
      out.seed = seed;
      break;
    }
    case Kind::gnm:
      out.source = "gnm(" + std::to_string(n) + "," + std::to_string(m.value_or(half_density_edges(n))) + ")";
      out.seed = seed;
      break;
    case Kind::file:
      out.source = path;
      break;
  }
  return out;
}

namespace {

InstanceSpec parse_instance(const nlohmann::json& j) {
  InstanceSpec spec;
  if (j.contains("path")) {
    spec.kind = InstanceSpec::Kind::file;
    spec.path = j.at("path").get<std::string>();
    return spec;
  }
  const auto generator = j.at("generator").get<std::string>();
  spec.n = j.at("n").get<std::size_t>();
  spec.seed = j.value("seed", std::uint64_t{0});
  if (generator == "er") {
    spec.kind = InstanceSpec::Kind::er;
    spec.p = j.at("p").get<double>();
  } else if (generator == "gnm") {
    spec.kind = InstanceSpec::Kind::gnm;
    if (j.contains("m")) spec.m = j.at("m").get<std::size_t>();
  } else {
    throw ContractViolation("unknown generator '" + generator + "'");
  }
  return spec;
}

void parse_config(SolverConfig& cfg, const nlohmann::json& j) {
  if (j.contains("gamma")) {
    const auto& g = j.at("gamma");
    cfg.gamma = g.is_number() ? parse_gamma_rule(std::to_string(g.get<double>()))
                              : parse_gamma_rule(g.get<std::string>());
  }
  if (j.contains("lr")) cfg.learning_rate = j.at("lr").get<double>();
  if (j.contains("iters")) cfg.iterations = j.at("iters").get<std::size_t>();
  if (j.contains("batch_size")) cfg.batch_size = j.at("batch_size").get<std::size_t>();
  if (j.contains("batches")) cfg.batches = j.at("batches").get<std::size_t>();
  if (j.contains("init")) parse_init_option(cfg, j.at("init").get<std::string>());
  if (j.contains("eta")) cfg.eta = j.at("eta").get<double>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("complement_term")) cfg.complement_term = j.at("complement_term").get<bool>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<unsigned>();
}

}  // namespace

SuiteDescriptor SuiteDescriptor::from_json(const nlohmann::json& doc) {
  SuiteDescriptor suite;
  try {
    if (doc.contains("preset")) apply_preset(suite.config, doc.at("preset").get<std::string>());
    if (doc.contains("config")) parse_config(suite.config, doc.at("config"));
    if (doc.contains("time_limit") && !doc.at("time_limit").is_null()) {
      suite.config.time_limit_seconds = doc.at("time_limit").get<double>();
    }
    suite.parallel = doc.value("parallel", false);
    if (doc.contains("instances")) {
      for (const auto& j : doc.at("instances")) suite.instances.push_back(parse_instance(j));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("bad suite descriptor: ") + e.what());
  }
  suite.config.validate();
  return suite;
}

SuiteResult bench_suite(const SuiteDescriptor& suite) {
  SuiteResult result;
  result.outcomes.resize(suite.instances.size());

  auto run_one = [&](std::size_t i) {
    const InstanceSpec& spec = suite.instances[i];
    InstanceOutcome& out = result.outcomes[i];
    try {
      const Graph g = spec.build();
      out.info = spec.info(g);
      out.report = solve(g, suite.config);
    } catch (const std::exception& e) {
      if (out.info.source.empty()) out.info.source = spec.kind == InstanceSpec::Kind::file ? spec.path : "generated";
      out.error = e.what();
    }
  };

  if (suite.parallel && suite.instances.size() > 1) {
    std::atomic<std::size_t> next{0};
    const std::size_t pool_size =
        std::min<std::size_t>(suite.instances.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < pool_size; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < suite.instances.size(); i = next++) run_one(i);
      });
    }
  } else {
    for (std::size_t i = 0; i < suite.instances.size(); ++i) run_one(i);
  }

  SuiteSummary& s = result.summary;
  s.instances = result.outcomes.size();
  for (const auto& out : result.outcomes) {
    if (!out.report) {
      ++s.failed;
      continue;
    }
    ++s.solved;
    s.total_best_size += out.report->best.size();
    s.total_wall_ms += out.report->wall_time_ms;
  }
  if (s.solved > 0) s.mean_best_size = static_cast<double>(s.total_best_size) / static_cast<double>(s.solved);
  return result;
}

nlohmann::ordered_json suite_to_json(const SuiteDescriptor& suite, const SuiteResult& result) {
  nlohmann::ordered_json doc;
  auto reports = nlohmann::ordered_json::array();
  for (const auto& out : result.outcomes) {
    if (out.report) {
      reports.push_back(report_to_json(out.info, suite.config, *out.report));
    } else {
      nlohmann::ordered_json failed;
      failed["instance"] = {{"source", out.info.source}};
      failed["error"] = out.error;
      reports.push_back(std::move(failed));
    }
  }
  doc["reports"] = std::move(reports);
  const auto& s = result.summary;
  doc["summary"] = {{"instances", s.instances},         {"solved", s.solved},
                    {"failed", s.failed},               {"total_best_size", s.total_best_size},
                    {"mean_best_size", s.mean_best_size}, {"total_wall_ms", s.total_wall_ms}};
  return doc;
}

std::string suite_to_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "source,seed,n,m,best_size,mis_found_count,wall_time_ms,error\n";
  for (const auto& o : result.outcomes) {
    out << o.info.source << ',' << (o.info.seed ? std::to_string(*o.info.seed) : "") << ',' << o.info.n
        << ',' << o.info.m << ',';
    if (o.report) {
      out << o.report->best.size() << ',' << o.report->mis_found << ',' << o.report->wall_time_ms << ",\n";
    } else {
      out << ",,,\"" << o.error << "\"\n";
    }
  }
  const auto& s = result.summary;
  out << "summary,,,," << s.mean_best_size << ",," << s.total_wall_ms << ",\n";
  return out.str();
}

}  // namespace qmis
