#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qmis/optimizer.hpp"

namespace qmis {

struct InstanceInfo {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string source;
  std::optional<std::uint64_t> seed;
};

enum class ReportFormat { json, csv };

// Field order is fixed so that reports diff cleanly.
nlohmann::ordered_json report_to_json(const InstanceInfo& info, const SolverConfig& cfg,
                                      const SolveReport& report);

// JSON document, or CSV with `# key=value` metadata lines followed by the
// `elapsed_ms,best_size` trace.
std::string write_report(const InstanceInfo& info, const SolverConfig& cfg,
                         const SolveReport& report, ReportFormat format);

}  // namespace qmis
