#pragma once

#include <string>
#include <string_view>

#include "qmis/optimizer.hpp"

namespace qmis {

// Named hyperparameter sets:
//   er      gamma=775, lr=0.6, T=150, K=256, B=28, random init
//   satlib  lr=0.9, T=50, K=128, B=40
//   gnm     lr=0.5, T=350, K=1024, B=5, degree init
// Fields a preset does not name keep their current value.
void apply_preset(SolverConfig& cfg, std::string_view name);

// "wei" | "n" | a number > 1
GammaRule parse_gamma_rule(std::string_view text);
std::string to_string(const GammaRule& rule);

// "random" | "degree" | "mean:<path>"; the mean file is read immediately.
void parse_init_option(SolverConfig& cfg, std::string_view text);
std::string to_string(InitScheme scheme);

}  // namespace qmis
