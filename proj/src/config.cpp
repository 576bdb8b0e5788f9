#include "qmis/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qmis/errors.hpp"
#include "qmis/init.hpp"

namespace qmis {

void apply_preset(SolverConfig& cfg, std::string_view name) {
  if (name == "er") {
    cfg.gamma = GammaRule::fixed(775.0);
    cfg.learning_rate = 0.6;
    cfg.iterations = 150;
    cfg.batch_size = 256;
    cfg.batches = 28;
    cfg.init = InitScheme::random;
  } else if (name == "satlib") {
    cfg.learning_rate = 0.9;
    cfg.iterations = 50;
    cfg.batch_size = 128;
    cfg.batches = 40;
  } else if (name == "gnm") {
    cfg.learning_rate = 0.5;
    cfg.iterations = 350;
    cfg.batch_size = 1024;
    cfg.batches = 5;
    cfg.init = InitScheme::degree;
  } else {
    throw ContractViolation("unknown preset '" + std::string(name) + "' (expected er, satlib or gnm)");
  }
}

GammaRule parse_gamma_rule(std::string_view text) {
  if (text == "wei") return GammaRule::wei_floor();
  if (text == "n") return GammaRule::strict_n();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ContractViolation("gamma must be 'wei', 'n' or a number, got '" + std::string(text) + "'");
  }
  if (!(value > 1.0) || !std::isfinite(value)) {
    throw InvalidGamma("fixed gamma must exceed 1, got " + std::string(text));
  }
  return GammaRule::fixed(value);
}

std::string to_string(const GammaRule& rule) {
  switch (rule.mode) {
    case GammaMode::wei_floor:
      return "wei";
    case GammaMode::strict_n:
      return "n";
    case GammaMode::fixed: {
      std::ostringstream out;
      out << rule.value;
      return out.str();
    }
  }
  return "";
}

void parse_init_option(SolverConfig& cfg, std::string_view text) {
  if (text == "random") {
    cfg.init = InitScheme::random;
  } else if (text == "degree") {
    cfg.init = InitScheme::degree;
  } else if (text.starts_with("mean:")) {
    cfg.init = InitScheme::external_mean;
    cfg.external_mean = read_mean_vector_file(std::string(text.substr(5)));
  } else {
    throw ContractViolation("init must be random, degree or mean:<file>, got '" + std::string(text) + "'");
  }
}

std::string to_string(InitScheme scheme) {
  switch (scheme) {
    case InitScheme::random:
      return "random";
    case InitScheme::degree:
      return "degree";
    case InitScheme::external_mean:
      return "external-mean";
  }
  return "";
}

}  // namespace qmis
