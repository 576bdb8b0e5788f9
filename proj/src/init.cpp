#include "qmis/init.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "qmis/errors.hpp"

namespace qmis {

namespace {

std::mt19937_64 stream_for(std::uint64_t seed, std::size_t k) {
  const auto kk = static_cast<std::uint64_t>(k);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(kk), static_cast<std::uint32_t>(kk >> 32)};
  return std::mt19937_64(seq);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void InitSpec::validate(std::size_t n) const {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw ContractViolation("eta must be a finite non-negative variance");
  }
  if (count < 1) throw ContractViolation("initialization count must be at least 1");
  if (scheme == InitScheme::external_mean) {
    if (external_mean.size() != n) {
      throw DimensionError("external mean has length " + std::to_string(external_mean.size()) +
                           ", graph has " + std::to_string(n) + " nodes");
    }
    for (double v : external_mean) {
      if (!(v >= 0.0 && v <= 1.0)) throw ContractViolation("external mean entries must lie in [0,1]");
    }
  }
}

DegreeMean degree_mean(const Graph& g) {
  const std::size_t n = g.num_nodes();
  DegreeMean out;
  if (g.max_degree() == 0) {
    out.mean.assign(n, 1.0);
    out.note = DegreeMeanNote::edgeless;
    return out;
  }
  const double delta = static_cast<double>(g.max_degree());
  out.mean.resize(n);
  double peak = 0.0;
  for (node_t v = 0; v < n; ++v) {
    out.mean[v] = 1.0 - static_cast<double>(g.degree(v)) / delta;
    peak = std::max(peak, out.mean[v]);
  }
  if (peak == 0.0) {
    std::fill(out.mean.begin(), out.mean.end(), 0.5);
    out.note = DegreeMeanNote::regular;
    return out;
  }
  for (double& v : out.mean) v /= peak;
  return out;
}

Assignment random_assignment(std::size_t n, std::uint64_t seed, std::size_t k) {
  auto rng = stream_for(seed, k);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Assignment x(n);
  for (double& v : x) v = unit(rng);
  return x;
}

Assignment gaussian_assignment(std::span<const double> mean, double eta, std::uint64_t seed,
                               std::size_t k, bool clamp_to_box) {
  Assignment x(mean.begin(), mean.end());
  if (eta > 0.0) {
    auto rng = stream_for(seed, k);
    std::normal_distribution<double> noise(0.0, std::sqrt(eta));
    for (double& v : x) v += noise(rng);
  }
  if (clamp_to_box) {
    for (double& v : x) v = clamp01(v);
  }
  return x;
}

std::vector<Assignment> random_init(std::size_t n, const InitSpec& spec) {
  spec.validate(n);
  std::vector<Assignment> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) out.push_back(random_assignment(n, spec.seed, k));
  return out;
}

std::vector<Assignment> gaussian_around_mean(std::span<const double> mean, const InitSpec& spec) {
  if (!(spec.eta >= 0.0)) throw ContractViolation("eta must be non-negative");
  if (spec.count < 1) throw ContractViolation("initialization count must be at least 1");
  std::vector<Assignment> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    const double eta = (k == 0 && spec.include_mean_as_first) ? 0.0 : spec.eta;
    out.push_back(gaussian_assignment(mean, eta, spec.seed, k));
  }
  return out;
}

InitSampler::InitSampler(const Graph& g, InitSpec spec) : n_(g.num_nodes()), spec_(std::move(spec)) {
  spec_.validate(n_);
  switch (spec_.scheme) {
    case InitScheme::random:
      break;
    case InitScheme::degree: {
      auto dm = degree_mean(g);
      mean_ = std::move(dm.mean);
      note_ = dm.note;
      break;
    }
    case InitScheme::external_mean:
      mean_ = spec_.external_mean;
      break;
  }
}

Assignment InitSampler::operator()(std::size_t k) const {
  if (spec_.scheme == InitScheme::random) return random_assignment(n_, spec_.seed, k);
  const double eta = (k == 0 && spec_.include_mean_as_first) ? 0.0 : spec_.eta;
  return gaussian_assignment(mean_, eta, spec_.seed, k);
}

std::vector<double> read_mean_vector(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    double v;
    if (!(ls >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(lineno, "expected a real number, got '" + line + "'");
    }
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing characters after value");
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_mean_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open mean vector file '" + path + "'");
  return read_mean_vector(in);
}

}  // namespace qmis
