#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qmis/graph.hpp"
#include "qmis/objective.hpp"

namespace qmis {

enum class InitScheme { random, degree, external_mean };

// Describes the set of starting points S, |S| = count.
//
// Initialization k is a pure function of (seed, k, n, scheme parameters), so
// any subset of S can be generated on any worker in any order.
struct InitSpec {
  InitScheme scheme = InitScheme::random;
  double eta = 2.25;  // per-coordinate variance of the Gaussian schemes
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::vector<double> external_mean;  // InitScheme::external_mean only
  // Gaussian schemes: initialization 0 is the clamped mean itself.
  bool include_mean_as_first = true;

  void validate(std::size_t n) const;
};

enum class DegreeMeanNote {
  none,
  edgeless,  // no edges: every node is in the MIS, mean is all ones
  regular,   // all degrees equal: degree carries no signal, mean is 0.5
};

struct DegreeMean {
  std::vector<double> mean;
  DegreeMeanNote note = DegreeMeanNote::none;
};

// g_v = 1 - d(v)/max_degree, normalized so that max_v g_v = 1.
DegreeMean degree_mean(const Graph& g);

// Uniform[0,1] coordinates for initialization k.
Assignment random_assignment(std::size_t n, std::uint64_t seed, std::size_t k);

// Normal(mean_v, eta) coordinates for initialization k; clamped to [0,1]
// unless clamp_to_box is false.
Assignment gaussian_assignment(std::span<const double> mean, double eta, std::uint64_t seed,
                               std::size_t k, bool clamp_to_box = true);

std::vector<Assignment> random_init(std::size_t n, const InitSpec& spec);
std::vector<Assignment> gaussian_around_mean(std::span<const double> mean, const InitSpec& spec);

// Produces initialization k on demand for a fixed graph and spec.
class InitSampler {
 public:
  InitSampler(const Graph& g, InitSpec spec);

  Assignment operator()(std::size_t k) const;
  std::size_t count() const noexcept { return spec_.count; }
  const InitSpec& spec() const noexcept { return spec_; }
  DegreeMeanNote note() const noexcept { return note_; }

 private:
  std::size_t n_;
  InitSpec spec_;
  std::vector<double> mean_;
  DegreeMeanNote note_ = DegreeMeanNote::none;
};

// Plain text, one real per line. Blank lines are skipped.
std::vector<double> read_mean_vector(std::istream& in);
std::vector<double> read_mean_vector_file(const std::string& path);

}  // namespace qmis
