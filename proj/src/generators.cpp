#include "qmis/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "qmis/errors.hpp"

namespace qmis {

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (node_t u = 0; u < n; ++u) {
    for (node_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) {
    throw InvalidEdgeCount("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                           " nodes (at most " + std::to_string(pairs) + ")");
  }
  // Mark pairs by rejection sampling over the pair index; above half density
  // the complement is sampled instead so rejection stays cheap.
  const bool invert = 2 * m > pairs;
  const std::size_t to_mark = invert ? pairs - m : m;
  std::vector<bool> marked(pairs, false);
  std::mt19937_64 rng(seed);
  if (pairs > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
    for (std::size_t placed = 0; placed < to_mark;) {
      const std::size_t idx = pick(rng);
      if (!marked[idx]) {
        marked[idx] = true;
        ++placed;
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::size_t idx = 0;
  for (node_t u = 0; u < n; ++u) {
    for (node_t v = u + 1; v < n; ++v, ++idx) {
      if (marked[idx] != invert) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::size_t half_density_edges(std::size_t n) {
  const std::size_t twice = n * (n == 0 ? 0 : n - 1);
  return (twice + 3) / 4;
}

}  // namespace qmis
