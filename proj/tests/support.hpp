#pragma once

// Test-only reference implementations. Everything here works from an explicit
// dense adjacency matrix and never calls into the library's objective,
// checker or oracle code.

#include <cstdint>
#include <random>
#include <vector>

#include "qmis/graph.hpp"

namespace qmis::testing {

inline Graph five_node_graph() {
  // v1..v5 -> 0..4; {v1,v4,v5} and {v3,v4,v5} maximum, {v2,v3} maximal.
  return Graph::from_edge_list(5, {{1, 3}, {1, 4}, {0, 1}, {0, 2}});
}

inline Graph path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (node_t u = 0; u < n; ++u)
    for (node_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline Graph empty_graph(std::size_t n) { return Graph::from_edge_list(n, std::span<const Edge>{}); }

// Independent G(n, p) sampler for tests, seeded separately from the library
// generators.
inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (node_t u = 0; u < n; ++u)
    for (node_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

struct Dense {
  std::size_t n;
  std::vector<std::vector<int>> adj;         // A_G
  std::vector<std::vector<int>> complement;  // A_G', materialized

  explicit Dense(const Graph& g) : n(g.num_nodes()), adj(n, std::vector<int>(n, 0)), complement(n, std::vector<int>(n, 0)) {
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) complement[u][v] = (u != v && !adj[u][v]) ? 1 : 0;
  }

  double objective(double gamma, bool with_complement, const std::vector<double>& x) const {
    double lin = 0, qa = 0, qc = 0;
    for (std::size_t u = 0; u < n; ++u) {
      lin += x[u];
      for (std::size_t v = 0; v < n; ++v) {
        qa += x[u] * adj[u][v] * x[v];
        qc += x[u] * complement[u][v] * x[v];
      }
    }
    return -lin + 0.5 * gamma * qa - (with_complement ? 0.5 * qc : 0.0);
  }

  std::vector<double> gradient(double gamma, bool with_complement, const std::vector<double>& x) const {
    std::vector<double> g(n, -1.0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        g[u] += gamma * adj[u][v] * x[v] - (with_complement ? complement[u][v] * x[v] : 0.0);
    return g;
  }

  bool independent(std::uint64_t mask) const {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && adj[u][v]) return false;
    return true;
  }

  bool maximal_independent(std::uint64_t mask) const {
    if (!independent(mask)) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) continue;
      bool dominated = false;
      for (std::size_t u = 0; u < n; ++u) dominated |= (mask >> u & 1) && adj[u][v];
      if (!dominated) return false;
    }
    return true;
  }

  // All maximum independent sets by 2^n enumeration.
  std::vector<std::uint64_t> maximum_sets() const {
    std::vector<std::uint64_t> best;
    int best_size = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (!independent(mask)) continue;
      const int size = __builtin_popcountll(mask);
      if (size > best_size) {
        best_size = size;
        best.clear();
      }
      if (size == best_size) best.push_back(mask);
    }
    return best;
  }
};

inline NodeSet mask_to_set(std::uint64_t mask) {
  std::vector<node_t> members;
  for (node_t v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) members.push_back(v);
  return NodeSet(std::move(members));
}

}  // namespace qmis::testing
