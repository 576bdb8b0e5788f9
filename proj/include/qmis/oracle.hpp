#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qmis/graph.hpp"

namespace qmis {

inline constexpr std::size_t kOracleMaxNodes = 64;
inline constexpr std::size_t kOracleEnumerateMaxNodes = 16;

struct OracleResult {
  std::size_t optimum_size = 0;
  NodeSet one_optimum;
  // Every maximum independent set, in lexicographic order (n <= 16 only).
  std::optional<std::vector<NodeSet>> all_optima;
};

// Exact maximum independent set by branch and bound on G, bounded by a greedy
// clique cover. Throws TooLarge for n > 64. `enumerate_all` is ignored above
// 16 nodes.
OracleResult exact_mis(const Graph& g, bool enumerate_all = false);

// Repeatedly takes a minimum-degree node of the residual graph (lowest index on
// ties) and deletes its closed neighborhood. Result is maximal.
NodeSet greedy_min_degree(const Graph& g);

}  // namespace qmis
