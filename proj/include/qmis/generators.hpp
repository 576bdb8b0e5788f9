#pragma once

#include <cstddef>
#include <cstdint>

#include "qmis/graph.hpp"

namespace qmis {

// G(n, p): every unordered pair is an edge independently with probability p.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// G(n, m): uniform over simple graphs with exactly m edges. Throws
// InvalidEdgeCount when m > n(n-1)/2.
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

// ceil(n(n-1)/4): half of all possible edges.
std::size_t half_density_edges(std::size_t n);

}  // namespace qmis
