#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qmis {

using node_t = std::uint32_t;
using Edge = std::pair<node_t, node_t>;

// Sorted, duplicate-free set of node indices.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<node_t> members);
  NodeSet(std::initializer_list<node_t> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(node_t v) const noexcept;

  std::span<const node_t> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet& a, const NodeSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<node_t> members_;
};

// Immutable undirected simple graph in compressed sparse row form.
//
// The complement graph is never stored; complement quantities are derived
// from n and the degrees.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Mirrored and repeated edges are merged.
  // Throws InvalidEdge on self-loops or indices outside [0, n).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  // m' = n(n-1)/2 - m
  std::size_t num_complement_edges() const noexcept;

  std::size_t degree(node_t v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  // d'(v) = n - 1 - d(v)
  std::size_t complement_degree(node_t v) const noexcept;
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::span<const node_t> neighbors(node_t v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  bool has_edge(node_t u, node_t v) const noexcept;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Heap footprint of the adjacency structure, in bytes.
  std::size_t memory_bytes() const noexcept;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<node_t> adjacency_;
  std::size_t max_degree_ = 0;
};

bool is_independent(const Graph& g, const NodeSet& s);
// Independent, and every node outside s has a neighbor in s.
bool is_maximal_independent(const Graph& g, const NodeSet& s);

}  // namespace qmis
