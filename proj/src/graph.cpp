#include "qmis/graph.hpp"

#include <algorithm>
#include <string>

#include "qmis/errors.hpp"

namespace qmis {

NodeSet::NodeSet(std::vector<node_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet::NodeSet(std::initializer_list<node_t> members)
    : NodeSet(std::vector<node_t>(members)) {}

bool NodeSet::contains(node_t v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidEdge("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of range for n = " + std::to_string(n));
    }
    if (u == v) {
      throw InvalidEdge("self-loop on node " + std::to_string(u));
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canonical) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
    g.offsets_[v + 1] += g.offsets_[v];
  }
  g.adjacency_.resize(2 * canonical.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order fills each row in ascending order: for row w the
  // entries u < w arrive first (as second endpoints, sorted by u), then the
  // entries v > w (as first endpoint, sorted by v).
  for (auto [u, v] : canonical) {
    g.adjacency_[cursor[v]++] = u;
  }
  for (auto [u, v] : canonical) {
    g.adjacency_[cursor[u]++] = v;
  }
  return g;
}

std::size_t Graph::num_complement_edges() const noexcept {
  const std::size_t n = num_nodes();
  return n * (n == 0 ? 0 : n - 1) / 2 - num_edges();
}

std::size_t Graph::complement_degree(node_t v) const noexcept {
  return num_nodes() - 1 - degree(v);
}

bool Graph::has_edge(node_t u, node_t v) const noexcept {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (node_t u = 0; u < num_nodes(); ++u) {
    for (node_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::memory_bytes() const noexcept {
  return offsets_.capacity() * sizeof(std::size_t) + adjacency_.capacity() * sizeof(node_t);
}

namespace {

void require_in_range(const Graph& g, const NodeSet& s) {
  if (!s.empty() && s.members().back() >= g.num_nodes()) {
    throw ContractViolation("node set member " + std::to_string(s.members().back()) +
                            " out of range for n = " + std::to_string(g.num_nodes()));
  }
}

}  // namespace

bool is_independent(const Graph& g, const NodeSet& s) {
  require_in_range(g, s);
  for (node_t u : s) {
    for (node_t w : g.neighbors(u)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const NodeSet& s) {
  if (!is_independent(g, s)) return false;
  for (node_t v = 0; v < g.num_nodes(); ++v) {
    if (s.contains(v)) continue;
    auto row = g.neighbors(v);
    if (std::none_of(row.begin(), row.end(), [&](node_t w) { return s.contains(w); })) {
      return false;
    }
  }
  return true;
}

}  // namespace qmis
