#include "qmis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "qmis/errors.hpp"

namespace qmis {

namespace {

using mask_t = std::uint64_t;

inline mask_t bit(std::size_t v) { return mask_t{1} << v; }

inline int lowest(mask_t m) { return std::countr_zero(m); }

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, bool enumerate) : enumerate_(enumerate) {
    const std::size_t n = g.num_nodes();
    adj_.assign(n, 0);
    for (node_t v = 0; v < n; ++v) {
      for (node_t u : g.neighbors(v)) adj_[v] |= bit(u);
    }
  }

  void seed_incumbent(mask_t set) {
    best_ = set;
    best_size_ = std::popcount(set);
  }

  void run(mask_t candidates) { expand(0, candidates); }

  mask_t best() const { return best_; }
  int best_size() const { return best_size_; }
  const std::vector<mask_t>& optima() const { return optima_; }

 private:
  // Number of cliques in a greedy clique cover of the candidates; no
  // independent set can take two nodes of one clique.
  int clique_cover_bound(mask_t candidates) const {
    int cliques = 0;
    while (candidates) {
      const int v = lowest(candidates);
      mask_t grow = candidates & adj_[v];
      candidates &= ~bit(v);
      while (grow) {
        const int u = lowest(grow);
        candidates &= ~bit(u);
        grow &= adj_[u];
      }
      ++cliques;
    }
    return cliques;
  }

  void record(mask_t chosen) {
    const int size = std::popcount(chosen);
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen;
      optima_.clear();
    }
    if (enumerate_ && size == best_size_) optima_.push_back(chosen);
  }

  void expand(mask_t chosen, mask_t candidates) {
    if (!candidates) {
      record(chosen);
      return;
    }
    const int chosen_size = std::popcount(chosen);
    const int bound = chosen_size + clique_cover_bound(candidates);
    if (enumerate_ ? bound < best_size_ : bound <= best_size_) return;

    // Branch on a max-degree node of the candidate subgraph, lowest index on ties.
    int pivot = -1;
    int pivot_degree = -1;
    for (mask_t rest = candidates; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      const int d = std::popcount(adj_[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree == 0) {
      // Remaining candidates are pairwise non-adjacent.
      record(chosen | candidates);
      return;
    }
    expand(chosen | bit(pivot), candidates & ~adj_[pivot] & ~bit(pivot));
    expand(chosen, candidates & ~bit(pivot));
  }

  bool enumerate_;
  std::vector<mask_t> adj_;
  mask_t best_ = 0;
  int best_size_ = -1;
  std::vector<mask_t> optima_;
};

NodeSet to_node_set(mask_t m) {
  std::vector<node_t> members;
  for (; m; m &= m - 1) members.push_back(static_cast<node_t>(lowest(m)));
  return NodeSet(std::move(members));
}

mask_t to_mask(const NodeSet& s) {
  mask_t m = 0;
  for (node_t v : s) m |= bit(v);
  return m;
}

}  // namespace

OracleResult exact_mis(const Graph& g, bool enumerate_all) {
  const std::size_t n = g.num_nodes();
  if (n > kOracleMaxNodes) {
    throw TooLarge("exact oracle supports at most " + std::to_string(kOracleMaxNodes) +
                   " nodes, got " + std::to_string(n));
  }
  const bool enumerate = enumerate_all && n <= kOracleEnumerateMaxNodes;
  const mask_t all = n == 64 ? ~mask_t{0} : bit(n) - 1;

  BranchAndBound search(g, enumerate);
  if (!enumerate) search.seed_incumbent(to_mask(greedy_min_degree(g)));
  search.run(all);

  OracleResult result;
  result.optimum_size = static_cast<std::size_t>(search.best_size());
  result.one_optimum = to_node_set(search.best());
  if (enumerate) {
    std::vector<NodeSet> sets;
    for (mask_t m : search.optima()) sets.push_back(to_node_set(m));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    result.one_optimum = sets.front();
    result.all_optima = std::move(sets);
  }
  return result;
}

NodeSet greedy_min_degree(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> residual(n);
  std::vector<bool> alive(n, true);
  for (node_t v = 0; v < n; ++v) residual[v] = g.degree(v);

  std::vector<node_t> chosen;
  std::size_t remaining = n;
  while (remaining > 0) {
    node_t pick = 0;
    std::size_t pick_degree = std::numeric_limits<std::size_t>::max();
    for (node_t v = 0; v < n; ++v) {
      if (alive[v] && residual[v] < pick_degree) {
        pick = v;
        pick_degree = residual[v];
      }
    }
    chosen.push_back(pick);
    // Delete the closed neighborhood of pick and refresh residual degrees.
    auto remove = [&](node_t v) {
      alive[v] = false;
      --remaining;
      for (node_t w : g.neighbors(v)) {
        if (alive[w]) --residual[w];
      }
    };
    remove(pick);
    for (node_t u : g.neighbors(pick)) {
      if (alive[u]) remove(u);
    }
  }
  return NodeSet(std::move(chosen));
}

}  // namespace qmis
