#include "qmis/checker.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qmis/errors.hpp"

namespace qmis {

BinaryVector::BinaryVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw ContractViolation("binary vector entry " + std::to_string(i) + " is not 0 or 1");
    }
  }
}

BinaryVector BinaryVector::from_values(std::span<const double> values) {
  std::vector<std::uint8_t> bits(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) {
      bits[i] = 0;
    } else if (values[i] == 1.0) {
      bits[i] = 1;
    } else {
      throw ContractViolation("binary vector entry " + std::to_string(i) + " is not 0 or 1");
    }
  }
  return BinaryVector(std::move(bits));
}

BinaryVector BinaryVector::indicator(std::size_t n, const NodeSet& s) {
  BinaryVector z(n);
  for (node_t v : s) {
    if (v >= n) throw ContractViolation("node " + std::to_string(v) + " out of range");
    z.bits_[v] = 1;
  }
  return z;
}

std::size_t BinaryVector::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

void BinaryVector::assign_threshold(std::span<const double> x) {
  bits_.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) bits_[i] = x[i] > 0.0 ? 1 : 0;
}

BinaryVector threshold(std::span<const double> x) {
  BinaryVector z;
  z.assign_threshold(x);
  return z;
}

NodeSet support(const BinaryVector& z) {
  std::vector<node_t> members;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i]) members.push_back(static_cast<node_t>(i));
  }
  return NodeSet(std::move(members));
}

namespace {

// Sign test for one coordinate given c = number of neighbors inside the
// support and k = support size. The gradient at a binary point is
//   -1 + gamma * c - (k - z_v - c)      (complement term)
//   -1 + gamma * c                      (without)
inline bool boundary_ok(const ObjectiveParams& p, bool in_set, double c, double k) {
  double grad = -1.0 + p.gamma * c;
  if (p.complement_term) grad -= k - (in_set ? 1.0 : 0.0) - c;
  return in_set ? grad <= 0.0 : grad >= 0.0;
}

}  // namespace

bool fast_mis_check(const Graph& g, const ObjectiveParams& p, const BinaryVector& z) {
  const std::size_t n = g.num_nodes();
  if (z.size() != n) {
    throw DimensionError("binary vector has length " + std::to_string(z.size()) +
                         ", graph has " + std::to_string(n) + " nodes");
  }
  const auto bits = z.bits();

  std::size_t k = 0;
  std::size_t support_degree = 0;
  for (node_t v = 0; v < n; ++v) {
    if (bits[v]) {
      ++k;
      support_degree += g.degree(v);
    }
  }
  const double kd = static_cast<double>(k);

  // The matvec A z is evaluated row by row with an early exit, unless the
  // support is small enough that scattering from it touches fewer entries.
  if (4 * support_degree < 2 * g.num_edges()) {
    std::vector<std::uint32_t> counts(n, 0);
    for (node_t u = 0; u < n; ++u) {
      if (!bits[u]) continue;
      for (node_t v : g.neighbors(u)) ++counts[v];
    }
    for (node_t v = 0; v < n; ++v) {
      if (!boundary_ok(p, bits[v] != 0, counts[v], kd)) return false;
    }
    return true;
  }
  for (node_t v = 0; v < n; ++v) {
    std::uint32_t c = 0;
    for (node_t u : g.neighbors(v)) c += bits[u];
    if (!boundary_ok(p, bits[v] != 0, c, kd)) return false;
  }
  return true;
}

bool direct_mis_check(const Graph& g, const BinaryVector& z) {
  if (z.size() != g.num_nodes()) {
    throw DimensionError("binary vector has length " + std::to_string(z.size()) +
                         ", graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
  return is_maximal_independent(g, support(z));
}

}  // namespace qmis
