#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmis/graph.hpp"
#include "qmis/objective.hpp"

namespace qmis {

// Strictly binary indicator vector z in {0,1}^n.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t n) : bits_(n, 0) {}
  // Throws ContractViolation on entries other than 0 and 1.
  explicit BinaryVector(std::vector<std::uint8_t> bits);
  static BinaryVector from_values(std::span<const double> values);
  static BinaryVector indicator(std::size_t n, const NodeSet& s);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t count() const noexcept;

  // z_v = 1 iff x_v > 0; reuses the existing buffer.
  void assign_threshold(std::span<const double> x);

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

BinaryVector threshold(std::span<const double> x);
NodeSet support(const BinaryVector& z);

// Fixed-point test z == Proj(z - alpha * grad f(z)) for any alpha > 0, which
// at a binary point reduces to
//   df/dx_v >= 0 where z_v = 0,   df/dx_v <= 0 where z_v = 1.
// With gamma >= n this holds exactly for maximal independent sets.
bool fast_mis_check(const Graph& g, const ObjectiveParams& p, const BinaryVector& z);

// Reference path: builds the support set and checks independence and
// maximality node by node.
bool direct_mis_check(const Graph& g, const BinaryVector& z);

}  // namespace qmis
