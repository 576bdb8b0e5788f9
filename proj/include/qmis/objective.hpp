#pragma once

#include <span>
#include <vector>

#include "qmis/graph.hpp"

namespace qmis {

// A point of [0,1]^n; one trainable parameter per node.
using Assignment = std::vector<double>;

// Edges-penalty weight and whether the complement-graph reward is active.
//
//   f(x) = -e'x + (gamma/2) x'A x - (1/2) x'A_c x
//
// where A is the adjacency matrix of the graph and A_c that of its
// complement. With the complement term disabled the last summand is dropped.
struct ObjectiveParams {
  double gamma = 2.0;
  bool complement_term = true;

  // Throws InvalidGamma unless gamma > 0, and gamma > 1 with the complement
  // term enabled.
  void validate() const;
};

enum class GammaMode { wei_floor, strict_n, fixed };

struct GammaRule {
  GammaMode mode = GammaMode::strict_n;
  double value = 0.0;  // used by GammaMode::fixed only

  static GammaRule wei_floor() { return {GammaMode::wei_floor, 0.0}; }
  static GammaRule strict_n() { return {GammaMode::strict_n, 0.0}; }
  static GammaRule fixed(double v) { return {GammaMode::fixed, v}; }
};

// out = A x. Skips zero coordinates when x is sparse; the summation order per
// row is ascending neighbor index either way, so both paths agree bitwise.
void multiply_adjacency(const Graph& g, std::span<const double> x, std::span<double> out);

double evaluate(const Graph& g, const ObjectiveParams& p, std::span<const double> x);

std::vector<double> gradient(const Graph& g, const ObjectiveParams& p, std::span<const double> x);
// Allocation-free variant; `out` must have length n.
void gradient_into(const Graph& g, const ObjectiveParams& p, std::span<const double> x,
                   std::span<double> out);

// ceil(sum_v 1/(1 + d(v))) + 1, an estimate of k + 1 from below.
double gamma_floor_wei(const Graph& g);

ObjectiveParams gamma_select(const Graph& g, GammaRule rule, bool complement_term = true);

}  // namespace qmis
