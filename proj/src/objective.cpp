#include "qmis/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmis/errors.hpp"

namespace qmis {

namespace {

void require_length(const Graph& g, std::size_t len, const char* what) {
  if (len != g.num_nodes()) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(len) +
                         ", graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
}

}  // namespace

void ObjectiveParams::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidGamma("gamma must be positive and finite, got " + std::to_string(gamma));
  }
  if (complement_term && !(gamma > 1.0)) {
    throw InvalidGamma("gamma must exceed 1 with the complement term, got " +
                       std::to_string(gamma));
  }
}

void multiply_adjacency(const Graph& g, std::span<const double> x, std::span<double> out) {
  const std::size_t n = g.num_nodes();
  std::size_t nonzero = 0;
  for (double xi : x) nonzero += (xi != 0.0);

  if (4 * nonzero < n) {
    std::fill(out.begin(), out.end(), 0.0);
    for (node_t u = 0; u < n; ++u) {
      const double xu = x[u];
      if (xu == 0.0) continue;
      for (node_t v : g.neighbors(u)) out[v] += xu;
    }
    return;
  }
  for (node_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (node_t u : g.neighbors(v)) acc += x[u];
    out[v] = acc;
  }
}

double evaluate(const Graph& g, const ObjectiveParams& p, std::span<const double> x) {
  require_length(g, x.size(), "assignment");
  std::vector<double> ax(x.size());
  multiply_adjacency(g, x, ax);

  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  const double edge_form = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
  double value = -sum + 0.5 * p.gamma * edge_form;
  if (p.complement_term) {
    const double sq = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    // x'A_c x = (e'x)^2 - x'x - x'A x
    value -= 0.5 * (sum * sum - sq - edge_form);
  }
  return value;
}

void gradient_into(const Graph& g, const ObjectiveParams& p, std::span<const double> x,
                   std::span<double> out) {
  require_length(g, x.size(), "assignment");
  require_length(g, out.size(), "gradient buffer");
  multiply_adjacency(g, x, out);
  const std::size_t n = x.size();
  if (p.complement_term) {
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    const double edge_weight = p.gamma + 1.0;
    // A_c x = (e'x) e - x - A x
    for (std::size_t v = 0; v < n; ++v) {
      out[v] = -1.0 + edge_weight * out[v] - (sum - x[v]);
    }
  } else {
    for (std::size_t v = 0; v < n; ++v) out[v] = -1.0 + p.gamma * out[v];
  }
}

std::vector<double> gradient(const Graph& g, const ObjectiveParams& p, std::span<const double> x) {
  std::vector<double> out(g.num_nodes());
  gradient_into(g, p, x, out);
  return out;
}

double gamma_floor_wei(const Graph& g) {
  double bound = 0.0;
  for (node_t v = 0; v < g.num_nodes(); ++v) bound += 1.0 / (1.0 + static_cast<double>(g.degree(v)));
  // The sum is a rational with small denominators; absorb rounding noise
  // before taking the ceiling so e.g. 5 * (1/5) maps to 1, not 2.
  const double tolerance = 1e-9 * std::max(1.0, bound);
  return std::ceil(bound - tolerance) + 1.0;
}

ObjectiveParams gamma_select(const Graph& g, GammaRule rule, bool complement_term) {
  ObjectiveParams p;
  p.complement_term = complement_term;
  switch (rule.mode) {
    case GammaMode::wei_floor:
      p.gamma = gamma_floor_wei(g);
      break;
    case GammaMode::strict_n:
      // n = 1 would give gamma = 1; any gamma >= n satisfies the same bound.
      p.gamma = std::max<double>(static_cast<double>(g.num_nodes()), 2.0);
      break;
    case GammaMode::fixed:
      if (!(rule.value > 1.0)) {
        throw InvalidGamma("fixed gamma must exceed 1, got " + std::to_string(rule.value));
      }
      p.gamma = rule.value;
      break;
  }
  p.validate();
  return p;
}

}  // namespace qmis
