#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "qmis/checker.hpp"
#include "qmis/errors.hpp"
#include "qmis/objective.hpp"
#include "qmis/oracle.hpp"
#include "support.hpp"

using namespace qmis;
using namespace qmis::testing;

namespace {

std::vector<double> indicator(std::size_t n, std::initializer_list<node_t> members) {
  std::vector<double> x(n, 0.0);
  for (node_t v : members) x[v] = 1.0;
  return x;
}

std::vector<double> random_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = unit(rng);
  return x;
}

}  // namespace

TEST_CASE("evaluate: hand-computed values") {
  const Graph g = five_node_graph();
  const ObjectiveParams p{6.0, true};
  CHECK(evaluate(g, p, indicator(5, {0, 3, 4})) == doctest::Approx(-6.0));
  CHECK(evaluate(g, p, std::vector<double>(5, 0.0)) == 0.0);

  const Graph edge = Graph::from_edge_list(2, {{0, 1}});
  CHECK(evaluate(edge, ObjectiveParams{3.0, true}, std::vector<double>{1.0, 1.0}) == doctest::Approx(1.0));
}

TEST_CASE("evaluate matches explicit-complement reference") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(2 + rng() % 11, 0.5, rng);
    const Dense dense(g);
    const auto x = random_point(g.num_nodes(), rng);
    for (bool with : {true, false}) {
      const double ref = dense.objective(7.5, with, x);
      CHECK(evaluate(g, ObjectiveParams{7.5, with}, x) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("gradient: hand-computed values") {
  const Graph g = five_node_graph();
  const auto grad = gradient(g, ObjectiveParams{6.0, true}, indicator(5, {0, 3, 4}));
  CHECK(grad[1] == 17.0);
  CHECK(grad[0] == -3.0);

  const auto at_zero = gradient(g, ObjectiveParams{6.0, true}, std::vector<double>(5, 0.0));
  for (double v : at_zero) CHECK(v == -1.0);

  const Graph empty = empty_graph(6);
  const auto half = gradient(empty, ObjectiveParams{4.0, true}, std::vector<double>(6, 0.5));
  for (double v : half) CHECK(v == doctest::Approx(-1.0 - 5.0 / 2.0));
}

TEST_CASE("gradient matches explicit complement and finite differences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + rng() % 12, trial % 3 == 0 ? 0.2 : 0.6, rng);
    const Dense dense(g);
    const std::size_t n = g.num_nodes();
    std::vector<double> x = random_point(n, rng);
    for (bool with : {true, false}) {
      const ObjectiveParams p{static_cast<double>(n) + 1.5, with};
      const auto grad = gradient(g, p, x);
      const auto ref = dense.gradient(p.gamma, with, x);
      for (std::size_t v = 0; v < n; ++v) {
        CHECK(std::abs(grad[v] - ref[v]) <= 1e-12 * std::max(1.0, std::abs(ref[v])));
        const double h = 1e-6;
        std::vector<double> up = x, down = x;
        up[v] += h;
        down[v] -= h;
        const double fd = (evaluate(g, p, up) - evaluate(g, p, down)) / (2 * h);
        CHECK(std::abs(fd - grad[v]) <= 1e-5);
      }
    }
  }
}

TEST_CASE("dimension mismatch") {
  const Graph g = five_node_graph();
  CHECK_THROWS_AS(evaluate(g, ObjectiveParams{6.0, true}, std::vector<double>(4, 0.0)), DimensionError);
  CHECK_THROWS_AS(gradient(g, ObjectiveParams{6.0, true}, std::vector<double>(6, 0.0)), DimensionError);
}

TEST_CASE("sparse and dense adjacency products agree bitwise") {
  std::mt19937_64 rng(3);
  const Graph g = random_graph(60, 0.3, rng);
  std::vector<double> x = random_point(60, rng);
  for (std::size_t v = 0; v < 60; ++v)
    if (v % 7) x[v] = 0.0;  // 9 of 60 nonzero: sparse path
  std::vector<double> sparse(60), dense(60);
  multiply_adjacency(g, x, sparse);
  for (node_t v = 0; v < 60; ++v) {
    double acc = 0.0;
    for (node_t u : g.neighbors(v)) acc += x[u];
    dense[v] = acc;
  }
  CHECK(sparse == dense);
}

TEST_CASE("gamma_floor_wei") {
  CHECK(gamma_floor_wei(five_node_graph()) == 4.0);
  CHECK(gamma_floor_wei(empty_graph(5)) == 6.0);
  CHECK(gamma_floor_wei(complete_graph(5)) == 2.0);
  CHECK(gamma_floor_wei(complete_graph(7)) == 2.0);
}

TEST_CASE("gamma_select") {
  CHECK(gamma_select(five_node_graph(), GammaRule::strict_n()).gamma == 5.0);
  CHECK(gamma_select(five_node_graph(), GammaRule::fixed(775.0)).gamma == 775.0);
  CHECK(gamma_select(empty_graph(3), GammaRule::wei_floor()).gamma == 4.0);
  CHECK_THROWS_AS(gamma_select(five_node_graph(), GammaRule::fixed(1.0)), InvalidGamma);
  CHECK_THROWS_AS(gamma_select(five_node_graph(), GammaRule::fixed(0.5)), InvalidGamma);
  CHECK_THROWS_AS((ObjectiveParams{1.0, true}.validate()), InvalidGamma);
  CHECK_NOTHROW((ObjectiveParams{0.5, false}.validate()));
}

TEST_CASE("maximum independent sets are first-order stationary at gamma = k + 1") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(4 + rng() % 9, std::array<double, 3>{0.2, 0.5, 0.8}[trial % 3], rng);
    const Dense dense(g);
    const auto optima = dense.maximum_sets();
    const double k = __builtin_popcountll(optima.front());
    const ObjectiveParams p{k + 1.0, true};
    for (std::uint64_t mask : optima) {
      std::vector<double> x(g.num_nodes(), 0.0);
      for (std::size_t v = 0; v < g.num_nodes(); ++v) x[v] = (mask >> v & 1) ? 1.0 : 0.0;
      const auto grad = gradient(g, p, x);
      for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        if (mask >> v & 1) {
          CHECK(grad[v] <= 0.0);
        } else {
          CHECK(grad[v] >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("gamma threshold is tight at k on a star with a pendant set") {
  // Hub 0 joined to leaves 1..k; node k+1 hangs off leaf 1. For S = leaves
  // 1..k the pendant has m_v = 1 and l_v = k - 1, the largest l_v possible
  // when m_v = 1 since m_v + l_v = |S|.
  for (std::size_t k = 2; k <= 8; ++k) {
    std::vector<Edge> edges;
    for (node_t leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
    edges.emplace_back(1, static_cast<node_t>(k + 1));
    const Graph g = Graph::from_edge_list(k + 2, edges);
    const Dense dense(g);
    const auto optima = dense.maximum_sets();
    REQUIRE(__builtin_popcountll(optima.front()) == static_cast<int>(k));

    std::vector<double> x(k + 2, 0.0);
    for (node_t leaf = 1; leaf <= k; ++leaf) x[leaf] = 1.0;
    const node_t outside = static_cast<node_t>(k + 1);
    const double kd = static_cast<double>(k);
    CHECK(gradient(g, ObjectiveParams{kd, true}, x)[outside] == 0.0);
    CHECK(gradient(g, ObjectiveParams{kd - 0.5, true}, x)[outside] < 0.0);
    CHECK(gradient(g, ObjectiveParams{kd + 1.0, true}, x)[outside] > 0.0);
  }
}

TEST_CASE("with gamma = n the boundary conditions characterize maximal independent sets") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = random_graph(n, 0.45, rng);
    const Dense dense(g);
    const ObjectiveParams p = gamma_select(g, GammaRule::strict_n());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<double> x(n);
      for (std::size_t v = 0; v < n; ++v) x[v] = (mask >> v & 1) ? 1.0 : 0.0;
      const auto grad = gradient(g, p, x);
      bool stationary = true;
      for (std::size_t v = 0; v < n; ++v) {
        CHECK(grad[v] == std::round(grad[v]));
        stationary &= (mask >> v & 1) ? grad[v] <= 0.0 : grad[v] >= 0.0;
      }
      CHECK(stationary == dense.maximal_independent(mask));
    }
  }
}
