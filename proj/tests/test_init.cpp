#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "qmis/errors.hpp"
#include "qmis/init.hpp"
#include "support.hpp"

using namespace qmis;
using namespace qmis::testing;

namespace {

bool in_box(const Assignment& x) {
  for (double v : x)
    if (!(v >= 0.0 && v <= 1.0)) return false;
  return true;
}

}  // namespace

TEST_CASE("random_init is reproducible and inside the box") {
  InitSpec spec;
  spec.seed = 7;
  spec.count = 3;
  const auto a = random_init(5, spec);
  const auto b = random_init(5, spec);
  REQUIRE(a.size() == 3);
  CHECK(a == b);
  for (const auto& x : a) {
    CHECK(x.size() == 5);
    CHECK(in_box(x));
  }
  CHECK(a[0] != a[1]);

  spec.count = 1;
  CHECK(random_init(5, spec) == random_init(5, spec));
}

TEST_CASE("initialization k does not depend on count") {
  InitSpec small{InitScheme::random, 2.25, 42, 2, {}, true};
  InitSpec large = small;
  large.count = 9;
  const auto a = random_init(12, small);
  const auto b = random_init(12, large);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
  CHECK(random_assignment(12, 42, 5) == b[5]);
}

TEST_CASE("uniform coordinates have mean near one half") {
  double sum = 0.0;
  std::size_t total = 0;
  for (std::size_t k = 0; k < 100; ++k) {
    for (double v : random_assignment(1000, 3, k)) {
      sum += v;
      ++total;
    }
  }
  const double mean = sum / static_cast<double>(total);
  CHECK(mean >= 0.49);
  CHECK(mean <= 0.51);
}

TEST_CASE("degree_mean on the five-node graph") {
  const auto dm = degree_mean(five_node_graph());
  CHECK(dm.note == DegreeMeanNote::none);
  const std::vector<double> expected{0.5, 0.0, 1.0, 1.0, 1.0};
  REQUIRE(dm.mean.size() == 5);
  for (std::size_t v = 0; v < 5; ++v) CHECK(dm.mean[v] == doctest::Approx(expected[v]));
}

TEST_CASE("degree_mean on a path") {
  const auto dm = degree_mean(path3());
  CHECK(dm.mean == std::vector<double>{1.0, 0.0, 1.0});
}

TEST_CASE("degree_mean degenerate cases") {
  const auto cycle = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto regular = degree_mean(cycle);
  CHECK(regular.note == DegreeMeanNote::regular);
  CHECK(regular.mean == std::vector<double>(4, 0.5));

  const auto edgeless = degree_mean(empty_graph(3));
  CHECK(edgeless.note == DegreeMeanNote::edgeless);
  CHECK(edgeless.mean == std::vector<double>(3, 1.0));
}

TEST_CASE("degree_mean is antitone in degree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(3 + rng() % 30, 0.3, rng);
    const auto dm = degree_mean(g);
    for (node_t u = 0; u < g.num_nodes(); ++u)
      for (node_t v = 0; v < g.num_nodes(); ++v)
        if (g.degree(u) > g.degree(v)) CHECK(dm.mean[u] <= dm.mean[v]);
  }
}

TEST_CASE("gaussian_around_mean") {
  const std::vector<double> mean{0.5, 0.0, 1.0, 1.0, 1.0};

  SUBCASE("zero variance reproduces the mean") {
    InitSpec spec{InitScheme::degree, 0.0, 3, 6, {}, false};
    for (const auto& x : gaussian_around_mean(mean, spec)) CHECK(x == mean);
    const std::vector<double> outside{-0.5, 1.5};
    for (const auto& x : gaussian_around_mean(outside, spec)) CHECK(x == std::vector<double>{0.0, 1.0});
  }

  SUBCASE("degree scheme stays inside the box") {
    InitSpec spec{InitScheme::degree, 2.25, 3, 128, {}, true};
    const auto xs = gaussian_around_mean(degree_mean(five_node_graph()).mean, spec);
    CHECK(xs.size() == 128);
    CHECK(xs[0] == degree_mean(five_node_graph()).mean);
    for (const auto& x : xs) CHECK(in_box(x));
  }

  SUBCASE("pre-clamp variance matches eta") {
    const std::vector<double> half(1000, 0.5);
    double sum = 0.0, sq = 0.0;
    std::size_t total = 0;
    for (std::size_t k = 0; k < 100; ++k) {
      for (double v : gaussian_assignment(half, 2.25, 11, k, false)) {
        sum += v;
        sq += v * v;
        ++total;
      }
    }
    const double m = sum / static_cast<double>(total);
    const double var = sq / static_cast<double>(total) - m * m;
    CHECK(std::abs(var - 2.25) <= 0.05 * 2.25);
  }
}

TEST_CASE("sampler matches the batch generators") {
  const Graph g = five_node_graph();
  InitSpec spec{InitScheme::degree, 2.25, 9, 10, {}, true};
  const InitSampler sampler(g, spec);
  const auto all = gaussian_around_mean(degree_mean(g).mean, spec);
  for (std::size_t k = 0; k < 10; ++k) CHECK(sampler(k) == all[k]);

  spec.scheme = InitScheme::random;
  const InitSampler uniform(g, spec);
  CHECK(uniform(4) == random_assignment(5, 9, 4));
}

TEST_CASE("external mean validation and loading") {
  const Graph g = five_node_graph();
  InitSpec spec{InitScheme::external_mean, 0.0, 1, 2, {0.1, 0.2}, true};
  CHECK_THROWS_AS(InitSampler(g, spec), DimensionError);
  spec.external_mean = {0.1, 0.2, 1.3, 0.0, 0.0};
  CHECK_THROWS_AS(InitSampler(g, spec), ContractViolation);
  spec.external_mean = {0.1, 0.2, 0.3, 0.0, 1.0};
  CHECK(InitSampler(g, spec)(1) == spec.external_mean);

  std::istringstream good("0.25\n0.5\n\n1\n");
  CHECK(read_mean_vector(good) == std::vector<double>{0.25, 0.5, 1.0});
  std::istringstream bad("0.25\nabc\n");
  CHECK_THROWS_AS(read_mean_vector(bad), ParseError);

  InitSpec negative{InitScheme::random, -1.0, 0, 1, {}, true};
  CHECK_THROWS_AS(negative.validate(3), ContractViolation);
}
