#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "support/test_graphs.hpp"
#include "trichrome/dimacs.hpp"
#include "trichrome/generator.hpp"
#include "trichrome/planarity.hpp"

using namespace trichrome;
namespace tg = trichrome::testgraphs;

TEST_CASE("er_connected structural postconditions") {
  std::mt19937_64 seeds(1);
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + static_cast<int>(rng_below(seeds, 96));
    const double d = 2.0 + rng_unit(seeds) * 4.0;
    const Graph g = gen_er_connected(n, d, seeds());
    REQUIRE(g.vertex_count() == n);
    REQUIRE(g.edge_count() ==
            static_cast<std::size_t>(std::floor(d * n / 2.0)));
    REQUIRE(g.connected());
  }
  SECTION("named example: n=5, d=2") {
    const Graph g = gen_er_connected(5, 2.0, 9);
    REQUIRE(g.edge_count() == 5);
    REQUIRE(g.connected());
  }
  SECTION("too few edges for connectivity is a parameter error") {
    REQUIRE_THROWS_AS(gen_er_connected(10, 1.0, 0), std::invalid_argument);
  }
}

TEST_CASE("er sample mean degree tracks the target within 1%") {
  const int n = 100;
  const double d = 4.74;
  double total_deg = 0;
  const int runs = 1000;
  std::mt19937_64 seeds(20260810);
  for (int i = 0; i < runs; ++i) {
    const Graph g = gen_er_connected(n, d, seeds());
    total_deg += 2.0 * static_cast<double>(g.edge_count()) / n;
  }
  const double mean = total_deg / runs;
  REQUIRE(std::abs(mean - d) / d <= 0.01);
}

TEST_CASE("pseudo planar structural postconditions") {
  std::mt19937_64 seeds(2);
  for (int t = 0; t < 40; ++t) {
    const int n = 10 + static_cast<int>(rng_below(seeds, 91));
    const double d = 2.0 + rng_unit(seeds) * (6.0 - 12.0 / n - 2.0);
    const Graph g = gen_pseudo_planar(n, d, seeds());
    REQUIRE(g.vertex_count() == n);
    REQUIRE(g.connected());
    REQUIRE(is_planar(g).has_value());
    // connectivity repair may add a few edges beyond the target
    REQUIRE(g.edge_count() >= static_cast<std::size_t>(std::floor(d * n / 2.0)));
  }
  SECTION("named example: n=10, d=2 gives m=10") {
    const Graph g = gen_pseudo_planar(10, 2.0, 4);
    REQUIRE(g.vertex_count() == 10);
    REQUIRE(g.edge_count() >= 10);
    REQUIRE(g.connected());
    REQUIRE(is_planar(g).has_value());
  }
  SECTION("infeasible density is a parameter error") {
    REQUIRE_THROWS_AS(gen_pseudo_planar(10, 5.5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_pseudo_planar(10, 1.0, 0), std::invalid_argument);
  }
  SECTION("most attempts dodge K4 subgraphs") {
    int k4_free = 0;
    std::mt19937_64 seeds(3);
    for (int t = 0; t < 30; ++t) {
      const Graph g = gen_pseudo_planar(30, 3.5, seeds());
      if (!contains_k4(g)) ++k4_free;
    }
    REQUIRE(k4_free >= 25);
  }
}

TEST_CASE("4-regular planar generator") {
  SECTION("octahedron base case is already valid") {
    const Graph g = gen_4regular_planar(6, FourRegularProbs{}, 1);
    REQUIRE(g == tg::octahedron());
  }
  SECTION("structural postconditions across sizes and seeds") {
    std::mt19937_64 seeds(4);
    for (int t = 0; t < 12; ++t) {
      const int n = 12 + 2 * static_cast<int>(rng_below(seeds, 45));
      const Graph g = gen_4regular_planar(n, FourRegularProbs{}, seeds());
      REQUIRE(g.vertex_count() >= n);
      REQUIRE(g.vertex_count() <= n + 5);
      for (int v : g.vertices()) REQUIRE(g.degree(v) == 4);
      REQUIRE(g.connected());
      REQUIRE(is_planar(g).has_value());
    }
  }
  SECTION("parameter errors") {
    REQUIRE_THROWS_AS(gen_4regular_planar(7, FourRegularProbs{}, 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(gen_4regular_planar(4, FourRegularProbs{}, 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(gen_4regular_planar(100, {0.5, 0.1, 0.1, 0.1}, 0),
                      std::invalid_argument);
  }
}

TEST_CASE("seed determinism is byte-identical") {
  for (int which = 0; which < 3; ++which) {
    GenSpec spec;
    spec.seed = 987;
    switch (which) {
      case 0:
        spec.model = GenModel::er_connected;
        spec.n = 60;
        spec.avg_degree = 4.0;
        break;
      case 1:
        spec.model = GenModel::pseudo_planar;
        spec.n = 60;
        spec.avg_degree = 3.0;
        break;
      default:
        spec.model = GenModel::planar_4regular;
        spec.n = 40;
    }
    const std::string a = write_dimacs(generate(spec));
    const std::string b = write_dimacs(generate(spec));
    REQUIRE(a == b);
    spec.seed = 988;
    REQUIRE(write_dimacs(generate(spec)) != a);
  }
}
