#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support/test_graphs.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/rng.hpp"

using namespace trichrome;
namespace tg = trichrome::testgraphs;

namespace {

// brute-force oracles over all 4-vertex subsets
bool brute_has_k4(const Graph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (g.has_edge(vs[a], vs[b]) && g.has_edge(vs[a], vs[c]) &&
              g.has_edge(vs[a], vs[d]) && g.has_edge(vs[b], vs[c]) &&
              g.has_edge(vs[b], vs[d]) && g.has_edge(vs[c], vs[d]))
            return true;
  return false;
}

bool brute_has_contractible_diamond(const Graph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const int u = vs[a], v = vs[b], z = vs[c], w = vs[d];
          if (u == z || u == w || v == z || v == w) continue;
          if (!g.has_edge(u, v) && g.has_edge(z, w) && g.has_edge(u, z) &&
              g.has_edge(u, w) && g.has_edge(v, z) && g.has_edge(v, w))
            return true;
        }
  return false;
}

bool witness_subgraph_forces_pair(const DiamondWitness& dw) {
  // exhaust all 3^4 colorings of the witness subgraph
  const std::array<std::pair<int, int>, 5> edges{
      std::pair{0, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}};  // 0=z 1=w 2=u 3=v
  (void)dw;
  for (int mask = 0; mask < 81; ++mask) {
    int c[4], m = mask;
    for (int& x : c) {
      x = m % 3;
      m /= 3;
    }
    bool proper = true;
    for (auto [x, y] : edges)
      if (c[x] == c[y]) proper = false;
    if (proper && c[2] != c[3]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("contract collapses duplicate edges and keeps the graph simple") {
  SECTION("path ends merge to K2") {
    Graph g = tg::path(3);  // 0-1-2
    const int s = g.contract(0, 2);
    REQUIRE(s == 3);
    REQUIRE(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
    REQUIRE(g.has_edge(1, 3));
  }
  SECTION("C4 diagonal contraction gives a path") {
    Graph g = tg::cycle(4);
    const int s = g.contract(0, 2);
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(1, s));
    REQUIRE(g.has_edge(3, s));
    REQUIRE_FALSE(g.has_edge(1, 3));
  }
  SECTION("C5 contraction is the tadpole") {
    Graph g = tg::cycle(5);
    const int s = g.contract(0, 2);
    REQUIRE(s == 5);
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{
                             {1, 5}, {3, 4}, {3, 5}, {4, 5}});
    const auto tps = find_tadpoles(g);
    REQUIRE_FALSE(tps.empty());
  }
  SECTION("precondition violations throw") {
    Graph g = tg::cycle(4);
    REQUIRE_THROWS_AS(g.contract(0, 1), std::invalid_argument);  // adjacent
    REQUIRE_THROWS_AS(g.contract(0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(g.contract(0, 17), std::invalid_argument);
    g.contract(0, 2);
    REQUIRE_THROWS_AS(g.contract(0, 1), std::invalid_argument);  // 0 is dead
  }
}

TEST_CASE("add_edge completes the expected cliques") {
  SECTION("diamond plus pair edge is K4") {
    Graph g = tg::k112();
    g.add_edge(0, 1);
    REQUIRE(g.is_complete());
    REQUIRE(contains_k4(g).has_value());
  }
  SECTION("tadpole plus both tail edges is K4") {
    Graph g = tg::t31();
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    REQUIRE(g.is_complete());
  }
  SECTION("two isolated vertices gain an edge") {
    Graph g = Graph::with_vertices(2);
    g.add_edge(0, 1);
    REQUIRE(g.edge_count() == 1);
  }
  SECTION("duplicate edge and loop throw") {
    Graph g = tg::cycle(3);
    REQUIRE_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  }
}

TEST_CASE("find_diamond") {
  SECTION("K112 pair is the two degree-2 vertices") {
    const auto dw = find_diamond(tg::k112());
    REQUIRE(dw.has_value());
    REQUIRE(dw->u == 0);
    REQUIRE(dw->v == 1);
    REQUIRE(dw->z == 2);
    REQUIRE(dw->w == 3);
  }
  SECTION("K3 has none") { REQUIRE_FALSE(find_diamond(tg::complete(3))); }
  SECTION("K4 has none: every inner pair is adjacent") {
    REQUIRE_FALSE(find_diamond(tg::complete(4)));
    REQUIRE_FALSE(brute_has_contractible_diamond(tg::complete(4)));
  }
  SECTION("agrees with 4-subset enumeration on random graphs") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 4 + static_cast<int>(rng_below(rng, 7));  // up to 10
      const int m = static_cast<int>(rng_below(rng, n * (n - 1) / 2 + 1));
      const Graph g = tg::random_gnm(n, m, rng);
      REQUIRE(find_diamond(g).has_value() == brute_has_contractible_diamond(g));
    }
  }
  SECTION("every witness forces its pair to one color") {
    std::mt19937_64 rng(7);
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 5 + static_cast<int>(rng_below(rng, 6));
      const Graph g = tg::random_gnm(n, 2 * n, rng);
      if (auto dw = find_diamond(g)) {
        ++found;
        REQUIRE(g.has_edge(dw->z, dw->w));
        REQUIRE(g.has_edge(dw->u, dw->z));
        REQUIRE(g.has_edge(dw->u, dw->w));
        REQUIRE(g.has_edge(dw->v, dw->z));
        REQUIRE(g.has_edge(dw->v, dw->w));
        REQUIRE_FALSE(g.has_edge(dw->u, dw->v));
        REQUIRE(witness_subgraph_forces_pair(*dw));
      }
    }
    REQUIRE(found > 20);
  }
}

TEST_CASE("contains_k4") {
  REQUIRE(contains_k4(tg::complete(4)).has_value());
  REQUIRE_FALSE(contains_k4(tg::k112()));
  REQUIRE_FALSE(contains_k4(tg::wheel(5)));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng_below(rng, 9));  // up to 12
    const int m = static_cast<int>(rng_below(rng, n * (n - 1) / 2 + 1));
    const Graph g = tg::random_gnm(n, m, rng);
    REQUIRE(contains_k4(g).has_value() == brute_has_k4(g));
    if (auto k4 = contains_k4(g)) {
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) REQUIRE(g.has_edge((*k4)[i], (*k4)[j]));
    }
  }
}

TEST_CASE("find_tadpoles") {
  SECTION("T31 yields exactly both orientations") {
    const auto tps = find_tadpoles(tg::t31());
    REQUIRE(tps.size() == 2);
    REQUIRE(tps[0].x == 0);
    REQUIRE(tps[0].y == 1);
    REQUIRE(tps[0].z == 2);
    REQUIRE(tps[0].w == 3);
    REQUIRE(tps[1].x == 1);
    REQUIRE(tps[1].y == 0);
  }
  SECTION("triangle-free graphs have none") {
    REQUIRE(find_tadpoles(tg::cycle(5)).empty());
    REQUIRE(find_tadpoles(tg::k33()).empty());
  }
  SECTION("K4 has none: the tail edges always exist") {
    REQUIRE(find_tadpoles(tg::complete(4)).empty());
  }
  SECTION("witness plus its two tail edges is K4") {
    std::mt19937_64 rng(41);
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 5 + static_cast<int>(rng_below(rng, 6));
      const Graph g = tg::random_gnm(n, 2 * n, rng);
      for (const auto& t : find_tadpoles(g)) {
        ++found;
        Graph h = g;
        h.add_edge(t.x, t.w);
        h.add_edge(t.y, t.w);
        const Graph sub = induced_subgraph(h, {t.x, t.y, t.z, t.w});
        REQUIRE(sub.is_complete());
      }
    }
    REQUIRE(found > 20);
  }
}

TEST_CASE("non_edges") {
  REQUIRE(non_edges(tg::complete(4)).empty());
  REQUIRE(non_edges(tg::cycle(4)) ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  REQUIRE(non_edges(Graph::with_vertices(4)).size() == 6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng_below(rng, 10));
    const Graph g = tg::random_gnm(n, n, rng);
    REQUIRE(non_edges(g).size() ==
            static_cast<std::size_t>(n) * (n - 1) / 2 - g.edge_count());
  }
}

TEST_CASE("neighborhood helpers") {
  SECTION("wheel hubs") {
    const Graph w5 = tg::wheel(5);
    const Graph nb5 = induced_neighborhood(w5, 5);
    REQUIRE(nb5.vertex_count() == 5);
    REQUIRE(nb5.edge_count() == 5);
    REQUIRE_FALSE(is_bipartite(nb5));

    const Graph w6 = tg::wheel(6);
    const Graph nb6 = induced_neighborhood(w6, 6);
    REQUIRE(nb6.edge_count() == 6);
    REQUIRE(is_bipartite(nb6));
  }
  SECTION("K112 pair shares the spine") {
    REQUIRE(common_neighbors(tg::k112(), 0, 1) == std::vector<int>{2, 3});
  }
}

TEST_CASE("merge partition stays a partition under contraction") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + static_cast<int>(rng_below(rng, 7));
    Graph g = tg::random_gnm(n, 2 * n, rng);
    MergePartition part = MergePartition::identity(g);
    const std::vector<int> originals = g.vertices();
    int contractions = 0;
    while (true) {
      const auto ne = non_edges(g);
      if (ne.empty()) break;
      const auto [u, v] = ne[rng_below(rng, ne.size())];
      contract(g, part, u, v);
      ++contractions;
      REQUIRE(part.consistent_with(g, originals));
      REQUIRE(part.class_count() == static_cast<std::size_t>(n - contractions));
      if (rng_below(rng, 3) == 0) break;
    }
  }
}

TEST_CASE("vertex ids allocate deterministically across equal graphs") {
  Graph a = tg::cycle(6);
  Graph b = tg::cycle(6);
  REQUIRE(a == b);
  REQUIRE(a.contract(0, 2) == b.contract(0, 2));
  REQUIRE(a.contract(1, 3) == b.contract(1, 3));
  REQUIRE(a == b);
}
