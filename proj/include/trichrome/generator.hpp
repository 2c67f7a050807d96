#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "trichrome/graph.hpp"
#include "trichrome/planarity.hpp"
#include "trichrome/rng.hpp"

namespace trichrome {

struct GeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GenModel { pseudo_planar, planar_4regular, er_connected };

inline const char* to_string(GenModel m) {
  switch (m) {
    case GenModel::pseudo_planar: return "pseudoplanar";
    case GenModel::planar_4regular: return "planar4reg";
    default: return "er";
  }
}

/// Probability of each 4-regular expansion operation per step; must sum to 1.
struct FourRegularProbs {
  double a = 0.80, b = 0.05, c = 0.10, f = 0.05;
};

struct GenSpec {
  GenModel model = GenModel::er_connected;
  int n = 0;
  double avg_degree = 0.0;           // pseudo_planar, er_connected
  FourRegularProbs op_probs;         // planar_4regular
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Erdos-Renyi connected: a Hamiltonian path on a random permutation keeps the
// graph connected, then the remaining edges are uniform random non-edges.
// ---------------------------------------------------------------------------
inline Graph gen_er_connected(int n, double d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_er_connected: n < 1");
  const long long m = static_cast<long long>(std::floor(d * n / 2.0));
  if (m < n - 1)
    throw std::invalid_argument("gen_er_connected: m = floor(dn/2) below n-1");
  if (m > static_cast<long long>(n) * (n - 1) / 2)
    throw std::invalid_argument("gen_er_connected: m above C(n,2)");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng_shuffle(rng, perm);
  Graph g = Graph::with_vertices(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(perm[i], perm[i + 1]);
  while (static_cast<long long>(g.edge_count()) < m) {
    const int u = static_cast<int>(rng_below(rng, n));
    const int v = static_cast<int>(rng_below(rng, n));
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Pseudo random planar: random stacked maximal planar triangulation, uniform
// edge subsample of floor(dn/2) edges, connectivity repaired by re-adding
// uniformly chosen deleted edges that join two components (still a subgraph
// of the triangulation, hence planar). Retries up to 100 times for a K4-free
// result, keeping the 100th attempt otherwise.
// ---------------------------------------------------------------------------
namespace detail {

inline std::vector<std::pair<int, int>> stacked_triangulation_edges(
    int n, std::mt19937_64& rng) {
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    const std::size_t f = rng_below(rng, faces.size());
    const auto [a, b, c] = faces[f];
    faces[f] = {v, a, b};
    faces.push_back({v, b, c});
    faces.push_back({v, a, c});
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
  }
  return edges;
}

inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.next_id(), -1);
  int next = 0;
  for (int start : g.vertices()) {
    if (label[start] != -1) continue;
    const int c = next++;
    label[start] = c;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (label[w] == -1) {
          label[w] = c;
          stack.push_back(w);
        }
    }
  }
  return label;
}

}  // namespace detail

inline Graph gen_pseudo_planar(int n, double d, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_pseudo_planar: n < 3");
  if (d < 2.0 || d > 6.0 - 12.0 / n + 1e-12)
    throw std::invalid_argument("gen_pseudo_planar: d outside [2, 6-12/n]");
  const std::size_t target_m = static_cast<std::size_t>(std::floor(d * n / 2.0));
  std::mt19937_64 rng(seed);

  Graph last;
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto all_edges = detail::stacked_triangulation_edges(n, rng);
    // partial Fisher-Yates: first target_m entries are a uniform subset
    for (std::size_t i = 0; i < target_m; ++i) {
      const std::size_t j = i + rng_below(rng, all_edges.size() - i);
      std::swap(all_edges[i], all_edges[j]);
    }
    Graph g = Graph::with_vertices(n);
    for (std::size_t i = 0; i < target_m; ++i)
      g.add_edge(all_edges[i].first, all_edges[i].second);

    while (!g.connected()) {
      const auto label = detail::component_labels(g);
      std::vector<std::pair<int, int>> joining;
      for (std::size_t i = target_m; i < all_edges.size(); ++i) {
        const auto [u, v] = all_edges[i];
        if (label[u] != label[v] && !g.has_edge(u, v)) joining.emplace_back(u, v);
      }
      if (joining.empty())
        throw GeneratorError("gen_pseudo_planar: cannot reconnect");
      const auto [u, v] = joining[rng_below(rng, joining.size())];
      g.add_edge(u, v);
    }
    if (!contains_k4(g)) return g;
    last = std::move(g);
  }
  return last;
}

// ---------------------------------------------------------------------------
// Random 4-regular planar graphs, grown from the octahedron by local
// expansions that each keep the graph simple, planar, connected and
// 4-regular. The four probability slots drive:
//   a: +1 vertex  — two disjoint edges on a face replaced by a degree-4 hub
//   b: +2 vertices — three disjoint edges on a face rewired to a joined pair
//   c: +5 vertices — two disjoint edges on a face rewired through a 4-wheel
//   f: +6 vertices — one edge rerouted through an octahedron-minus-edge
// Only f applies to a triangulation (the octahedron), so it always remains
// available as the fallback.
// ---------------------------------------------------------------------------
namespace detail {

inline Graph octahedron_graph() {
  // K_{2,2,2}: complement of a perfect matching on 6 vertices
  Graph g = Graph::with_vertices(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u % 2 == 0 && v == u + 1)) g.add_edge(u, v);
  return g;
}

// edges of one face walk, in cyclic order
inline std::vector<std::pair<int, int>> face_edges(const std::vector<int>& walk) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < walk.size(); ++i)
    out.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
  return out;
}

inline bool disjoint(std::pair<int, int> e, std::pair<int, int> f) {
  return e.first != f.first && e.first != f.second && e.second != f.first &&
         e.second != f.second;
}

struct FacePair {
  std::pair<int, int> e1, e2;
};

inline std::vector<FacePair> disjoint_pairs_on_faces(const PlanarEmbedding& emb) {
  std::vector<FacePair> out;
  for (const auto& walk : emb.faces) {
    const auto es = face_edges(walk);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (disjoint(es[i], es[j])) out.push_back({es[i], es[j]});
  }
  return out;
}

// op a: remove two vertex-disjoint face edges, add one hub joined to all four
// endpoints inside the face
inline bool expand_hub(Graph& g, const PlanarEmbedding& emb, std::mt19937_64& rng) {
  auto cands = disjoint_pairs_on_faces(emb);
  if (cands.empty()) return false;
  const auto [e1, e2] = cands[rng_below(rng, cands.size())];
  g.remove_edge(e1.first, e1.second);
  g.remove_edge(e2.first, e2.second);
  const int z = g.add_vertex();
  g.add_edge(z, e1.first);
  g.add_edge(z, e1.second);
  g.add_edge(z, e2.first);
  g.add_edge(z, e2.second);
  return true;
}

// op b: remove three pairwise disjoint face edges; add adjacent x, y, each
// wired to a contiguous arc of the freed endpoint slots
inline bool expand_pair(Graph& g, const PlanarEmbedding& emb, std::mt19937_64& rng) {
  struct Triple {
    std::array<std::pair<int, int>, 3> es;
  };
  std::vector<Triple> cands;
  for (const auto& walk : emb.faces) {
    const auto es = face_edges(walk);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (!disjoint(es[i], es[j])) continue;
        for (std::size_t k = j + 1; k < es.size(); ++k)
          if (disjoint(es[i], es[k]) && disjoint(es[j], es[k]))
            cands.push_back({{es[i], es[j], es[k]}});
      }
  }
  if (cands.empty()) return false;
  const auto [es] = cands[rng_below(rng, cands.size())];
  for (const auto& e : es) g.remove_edge(e.first, e.second);
  const int x = g.add_vertex();
  const int y = g.add_vertex();
  g.add_edge(x, y);
  // cyclic endpoint slots: u1 v1 u2 v2 u3 v3; x takes v1,u2,v2 and y the rest
  g.add_edge(x, es[0].second);
  g.add_edge(x, es[1].first);
  g.add_edge(x, es[1].second);
  g.add_edge(y, es[2].first);
  g.add_edge(y, es[2].second);
  g.add_edge(y, es[0].first);
  return true;
}

// op c: remove two vertex-disjoint face edges, insert a 4-wheel whose rim
// attaches to the endpoints in face order
inline bool expand_wheel(Graph& g, const PlanarEmbedding& emb, std::mt19937_64& rng) {
  auto cands = disjoint_pairs_on_faces(emb);
  if (cands.empty()) return false;
  const auto [e1, e2] = cands[rng_below(rng, cands.size())];
  g.remove_edge(e1.first, e1.second);
  g.remove_edge(e2.first, e2.second);
  const int hub = g.add_vertex();
  std::array<int, 4> rim{};
  for (auto& r : rim) r = g.add_vertex();
  for (int i = 0; i < 4; ++i) {
    g.add_edge(rim[i], rim[(i + 1) % 4]);
    g.add_edge(hub, rim[i]);
  }
  // attachments follow the cyclic slot order e1.first, e1.second, e2.first, e2.second
  g.add_edge(rim[0], e1.first);
  g.add_edge(rim[1], e1.second);
  g.add_edge(rim[2], e2.first);
  g.add_edge(rim[3], e2.second);
  return true;
}

// op f: remove one edge and reroute it through an octahedron minus an edge,
// whose two degree-3 ports pick up the freed endpoints
inline bool expand_octahedron(Graph& g, std::mt19937_64& rng) {
  const auto es = g.edges();
  if (es.empty()) return false;
  const auto [a, b] = es[rng_below(rng, es.size())];
  g.remove_edge(a, b);
  std::array<int, 6> o{};
  for (auto& v : o) v = g.add_vertex();
  // octahedron on o[0..5]: parts {0,1},{2,3},{4,5}
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(i % 2 == 0 && j == i + 1)) g.add_edge(o[i], o[j]);
  g.remove_edge(o[0], o[2]);  // ports o[0], o[2] now have degree 3
  g.add_edge(a, o[0]);
  g.add_edge(b, o[2]);
  return true;
}

}  // namespace detail

inline Graph gen_4regular_planar(int n, const FourRegularProbs& probs,
                                 std::uint64_t seed) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("gen_4regular_planar: need even n >= 6");
  const double sum = probs.a + probs.b + probs.c + probs.f;
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("gen_4regular_planar: probabilities must sum to 1");
  std::mt19937_64 rng(seed);
  Graph g = detail::octahedron_graph();

  while (g.vertex_count() < n) {
    auto emb = is_planar(g);
    if (!emb) throw GeneratorError("gen_4regular_planar: lost planarity");
    const double roll = rng_unit(rng);
    int op = roll < probs.a                       ? 0
             : roll < probs.a + probs.b           ? 1
             : roll < probs.a + probs.b + probs.c ? 2
                                                  : 3;
    bool done = false;
    for (int tries = 0; tries < 4 && !done; ++tries, op = (op + 1) % 4) {
      switch (op) {
        case 0: done = detail::expand_hub(g, *emb, rng); break;
        case 1: done = detail::expand_pair(g, *emb, rng); break;
        case 2: done = detail::expand_wheel(g, *emb, rng); break;
        default: done = detail::expand_octahedron(g, rng); break;
      }
    }
    if (!done) throw GeneratorError("gen_4regular_planar: no applicable expansion");
  }

  for (int v : g.vertices())
    if (g.degree(v) != 4)
      throw GeneratorError("gen_4regular_planar: degree check failed");
  if (!g.connected()) throw GeneratorError("gen_4regular_planar: disconnected");
  if (!is_planar(g)) throw GeneratorError("gen_4regular_planar: non-planar");
  return g;
}

inline Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case GenModel::pseudo_planar:
      return gen_pseudo_planar(spec.n, spec.avg_degree, spec.seed);
    case GenModel::planar_4regular:
      return gen_4regular_planar(spec.n, spec.op_probs, spec.seed);
    default:
      return gen_er_connected(spec.n, spec.avg_degree, spec.seed);
  }
}

}  // namespace trichrome
