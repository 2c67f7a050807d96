#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "trichrome/graph.hpp"

namespace trichrome {

/// Combinatorial embedding: per-vertex cyclic neighbor order plus the face
/// walks traced from it. For a connected planar graph Euler's formula
/// |V| - |E| + |F| = 2 holds; each directed edge lies on exactly one face,
/// so a bridge borders its face twice.
struct PlanarEmbedding {
  std::map<int, std::vector<int>> rotation;   // vertex -> neighbors in cyclic order
  std::vector<std::vector<int>> faces;        // each face as its vertex walk

  std::size_t face_count() const { return faces.size(); }
};

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>>;

// Face tracing: from directed edge (u, v), the next edge is (v, w) where w
// follows u in the rotation at v. Every directed edge is visited once.
inline std::vector<std::vector<int>> trace_faces(
    const std::map<int, std::vector<int>>& rotation) {
  std::map<std::pair<int, int>, char> used;
  std::vector<std::vector<int>> faces;
  std::vector<std::pair<int, int>> darts;
  for (const auto& [v, ring] : rotation)
    for (int w : ring) darts.emplace_back(v, w);
  std::sort(darts.begin(), darts.end());
  for (auto dart : darts) {
    if (used.count(dart)) continue;
    std::vector<int> walk;
    auto [u, v] = dart;
    while (!used.count({u, v})) {
      used[{u, v}] = 1;
      walk.push_back(u);
      const auto& ring = rotation.at(v);
      auto it = std::find(ring.begin(), ring.end(), u);
      assert(it != ring.end());
      ++it;
      if (it == ring.end()) it = ring.begin();
      int w = *it;
      u = v;
      v = w;
    }
    faces.push_back(std::move(walk));
  }
  return faces;
}

inline std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.next_id(), 0);
  std::size_t comps = 0;
  for (int start : g.vertices()) {
    if (seen[start]) continue;
    ++comps;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace detail

/// Boyer–Myrvold planarity test; on success the extracted rotation system
/// and face list. Isolated vertices get an empty rotation (and no face of
/// their own), so the Euler bookkeeping below skips them.
inline std::optional<PlanarEmbedding> is_planar(const Graph& g) {
  const auto& vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::map<int, int> to_dense;
  for (int i = 0; i < n; ++i) to_dense[vs[i]] = i;

  detail::BoostGraph bg(n);
  for (auto [u, v] : g.edges())
    boost::add_edge(to_dense[u], to_dense[v], bg);

  using Edge = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> storage(n);
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = bg,
          boost::boyer_myrvold_params::embedding = storage.data()))
    return std::nullopt;

  PlanarEmbedding emb;
  for (int i = 0; i < n; ++i) {
    auto& ring = emb.rotation[vs[i]];
    for (Edge e : storage[i]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      ring.push_back(vs[a == i ? b : a]);
    }
  }
  emb.faces = detail::trace_faces(emb.rotation);

  // Euler check over non-isolated vertices; every extra component adds 2
  // because face tracing counts its outer face separately.
  long nv = 0;
  long comps = 0;
  {
    std::vector<char> seen(g.next_id(), 0);
    for (int start : g.vertices()) {
      if (g.degree(start) == 0) continue;
      ++nv;
      if (seen[start]) continue;
      ++comps;
      std::vector<int> stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
  }
  if (nv > 0) {
    const long euler = nv - static_cast<long>(g.edge_count()) +
                       static_cast<long>(emb.faces.size());
    assert(euler == 2 * comps);
    (void)euler;
    (void)comps;
  }
  return emb;
}

/// Exactly the non-edges uv for which g + uv stays planar. Each candidate is
/// re-tested; quadratic but exact, which is what the small-n callers need.
inline std::vector<std::pair<int, int>> planar_preserving_nonedges(const Graph& g) {
  if (!is_planar(g)) throw std::invalid_argument("planar_preserving_nonedges: non-planar input");
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : non_edges(g)) {
    Graph h = g;
    h.add_edge(u, v);
    if (is_planar(h)) out.emplace_back(u, v);
  }
  return out;
}

/// True iff every face (outer included) is a triangle; equivalently
/// m = 3n - 6 for a connected simple planar graph with n >= 3.
inline bool is_planar_triangulation(const Graph& g, const PlanarEmbedding& emb) {
  if (g.vertex_count() < 3) return false;
  for (const auto& f : emb.faces)
    if (f.size() != 3) return false;
  return !emb.faces.empty();
}

/// 3-coloring of an even planar triangulation by forced propagation: fix one
/// face's colors, then walk face-adjacent triangles, each shared edge forcing
/// the opposite vertex. An odd-degree vertex means no 3-coloring and yields
/// nullopt. The propagated coloring is checked before returning.
inline std::optional<std::map<int, int>> color_even_triangulation(
    const Graph& g, const PlanarEmbedding& emb) {
  if (!is_planar_triangulation(g, emb))
    throw std::invalid_argument("color_even_triangulation: not a triangulation");
  for (int v : g.vertices())
    if (g.degree(v) % 2 != 0) return std::nullopt;

  // dual adjacency via shared directed edges: face containing dart (u,v)
  // borders the face containing (v,u)
  std::map<std::pair<int, int>, int> dart_face;
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    const auto& walk = emb.faces[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int u = walk[i], v = walk[(i + 1) % walk.size()];
      dart_face[{u, v}] = static_cast<int>(f);
    }
  }

  std::map<int, int> color;
  const auto& seed = emb.faces.front();
  color[seed[0]] = 0;
  color[seed[1]] = 1;
  color[seed[2]] = 2;

  // invariant: a face is enqueued only once it is fully colored
  std::vector<char> visited(emb.faces.size(), 0);
  std::vector<int> queue{0};
  visited[0] = 1;
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    const auto& walk = emb.faces[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int u = walk[i], v = walk[(i + 1) % walk.size()];
      auto twin = dart_face.find({v, u});
      assert(twin != dart_face.end());
      if (visited[twin->second]) continue;
      const int cu = color.at(u), cv = color.at(v);
      if (cu == cv) return std::nullopt;
      const int forced = 3 - cu - cv;
      const auto& tw = emb.faces[twin->second];
      for (int x : tw) {
        if (x == u || x == v) continue;
        auto cx = color.find(x);
        if (cx == color.end())
          color[x] = forced;
        else if (cx->second != forced)
          return std::nullopt;  // Heawood rules this out on even degrees
      }
      visited[twin->second] = 1;
      queue.push_back(twin->second);
    }
  }

  if (color.size() != static_cast<std::size_t>(g.vertex_count()))
    return std::nullopt;  // disconnected triangulation cannot occur
  for (auto [u, v] : g.edges())
    if (color.at(u) == color.at(v)) return std::nullopt;
  return color;
}

}  // namespace trichrome
