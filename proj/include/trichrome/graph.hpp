#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace trichrome {

/// Simple undirected graph with stable vertex ids.
///
/// Contraction retires both endpoints and gives the merged vertex a fresh id
/// (`next_id`), so certificates can name vertices unambiguously across steps:
/// replaying the same mutation sequence on an equal graph allocates the same
/// ids. Ids are dense small integers; dead slots are kept so old ids never
/// get reused.
class Graph {
 public:
  Graph() = default;

  static Graph with_vertices(int n) {
    Graph g;
    g.adj_.resize(n);
    g.live_.assign(n, 1);
    g.verts_.resize(n);
    for (int i = 0; i < n; ++i) g.verts_[i] = i;
    g.next_id_ = n;
    return g;
  }

  /// Edgeless graph whose live vertices are exactly `ids`; slots below
  /// `next_id` that are not listed start out dead (used for subgraphs that
  /// keep the parent's ids).
  static Graph with_vertex_ids(const std::vector<int>& ids, int next_id) {
    Graph g;
    g.adj_.resize(next_id);
    g.live_.assign(next_id, 0);
    g.next_id_ = next_id;
    g.verts_ = ids;
    std::sort(g.verts_.begin(), g.verts_.end());
    for (int v : g.verts_) {
      if (v < 0 || v >= next_id || g.live_[v])
        throw std::invalid_argument("with_vertex_ids: bad or duplicate id");
      g.live_[v] = 1;
    }
    return g;
  }

  int add_vertex() {
    const int id = next_id_++;
    adj_.emplace_back();
    live_.push_back(1);
    verts_.insert(std::lower_bound(verts_.begin(), verts_.end(), id), id);
    return id;
  }

  bool has_vertex(int v) const {
    return v >= 0 && v < next_id_ && live_[v];
  }

  bool has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: loop " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
      throw std::invalid_argument("add_edge: dead or unknown endpoint");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++m_;
    assert(simple());
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: no such edge");
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --m_;
  }

  /// Identify non-adjacent vertices u and v. The survivor gets a fresh id and
  /// the neighborhood N(u) ∪ N(v); duplicate edges collapse. Returns the
  /// survivor id.
  int contract(int u, int v) {
    if (u == v) throw std::invalid_argument("contract: identical vertices");
    if (!has_vertex(u) || !has_vertex(v))
      throw std::invalid_argument("contract: dead or unknown vertex");
    if (has_edge(u, v)) throw std::invalid_argument("contract: adjacent vertices");
    std::vector<int> merged;
    merged.reserve(adj_[u].size() + adj_[v].size());
    std::set_union(adj_[u].begin(), adj_[u].end(), adj_[v].begin(),
                   adj_[v].end(), std::back_inserter(merged));
    const int s = add_vertex();
    m_ -= adj_[u].size() + adj_[v].size();
    for (int x : merged) {
      auto& ax = adj_[x];
      if (auto it = std::lower_bound(ax.begin(), ax.end(), u);
          it != ax.end() && *it == u)
        ax.erase(it);
      if (auto it = std::lower_bound(ax.begin(), ax.end(), v);
          it != ax.end() && *it == v)
        ax.erase(it);
      insert_sorted(ax, s);
    }
    adj_[s] = std::move(merged);
    m_ += adj_[s].size();
    kill(u);
    kill(v);
    assert(simple());
    return s;
  }

  const std::vector<int>& vertices() const { return verts_; }

  const std::vector<int>& neighbors(int v) const {
    assert(has_vertex(v));
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  std::size_t edge_count() const { return m_; }
  int next_id() const { return next_id_; }

  /// All edges as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u : verts_)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    const std::size_t n = verts_.size();
    return m_ == n * (n - 1) / 2;
  }

  bool connected() const {
    if (verts_.empty()) return true;
    std::vector<char> seen(next_id_, 0);
    std::vector<int> stack{verts_[0]};
    seen[verts_[0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return count == verts_.size();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.verts_ != b.verts_) return false;
    for (int v : a.verts_)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  static void insert_sorted(std::vector<int>& v, int x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }
  static void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    assert(it != v.end() && *it == x);
    v.erase(it);
  }
  void kill(int v) {
    live_[v] = 0;
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    erase_sorted(verts_, v);
  }

  bool simple() const {  // debug invariant: no loops, no duplicates, symmetric
    std::size_t half_edges = 0;
    for (int u : verts_) {
      int prev = -1;
      for (int v : adj_[u]) {
        if (v == u || v == prev || !has_vertex(v)) return false;
        if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u)) return false;
        prev = v;
        ++half_edges;
      }
    }
    return half_edges == 2 * m_;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<char> live_;
  std::vector<int> verts_;
  std::size_t m_ = 0;
  int next_id_ = 0;
};

/// Partition of the original vertices into super-vertex classes. Keys track
/// the live vertices of the graph the partition travels with; a class lists
/// the original vertices absorbed into that super-vertex.
class MergePartition {
 public:
  static MergePartition identity(const Graph& g) {
    MergePartition p;
    for (int v : g.vertices()) p.classes_[v] = {v};
    return p;
  }

  void merge(int u, int v, int survivor) {
    auto iu = classes_.find(u), iv = classes_.find(v);
    if (iu == classes_.end() || iv == classes_.end())
      throw std::invalid_argument("merge: unknown class");
    std::vector<int> joined;
    joined.reserve(iu->second.size() + iv->second.size());
    std::set_union(iu->second.begin(), iu->second.end(), iv->second.begin(),
                   iv->second.end(), std::back_inserter(joined));
    classes_.erase(iu);
    classes_.erase(iv);
    classes_[survivor] = std::move(joined);
  }

  const std::map<int, std::vector<int>>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }

  /// Keys equal the graph's vertex set and classes partition `originals`.
  bool consistent_with(const Graph& g, const std::vector<int>& originals) const {
    std::vector<int> keys;
    keys.reserve(classes_.size());
    std::vector<int> all;
    for (const auto& [k, members] : classes_) {
      keys.push_back(k);
      all.insert(all.end(), members.begin(), members.end());
    }
    if (keys != g.vertices()) return false;
    std::sort(all.begin(), all.end());
    std::vector<int> sorted_orig = originals;
    std::sort(sorted_orig.begin(), sorted_orig.end());
    return all == sorted_orig;
  }

 private:
  std::map<int, std::vector<int>> classes_;
};

/// Contract u,v in g and keep the partition in step. Returns the survivor id.
inline int contract(Graph& g, MergePartition& p, int u, int v) {
  const int s = g.contract(u, v);
  p.merge(u, v, s);
  return s;
}

/// K4 minus one edge: pair (u, v) non-adjacent, spine (z, w) adjacent, both
/// spine vertices adjacent to both pair vertices. Any proper 3-coloring of
/// the witness subgraph forces u and v to the same color.
struct DiamondWitness {
  int u, v;  // pair, u < v
  int z, w;  // spine, z < w
};

/// Triangle (x, y, z) with a tail w attached at z; xw and yw are non-edges.
/// Adding both xw and yw would complete a K4, so in any 3-coloring w takes
/// the color of x or of y.
struct TadpoleWitness {
  int x, y, z, w;
};

inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  std::vector<int> out;
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

/// First diamond witness in scan order: edges (z, w) ascending, then pair
/// candidates from the common neighborhood ascending. One scan is O(m·n).
inline std::optional<DiamondWitness> find_diamond(const Graph& g) {
  for (int z : g.vertices()) {
    for (int w : g.neighbors(z)) {
      if (w < z) continue;
      const auto common = common_neighbors(g, z, w);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!g.has_edge(common[i], common[j]))
            return DiamondWitness{common[i], common[j], z, w};
    }
  }
  return std::nullopt;
}

/// Four mutually adjacent vertices, or none. Deterministic first hit.
inline std::optional<std::array<int, 4>> contains_k4(const Graph& g) {
  for (int a : g.vertices()) {
    for (int b : g.neighbors(a)) {
      if (b < a) continue;
      const auto common = common_neighbors(g, a, b);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (g.has_edge(common[i], common[j]))
            return std::array<int, 4>{a, b, common[i], common[j]};
    }
  }
  return std::nullopt;
}

/// K4 that uses the edge (u, v), if any: two adjacent common neighbors.
inline std::optional<std::array<int, 4>> k4_using_edge(const Graph& g, int u,
                                                       int v) {
  const auto common = common_neighbors(g, u, v);
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (g.has_edge(common[i], common[j]))
        return std::array<int, 4>{u, v, common[i], common[j]};
  return std::nullopt;
}

/// K4 through vertex s, if any. After a mutation every new edge is incident
/// to the survivor, so checking around s is enough to notice a fresh K4.
inline std::optional<std::array<int, 4>> k4_through(const Graph& g, int s) {
  const auto& ns = g.neighbors(s);
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      if (!g.has_edge(ns[i], ns[j])) continue;
      for (int c : common_neighbors(g, ns[i], ns[j]))
        if (c != s && g.has_edge(s, c))
          return std::array<int, 4>{s, ns[i], ns[j], c};
    }
  return std::nullopt;
}

namespace detail {

inline void emit_spine_pairs(const Graph& g, int z, int w,
                             std::vector<DiamondWitness>& out) {
  const auto common = common_neighbors(g, z, w);
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (!g.has_edge(common[i], common[j]))
        out.push_back({common[i], common[j], std::min(z, w), std::max(z, w)});
}

}  // namespace detail

/// All diamond witnesses, normalized (u < v, z < w).
inline std::vector<DiamondWitness> find_diamonds_all(const Graph& g) {
  std::vector<DiamondWitness> out;
  for (int z : g.vertices())
    for (int w : g.neighbors(z)) {
      if (w < z) continue;
      detail::emit_spine_pairs(g, z, w, out);
    }
  return out;
}

/// Diamond witnesses that use the edge ab in any role. The adjacency of a
/// and b themselves is never queried, so this works whether or not the edge
/// is already present; if g minus ab is witness-free, the result covers
/// every witness of g plus ab.
inline void append_diamonds_with_edge(const Graph& g, int a, int b,
                                      std::vector<DiamondWitness>& out) {
  detail::emit_spine_pairs(g, a, b, out);  // ab as the spine
  // ab as a pair-spine wing: pair vertex a with spine (b, w), and symmetric
  for (int w : common_neighbors(g, a, b)) {
    for (int v : common_neighbors(g, b, w))
      if (v != a && !g.has_edge(a, v))
        out.push_back({std::min(a, v), std::max(a, v), std::min(b, w),
                       std::max(b, w)});
    for (int v : common_neighbors(g, a, w))
      if (v != b && !g.has_edge(b, v))
        out.push_back({std::min(b, v), std::max(b, v), std::min(a, w),
                       std::max(a, w)});
  }
}

/// Diamond witnesses containing vertex s in any role. After a contraction
/// with survivor s, every witness not already present before the contraction
/// contains s.
inline void append_diamonds_through(const Graph& g, int s,
                                    std::vector<DiamondWitness>& out) {
  const auto& ns = g.neighbors(s);
  for (int w : ns) detail::emit_spine_pairs(g, s, w, out);
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      const int z = ns[i], w = ns[j];
      if (!g.has_edge(z, w)) continue;
      for (int v : common_neighbors(g, z, w))
        if (v != s && !g.has_edge(s, v))
          out.push_back({std::min(s, v), std::max(s, v), z, w});
    }
}

/// Would adding the (absent) edge ab create a diamond witness? Assumes g
/// itself is witness-free, so only witnesses through ab can appear; no copy
/// of g is made.
inline bool edge_creates_diamond(const Graph& g, int a, int b) {
  const auto common = common_neighbors(g, a, b);
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (!g.has_edge(common[i], common[j])) return true;
  for (int w : common) {
    for (int v : common_neighbors(g, b, w))
      if (v != a && !g.has_edge(a, v)) return true;
    for (int v : common_neighbors(g, a, w))
      if (v != b && !g.has_edge(b, v)) return true;
  }
  return false;
}

/// Work pool for diamond exhaustion. Seeded with a superset of the current
/// witnesses and refreshed with survivor-local witnesses after each
/// contraction, it hands out exactly the witness canonical full scans would
/// find first, without rescanning the whole graph every round.
class DiamondPool {
 public:
  static DiamondPool full(const Graph& g) {
    DiamondPool p;
    p.pool_ = find_diamonds_all(g);
    return p;
  }
  static DiamondPool seeded_edge(const Graph& g, int a, int b) {
    DiamondPool p;
    append_diamonds_with_edge(g, a, b, p.pool_);
    return p;
  }
  static DiamondPool seeded_vertex(const Graph& g, int s) {
    DiamondPool p;
    append_diamonds_through(g, s, p.pool_);
    return p;
  }

  void note_survivor(const Graph& g, int s) {
    append_diamonds_through(g, s, pool_);
  }

  /// Canonical-first valid witness: same (z, w, u, v) order as find_diamond.
  std::optional<DiamondWitness> first(const Graph& g) {
    std::size_t keep = 0;
    std::optional<DiamondWitness> best;
    auto key = [](const DiamondWitness& d) { return std::tuple(d.z, d.w, d.u, d.v); };
    for (const auto& d : pool_) {
      if (!g.has_vertex(d.u) || !g.has_vertex(d.v) || !g.has_vertex(d.z) ||
          !g.has_vertex(d.w))
        continue;
      if (g.has_edge(d.u, d.v) || !g.has_edge(d.z, d.w) ||
          !g.has_edge(d.u, d.z) || !g.has_edge(d.u, d.w) ||
          !g.has_edge(d.v, d.z) || !g.has_edge(d.v, d.w))
        continue;
      pool_[keep++] = d;
      if (!best || key(d) < key(*best)) best = d;
    }
    pool_.resize(keep);
    return best;
  }

 private:
  std::vector<DiamondWitness> pool_;
};

/// All tadpole witnesses, ordered by the pair under test (x, w) ascending,
/// then by the full tuple. Both (x, y) orientations of each subgraph are
/// yielded: testing x,w and testing y,w are distinct probes.
inline std::vector<TadpoleWitness> find_tadpoles(const Graph& g) {
  std::vector<TadpoleWitness> out;
  for (int z : g.vertices()) {
    const auto& nz = g.neighbors(z);
    for (std::size_t i = 0; i < nz.size(); ++i)
      for (std::size_t j = i + 1; j < nz.size(); ++j) {
        const int a = nz[i], b = nz[j];
        if (!g.has_edge(a, b)) continue;
        for (int w : nz) {
          if (w == a || w == b || g.has_edge(w, a) || g.has_edge(w, b)) continue;
          out.push_back({a, b, z, w});
          out.push_back({b, a, z, w});
        }
      }
  }
  auto key = [](const TadpoleWitness& t) {
    return std::tuple(std::min(t.x, t.w), std::max(t.x, t.w), t.x, t.y, t.z, t.w);
  };
  std::sort(out.begin(), out.end(),
            [&](const TadpoleWitness& a, const TadpoleWitness& b) {
              return key(a) < key(b);
            });
  return out;
}

/// All non-adjacent unordered pairs, ascending. Count is C(n,2) - m.
inline std::vector<std::pair<int, int>> non_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
  return out;
}

/// Subgraph induced by `ids` (must be live); vertex ids are preserved.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& ids) {
  for (int v : ids)
    if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: bad id");
  Graph out = Graph::with_vertex_ids(ids, g.next_id());
  for (int v : ids)
    for (int w : g.neighbors(v))
      if (v < w && out.has_vertex(w)) out.add_edge(v, w);
  return out;
}

inline Graph induced_neighborhood(const Graph& g, int u) {
  return induced_subgraph(g, g.neighbors(u));
}

/// Proper 2-colorability over every component.
inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.next_id(), -1);
  for (int start : g.vertices()) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace trichrome
