#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

/// Exact 3-colorability by exhaustive backtracking, guarded to n <= 16.
/// Symmetry is cut by pre-coloring the first triangle found (or, lacking
/// one, by never opening more than one fresh color at a time).
inline std::optional<std::map<int, int>> exhaustive_3col(const Graph& g) {
  if (g.vertex_count() > 16)
    throw std::invalid_argument("exhaustive_3col: n > 16");
  const auto& vs = g.vertices();
  std::vector<int> order;
  std::map<int, int> color;

  // first triangle, scan order
  for (std::size_t i = 0; i < vs.size() && order.empty(); ++i)
    for (int b : g.neighbors(vs[i])) {
      if (b < vs[i]) continue;
      for (int c : common_neighbors(g, vs[i], b)) {
        if (c < b) continue;
        order = {vs[i], b, c};
        break;
      }
      if (!order.empty()) break;
    }
  for (int v : vs)
    if (std::find(order.begin(), order.end(), v) == order.end())
      order.push_back(v);

  std::size_t fixed = 0;
  if (order.size() >= 3 && g.has_edge(order[0], order[1]) &&
      g.has_edge(order[1], order[2]) && g.has_edge(order[0], order[2])) {
    color[order[0]] = 0;
    color[order[1]] = 1;
    color[order[2]] = 2;
    fixed = 3;
  }

  auto assign = [&](auto&& self, std::size_t idx, int used) -> bool {
    if (idx == order.size()) return true;
    const int v = order[idx];
    const int cap = std::min(2, used);  // at most one fresh color at a time
    for (int c = 0; c <= cap; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it != color.end() && it->second == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color.erase(v);
    }
    return false;
  };
  if (!assign(assign, fixed, fixed == 3 ? 3 : 0)) return std::nullopt;
  return color;
}

struct BacktrackResult {
  std::optional<std::map<int, int>> coloring;
  long long nodes = 0;
  bool capped = false;  // node cap hit: result is unknown, not "none"
};

/// Exact DFS 3-coloring baseline: most-constrained vertex first (fewest
/// remaining colors, then highest degree), forward checking on the
/// neighbors, fresh colors opened canonically. Counts every assignment as a
/// search node.
inline BacktrackResult backtrack_3col(const Graph& g,
                                      long long node_cap = 1LL << 62) {
  BacktrackResult res;
  const int cap_id = g.next_id();
  std::vector<int> color(cap_id, -1);
  std::vector<std::array<int, 3>> conflicts(cap_id, {0, 0, 0});
  std::vector<char> live(cap_id, 0);
  for (int v : g.vertices()) live[v] = 1;
  int uncolored = g.vertex_count();

  auto allowed = [&](int v) {
    int k = 0;
    for (int c = 0; c < 3; ++c)
      if (conflicts[v][c] == 0) ++k;
    return k;
  };

  auto dfs = [&](auto&& self, int used) -> int {  // 1 found, 0 none, -1 capped
    if (uncolored == 0) return 1;
    int pick = -1, pick_allowed = 4;
    for (int v : g.vertices()) {
      if (color[v] != -1) continue;
      const int a = allowed(v);
      if (a == 0) return 0;
      if (a < pick_allowed ||
          (a == pick_allowed && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_allowed = a;
      }
    }
    for (int c = 0; c < std::min(3, used + 1); ++c) {
      if (conflicts[pick][c] != 0) continue;
      if (++res.nodes > node_cap) {
        res.capped = true;
        return -1;
      }
      color[pick] = c;
      --uncolored;
      bool dead = false;
      for (int w : g.neighbors(pick)) {
        if (++conflicts[w][c] == 1 && color[w] == -1 && allowed(w) == 0)
          dead = true;
      }
      if (!dead) {
        const int r = self(self, std::max(used, c + 1));
        if (r != 0) return r;
      }
      for (int w : g.neighbors(pick)) --conflicts[w][c];
      color[pick] = -1;
      ++uncolored;
    }
    return 0;
  };

  const int r = g.vertex_count() == 0 ? 1 : dfs(dfs, 0);
  if (r == 1) {
    std::map<int, int> out;
    for (int v : g.vertices()) out[v] = std::max(color[v], 0);
    res.coloring = std::move(out);
  }
  return res;
}

}  // namespace trichrome
