#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trichrome/certificate.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/planarity.hpp"
#include "trichrome/rng.hpp"

namespace trichrome {

enum class SolveMode { general, planar, improved };

inline const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::general: return "general";
    case SolveMode::planar: return "planar";
    default: return "improved";
  }
}

struct SolveConfig {
  int alpha = 0;
  int alpha_max = 6;
  SolveMode mode = SolveMode::improved;
  std::uint64_t rng_seed = 0;
};

/// Minimal budget at which the auto loop got a determinate verdict under the
/// canonical vertex ordering. `exceeded` marks a capped-out run; value is
/// then alpha_max + 1.
struct ObservedAlpha {
  int value = 0;
  bool exceeded = false;
};

/// Instrumentation shared across one solve. The envelope counters audit the
/// two complexity bounds: per-call contraction rounds vs C(n,2), and subtree
/// decision-call count at budget k vs C(n,2)^(k+1) (compared in log space).
struct SolveStats {
  long long decision_calls = 0;
  long long contractions = 0;
  int max_depth = 0;
  long long envelope_checks = 0;
  long long envelope_violations = 0;
  long long round_violations = 0;
  double max_envelope_ratio = 0.0;
  long long planarity_checks = 0;
  long long planarity_violations = 0;
  long long odd_triangulation_bailouts = 0;
};

namespace detail {

inline ColoringCertificate coloring_from(const MergePartition& part) {
  ColoringCertificate cert;
  for (const auto& [key, members] : part.classes()) cert.classes.push_back(members);
  return cert;
}

/// Decision routine. General mode scans every non-edge at step 5; planar
/// mode scans tadpole witnesses instead and tracks planarity of every
/// intermediate graph. Nested calls always use the general routine: the
/// probe graph g/xw need not stay planar.
///
/// Callers supply the entry K4 check and a DiamondPool that covers every
/// current witness; step-5 probes seed both locally (the parent graph is
/// witness- and K4-free at that point), which is what keeps deep budgets
/// affordable. `part` may be null for probe calls whose Yes payload nobody
/// reads; certificates never need it.
inline SolverOutcome decide(Graph g, MergePartition* part, int alpha, int depth,
                            SolveStats& st, bool planar_mode,
                            std::optional<std::array<int, 4>> entry_k4,
                            DiamondPool pool) {
  ++st.decision_calls;
  const long long entry_calls = st.decision_calls;
  const int n_entry = g.vertex_count();
  st.max_depth = std::max(st.max_depth, depth);
  long long rounds = 0;

  auto finish = [&](SolverOutcome out) {
    if (n_entry >= 3) {
      ++st.envelope_checks;
      const double log_cn2 = std::log(0.5 * n_entry * (n_entry - 1));
      const double bound = (alpha + 1) * log_cn2;
      const long long subtree = st.decision_calls - entry_calls + 1;
      const double actual = std::log(static_cast<double>(subtree));
      if (bound > 0)
        st.max_envelope_ratio = std::max(st.max_envelope_ratio, actual / bound);
      if (actual > bound + 1e-9) ++st.envelope_violations;
      if (static_cast<double>(rounds) > 0.5 * n_entry * (n_entry - 1))
        ++st.round_violations;
    }
    return out;
  };

  auto planarity_stat = [&]() {
    if (!planar_mode) return;
    ++st.planarity_checks;
    if (!is_planar(g)) ++st.planarity_violations;
  };

  auto yes_payload = [&]() {
    return part ? coloring_from(*part) : ColoringCertificate{};
  };
  auto do_contract = [&](int u, int v) {
    const int s = part ? contract(g, *part, u, v) : g.contract(u, v);
    ++st.contractions;
    ++rounds;
    return s;
  };

  std::vector<ContractionStep> steps;

  if (g.vertex_count() == 0)
    return finish(SolverOutcome::yes(ColoringCertificate{}));
  if (entry_k4) return finish(SolverOutcome::no({std::move(steps), *entry_k4}));

  while (true) {
    // step 1: contract diamond pairs until none remain, or K4 shows up
    while (auto dw = pool.first(g)) {
      const int s = do_contract(dw->u, dw->v);
      steps.push_back({dw->u, dw->v, DiamondJustification{dw->z, dw->w}});
      planarity_stat();
      if (auto k4 = k4_through(g, s))
        return finish(SolverOutcome::no({std::move(steps), *k4}));
      pool.note_survivor(g, s);
    }
    // step 2: the contraction list is now a 3-coloring
    if (g.vertex_count() <= 3 && g.is_complete())
      return finish(SolverOutcome::yes(yes_payload()));
    // step 4: out of recursion budget
    if (alpha == 0) return finish(SolverOutcome::undetermined());

    // step 5: hunt for an unavoidable contraction, then restart at step 1
    // (g is witness- and K4-free here, so probe seeds can stay local)
    bool forced = false;
    if (!planar_mode) {
      for (auto [u, v] : non_edges(g)) {
        if (alpha - 1 == 0 && g.vertex_count() > 3 &&
            !k4_using_edge(g, u, v) && !edge_creates_diamond(g, u, v))
          continue;  // the probe would idle through to undetermined
        Graph h = g;
        h.add_edge(u, v);
        auto k4 = k4_using_edge(h, u, v);
        auto sub = decide(std::move(h), nullptr, alpha - 1, depth + 1, st, false,
                          k4, DiamondPool::seeded_edge(g, u, v));
        if (sub.verdict != Verdict::no) continue;
        const int s = do_contract(u, v);
        steps.push_back(
            {u, v,
             NestedEdgeJustification{std::make_shared<const UncolorabilityCertificate>(
                 sub.uncolorability())}});
        if (auto k4s = k4_through(g, s))
          return finish(SolverOutcome::no({std::move(steps), *k4s}));
        pool.note_survivor(g, s);
        forced = true;
        break;
      }
    } else {
      for (const auto& tw : find_tadpoles(g)) {
        Graph h = g;
        const int hs = h.contract(tw.x, tw.w);
        auto hk4 = k4_through(h, hs);
        auto hpool = DiamondPool::seeded_vertex(h, hs);
        auto sub = decide(std::move(h), nullptr, alpha - 1, depth + 1, st, false,
                          hk4, std::move(hpool));
        if (sub.verdict != Verdict::no) continue;
        const int s = do_contract(tw.y, tw.w);
        steps.push_back(
            {tw.y, tw.w,
             NestedTadpoleJustification{
                 tw.x, tw.y, tw.z, tw.w,
                 std::make_shared<const UncolorabilityCertificate>(sub.uncolorability())}});
        planarity_stat();
        if (auto k4 = k4_through(g, s))
          return finish(SolverOutcome::no({std::move(steps), *k4}));
        pool.note_survivor(g, s);
        forced = true;
        break;
      }
    }
    if (!forced) return finish(SolverOutcome::undetermined());
  }
}

/// Deterministic 2-coloring of the (bipartite) induced neighborhood of u,
/// then classes = { class(u), side 0 classes, side 1 classes }.
inline ColoringCertificate lift_star_coloring(const Graph& g,
                                              const MergePartition& part, int u) {
  const Graph nb = induced_neighborhood(g, u);
  std::map<int, int> side;
  for (int start : nb.vertices()) {
    if (side.count(start)) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : nb.neighbors(v)) {
        if (!side.count(w)) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::vector<int>> classes(3);
  classes[0] = part.classes().at(u);
  for (auto [v, s] : side) {
    const auto& members = part.classes().at(v);
    auto& cls = classes[1 + s];
    cls.insert(cls.end(), members.begin(), members.end());
  }
  ColoringCertificate cert;
  for (auto& cls : classes)
    if (!cls.empty()) {
      std::sort(cls.begin(), cls.end());
      cert.classes.push_back(std::move(cls));
    }
  return cert;
}

/// First planar-preserving non-edge: scan faces in trace order and take the
/// lowest non-adjacent vertex pair on a face (additions inside a face keep
/// planarity). Falls back to a tested global non-edge, which only happens on
/// disconnected input.
inline std::optional<std::pair<int, int>> select_planar_preserving(
    const Graph& g, const PlanarEmbedding& emb) {
  for (const auto& walk : emb.faces) {
    std::vector<int> vs(walk.begin(), walk.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) return std::pair{vs[i], vs[j]};
  }
  for (auto [u, v] : non_edges(g)) {
    Graph h = g;
    h.add_edge(u, v);
    if (is_planar(h)) return std::pair{u, v};
  }
  return std::nullopt;
}

}  // namespace detail

/// Algorithm: diamond exhaustion, then recursive edge-addition probes with
/// budget alpha. Returns No with a replayable certificate, Yes with the
/// accumulated color classes, or undetermined.
inline SolverOutcome is_3_colorable(const Graph& g, int alpha,
                                    SolveStats* stats = nullptr) {
  if (alpha < 0) throw std::invalid_argument("is_3_colorable: negative alpha");
  SolveStats local;
  return detail::decide(g, MergePartition::identity(g), alpha, 0,
                        stats ? *stats : local, false);
}

/// Planar decision variant: step 5 probes tadpole witnesses only.
inline SolverOutcome is_3_colorable_planar(const Graph& g, int alpha,
                                           SolveStats* stats = nullptr) {
  if (alpha < 0) throw std::invalid_argument("is_3_colorable_planar: negative alpha");
  if (!is_planar(g))
    throw std::invalid_argument("is_3_colorable_planar: non-planar input");
  SolveStats local;
  return detail::decide(g, MergePartition::identity(g), alpha, 0,
                        stats ? *stats : local, true);
}

/// Improved coloring driver: decide uncolorability first, then grow one
/// complete vertex u, preferring non-neighbors with the smallest common
/// neighborhood and adding the edge instead whenever g/uv is proven
/// uncolorable; finishing means 2-coloring N(u).
inline SolverOutcome general_3col(const Graph& g0, int alpha,
                                  SolveStats* stats = nullptr) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  auto dec = detail::decide(g0, MergePartition::identity(g0), alpha, 0, st, false);
  if (dec.determinate()) return dec;

  Graph g = g0;
  MergePartition part = MergePartition::identity(g0);
  int u = g.vertices().front();
  for (int v : g.vertices())
    if (g.degree(v) > g.degree(u)) u = v;

  while (g.degree(u) < g.vertex_count() - 1) {
    int pick = -1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (int v : g.vertices()) {
      if (v == u || g.has_edge(u, v)) continue;
      const std::size_t c = common_neighbors(g, u, v).size();
      if (c < best) {
        best = c;
        pick = v;
      }
    }
    Graph h = g;
    MergePartition hp = part;
    const int s = contract(h, hp, u, pick);
    auto sub = detail::decide(h, hp, alpha, 0, st, false);
    if (sub.verdict == Verdict::no) {
      g.add_edge(u, pick);
      if (k4_using_edge(g, u, pick)) return SolverOutcome::undetermined();
    } else {
      g = std::move(h);
      part = std::move(hp);
      u = s;
      if (k4_through(g, u)) return SolverOutcome::undetermined();
    }
    if (!is_bipartite(induced_neighborhood(g, u)))
      return SolverOutcome::undetermined();
  }
  if (!is_bipartite(induced_neighborhood(g, u)))
    return SolverOutcome::undetermined();
  return SolverOutcome::yes(detail::lift_star_coloring(g, part, u));
}

/// Baseline coloring driver: greedy contraction of the first non-edge,
/// guarded by the decision routine. Kept for comparison runs.
inline SolverOutcome general_3col_simple(const Graph& g0, int alpha,
                                         SolveStats* stats = nullptr) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  auto dec = detail::decide(g0, MergePartition::identity(g0), alpha, 0, st, false);
  if (dec.determinate()) return dec;

  Graph g = g0;
  MergePartition part = MergePartition::identity(g0);
  while (g.vertex_count() > 3) {
    const auto ne = non_edges(g);
    if (ne.empty()) return SolverOutcome::undetermined();  // complete: has K4
    const auto [u, v] = ne.front();
    Graph h = g;
    MergePartition hp = part;
    const int s = contract(h, hp, u, v);
    auto sub = detail::decide(h, hp, alpha, 0, st, false);
    if (sub.verdict == Verdict::no) {
      g.add_edge(u, v);
      if (k4_using_edge(g, u, v)) return SolverOutcome::undetermined();
    } else {
      g = std::move(h);
      part = std::move(hp);
      if (k4_through(g, s)) return SolverOutcome::undetermined();
    }
  }
  return SolverOutcome::yes(detail::coloring_from(part));
}

/// Planar coloring driver: contract or add planar-preserving edges until the
/// graph is a triangulation, bail to undetermined on K4 or an odd vertex,
/// else 3-color the even triangulation and lift through the partition.
inline SolverOutcome general_3col_planar(const Graph& g0, int alpha,
                                         SolveStats* stats = nullptr) {
  if (!is_planar(g0))
    throw std::invalid_argument("general_3col_planar: non-planar input");
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  auto dec = detail::decide(g0, MergePartition::identity(g0), alpha, 0, st, true);
  if (dec.determinate()) return dec;

  Graph g = g0;
  MergePartition part = MergePartition::identity(g0);

  std::optional<PlanarEmbedding> emb;
  while (true) {
    // below 3 vertices no triangulation is reachable; the partition classes
    // already are a proper coloring
    if (g.vertex_count() <= 2)
      return SolverOutcome::yes(detail::coloring_from(part));
    emb = is_planar(g);
    ++st.planarity_checks;
    if (!emb) {  // mutations below keep planarity; this is unreachable
      ++st.planarity_violations;
      return SolverOutcome::undetermined();
    }
    if (is_planar_triangulation(g, *emb)) break;
    auto pick = detail::select_planar_preserving(g, *emb);
    if (!pick) return SolverOutcome::undetermined();
    const auto [u, v] = *pick;
    Graph h = g;
    MergePartition hp = part;
    const int s = contract(h, hp, u, v);
    auto sub = detail::decide(h, hp, alpha, 0, st, true);
    if (sub.verdict == Verdict::no) {
      g.add_edge(u, v);
      if (k4_using_edge(g, u, v)) return SolverOutcome::undetermined();
    } else {
      g = std::move(h);
      part = std::move(hp);
      if (k4_through(g, s)) return SolverOutcome::undetermined();
    }
  }

  for (int v : g.vertices())
    if (g.degree(v) % 2 != 0) {
      ++st.odd_triangulation_bailouts;
      return SolverOutcome::undetermined();
    }
  auto col = color_even_triangulation(g, *emb);
  if (!col) {
    ++st.odd_triangulation_bailouts;
    return SolverOutcome::undetermined();
  }
  std::vector<std::vector<int>> classes(3);
  for (auto [v, c] : *col) {
    const auto& members = part.classes().at(v);
    classes[c].insert(classes[c].end(), members.begin(), members.end());
  }
  ColoringCertificate cert;
  for (auto& cls : classes)
    if (!cls.empty()) {
      std::sort(cls.begin(), cls.end());
      cert.classes.push_back(std::move(cls));
    }
  return SolverOutcome::yes(cert);
}

inline SolverOutcome solve_with_mode(const Graph& g, int alpha, SolveMode mode,
                                     SolveStats* stats = nullptr) {
  switch (mode) {
    case SolveMode::general: return general_3col_simple(g, alpha, stats);
    case SolveMode::planar: return general_3col_planar(g, alpha, stats);
    default: return general_3col(g, alpha, stats);
  }
}

/// Budget escalation: alpha = 0, 1, ... until a determinate outcome or the
/// cap. Statistics accumulate across attempts.
inline std::pair<SolverOutcome, ObservedAlpha> bfs_3col(
    const Graph& g, const SolveConfig& cfg, SolveStats* stats = nullptr) {
  for (int a = 0; a <= cfg.alpha_max; ++a) {
    auto out = solve_with_mode(g, a, cfg.mode, stats);
    if (out.determinate()) return {std::move(out), ObservedAlpha{a, false}};
  }
  return {SolverOutcome::undetermined(), ObservedAlpha{cfg.alpha_max + 1, true}};
}

/// Relabel contiguous-id graph by permutation: vertex v becomes perm[v].
inline Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  if (g.vertex_count() != g.next_id() ||
      static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("relabeled: needs contiguous ids and full perm");
  Graph h = Graph::with_vertices(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

/// Worst observed alpha over `shuffles` random relabelings plus the
/// canonical ordering; a practical probe of ordering sensitivity.
inline ObservedAlpha observed_alpha_over_shuffles(const Graph& g,
                                                  const SolveConfig& cfg,
                                                  int shuffles,
                                                  SolveStats* stats = nullptr) {
  auto [out, oa] = bfs_3col(g, cfg, stats);
  ObservedAlpha worst = oa;
  std::mt19937_64 rng(cfg.rng_seed);
  std::vector<int> perm(g.vertex_count());
  for (int s = 0; s < shuffles; ++s) {
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    rng_shuffle(rng, perm);
    auto [o2, oa2] = bfs_3col(relabeled(g, perm), cfg, stats);
    if (oa2.value > worst.value) worst = oa2;
    worst.exceeded = worst.exceeded || oa2.exceeded;
  }
  return worst;
}

}  // namespace trichrome
