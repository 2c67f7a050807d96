#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

enum class Verdict { no = 0, yes = 1, undetermined = 2 };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "0";
    case Verdict::yes: return "1";
    default: return "inf";
  }
}

/// Up to three disjoint classes of original vertex ids; a valid certificate
/// partitions V(G) into independent sets.
struct ColoringCertificate {
  std::vector<std::vector<int>> classes;

  friend bool operator==(const ColoringCertificate&,
                         const ColoringCertificate&) = default;
};

struct UncolorabilityCertificate;

/// The pair is forced together because it is the non-adjacent pair of a
/// diamond (K4 minus an edge) with spine (z, w).
struct DiamondJustification {
  int z, w;
  friend bool operator==(const DiamondJustification&,
                         const DiamondJustification&) = default;
};

/// The pair is forced together because G + uv is itself non-3-colorable,
/// proven by the nested certificate.
struct NestedEdgeJustification {
  std::shared_ptr<const UncolorabilityCertificate> inner;
  friend bool operator==(const NestedEdgeJustification& a,
                         const NestedEdgeJustification& b);
};

/// Tadpole binary constraint: w must take the color of x or of y. The nested
/// certificate shows G / xw is non-3-colorable, so w takes y's color and the
/// step's pair must be (y, w).
struct NestedTadpoleJustification {
  int x, y, z, w;
  std::shared_ptr<const UncolorabilityCertificate> inner;
  friend bool operator==(const NestedTadpoleJustification& a,
                         const NestedTadpoleJustification& b);
};

using Justification = std::variant<DiamondJustification, NestedEdgeJustification,
                                   NestedTadpoleJustification>;

struct ContractionStep {
  int u, v;  // the contracted pair, valid super-vertex ids at this step
  Justification just;
  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

/// A replayable sequence of justified unavoidable contractions that ends in
/// a graph where `k4` induces a complete subgraph.
struct UncolorabilityCertificate {
  std::vector<ContractionStep> steps;
  std::array<int, 4> k4{};
  friend bool operator==(const UncolorabilityCertificate&,
                         const UncolorabilityCertificate&) = default;
};

inline bool operator==(const NestedEdgeJustification& a,
                       const NestedEdgeJustification& b) {
  if (a.inner == b.inner) return true;
  if (!a.inner || !b.inner) return false;
  return *a.inner == *b.inner;
}

inline bool operator==(const NestedTadpoleJustification& a,
                       const NestedTadpoleJustification& b) {
  if (std::tie(a.x, a.y, a.z, a.w) != std::tie(b.x, b.y, b.z, b.w)) return false;
  if (a.inner == b.inner) return true;
  if (!a.inner || !b.inner) return false;
  return *a.inner == *b.inner;
}

/// Total number of contraction steps, nested certificates included.
inline std::size_t certificate_size(const UncolorabilityCertificate& cert) {
  std::size_t total = cert.steps.size();
  for (const auto& step : cert.steps) {
    if (const auto* ne = std::get_if<NestedEdgeJustification>(&step.just)) {
      if (ne->inner) total += certificate_size(*ne->inner);
    } else if (const auto* nt = std::get_if<NestedTadpoleJustification>(&step.just)) {
      if (nt->inner) total += certificate_size(*nt->inner);
    }
  }
  return total;
}

inline std::size_t certificate_size(const ColoringCertificate&) { return 0; }

struct SolverOutcome {
  Verdict verdict = Verdict::undetermined;
  std::variant<std::monostate, ColoringCertificate, UncolorabilityCertificate>
      payload;

  static SolverOutcome no(UncolorabilityCertificate cert) {
    return {Verdict::no, std::move(cert)};
  }
  static SolverOutcome yes(ColoringCertificate cert) {
    return {Verdict::yes, std::move(cert)};
  }
  static SolverOutcome undetermined() { return {Verdict::undetermined, {}}; }

  bool determinate() const { return verdict != Verdict::undetermined; }
  const ColoringCertificate& coloring() const {
    return std::get<ColoringCertificate>(payload);
  }
  const UncolorabilityCertificate& uncolorability() const {
    return std::get<UncolorabilityCertificate>(payload);
  }
};

/// Result of a verification run; `ops` counts elementary checks so that the
/// polynomial-verification claim can be measured.
struct VerifyResult {
  bool ok = false;
  std::string reason;
  std::vector<std::size_t> step_path;  // failing step index per nesting level
  std::size_t ops = 0;

  explicit operator bool() const { return ok; }

  std::string describe() const {
    if (ok) return "ok";
    std::ostringstream out;
    out << "invalid";
    if (!step_path.empty()) {
      out << " at step";
      for (std::size_t s : step_path) out << " " << s;
    }
    out << ": " << reason;
    return out.str();
  }
};

// ---------------------------------------------------------------------------
// Independent verifier. The witness checks below are deliberately spelled
// out against raw adjacency queries instead of reusing the solver-side
// detectors, so that its verdicts do not depend on detector code paths.
// ---------------------------------------------------------------------------

namespace detail {

struct VerifyCtx {
  std::size_t ops = 0;
  VerifyResult fail(std::vector<std::size_t> path, std::string reason) const {
    VerifyResult r;
    r.ok = false;
    r.reason = std::move(reason);
    r.step_path = std::move(path);
    r.ops = ops;
    return r;
  }
};

inline bool check_edge(VerifyCtx& ctx, const Graph& g, int u, int v) {
  ++ctx.ops;
  return g.has_edge(u, v);
}

inline bool check_live(VerifyCtx& ctx, const Graph& g, int v) {
  ++ctx.ops;
  return g.has_vertex(v);
}

// Replays `cert` against a copy of `g`; true only if every step's pair is
// live and non-adjacent, every justification holds in the replayed graph,
// and the final k4 ids induce a complete subgraph.
inline VerifyResult verify_uncol(VerifyCtx& ctx, Graph g,
                                 const UncolorabilityCertificate& cert,
                                 std::vector<std::size_t> path) {
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    auto here = path;
    here.push_back(i);
    const int u = step.u, v = step.v;
    if (u == v || !check_live(ctx, g, u) || !check_live(ctx, g, v))
      return ctx.fail(here, "contracted pair not live");
    if (check_edge(ctx, g, u, v))
      return ctx.fail(here, "contracted pair is adjacent");

    if (const auto* d = std::get_if<DiamondJustification>(&step.just)) {
      const int z = d->z, w = d->w;
      if (z == w || z == u || z == v || w == u || w == v ||
          !check_live(ctx, g, z) || !check_live(ctx, g, w))
        return ctx.fail(here, "diamond spine not live/distinct");
      if (!check_edge(ctx, g, z, w) || !check_edge(ctx, g, u, z) ||
          !check_edge(ctx, g, u, w) || !check_edge(ctx, g, v, z) ||
          !check_edge(ctx, g, v, w))
        return ctx.fail(here, "diamond witness edge missing");
    } else if (const auto* ne = std::get_if<NestedEdgeJustification>(&step.just)) {
      if (!ne->inner) return ctx.fail(here, "missing nested certificate");
      Graph h = g;
      h.add_edge(u, v);
      ++ctx.ops;
      auto sub = verify_uncol(ctx, std::move(h), *ne->inner, here);
      if (!sub.ok) return sub;
    } else if (const auto* nt = std::get_if<NestedTadpoleJustification>(&step.just)) {
      const int x = nt->x, y = nt->y, z = nt->z, w = nt->w;
      if (!nt->inner) return ctx.fail(here, "missing nested certificate");
      if (x == y || x == z || x == w || y == z || y == w || z == w ||
          !check_live(ctx, g, x) || !check_live(ctx, g, y) ||
          !check_live(ctx, g, z) || !check_live(ctx, g, w))
        return ctx.fail(here, "tadpole witness not live/distinct");
      if (!check_edge(ctx, g, x, y) || !check_edge(ctx, g, x, z) ||
          !check_edge(ctx, g, y, z) || !check_edge(ctx, g, z, w))
        return ctx.fail(here, "tadpole witness edge missing");
      if (check_edge(ctx, g, x, w) || check_edge(ctx, g, y, w))
        return ctx.fail(here, "tadpole tail already attached");
      // w takes x's or y's color; inner shows g/xw impossible, so pair = (y,w)
      if (!((u == y && v == w) || (u == w && v == y)))
        return ctx.fail(here, "tadpole step pair is not (y, w)");
      Graph h = g;
      h.contract(x, w);
      ++ctx.ops;
      auto sub = verify_uncol(ctx, std::move(h), *nt->inner, here);
      if (!sub.ok) return sub;
    }

    g.contract(u, v);
    ctx.ops += g.neighbors(g.next_id() - 1).size() + 1;
  }

  for (int a : cert.k4)
    if (!check_live(ctx, g, a)) {
      auto p = path;
      return ctx.fail(std::move(p), "k4 vertex not live");
    }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (cert.k4[i] == cert.k4[j])
        return ctx.fail(path, "k4 vertices not distinct");
      if (!check_edge(ctx, g, cert.k4[i], cert.k4[j]))
        return ctx.fail(path, "k4 edge missing");
    }
  VerifyResult r;
  r.ok = true;
  r.ops = ctx.ops;
  return r;
}

}  // namespace detail

/// O(n + m): classes partition V(g), at most three of them, and no edge
/// joins two vertices of one class.
inline VerifyResult verify_coloring(const Graph& g,
                                    const ColoringCertificate& cert) {
  detail::VerifyCtx ctx;
  if (cert.classes.size() > 3)
    return ctx.fail({}, "more than three classes");
  std::map<int, int> owner;
  for (std::size_t c = 0; c < cert.classes.size(); ++c)
    for (int v : cert.classes[c]) {
      ++ctx.ops;
      if (!g.has_vertex(v)) return ctx.fail({c}, "unknown vertex in class");
      if (!owner.emplace(v, static_cast<int>(c)).second)
        return ctx.fail({c}, "vertex in two classes");
    }
  if (owner.size() != static_cast<std::size_t>(g.vertex_count()))
    return ctx.fail({}, "classes do not cover all vertices");
  for (auto [u, v] : g.edges()) {
    ++ctx.ops;
    if (owner.at(u) == owner.at(v))
      return ctx.fail({static_cast<std::size_t>(owner.at(u))},
                      "edge inside a class");
  }
  VerifyResult r;
  r.ok = true;
  r.ops = ctx.ops;
  return r;
}

inline VerifyResult verify_uncolorability(const Graph& g,
                                          const UncolorabilityCertificate& cert) {
  detail::VerifyCtx ctx;
  return detail::verify_uncol(ctx, g, cert, {});
}

/// Elementary-operation count of a verification run.
inline std::size_t verification_step_count(const Graph& g,
                                           const UncolorabilityCertificate& cert) {
  return verify_uncolorability(g, cert).ops;
}

/// Graph state after replaying the first `n_steps` steps, or nullopt if the
/// replay breaks before that. Introspection helper; not used by the verifier.
inline std::optional<Graph> replay_prefix(const Graph& g,
                                          const UncolorabilityCertificate& cert,
                                          std::size_t n_steps) {
  Graph h = g;
  for (std::size_t i = 0; i < n_steps && i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    if (!h.has_vertex(step.u) || !h.has_vertex(step.v) ||
        h.has_edge(step.u, step.v))
      return std::nullopt;
    h.contract(step.u, step.v);
  }
  return h;
}

}  // namespace trichrome
