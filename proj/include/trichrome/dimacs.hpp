#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

/// DIMACS .col reader: `c` comments, one `p edge <n> <m>` header, `e <u> <v>`
/// lines with 1-based vertex ids. Duplicate edges collapse with a warning;
/// loops and out-of-range ids are errors. Internally vertices are 0-based.
inline Graph parse_dimacs(const std::string& text,
                          std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long declared_m = 0;
  std::size_t edges_seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate p line");
      std::string fmt;
      long n = -1, m = -1;
      if (!(ls >> fmt >> n >> m) || fmt != "edge")
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in p line");
      g = Graph::with_vertices(static_cast<int>(n));
      declared_m = m;
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) throw ParseError(lineno, "edge before p line");
      long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
      if (u == v) throw ParseError(lineno, "loop edge " + std::to_string(u));
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        throw ParseError(lineno, "vertex id out of range");
      ++edges_seen;
      const int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
      if (g.has_edge(a, b)) {
        if (warnings)
          warnings->push_back("line " + std::to_string(lineno) +
                              ": duplicate edge collapsed");
        continue;
      }
      g.add_edge(a, b);
      continue;
    }
    throw ParseError(lineno, "unknown line tag '" + tag + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing p line");
  if (warnings && static_cast<long>(edges_seen) != declared_m)
    warnings->push_back("header declares " + std::to_string(declared_m) +
                        " edges, file has " + std::to_string(edges_seen));
  return g;
}

/// Canonical writer: header, then the sorted edge list, 1-based. Requires
/// contiguous ids 0..n-1 (fresh graphs; contracted graphs are not writable).
inline std::string write_dimacs(const Graph& g,
                                const std::string& comment = "") {
  const int n = g.vertex_count();
  if (n != g.next_id())
    throw std::invalid_argument("write_dimacs: vertex ids not contiguous");
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p edge " << n << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

}  // namespace trichrome
