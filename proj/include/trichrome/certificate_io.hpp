#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "trichrome/certificate.hpp"
#include "trichrome/dimacs.hpp"  // ParseError

namespace trichrome {

// Certificate text format. Vertex ids on disk are 1-based, matching DIMACS.
//
//   cert uncol <n-steps>
//   step <u> <v> diamond <z> <w>
//   step <u> <v> nested-edge {
//     cert uncol <k>
//     ...
//     k4 <a> <b> <c> <d>
//   }
//   step <u> <v> nested-tadpole <x> <y> <z> <w> {
//     ...
//   }
//   k4 <a> <b> <c> <d>
//
//   cert col
//   class <index> <v1> <v2> ...
//
// The writer is canonical (two-space indent per nesting level); parse(write)
// is the identity and write(parse) is bit-exact on canonical text.

namespace detail {

inline void write_uncol(std::ostream& out, const UncolorabilityCertificate& cert,
                        int depth) {
  const std::string pad(2 * depth, ' ');
  out << pad << "cert uncol " << cert.steps.size() << "\n";
  for (const auto& step : cert.steps) {
    out << pad << "step " << step.u + 1 << " " << step.v + 1;
    if (const auto* d = std::get_if<DiamondJustification>(&step.just)) {
      out << " diamond " << d->z + 1 << " " << d->w + 1 << "\n";
    } else if (const auto* ne = std::get_if<NestedEdgeJustification>(&step.just)) {
      out << " nested-edge {\n";
      write_uncol(out, *ne->inner, depth + 1);
      out << pad << "}\n";
    } else if (const auto* nt = std::get_if<NestedTadpoleJustification>(&step.just)) {
      out << " nested-tadpole " << nt->x + 1 << " " << nt->y + 1 << " "
          << nt->z + 1 << " " << nt->w + 1 << " {\n";
      write_uncol(out, *nt->inner, depth + 1);
      out << pad << "}\n";
    }
  }
  out << pad << "k4 " << cert.k4[0] + 1 << " " << cert.k4[1] + 1 << " "
      << cert.k4[2] + 1 << " " << cert.k4[3] + 1 << "\n";
}

struct LineReader {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  bool done() const { return pos >= lines.size(); }
  std::size_t lineno() const { return pos; }  // current line, 0-based before next()
  std::string next() {
    if (done()) throw ParseError(lines.size(), "unexpected end of certificate");
    return lines[pos++];
  }
};

inline int parse_id(LineReader& r, std::istringstream& ls, const char* what) {
  long v = 0;
  if (!(ls >> v) || v < 1)
    throw ParseError(r.lineno(), std::string("expected 1-based id for ") + what);
  return static_cast<int>(v) - 1;
}

inline UncolorabilityCertificate parse_uncol(LineReader& r) {
  UncolorabilityCertificate cert;
  {
    std::istringstream ls(r.next());
    std::string a, b;
    long nsteps = -1;
    if (!(ls >> a >> b >> nsteps) || a != "cert" || b != "uncol" || nsteps < 0)
      throw ParseError(r.lineno(), "expected 'cert uncol <n-steps>'");
    cert.steps.reserve(static_cast<std::size_t>(nsteps));
    for (long i = 0; i < nsteps; ++i) {
      std::istringstream step(r.next());
      std::string tag, kind;
      if (!(step >> tag) || tag != "step")
        throw ParseError(r.lineno(), "expected step line");
      const int u = parse_id(r, step, "pair");
      const int v = parse_id(r, step, "pair");
      if (!(step >> kind)) throw ParseError(r.lineno(), "missing justification");
      if (kind == "diamond") {
        const int z = parse_id(r, step, "spine");
        const int w = parse_id(r, step, "spine");
        cert.steps.push_back({u, v, DiamondJustification{z, w}});
      } else if (kind == "nested-edge") {
        std::string brace;
        if (!(step >> brace) || brace != "{")
          throw ParseError(r.lineno(), "expected '{'");
        auto inner = std::make_shared<UncolorabilityCertificate>(parse_uncol(r));
        std::istringstream close(r.next());
        std::string cb;
        if (!(close >> cb) || cb != "}")
          throw ParseError(r.lineno(), "expected '}'");
        cert.steps.push_back({u, v, NestedEdgeJustification{std::move(inner)}});
      } else if (kind == "nested-tadpole") {
        const int x = parse_id(r, step, "tadpole");
        const int y = parse_id(r, step, "tadpole");
        const int z = parse_id(r, step, "tadpole");
        const int w = parse_id(r, step, "tadpole");
        std::string brace;
        if (!(step >> brace) || brace != "{")
          throw ParseError(r.lineno(), "expected '{'");
        auto inner = std::make_shared<UncolorabilityCertificate>(parse_uncol(r));
        std::istringstream close(r.next());
        std::string cb;
        if (!(close >> cb) || cb != "}")
          throw ParseError(r.lineno(), "expected '}'");
        cert.steps.push_back(
            {u, v, NestedTadpoleJustification{x, y, z, w, std::move(inner)}});
      } else {
        throw ParseError(r.lineno(), "unknown justification '" + kind + "'");
      }
    }
  }
  std::istringstream ls(r.next());
  std::string tag;
  if (!(ls >> tag) || tag != "k4")
    throw ParseError(r.lineno(), "expected 'k4 <a> <b> <c> <d>'");
  for (auto& a : cert.k4) a = parse_id(r, ls, "k4");
  return cert;
}

}  // namespace detail

inline std::string write_certificate(const UncolorabilityCertificate& cert) {
  std::ostringstream out;
  detail::write_uncol(out, cert, 0);
  return out.str();
}

inline std::string write_certificate(const ColoringCertificate& cert) {
  std::ostringstream out;
  out << "cert col\n";
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    out << "class " << c + 1;
    for (int v : cert.classes[c]) out << " " << v + 1;
    out << "\n";
  }
  return out.str();
}

inline std::string write_certificate(const SolverOutcome& outcome) {
  if (outcome.verdict == Verdict::yes) return write_certificate(outcome.coloring());
  if (outcome.verdict == Verdict::no)
    return write_certificate(outcome.uncolorability());
  throw std::invalid_argument("write_certificate: undetermined outcome");
}

using ParsedCertificate = std::variant<ColoringCertificate, UncolorabilityCertificate>;

inline ParsedCertificate parse_certificate(const std::string& text) {
  detail::LineReader r(text);
  // peek at the header
  while (!r.done() && r.lines[r.pos].find_first_not_of(" \t\r") == std::string::npos)
    ++r.pos;
  if (r.done()) throw ParseError(0, "empty certificate");
  std::istringstream head(r.lines[r.pos]);
  std::string a, b;
  head >> a >> b;
  if (a != "cert") throw ParseError(r.pos + 1, "expected 'cert' header");
  if (b == "col") {
    r.next();
    ColoringCertificate cert;
    while (!r.done()) {
      std::istringstream ls(r.next());
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag != "class") throw ParseError(r.lineno(), "expected class line");
      long idx = 0;
      if (!(ls >> idx)) throw ParseError(r.lineno(), "expected class index");
      std::vector<int> members;
      long v;
      while (ls >> v) {
        if (v < 1) throw ParseError(r.lineno(), "bad vertex id");
        members.push_back(static_cast<int>(v) - 1);
      }
      cert.classes.push_back(std::move(members));
    }
    return cert;
  }
  if (b == "uncol") {
    auto cert = detail::parse_uncol(r);
    while (!r.done()) {
      std::istringstream ls(r.next());
      std::string tag;
      if (ls >> tag) throw ParseError(r.lineno(), "trailing content after k4");
    }
    return cert;
  }
  throw ParseError(r.pos + 1, "unknown certificate kind '" + b + "'");
}

}  // namespace trichrome
