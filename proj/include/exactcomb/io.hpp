#ifndef EXACTCOMB_IO_HPP
#define EXACTCOMB_IO_HPP

// Line-oriented text formats. Blank lines and '#' comments are skipped.
//
//   digraph N          graph N           embedding N         orientation N
//   t h                u v [w]           v n1 n2 ... (ccw)   u v   (u -> v)
//                                        outer u v
//
//   ground N           points N
//   U a b c            a b c    (one line per geometric line)
//   B a b

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactcomb/classics.hpp"
#include "exactcomb/digraph.hpp"
#include "exactcomb/dimers.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb::io {

namespace detail {

/// Nonblank, comment-stripped lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

/// Whitespace-separated tokens.
inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> t;
  std::string w;
  while (ss >> w) t.push_back(w);
  return t;
}

inline std::size_t to_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 18 || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "'" + tok + "' is not a nonnegative integer");
  return std::stoull(tok);
}

inline BigInt to_bigint(const std::string& tok, std::size_t line) {
  BigInt v;
  if (tok.empty() || v.set_str(tok, 10) != 0) fail(line, "'" + tok + "' is not an integer");
  return v;
}

/// Reads the "keyword N" header.
inline std::size_t header(const std::vector<std::pair<std::size_t, std::string>>& lines, const std::string& keyword) {
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty input, expected '" + keyword + " N'");
  const auto t = tokens(lines[0].second);
  if (t.size() != 2 || t[0] != keyword) fail(lines[0].first, "expected '" + keyword + " N'");
  return to_index(t[1], lines[0].first);
}

}  // namespace detail

inline DirectedMultigraph read_digraph(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const std::size_t n = detail::header(lines, "digraph");
  DirectedMultigraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::tokens(lines[i].second);
    if (t.size() != 2) detail::fail(lines[i].first, "expected 'tail head'");
    const std::size_t a = detail::to_index(t[0], lines[i].first);
    const std::size_t b = detail::to_index(t[1], lines[i].first);
    if (a >= n || b >= n) detail::fail(lines[i].first, "node out of range");
    g.add_arc(a, b);
  }
  return g;
}

inline void write_digraph(std::ostream& out, const DirectedMultigraph& g) {
  out << "digraph " << g.node_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

inline dimers::UndirectedGraph read_graph(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const std::size_t n = detail::header(lines, "graph");
  dimers::UndirectedGraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::tokens(lines[i].second);
    if (t.size() != 2 && t.size() != 3) detail::fail(lines[i].first, "expected 'u v [weight]'");
    const std::size_t u = detail::to_index(t[0], lines[i].first);
    const std::size_t v = detail::to_index(t[1], lines[i].first);
    if (u >= n || v >= n) detail::fail(lines[i].first, "node out of range");
    if (u == v || g.has_edge(u, v)) detail::fail(lines[i].first, "loop or repeated edge");
    g.add_edge(u, v, t.size() == 3 ? detail::to_bigint(t[2], lines[i].first) : BigInt(1));
  }
  return g;
}

inline void write_graph(std::ostream& out, const dimers::UndirectedGraph& g) {
  out << "graph " << g.node_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1) out << ' ' << e.weight.get_str();
    out << '\n';
  }
}

inline dimers::PlanarEmbedding read_embedding(std::istream& in, const dimers::UndirectedGraph& g) {
  const auto lines = detail::content_lines(in);
  const std::size_t n = detail::header(lines, "embedding");
  if (n != g.node_count()) detail::fail(lines[0].first, "embedding size differs from the graph");
  std::vector<std::vector<std::size_t>> rot(n);
  std::vector<char> given(n, 0);
  std::optional<dimers::PlanarEmbedding::Dart> outer;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::tokens(lines[i].second);
    if (t[0] == "outer") {
      if (t.size() != 3) detail::fail(lines[i].first, "expected 'outer u v'");
      outer = dimers::PlanarEmbedding::Dart{detail::to_index(t[1], lines[i].first), detail::to_index(t[2], lines[i].first)};
      continue;
    }
    const std::size_t v = detail::to_index(t[0], lines[i].first);
    if (v >= n) detail::fail(lines[i].first, "node out of range");
    if (given[v]) detail::fail(lines[i].first, "rotation of node " + std::to_string(v) + " given twice");
    given[v] = 1;
    for (std::size_t k = 1; k < t.size(); ++k) rot[v].push_back(detail::to_index(t[k], lines[i].first));
  }
  return dimers::PlanarEmbedding(g, std::move(rot), outer);
}

inline void write_embedding(std::ostream& out, const dimers::PlanarEmbedding& emb) {
  out << "embedding " << emb.rotation().size() << '\n';
  for (std::size_t v = 0; v < emb.rotation().size(); ++v) {
    out << v;
    for (std::size_t w : emb.rotation()[v]) out << ' ' << w;
    out << '\n';
  }
  if (emb.outer_face()) {
    const auto& d = emb.faces()[*emb.outer_face()].front();
    out << "outer " << d.first << ' ' << d.second << '\n';
  }
}

inline dimers::Orientation read_orientation(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const std::size_t n = detail::header(lines, "orientation");
  dimers::Orientation o(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::tokens(lines[i].second);
    if (t.size() != 2) detail::fail(lines[i].first, "expected 'from to'");
    const std::size_t u = detail::to_index(t[0], lines[i].first);
    const std::size_t v = detail::to_index(t[1], lines[i].first);
    if (u >= n || v >= n || u == v) detail::fail(lines[i].first, "invalid arc");
    if (o.eps(u, v) != 0) detail::fail(lines[i].first, "edge oriented twice");
    o.direct(u, v);
  }
  return o;
}

/// Arcs listed in the order of the graph's edges.
inline void write_orientation(std::ostream& out, const dimers::UndirectedGraph& g, const dimers::Orientation& o) {
  out << "orientation " << g.node_count() << '\n';
  for (const auto& e : g.edges()) {
    if (o.eps(e.u, e.v) > 0) out << e.u << ' ' << e.v << '\n';
    else out << e.v << ' ' << e.u << '\n';
  }
}

inline classics::RepInstance read_rep_instance(std::istream& in) {
  const auto lines = detail::content_lines(in);
  classics::RepInstance inst;
  inst.ground = detail::header(lines, "ground");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::tokens(lines[i].second);
    if (t[0] != "U" && t[0] != "B") detail::fail(lines[i].first, "block lines start with U or B");
    classics::Block blk;
    for (std::size_t k = 1; k < t.size(); ++k) blk.push_back(detail::to_index(t[k], lines[i].first));
    (t[0] == "U" ? inst.u : inst.b).push_back(std::move(blk));
  }
  return inst;
}

inline void write_rep_instance(std::ostream& out, const classics::RepInstance& inst) {
  out << "ground " << inst.ground << '\n';
  for (const auto* part : {&inst.u, &inst.b})
    for (const auto& blk : *part) {
      out << (part == &inst.u ? 'U' : 'B');
      for (std::size_t x : blk) out << ' ' << x;
      out << '\n';
    }
}

inline classics::LinearSpace read_linear_space(std::istream& in) {
  const auto lines = detail::content_lines(in);
  classics::LinearSpace ls;
  ls.points = detail::header(lines, "points");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::size_t> line;
    for (const auto& tok : detail::tokens(lines[i].second)) line.push_back(detail::to_index(tok, lines[i].first));
    ls.lines.push_back(std::move(line));
  }
  return ls;
}

inline void write_linear_space(std::ostream& out, const classics::LinearSpace& ls) {
  out << "points " << ls.points << '\n';
  for (const auto& line : ls.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? " " : "") << line[i];
    out << '\n';
  }
}

}  // namespace exactcomb::io

#endif  // EXACTCOMB_IO_HPP
