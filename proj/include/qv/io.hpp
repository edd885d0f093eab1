// Text formats and DOT emission.
//
// Quiver files are line-oriented; `#` starts a comment anywhere.
//   vertices: 1 2 3
//   d: 1=1 2=1 3=1
//   edge: 1 2 b=1,1      b values in the listed vertex order
//   arrow: 1 -> 2
// Every edge needs exactly one arrow line and vice versa.  Parse errors
// carry line numbers; semantic problems are left to the quiver validator.
//
// Representation files:
//   dim: 1=1 2=1 3=0
//   map: 1->2 = [[1,1/2],[0,1]]
// Rows of rationals, one line per arrow map; omitted maps are zero.
//
// All emitters iterate in sorted order, so output is byte-stable.
#pragma once

#include "qv/representations.hpp"
#include "qv/translation.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qv {

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
  throw error(errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

inline int parse_int_at(const std::string& tok, int line_no) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) parse_fail(line_no, "bad integer '" + tok + "'");
    return v;
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(line_no, "bad integer '" + tok + "'");
  }
}

// Splits "k=v" pairs like "1=2"; used by the d: and dim: sections.
inline std::pair<int, int> parse_assignment(const std::string& tok, int line_no) {
  size_t eq = tok.find('=');
  if (eq == std::string::npos) parse_fail(line_no, "expected 'vertex=value', got '" + tok + "'");
  return {parse_int_at(tok.substr(0, eq), line_no), parse_int_at(tok.substr(eq + 1), line_no)};
}

struct Line {
  int no;
  std::string text;
};

inline std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({no, raw});
  }
  return out;
}

}  // namespace detail

inline ValuedQuiver parse_quiver(const std::string& text) {
  std::optional<std::vector<int>> vertices;
  std::map<int, int> d;
  bool saw_d = false;
  std::vector<EdgeSpec> edges;
  std::map<std::pair<int, int>, std::pair<int, int>> arrows;  // edge key -> (s,e)

  for (const auto& [no, line] : detail::logical_lines(text)) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) detail::parse_fail(no, "expected 'section: ...'");
    std::string section = detail::trim(line.substr(0, colon));
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    if (section == "vertices") {
      if (vertices) detail::parse_fail(no, "duplicate vertices section");
      std::vector<int> vs;
      while (rest >> tok) vs.push_back(detail::parse_int_at(tok, no));
      if (vs.empty()) detail::parse_fail(no, "empty vertices section");
      vertices = std::move(vs);
    } else if (section == "d") {
      saw_d = true;
      while (rest >> tok) {
        auto [v, val] = detail::parse_assignment(tok, no);
        d[v] = val;
      }
    } else if (section == "edge") {
      std::string ti, tj, tb;
      if (!(rest >> ti >> tj >> tb)) detail::parse_fail(no, "expected 'edge: i j b=x,y'");
      if (tb.rfind("b=", 0) != 0) detail::parse_fail(no, "expected 'b=x,y', got '" + tb + "'");
      size_t comma = tb.find(',');
      if (comma == std::string::npos) detail::parse_fail(no, "expected 'b=x,y', got '" + tb + "'");
      EdgeSpec e;
      e.i = detail::parse_int_at(ti, no);
      e.j = detail::parse_int_at(tj, no);
      e.bij = detail::parse_int_at(tb.substr(2, comma - 2), no);
      e.bji = detail::parse_int_at(tb.substr(comma + 1), no);
      edges.push_back(e);
      if (rest >> tok) detail::parse_fail(no, "trailing token '" + tok + "'");
    } else if (section == "arrow") {
      std::string ts, tarr, te;
      if (!(rest >> ts >> tarr >> te) || tarr != "->")
        detail::parse_fail(no, "expected 'arrow: s -> e'");
      int s = detail::parse_int_at(ts, no), e = detail::parse_int_at(te, no);
      auto key = edge_key(s, e);
      if (arrows.count(key)) detail::parse_fail(no, "second arrow for edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
      arrows[key] = {s, e};
      if (rest >> tok) detail::parse_fail(no, "trailing token '" + tok + "'");
    } else {
      detail::parse_fail(no, "unknown section '" + section + "'");
    }
  }

  if (!vertices) throw error(errc::parse, "missing section \"vertices\"");
  if (!saw_d) throw error(errc::parse, "missing section \"d\"");
  for (const EdgeSpec& e : edges)
    if (!arrows.count(edge_key(e.i, e.j)))
      throw error(errc::parse, "edge {" + std::to_string(e.i) + "," + std::to_string(e.j) + "} has no arrow line");
  for (const auto& [key, a] : arrows) {
    (void)a;
    bool found = false;
    for (const EdgeSpec& e : edges)
      if (edge_key(e.i, e.j) == key) found = true;
    if (!found)
      throw error(errc::parse, "arrow on undeclared edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
  }

  ValuedGraph g(*vertices, edges, d);
  std::vector<std::pair<int, int>> arrow_list;
  for (const auto& [key, a] : arrows) {
    (void)key;
    arrow_list.push_back(a);
  }
  Orientation o(arrow_list);
  validate(g, o);
  return {std::move(g), std::move(o)};
}

inline std::string serialize_quiver(const ValuedQuiver& q) {
  std::ostringstream out;
  out << "vertices:";
  for (int v : q.vertices()) out << ' ' << v;
  out << "\nd:";
  for (int v : q.vertices()) out << ' ' << v << '=' << q.d(v);
  out << '\n';
  for (const auto& [i, j] : q.graph.edges()) {
    out << "edge: " << i << ' ' << j << " b=" << q.b(i, j) << ',' << q.b(j, i) << '\n';
    auto [s, e] = q.orient.direction(i, j);
    out << "arrow: " << s << " -> " << e << '\n';
  }
  return out.str();
}

namespace detail {

inline QMat parse_matrix_literal(const std::string& body, int line_no) {
  std::string s;
  for (char c : body)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    parse_fail(line_no, "matrix must look like [[a,b],[c,d]]");
  std::string inner = s.substr(1, s.size() - 2);
  std::vector<std::vector<Rat>> rows;
  size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] != '[') parse_fail(line_no, "expected '[' starting a row");
    size_t close = inner.find(']', pos);
    if (close == std::string::npos) parse_fail(line_no, "unterminated row");
    std::string row = inner.substr(pos + 1, close - pos - 1);
    std::vector<Rat> vals;
    size_t p = 0;
    while (p < row.size()) {
      size_t comma = row.find(',', p);
      std::string tok = row.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
      try {
        vals.push_back(parse_rational(tok));
      } catch (const error&) {
        parse_fail(line_no, "bad rational '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(vals));
    pos = close + 1;
    if (pos < inner.size()) {
      if (inner[pos] != ',') parse_fail(line_no, "expected ',' between rows");
      ++pos;
    }
  }
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) parse_fail(line_no, "ragged rows in matrix");
  QMat m(int(rows.size()), int(cols));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols; ++c) m(int(r), int(c)) = rows[r][c];
  return m;
}

}  // namespace detail

inline Representation parse_representation(const std::string& text, const ValuedQuiver& q) {
  std::map<int, int> dims;
  bool saw_dim = false;
  std::map<std::pair<int, int>, QMat> maps;
  for (const auto& [no, line] : detail::logical_lines(text)) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) detail::parse_fail(no, "expected 'section: ...'");
    std::string section = detail::trim(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    if (section == "dim") {
      saw_dim = true;
      std::istringstream in(rest);
      std::string tok;
      while (in >> tok) {
        auto [v, val] = detail::parse_assignment(tok, no);
        dims[v] = val;
      }
    } else if (section == "map") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) detail::parse_fail(no, "expected 'map: s->e = [[...]]'");
      std::string head = detail::trim(rest.substr(0, eq));
      size_t arr = head.find("->");
      if (arr == std::string::npos) detail::parse_fail(no, "expected 's->e' before '='");
      int s = detail::parse_int_at(detail::trim(head.substr(0, arr)), no);
      int e = detail::parse_int_at(detail::trim(head.substr(arr + 2)), no);
      if (maps.count({s, e})) detail::parse_fail(no, "duplicate map for arrow");
      maps[{s, e}] = detail::parse_matrix_literal(rest.substr(eq + 1), no);
    } else {
      detail::parse_fail(no, "unknown section '" + section + "'");
    }
  }
  if (!saw_dim) throw error(errc::parse, "missing section \"dim\"");
  return Representation(q, dims, maps);
}

inline std::string serialize_representation(const Representation& rep) {
  std::ostringstream out;
  out << "dim:";
  for (int v : rep.base().vertices()) out << ' ' << v << '=' << rep.dim(v);
  out << '\n';
  for (auto [s, e] : rep.base().arrows()) {
    const QMat& m = rep.map(s, e);
    if (m.rows() == 0 || m.cols() == 0) continue;
    out << "map: " << s << "->" << e << " = [";
    for (int r = 0; r < m.rows(); ++r) {
      if (r) out << ',';
      out << '[';
      for (int c = 0; c < m.cols(); ++c) {
        if (c) out << ',';
        out << format_rational(m(r, c));
      }
      out << ']';
    }
    out << "]\n";
  }
  return out.str();
}

inline std::string emit_dot(const ValuedQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n  rankdir=LR;\n";
  for (int v : q.vertices()) out << "  v" << v << " [label=\"" << v << "\"];\n";
  for (auto [s, e] : q.arrows()) {
    out << "  v" << s << " -> v" << e;
    if (q.b(s, e) != 1 || q.b(e, s) != 1)
      out << " [label=\"(" << q.b(s, e) << ',' << q.b(e, s) << ")\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string emit_dot(const TranslationQuiverSlice& sl) {
  std::ostringstream out;
  out << "digraph slice {\n  rankdir=LR;\n";
  for (auto [n, u] : sl.vertices)
    out << "  v" << n << '_' << u << " [label=\"(" << n << ',' << u << ")\"];\n";
  for (const auto& [a, b] : sl.arrows)
    out << "  v" << a.first << '_' << a.second << " -> v" << b.first << '_' << b.second << ";\n";
  for (auto [n, u] : sl.vertices)
    if (auto t = sl.tau({n, u}))
      out << "  v" << n << '_' << u << " -> v" << t->first << '_' << t->second
          << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

inline std::string emit_dot(const PrincipalHasseDiagram& h) {
  std::ostringstream out;
  out << "digraph principal_hasse {\n  rankdir=LR;\n";
  for (const auto& c : h.vertices)
    out << "  s" << c.r << '_' << c.x << " [label=\"S(" << c.r << ',' << c.x << ")\"];\n";
  for (const auto& [a, b] : h.arrows)
    out << "  s" << a.r << '_' << a.x << " -> s" << b.r << '_' << b.x << ";\n";
  for (const auto& c : h.vertices)
    if (auto t = h.tau(c))
      out << "  s" << c.r << '_' << c.x << " -> s" << t->r << '_' << t->x << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

// Comma-separated vertex ids; empty input, "-", and "(empty)" denote the
// empty sequence.
inline std::vector<int> parse_sequence(const std::string& text) {
  std::string t = detail::trim(text);
  if (t.empty() || t == "-" || t == "(empty)") return {};
  std::vector<int> out;
  size_t p = 0;
  int line_no = 1;
  while (true) {
    size_t comma = t.find(',', p);
    std::string tok = detail::trim(t.substr(p, comma == std::string::npos ? std::string::npos : comma - p));
    if (tok.empty()) detail::parse_fail(line_no, "empty entry in sequence");
    out.push_back(detail::parse_int_at(tok, line_no));
    if (comma == std::string::npos) break;
    p = comma + 1;
  }
  return out;
}

}  // namespace qv
