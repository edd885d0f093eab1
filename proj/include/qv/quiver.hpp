// Valued graphs, acyclic orientations, and the reachability poset on
// vertices.
//
// A valued graph is a finite connected graph with positive edge
// multiplicities b(i,j), b(j,i) and positive vertex weights d(i) satisfying
// d(i)*b(i,j) = d(j)*b(j,i).  An orientation assigns a direction to every
// edge and must not create an oriented cycle.  Reflection at a vertex
// reverses all incident arrows.
#pragma once

#include "qv/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qv {

struct EdgeSpec {
  int i, j;
  int bij, bji;
};

inline std::pair<int, int> edge_key(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

class ValuedGraph {
 public:
  ValuedGraph() = default;
  ValuedGraph(std::vector<int> vertices, const std::vector<EdgeSpec>& edges,
              std::map<int, int> weights, std::map<int, std::string> labels = {})
      : verts_(std::move(vertices)), d_(std::move(weights)), labels_(std::move(labels)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (const auto& e : edges) {
      require_vertex(e.i);
      require_vertex(e.j);
      auto key = edge_key(e.i, e.j);
      if (b_.count({e.i, e.j}))
        throw error(errc::bad_argument,
                    "duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
      b_[{e.i, e.j}] = e.bij;
      b_[{e.j, e.i}] = e.bji;
      edges_.insert(key);
    }
    for (const auto& [v, dv] : d_) {
      (void)dv;
      require_vertex(v);
    }
  }

  const std::vector<int>& vertices() const { return verts_; }
  bool has_vertex(int v) const { return std::binary_search(verts_.begin(), verts_.end(), v); }

  // 0 when i,j are not adjacent.
  int b(int i, int j) const {
    auto it = b_.find({i, j});
    return it == b_.end() ? 0 : it->second;
  }
  bool has_edge(int i, int j) const { return edges_.count(edge_key(i, j)) > 0; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  int d(int v) const {
    auto it = d_.find(v);
    if (it == d_.end()) throw error(errc::unknown_vertex, "no weight for vertex " + std::to_string(v));
    return it->second;
  }
  const std::map<int, int>& weights() const { return d_; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [i, j] : edges_) {
      if (i == v && i != j) out.push_back(j);
      if (j == v && i != j) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string label(int v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? std::to_string(v) : it->second;
  }
  const std::map<int, std::string>& labels() const { return labels_; }

  bool operator==(const ValuedGraph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_ && b_ == o.b_ && d_ == o.d_;
  }

 private:
  void require_vertex(int v) const {
    if (!has_vertex(v)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
  }

  std::vector<int> verts_;
  std::set<std::pair<int, int>> edges_;          // normalized (min,max)
  std::map<std::pair<int, int>, int> b_;         // both directions
  std::map<int, int> d_;
  std::map<int, std::string> labels_;
};

class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(const std::vector<std::pair<int, int>>& arrows) {
    for (auto [s, e] : arrows) {
      auto key = edge_key(s, e);
      if (dir_.count(key))
        throw error(errc::bad_argument, "edge {" + std::to_string(key.first) + "," +
                                            std::to_string(key.second) + "} oriented twice");
      dir_[key] = {s, e};
    }
  }

  std::vector<std::pair<int, int>> arrows() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(dir_.size());
    for (const auto& [k, a] : dir_) {
      (void)k;
      out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool covers_edge(int i, int j) const { return dir_.count(edge_key(i, j)) > 0; }
  bool has_arrow(int s, int e) const {
    auto it = dir_.find(edge_key(s, e));
    return it != dir_.end() && it->second == std::make_pair(s, e);
  }

  // Direction of the given edge, as (source, target).
  std::pair<int, int> direction(int i, int j) const {
    auto it = dir_.find(edge_key(i, j));
    if (it == dir_.end())
      throw error(errc::bad_argument,
                  "no edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    return it->second;
  }

  Orientation reversed_at(int v) const {
    Orientation out(*this);
    for (auto& [k, a] : out.dir_)
      if (k.first == v || k.second == v) a = {a.second, a.first};
    return out;
  }

  size_t size() const { return dir_.size(); }
  bool operator==(const Orientation&) const = default;

 private:
  std::map<std::pair<int, int>, std::pair<int, int>> dir_;
};

class VertexPoset {
 public:
  VertexPoset() = default;
  VertexPoset(std::vector<int> vertices, std::map<std::pair<int, int>, bool> leq)
      : verts_(std::move(vertices)), leq_(std::move(leq)) {}

  const std::vector<int>& vertices() const { return verts_; }
  bool defined(int v) const { return std::binary_search(verts_.begin(), verts_.end(), v); }

  bool leq(int x, int y) const {
    auto it = leq_.find({x, y});
    if (it == leq_.end()) throw error(errc::unknown_vertex, "vertex not in poset");
    return it->second;
  }
  bool less(int x, int y) const { return x != y && leq(x, y); }

  // Covering pairs (x,y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x : verts_)
      for (int y : verts_) {
        if (!less(x, y)) continue;
        bool direct = true;
        for (int z : verts_)
          if (z != x && z != y && leq(x, z) && leq(z, y)) {
            direct = false;
            break;
          }
        if (direct) out.emplace_back(x, y);
      }
    return out;
  }

  bool operator==(const VertexPoset&) const = default;

 private:
  std::vector<int> verts_;
  std::map<std::pair<int, int>, bool> leq_;
};

// Plain directed graph, used for Hasse diagrams and shape comparisons.
struct Digraph {
  std::vector<int> vertices;
  std::set<std::pair<int, int>> arrows;
  bool operator==(const Digraph&) const = default;
};

struct ValuedQuiver {
  ValuedGraph graph;
  Orientation orient;

  const std::vector<int>& vertices() const { return graph.vertices(); }
  int d(int v) const { return graph.d(v); }
  int b(int i, int j) const { return graph.b(i, j); }
  std::vector<std::pair<int, int>> arrows() const { return orient.arrows(); }
  bool has_arrow(int s, int e) const { return orient.has_arrow(s, e); }

  std::vector<int> out_neighbors(int v) const {
    std::vector<int> out;
    for (int w : graph.neighbors(v))
      if (orient.has_arrow(v, w)) out.push_back(w);
    return out;
  }
  std::vector<int> in_neighbors(int v) const {
    std::vector<int> out;
    for (int w : graph.neighbors(v))
      if (orient.has_arrow(w, v)) out.push_back(w);
    return out;
  }

  bool is_sink(int v) const { return out_neighbors(v).empty(); }
  bool is_source(int v) const { return in_neighbors(v).empty(); }

  bool operator==(const ValuedQuiver& o) const { return graph == o.graph && orient == o.orient; }
};

struct Violation {
  errc code;
  std::string message;
};

namespace detail {

inline std::optional<std::vector<int>> find_cycle(const ValuedQuiver& q) {
  // DFS, colors 0/1/2; returns one oriented cycle if present.
  std::map<int, int> color;
  std::map<int, int> parent;
  for (int v : q.vertices()) color[v] = 0;
  for (int root : q.vertices()) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto outs = q.out_neighbors(v);
      if (idx == outs.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = outs[idx++];
      if (color[w] == 0) {
        color[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      } else if (color[w] == 1) {
        std::vector<int> cycle{w};
        for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

inline bool connected_on(const ValuedGraph& g, const std::set<int>& verts) {
  if (verts.empty()) return true;
  std::set<int> seen;
  std::vector<int> todo{*verts.begin()};
  seen.insert(*verts.begin());
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : g.neighbors(v))
      if (verts.count(w) && !seen.count(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
  }
  return seen.size() == verts.size();
}

}  // namespace detail

// All invariant violations of the raw (graph, orientation) pair, in a fixed
// order.  Empty result means the data forms a valued quiver.
inline std::vector<Violation> violations(const ValuedGraph& g, const Orientation& o) {
  std::vector<Violation> out;
  if (g.vertices().size() < 2)
    out.push_back({errc::single_vertex, "graph needs at least two vertices"});
  for (const auto& [i, j] : g.edges()) {
    if (i == j) {
      out.push_back({errc::loop_edge, "loop edge at vertex " + std::to_string(i)});
      continue;
    }
    if (g.b(i, j) <= 0 || g.b(j, i) <= 0)
      out.push_back({errc::invalid_valuation, "edge {" + std::to_string(i) + "," +
                                                  std::to_string(j) + "} needs positive b both ways"});
  }
  for (int v : g.vertices()) {
    if (!g.weights().count(v))
      out.push_back({errc::invalid_valuation, "missing weight d for vertex " + std::to_string(v)});
    else if (g.d(v) <= 0)
      out.push_back({errc::invalid_valuation, "weight d(" + std::to_string(v) + ") must be positive"});
  }
  for (const auto& [i, j] : g.edges()) {
    if (i == j || !g.weights().count(i) || !g.weights().count(j)) continue;
    if (g.d(i) * g.b(i, j) != g.d(j) * g.b(j, i))
      out.push_back({errc::symmetrizability, "d(" + std::to_string(i) + ")*b(" + std::to_string(i) +
                                                 "," + std::to_string(j) + ") != d(" + std::to_string(j) +
                                                 ")*b(" + std::to_string(j) + "," + std::to_string(i) + ")"});
  }
  {
    std::set<int> all(g.vertices().begin(), g.vertices().end());
    if (!detail::connected_on(g, all)) out.push_back({errc::disconnected, "graph is not connected"});
  }
  for (const auto& [i, j] : g.edges())
    if (i != j && !o.covers_edge(i, j))
      out.push_back({errc::bad_argument,
                     "edge {" + std::to_string(i) + "," + std::to_string(j) + "} has no orientation"});
  if (o.size() != g.edges().size())
    out.push_back({errc::bad_argument, "orientation mentions edges not in the graph"});
  if (out.empty()) {
    ValuedQuiver q{g, o};
    if (auto cyc = detail::find_cycle(q)) {
      std::ostringstream msg;
      msg << "oriented cycle:";
      for (int v : *cyc) msg << " " << v;
      out.push_back({errc::oriented_cycle, msg.str()});
    }
  }
  return out;
}

// Checked constructor: throws with the first violation's code and a message
// listing all of them.
inline ValuedQuiver validate(const ValuedGraph& g, const Orientation& o) {
  auto vs = violations(g, o);
  if (!vs.empty()) {
    std::string msg;
    for (const auto& v : vs) {
      if (!msg.empty()) msg += "; ";
      msg += v.message;
    }
    throw error(vs.front().code, msg);
  }
  return ValuedQuiver{g, o};
}

inline std::vector<int> sinks(const ValuedQuiver& q) {
  std::vector<int> out;
  for (int v : q.vertices())
    if (q.is_sink(v)) out.push_back(v);
  return out;
}

inline std::vector<int> sources(const ValuedQuiver& q) {
  std::vector<int> out;
  for (int v : q.vertices())
    if (q.is_source(v)) out.push_back(v);
  return out;
}

// Reverse every arrow incident to x.  Throws if the result has an oriented
// cycle (never happens when x is a sink or a source).
inline ValuedQuiver reflect_orientation(const ValuedQuiver& q, int x) {
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
  ValuedQuiver out{q.graph, q.orient.reversed_at(x)};
  if (auto cyc = detail::find_cycle(out)) {
    std::ostringstream msg;
    msg << "reflecting at " << x << " creates an oriented cycle:";
    for (int v : *cyc) msg << " " << v;
    throw error(errc::cycle_created, msg.str());
  }
  return out;
}

// x <= y iff there is an oriented path from x to y.
inline VertexPoset vertex_poset(const ValuedQuiver& q) {
  std::map<std::pair<int, int>, bool> leq;
  for (int x : q.vertices()) {
    std::set<int> reach{x};
    std::vector<int> todo{x};
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (int w : q.out_neighbors(v))
        if (!reach.count(w)) {
          reach.insert(w);
          todo.push_back(w);
        }
    }
    for (int y : q.vertices()) leq[{x, y}] = reach.count(y) > 0;
  }
  return VertexPoset(q.vertices(), std::move(leq));
}

inline Digraph hasse_diagram(const VertexPoset& p) {
  Digraph out;
  out.vertices = p.vertices();
  for (auto [x, y] : p.covers()) out.arrows.insert({x, y});
  return out;
}

inline Digraph to_digraph(const ValuedQuiver& q) {
  Digraph out;
  out.vertices = q.vertices();
  for (auto [s, e] : q.arrows()) out.arrows.insert({s, e});
  return out;
}

// A bypass is an oriented path of length > 1 running parallel to an arrow.
inline bool has_bypass(const ValuedQuiver& q) {
  VertexPoset p = vertex_poset(q);
  for (auto [u, v] : q.arrows())
    for (int w : q.out_neighbors(u))
      if (w != v && p.leq(w, v)) return true;
  return false;
}

inline bool connected_on(const ValuedQuiver& q, const std::set<int>& verts) {
  return detail::connected_on(q.graph, verts);
}

}  // namespace qv
