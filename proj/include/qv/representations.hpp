// Rational representations of a symmetric-valued quiver and the reflection
// functors on them.
//
// A representation assigns a rational vector space V_v to each vertex and,
// to each arrow s -> e, a matrix for a map B (x) V_s -> V_e, where B is a
// b-dimensional multiplicity space; columns are ordered with the B index
// major and the V_s index minor.  Reflection at a sink x replaces V_x by
// the kernel of the assembled inbound map and reads the reversed-arrow maps
// off the kernel inclusion by reshaping (the matrix form of Hom-tensor
// adjunction); reflection at a source is the dual cokernel construction.
//
// Dimension-level tools (projective dimension vectors, reflections of
// dimension vectors, knitting of the preprojective tags) work for any
// valuation; matrix-level functors require b symmetric and d identically 1.
#pragma once

#include "qv/matrix.hpp"
#include "qv/sequences.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qv {

inline bool is_symmetric_valuation(const ValuedQuiver& q) {
  for (const auto& [i, j] : q.graph.edges())
    if (q.b(i, j) != q.b(j, i)) return false;
  for (int v : q.vertices())
    if (q.d(v) != 1) return false;
  return true;
}

class Representation {
 public:
  Representation(ValuedQuiver base, std::map<int, int> dims,
                 std::map<std::pair<int, int>, QMat> maps)
      : base_(std::move(base)), dims_(std::move(dims)) {
    if (!is_symmetric_valuation(base_))
      throw error(errc::non_symmetric_valuation,
                  "matrix-level representations need b symmetric and d = 1");
    for (int v : base_.vertices()) {
      auto it = dims_.find(v);
      if (it == dims_.end())
        throw error(errc::bad_argument, "no dimension for vertex " + std::to_string(v));
      if (it->second < 0)
        throw error(errc::bad_argument, "negative dimension at vertex " + std::to_string(v));
    }
    for (const auto& [arrow, m] : maps) {
      auto [s, e] = arrow;
      if (!base_.has_arrow(s, e))
        throw error(errc::bad_argument,
                    "no arrow " + std::to_string(s) + " -> " + std::to_string(e));
      int rows = dims_.at(e), cols = base_.b(s, e) * dims_.at(s);
      if (m.rows() != rows || m.cols() != cols) {
        std::ostringstream msg;
        msg << "map " << s << " -> " << e << " must be " << rows << "x" << cols << ", got "
            << m.rows() << "x" << m.cols();
        throw error(errc::shape_mismatch, msg.str());
      }
    }
    for (auto [s, e] : base_.arrows()) {
      auto it = maps.find({s, e});
      maps_[{s, e}] = it != maps.end() ? it->second : QMat(dims_.at(e), base_.b(s, e) * dims_.at(s));
    }
  }

  const ValuedQuiver& base() const { return base_; }
  const std::map<int, int>& dims() const { return dims_; }
  int dim(int v) const { return dims_.at(v); }
  const QMat& map(int s, int e) const {
    auto it = maps_.find({s, e});
    if (it == maps_.end())
      throw error(errc::bad_argument, "no arrow " + std::to_string(s) + " -> " + std::to_string(e));
    return it->second;
  }

  int total_dim() const {
    int t = 0;
    for (const auto& [v, d] : dims_) {
      (void)v;
      t += d;
    }
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }

 private:
  ValuedQuiver base_;
  std::map<int, int> dims_;
  std::map<std::pair<int, int>, QMat> maps_;
};

inline Representation simple(const ValuedQuiver& q, int x) {
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
  std::map<int, int> dims;
  for (int v : q.vertices()) dims[v] = v == x ? 1 : 0;
  return Representation(q, dims, {});
}

// Dimension vector of the indecomposable projective at x: one path-space
// block per oriented path from x, each of dimension the product of the
// multiplicities along the path.  Valid for any valuation.
inline std::map<int, int> projective_dims(const ValuedQuiver& q, int x) {
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
  std::vector<int> order = q.vertices();
  std::sort(order.begin(), order.end());
  // Process along arrows: repeatedly take vertices whose in-neighbors are done.
  std::map<int, int> dims;
  std::set<int> done;
  while (done.size() < order.size()) {
    for (int v : order) {
      if (done.count(v)) continue;
      bool ready = true;
      for (int y : q.in_neighbors(v))
        if (!done.count(y)) ready = false;
      if (!ready) continue;
      int d = v == x ? 1 : 0;
      for (int y : q.in_neighbors(v)) d += q.b(v, y) * dims[y];
      dims[v] = d;
      done.insert(v);
    }
  }
  return dims;
}

// Matrix-level projective: vertex spaces are concatenations of path blocks
// (trivial path first, then per inbound arrow ordered by source, prefix
// blocks in their own order); each arrow map sends B (x) V_y onto the
// corresponding path blocks.
inline Representation projective(const ValuedQuiver& q, int x) {
  if (!is_symmetric_valuation(q))
    throw error(errc::non_symmetric_valuation, "matrix-level projective needs symmetric valuation");
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));

  std::map<int, std::vector<int>> blocks;  // path block sizes per vertex, in order
  std::map<int, int> dims;
  std::set<int> done;
  while (done.size() < q.vertices().size()) {
    for (int v : q.vertices()) {
      if (done.count(v)) continue;
      bool ready = true;
      for (int y : q.in_neighbors(v))
        if (!done.count(y)) ready = false;
      if (!ready) continue;
      std::vector<int> bl;
      if (v == x) bl.push_back(1);
      for (int y : q.in_neighbors(v))
        for (int s : blocks[y]) bl.push_back(q.b(v, y) * s);
      int d = 0;
      for (int s : bl) d += s;
      blocks[v] = std::move(bl);
      dims[v] = d;
      done.insert(v);
    }
  }

  std::map<std::pair<int, int>, QMat> maps;
  for (auto [y, z] : q.arrows()) {
    int b = q.b(y, z), dy = dims[y], dz = dims[z];
    QMat f(dz, b * dy);
    // Offset of the superblock for this arrow inside V_z.
    int off = z == x ? 1 : 0;
    for (int y2 : q.in_neighbors(z)) {
      if (y2 == y) break;
      off += q.b(z, y2) * dims[y2];
    }
    int oq = 0;  // offset of the prefix block inside V_y
    for (int s : blocks[y]) {
      for (int beta = 0; beta < b; ++beta)
        for (int g = 0; g < s; ++g) f(off + b * oq + beta * s + g, beta * dy + oq + g) = 1;
      oq += s;
    }
    maps[{y, z}] = std::move(f);
  }
  return Representation(q, dims, maps);
}

// The inbound map at z: horizontal concatenation of the arrow maps into z,
// blocks ordered by source vertex.
inline QMat assemble_inbound(const Representation& rep, int z) {
  const ValuedQuiver& q = rep.base();
  QMat h(rep.dim(z), 0);
  for (int y : q.in_neighbors(z)) h = hstack(h, rep.map(y, z));
  return h;
}

// Reflection at a sink: V_x becomes ker(h), reversed-arrow maps are the
// reshaped row blocks of the kernel inclusion.
inline Representation reflect_plus(int x, const Representation& rep) {
  const ValuedQuiver& q = rep.base();
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
  if (!q.is_sink(x)) throw error(errc::not_a_sink, "vertex " + std::to_string(x) + " is not a sink");

  QMat h = assemble_inbound(rep, x);
  QMat k = kernel_basis(h);
  int w = k.cols();

  ValuedQuiver nq = reflect_orientation(q, x);
  std::map<int, int> dims = rep.dims();
  dims[x] = w;
  std::map<std::pair<int, int>, QMat> maps;
  for (auto [s, e] : q.arrows())
    if (s != x && e != x) maps[{s, e}] = rep.map(s, e);
  int off = 0;
  for (int y : q.in_neighbors(x)) {
    int b = q.b(y, x), dy = rep.dim(y);
    QMat g(dy, b * w);
    for (int beta = 0; beta < b; ++beta)
      for (int r = 0; r < dy; ++r)
        for (int c = 0; c < w; ++c) g(r, beta * w + c) = k(off + beta * dy + r, c);
    maps[{x, y}] = std::move(g);
    off += b * dy;
  }
  return Representation(nq, dims, maps);
}

// Reflection at a source: V_x becomes coker of the adjoint outbound map,
// reversed-arrow maps are the column blocks of the projection.
inline Representation reflect_minus(int x, const Representation& rep) {
  const ValuedQuiver& q = rep.base();
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
  if (!q.is_source(x)) throw error(errc::not_a_source, "vertex " + std::to_string(x) + " is not a source");

  int dx = rep.dim(x);
  QMat htilde(0, dx);
  for (int y : q.out_neighbors(x)) {
    int b = q.b(x, y), dy = rep.dim(y);
    const QMat& f = rep.map(x, y);
    QMat ft(b * dy, dx);
    for (int beta = 0; beta < b; ++beta)
      for (int r = 0; r < dy; ++r)
        for (int c2 = 0; c2 < dx; ++c2) ft(beta * dy + r, c2) = f(r, beta * dx + c2);
    htilde = vstack(htilde, ft);
  }
  QMat pi = cokernel_projection(htilde);

  ValuedQuiver nq = reflect_orientation(q, x);
  std::map<int, int> dims = rep.dims();
  dims[x] = pi.rows();
  std::map<std::pair<int, int>, QMat> maps;
  for (auto [s, e] : q.arrows())
    if (s != x && e != x) maps[{s, e}] = rep.map(s, e);
  int off = 0;
  for (int y : q.out_neighbors(x)) {
    int b = q.b(x, y), dy = rep.dim(y);
    maps[{y, x}] = block(pi, 0, off, pi.rows(), b * dy);
    off += b * dy;
  }
  return Representation(nq, dims, maps);
}

// Left-to-right composite of sink reflections along an admissible sequence.
inline Representation apply_sequence(const AdmissibleSequence& s, const Representation& rep) {
  if (!(s.base() == rep.base()))
    throw error(errc::base_mismatch, "sequence and representation live on different quivers");
  Representation cur = rep;
  for (int x : s.verts()) cur = reflect_plus(x, cur);
  return cur;
}

// The deterministic complete admissible sequence: every vertex once, lowest
// available sink first.
inline std::vector<int> complete_sequence(const ValuedQuiver& q) {
  std::set<int> all(q.vertices().begin(), q.vertices().end());
  return realize(q, std::vector<std::set<int>>{all}).verts();
}

inline Representation coxeter_plus(const Representation& rep) {
  return apply_sequence(AdmissibleSequence(rep.base(), complete_sequence(rep.base())), rep);
}

inline Representation coxeter_minus(const Representation& rep) {
  std::vector<int> order = complete_sequence(rep.base());
  Representation cur = rep;
  for (auto it = order.rbegin(); it != order.rend(); ++it) cur = reflect_minus(*it, cur);
  return cur;
}

// Dimension vector after reflecting at a sink, assuming the inbound map is
// onto (true for indecomposables other than the simple at x).
inline std::map<int, int> dim_reflect(const ValuedQuiver& q, int x,
                                      const std::map<int, int>& dims) {
  if (!q.graph.has_vertex(x)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
  if (!q.is_sink(x)) throw error(errc::not_a_sink, "vertex " + std::to_string(x) + " is not a sink");
  int dx = -dims.at(x);
  for (int y : q.in_neighbors(x)) dx += q.b(x, y) * dims.at(y);
  if (dx < 0)
    throw error(errc::kills_at_vertex,
                "reflection kills the representation at vertex " + std::to_string(x));
  std::map<int, int> out = dims;
  out[x] = dx;
  return out;
}

struct PreprojectiveTag {
  int nu;  // Coxeter exponent, >= 0
  int x;   // projective of origin
  auto operator<=>(const PreprojectiveTag&) const = default;
};

struct KnitEntry {
  PreprojectiveTag tag;
  std::map<int, int> dims;
};

// Dimension vectors of the preprojective chain: projectives first, then
// repeated inverse-reflection sweeps (sources in reverse complete order).
// An orbit stops when a sweep drives some entry negative or the vector
// reaches zero.  Works for any valuation.
inline std::vector<KnitEntry> knit_preprojectives(const ValuedQuiver& q, int r_max) {
  if (r_max < 1) throw error(errc::bad_argument, "level bound must be >= 1");
  std::vector<int> order = complete_sequence(q);
  std::vector<KnitEntry> out;
  std::map<int, std::map<int, int>> alive;
  for (int x : order) {
    auto d = projective_dims(q, x);
    out.push_back({{0, x}, d});
    alive[x] = std::move(d);
  }
  for (int nu = 1; nu < r_max; ++nu) {
    for (int x : order) {
      auto it = alive.find(x);
      if (it == alive.end()) continue;
      std::map<int, int> d = it->second;
      ValuedQuiver cur = q;
      bool ok = true;
      for (auto rit = order.rbegin(); rit != order.rend(); ++rit) {
        int v = *rit, dv = -d[v];
        for (int y : cur.out_neighbors(v)) dv += cur.b(v, y) * d[y];
        if (dv < 0) {
          ok = false;
          break;
        }
        d[v] = dv;
        cur = reflect_orientation(cur, v);
      }
      bool zero = true;
      if (ok)
        for (const auto& [v, dv] : d) {
          (void)v;
          if (dv != 0) zero = false;
        }
      if (!ok || zero) {
        alive.erase(it);
      } else {
        out.push_back({{nu, x}, d});
        it->second = d;
      }
    }
  }
  return out;
}

// Shortest annihilating sequence by breadth-first search over all available
// sinks, merging branches with equal multiplicity vectors (equivalent
// prefixes act identically).  The length cap flags non-preprojectives.
inline AdmissibleSequence shortest_annihilator_bfs(const ValuedQuiver& q,
                                                   const Representation& rep) {
  if (!(q == rep.base()))
    throw error(errc::base_mismatch, "representation lives on a different quiver");
  if (rep.is_zero()) return AdmissibleSequence(q, {});
  const int n = int(q.vertices().size());
  const size_t cap_len = size_t(n) * size_t(n) * size_t(rep.total_dim() + 1);

  auto key_of = [&](const std::vector<int>& verts) {
    std::map<int, int> m;
    for (int v : verts) ++m[v];
    std::vector<int> key;
    for (const auto& [v, c] : m) {
      key.push_back(v);
      key.push_back(c);
    }
    return key;
  };

  std::vector<std::pair<std::vector<int>, Representation>> frontier{{{}, rep}};
  std::set<std::vector<int>> seen;
  for (size_t len = 1; len <= cap_len; ++len) {
    std::vector<std::pair<std::vector<int>, Representation>> next;
    for (const auto& [verts, cur] : frontier)
      for (int x : sinks(cur.base())) {
        std::vector<int> ext = verts;
        ext.push_back(x);
        auto key = key_of(ext);
        if (seen.count(key)) continue;
        seen.insert(key);
        Representation r = reflect_plus(x, cur);
        if (r.is_zero()) return AdmissibleSequence(q, ext);
        next.emplace_back(std::move(ext), std::move(r));
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  throw error(errc::not_preprojective, "no annihilating sequence within the search cap");
}

// The annihilator class of the preprojective with the given tag, read off
// the coordinates directly.
inline AdmissibleSequence s_m_from_tag(const ValuedQuiver& q, PreprojectiveTag t) {
  if (t.nu < 0) throw error(errc::bad_argument, "negative exponent");
  return principal_sequence(q, {t.nu + 1, t.x});
}

// Annihilator of a direct sum: join over the summands.
inline AdmissibleSequence s_m_of_sum(const ValuedQuiver& q,
                                     const std::vector<PreprojectiveTag>& tags) {
  AdmissibleSequence acc(q, {});
  for (const auto& t : tags) acc = join(acc, s_m_from_tag(q, t));
  return acc;
}

// Concrete matrix-level model of the preprojective with the given tag:
// start from the simple at the last entry of its annihilator sequence and
// walk back with source reflections.
inline Representation rep_from_tag(const ValuedQuiver& q, PreprojectiveTag t) {
  std::vector<int> s = s_m_from_tag(q, t).verts();
  ValuedQuiver cur = q;
  for (size_t i = 0; i + 1 < s.size(); ++i) cur = reflect_orientation(cur, s[i]);
  Representation rep = simple(cur, s.back());
  for (size_t i = s.size() - 1; i-- > 0;) rep = reflect_minus(s[i], rep);
  return rep;
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.base() == b.base()))
    throw error(errc::base_mismatch, "summands live on different quivers");
  const ValuedQuiver& q = a.base();
  std::map<int, int> dims;
  for (int v : q.vertices()) dims[v] = a.dim(v) + b.dim(v);
  std::map<std::pair<int, int>, QMat> maps;
  for (auto [s, e] : q.arrows()) {
    int bb = q.b(s, e), ds = dims[s], de = dims[e];
    const QMat &fa = a.map(s, e), &fb = b.map(s, e);
    QMat f(de, bb * ds);
    for (int beta = 0; beta < bb; ++beta) {
      for (int r = 0; r < a.dim(e); ++r)
        for (int c = 0; c < a.dim(s); ++c) f(r, beta * ds + c) = fa(r, beta * a.dim(s) + c);
      for (int r = 0; r < b.dim(e); ++r)
        for (int c = 0; c < b.dim(s); ++c)
          f(a.dim(e) + r, beta * ds + a.dim(s) + c) = fb(r, beta * b.dim(s) + c);
    }
    maps[{s, e}] = std::move(f);
  }
  return Representation(q, dims, maps);
}

}  // namespace qv
