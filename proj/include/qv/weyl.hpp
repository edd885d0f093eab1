// The Weyl group attached to a valued graph: generalized Cartan matrix,
// simple reflections acting on the root lattice, reduced-word testing, and
// Coxeter elements built from complete admissible orderings.
//
// A word in the generators is reduced iff, scanning left to right, the
// partial product always maps the next simple root to a positive root;
// equivalently every column tested stays nonnegative.  That criterion is
// exact for any generalized Cartan matrix, finite type or not.
#pragma once

#include "qv/matrix.hpp"
#include "qv/representations.hpp"

#include <map>
#include <string>
#include <vector>

namespace qv {

struct CartanMatrix {
  std::vector<int> vertices;  // ascending; row/column i corresponds to vertices[i]
  IMat a;
  std::vector<Int> d;  // symmetrizer: diag(d) * a is symmetric

  int index_of(int v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return int(i);
    throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
  }
};

inline CartanMatrix cartan_matrix(const ValuedQuiver& q) {
  std::vector<int> verts = q.vertices();
  std::sort(verts.begin(), verts.end());
  int n = int(verts.size());
  IMat a(n, n);
  std::vector<Int> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[size_t(i)] = q.d(verts[size_t(i)]);
    for (int j = 0; j < n; ++j) a(i, j) = i == j ? 2 : -q.b(verts[size_t(i)], verts[size_t(j)]);
  }
  return {std::move(verts), std::move(a), std::move(d)};
}

// Matrix of the simple reflection at v in the basis of simple roots:
// sigma_v(alpha_j) = alpha_j - a_vj * alpha_v.
inline IMat simple_reflection(const CartanMatrix& cm, int v) {
  int i = cm.index_of(v), n = int(cm.vertices.size());
  IMat m = IMat::identity(n);
  for (int j = 0; j < n; ++j) m(i, j) = (i == j ? Int(1) : Int(0)) - cm.a(i, j);
  return m;
}

using Word = std::vector<int>;

inline IMat word_matrix(const CartanMatrix& cm, const Word& w) {
  IMat m = IMat::identity(int(cm.vertices.size()));
  for (int v : w) m = m * simple_reflection(cm, v);
  return m;
}

// Left-to-right positivity test.  Before multiplying in the reflection for
// letter v, the current partial product must send alpha_v to a positive
// root, i.e. the corresponding column must be nonnegative (it is never
// zero, reflections being invertible).
inline bool is_reduced(const CartanMatrix& cm, const Word& w) {
  int n = int(cm.vertices.size());
  IMat p = IMat::identity(n);
  for (int v : w) {
    int j = cm.index_of(v);
    for (int r = 0; r < n; ++r)
      if (p(r, j) < 0) return false;
    p = p * simple_reflection(cm, v);
  }
  return true;
}

// Coxeter element read off the deterministic complete admissible sequence.
inline Word coxeter_word(const ValuedQuiver& q) { return complete_sequence(q); }

// For m = 1..m_max, whether the m-fold repetition of the Coxeter word is
// reduced.  Verdicts are a property of the underlying graph, not of the
// chosen admissible ordering.
inline std::vector<std::pair<int, bool>> coxeter_powers_reduced(const ValuedQuiver& q,
                                                                int m_max) {
  if (m_max < 1) throw error(errc::bad_argument, "power bound must be >= 1");
  CartanMatrix cm = cartan_matrix(q);
  Word c = coxeter_word(q);
  std::vector<std::pair<int, bool>> out;
  Word w;
  for (int m = 1; m <= m_max; ++m) {
    w.insert(w.end(), c.begin(), c.end());
    out.emplace_back(m, is_reduced(cm, w));
  }
  return out;
}

namespace detail {
inline std::string matrix_key(const IMat& m) {
  std::string s;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      s += m(r, c).str();
      s += ',';
    }
  return s;
}
}  // namespace detail

// Brute-force length oracle: breadth-first ball of radius max_len in the
// generators.  Lengths recorded are exact for every element reachable
// within the radius, whether or not the group is finite.
inline std::map<std::string, int> enumerate_lengths(const CartanMatrix& cm, int max_len,
                                                    size_t cap = 2000000) {
  std::vector<IMat> gens;
  for (int v : cm.vertices) gens.push_back(simple_reflection(cm, v));
  std::map<std::string, int> lengths;
  std::vector<IMat> frontier{IMat::identity(int(cm.vertices.size()))};
  lengths[detail::matrix_key(frontier[0])] = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<IMat> next;
    for (const IMat& m : frontier)
      for (const IMat& g : gens) {
        IMat p = m * g;
        auto key = detail::matrix_key(p);
        if (lengths.count(key)) continue;
        lengths[key] = len;
        if (lengths.size() > cap) throw error(errc::bad_argument, "length enumeration cap exceeded");
        next.push_back(std::move(p));
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return lengths;
}

}  // namespace qv
