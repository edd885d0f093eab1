// Admissible reflection sequences: a sequence x1,...,xs is admissible when
// each xk is a sink of the quiver obtained by reflecting at the earlier
// entries.  Two sequences are identified when one can be turned into the
// other by repeatedly swapping adjacent non-adjacent entries; the vector of
// per-vertex multiplicities is a complete invariant for that relation.
//
// The canonical form of a sequence stacks it into layers
// F_i = { v : multiplicity(v) >= i }; these are nested filters and each
// layer contains the hull of the next.  Meets and joins of classes are the
// pointwise min (with truncation at the first empty layer) and pointwise
// max of multiplicities.
#pragma once

#include "qv/filters.hpp"
#include "qv/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qv {

using MultiplicityVector = std::map<int, int>;  // every vertex present

class AdmissibleSequence {
 public:
  AdmissibleSequence(ValuedQuiver base, std::vector<int> verts)
      : base_(std::move(base)), verts_(std::move(verts)) {
    ValuedQuiver cur = base_;
    for (size_t k = 0; k < verts_.size(); ++k) {
      int x = verts_[k];
      if (!cur.graph.has_vertex(x))
        throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
      if (!cur.is_sink(x)) {
        std::ostringstream msg;
        msg << "entry " << k + 1 << " (vertex " << x << ") is not a sink";
        throw error(errc::not_admissible, msg.str());
      }
      cur = reflect_orientation(cur, x);
    }
    end_ = std::move(cur);
  }

  const ValuedQuiver& base() const { return base_; }
  const std::vector<int>& verts() const { return verts_; }
  // The quiver carrying the reflected orientation after the whole sequence.
  const ValuedQuiver& end_quiver() const { return end_; }
  size_t length() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }

 private:
  ValuedQuiver base_;
  std::vector<int> verts_;
  ValuedQuiver end_;
};

inline bool is_admissible(const ValuedQuiver& q, const std::vector<int>& verts) {
  ValuedQuiver cur = q;
  for (int x : verts) {
    if (!cur.graph.has_vertex(x))
      throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(x));
    if (!cur.is_sink(x)) return false;
    cur = reflect_orientation(cur, x);
  }
  return true;
}

inline MultiplicityVector multiplicity(const AdmissibleSequence& s) {
  MultiplicityVector m;
  for (int v : s.base().vertices()) m[v] = 0;
  for (int x : s.verts()) ++m[x];
  return m;
}

inline Filter support(const AdmissibleSequence& s) {
  std::set<int> supp(s.verts().begin(), s.verts().end());
  return Filter(vertex_poset(s.base()), supp);
}

namespace detail {

inline void require_same_base(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  if (!(a.base() == b.base()))
    throw error(errc::base_mismatch, "sequences live on different quivers");
}

}  // namespace detail

// Complete invariant: equal multiplicity vectors.
inline bool equivalent(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  detail::require_same_base(a, b);
  return multiplicity(a) == multiplicity(b);
}

// Definition-level check: breadth-first search through adjacent swaps of
// entries not joined by an edge.  Deterministic and independent of the
// multiplicity shortcut; exponential only in the sequence length.
inline bool swap_closure_equivalent(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  detail::require_same_base(a, b);
  if (a.length() != b.length()) return false;
  const auto& target = b.verts();
  std::set<std::vector<int>> seen{a.verts()};
  std::queue<std::vector<int>> todo;
  todo.push(a.verts());
  while (!todo.empty()) {
    std::vector<int> cur = todo.front();
    todo.pop();
    if (cur == target) return true;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (a.base().graph.has_edge(cur[i], cur[i + 1])) continue;
      std::swap(cur[i], cur[i + 1]);
      if (!seen.count(cur)) {
        seen.insert(cur);
        todo.push(cur);
      }
      std::swap(cur[i], cur[i + 1]);
    }
  }
  return false;
}

// Pointwise comparison of multiplicities.
inline bool precedes(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  detail::require_same_base(a, b);
  MultiplicityVector ma = multiplicity(a), mb = multiplicity(b);
  for (const auto& [v, c] : ma)
    if (c > mb.at(v)) return false;
  return true;
}

namespace detail {

// Emit the vertices of one layer, lowest sink first, reflecting as we go.
// Preconditions (layer is a filter of the current orientation) guarantee a
// sink is always available.
inline std::pair<std::vector<int>, ValuedQuiver> emit_layer(const ValuedQuiver& start,
                                                            const std::set<int>& layer) {
  ValuedQuiver cur = start;
  std::set<int> remaining = layer;
  std::vector<int> order;
  while (!remaining.empty()) {
    int pick = -1;
    for (int v : remaining)
      if (cur.is_sink(v)) {
        pick = v;
        break;
      }
    if (pick < 0)
      throw error(errc::internal, "layer cannot be emitted; chain preconditions violated");
    order.push_back(pick);
    cur = reflect_orientation(cur, pick);
    remaining.erase(pick);
  }
  return {order, cur};
}

inline std::vector<std::set<int>> layers_from_multiplicity(const MultiplicityVector& m) {
  int top = 0;
  for (const auto& [v, c] : m) {
    (void)v;
    top = std::max(top, c);
  }
  std::vector<std::set<int>> layers;
  for (int i = 1; i <= top; ++i) {
    std::set<int> f;
    for (const auto& [v, c] : m)
      if (c >= i) f.insert(v);
    layers.push_back(std::move(f));
  }
  return layers;
}

}  // namespace detail

struct CanonicalForm {
  std::vector<Filter> layers;            // nested, layer i+1 inside layer i
  std::vector<std::vector<int>> orders;  // emission order per layer

  size_t size() const { return layers.size(); }
  std::vector<int> flat() const {
    std::vector<int> out;
    for (const auto& o : orders) out.insert(out.end(), o.begin(), o.end());
    return out;
  }
};

// Concrete admissible sequence from a chain of filters.  Checks the chain:
// layers nonempty, each a filter, each containing the hull of the next.
inline AdmissibleSequence realize(const ValuedQuiver& q, const std::vector<std::set<int>>& chain) {
  VertexPoset p = vertex_poset(q);
  for (size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].empty())
      throw error(errc::empty_layer, "layer " + std::to_string(i + 1) + " is empty");
    if (!is_filter(p, chain[i]))
      throw error(errc::not_a_filter, "layer " + std::to_string(i + 1) + " is not a filter");
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    Filter h = hull(q, Filter(p, chain[i + 1]));
    for (int v : h.members())
      if (!chain[i].count(v))
        throw error(errc::hull_condition, "layer " + std::to_string(i + 1) +
                                              " does not contain the hull of layer " +
                                              std::to_string(i + 2));
  }
  std::vector<int> verts;
  ValuedQuiver cur = q;
  for (const auto& layer : chain) {
    auto [order, next] = detail::emit_layer(cur, layer);
    verts.insert(verts.end(), order.begin(), order.end());
    cur = std::move(next);
  }
  return AdmissibleSequence(q, verts);
}

inline AdmissibleSequence realize(const ValuedQuiver& q, const std::vector<Filter>& chain) {
  std::vector<std::set<int>> sets;
  sets.reserve(chain.size());
  for (const auto& f : chain) sets.push_back(f.members());
  return realize(q, sets);
}

inline CanonicalForm canonical_form(const AdmissibleSequence& s) {
  MultiplicityVector m = multiplicity(s);
  auto layers = detail::layers_from_multiplicity(m);
  VertexPoset p = vertex_poset(s.base());
  CanonicalForm cf;
  ValuedQuiver cur = s.base();
  for (const auto& layer : layers) {
    cf.layers.emplace_back(p, layer);
    auto [order, next] = detail::emit_layer(cur, layer);
    cf.orders.push_back(std::move(order));
    cur = std::move(next);
  }
  return cf;
}

namespace detail {

inline AdmissibleSequence from_multiplicity(const ValuedQuiver& q, const MultiplicityVector& m) {
  return realize(q, layers_from_multiplicity(m));
}

}  // namespace detail

// Greatest lower bound: pointwise min truncated at the last index where all
// layers of both operands still intersect.  Meet with the empty sequence is
// empty.
inline AdmissibleSequence meet(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  detail::require_same_base(a, b);
  MultiplicityVector ma = multiplicity(a), mb = multiplicity(b);
  int trunc = 0;
  for (const auto& [v, c] : ma) trunc = std::max(trunc, std::min(c, mb.at(v)));
  MultiplicityVector m;
  for (const auto& [v, c] : ma) m[v] = std::min({c, mb.at(v), trunc});
  return detail::from_multiplicity(a.base(), m);
}

// Least upper bound: pointwise max.  Join with the empty sequence is the
// other operand.
inline AdmissibleSequence join(const AdmissibleSequence& a, const AdmissibleSequence& b) {
  detail::require_same_base(a, b);
  MultiplicityVector ma = multiplicity(a), mb = multiplicity(b);
  MultiplicityVector m;
  for (const auto& [v, c] : ma) m[v] = std::max(c, mb.at(v));
  return detail::from_multiplicity(a.base(), m);
}

// Tight: every layer is exactly the hull of the next.
inline bool is_tight(const AdmissibleSequence& s) {
  if (s.empty()) throw error(errc::empty_sequence, "empty sequence has no tightness");
  CanonicalForm cf = canonical_form(s);
  for (size_t i = 0; i + 1 < cf.layers.size(); ++i)
    if (!(hull(s.base(), cf.layers[i + 1]).members() == cf.layers[i].members())) return false;
  return true;
}

// Principal: tight with a principal final layer.
inline bool is_principal(const AdmissibleSequence& s) {
  if (!is_tight(s)) return false;
  CanonicalForm cf = canonical_form(s);
  return is_principal_filter(cf.layers.back());
}

struct PrincipalCoordinate {
  int r;  // number of layers, >= 1
  int x;  // generator of the deepest layer
  auto operator<=>(const PrincipalCoordinate&) const = default;
};

// S_{r,x}: deepest layer the principal filter of x, each earlier layer the
// hull of its successor.
inline AdmissibleSequence principal_sequence(const ValuedQuiver& q, PrincipalCoordinate c) {
  if (c.r < 1) throw error(errc::bad_argument, "layer count must be >= 1");
  if (!q.graph.has_vertex(c.x))
    throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(c.x));
  std::vector<std::set<int>> chain(c.r);
  VertexPoset p = vertex_poset(q);
  chain[c.r - 1] = filter_generated(p, {c.x}).members();
  for (int i = c.r - 2; i >= 0; --i) chain[i] = hull(q, Filter(p, chain[i + 1])).members();
  return realize(q, chain);
}

// Order test against a tight left operand: T precedes S iff T has no more
// layers than S and T's deepest layer sits inside the same-depth layer of S.
inline bool compare_tight(const AdmissibleSequence& tight, const AdmissibleSequence& other) {
  detail::require_same_base(tight, other);
  if (!is_tight(tight)) throw error(errc::not_tight, "left operand is not tight");
  CanonicalForm ct = canonical_form(tight);
  CanonicalForm cs = canonical_form(other);
  size_t q = ct.size();
  if (q > cs.size()) return false;
  for (int v : ct.layers[q - 1].members())
    if (!cs.layers[q - 1].contains(v)) return false;
  return true;
}

// Every admissible sequence of length <= max_len, in breadth-first order
// (by length, then by choice of lowest available sink).  Includes the empty
// sequence.
inline std::vector<AdmissibleSequence> enumerate_admissible(const ValuedQuiver& q, int max_len,
                                                            size_t cap = 500000) {
  std::vector<AdmissibleSequence> out;
  std::vector<std::pair<std::vector<int>, ValuedQuiver>> frontier{{{}, q}};
  out.emplace_back(q, std::vector<int>{});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, ValuedQuiver>> next;
    for (const auto& [verts, cur] : frontier)
      for (int x : sinks(cur)) {
        std::vector<int> ext = verts;
        ext.push_back(x);
        next.emplace_back(ext, reflect_orientation(cur, x));
        out.emplace_back(q, std::move(ext));
        if (out.size() > cap) throw error(errc::bad_argument, "enumeration cap exceeded");
      }
    frontier = std::move(next);
  }
  return out;
}

inline std::string format_sequence(const std::vector<int>& verts) {
  std::string out;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(verts[i]);
  }
  return out;
}

inline std::string format_canonical(const CanonicalForm& cf) {
  std::string out;
  for (size_t i = 0; i < cf.orders.size(); ++i) {
    if (i) out += " | ";
    out += format_sequence(cf.orders[i]);
  }
  return out;
}

}  // namespace qv
