// Filters (up-closed vertex sets) of the reachability poset, the filter
// generated by a set, and the hull: the smallest filter containing a given
// filter together with all outside vertices adjacent to it.
#pragma once

#include "qv/quiver.hpp"

#include <set>
#include <vector>

namespace qv {

inline bool is_filter(const VertexPoset& p, const std::set<int>& members) {
  for (int v : members) {
    if (!p.defined(v)) throw error(errc::unknown_vertex, "vertex " + std::to_string(v) + " not in poset");
    for (int w : p.vertices())
      if (p.leq(v, w) && !members.count(w)) return false;
  }
  return true;
}

class Filter {
 public:
  Filter(VertexPoset poset, std::set<int> members)
      : poset_(std::move(poset)), members_(std::move(members)) {
    if (!is_filter(poset_, members_))
      throw error(errc::not_a_filter, "set is not up-closed");
  }

  const std::set<int>& members() const { return members_; }
  const VertexPoset& poset() const { return poset_; }
  bool contains(int v) const { return members_.count(v) > 0; }
  bool empty() const { return members_.empty(); }
  size_t size() const { return members_.size(); }

  bool operator==(const Filter& o) const { return members_ == o.members_ && poset_ == o.poset_; }

 private:
  VertexPoset poset_;
  std::set<int> members_;
};

// Up-closure of an arbitrary vertex set.
inline Filter filter_generated(const VertexPoset& p, const std::set<int>& seed) {
  std::set<int> out;
  for (int v : seed) {
    if (!p.defined(v)) throw error(errc::unknown_vertex, "vertex " + std::to_string(v) + " not in poset");
    for (int w : p.vertices())
      if (p.leq(v, w)) out.insert(w);
  }
  return Filter(p, out);
}

inline Filter filter_generated(const ValuedQuiver& q, const std::set<int>& seed) {
  return filter_generated(vertex_poset(q), seed);
}

// Smallest filter containing F and every vertex outside F adjacent to F.
inline Filter hull(const ValuedQuiver& q, const Filter& f) {
  std::set<int> seed = f.members();
  for (int v : f.members())
    for (int w : q.graph.neighbors(v))
      if (!f.contains(w)) seed.insert(w);
  return filter_generated(vertex_poset(q), seed);
}

inline Filter hull(const ValuedQuiver& q, const std::set<int>& members) {
  return hull(q, Filter(vertex_poset(q), members));
}

inline std::vector<int> minimal_elements(const Filter& f) {
  std::vector<int> out;
  for (int v : f.members()) {
    bool minimal = true;
    for (int w : f.members())
      if (w != v && f.poset().leq(w, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(v);
  }
  return out;
}

// A filter is principal iff it is the up-closure of a single vertex,
// equivalently iff it has exactly one minimal element.
inline bool is_principal_filter(const Filter& f) {
  return !f.empty() && minimal_elements(f).size() == 1;
}

}  // namespace qv
