// Shared example quivers for the test suite.
#pragma once

#include "qv/quiver.hpp"

namespace fixtures {

// Path 1 -> 2 -> 3, all multiplicities and weights 1.
inline qv::ValuedQuiver q_a3() {
  qv::ValuedGraph g({1, 2, 3}, {{1, 2, 1, 1}, {2, 3, 1, 1}}, {{1, 1}, {2, 1}, {3, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  return {g, o};
}

// The same graph after reflecting at 3: arrows 1 -> 2 and 3 -> 2.
inline qv::ValuedQuiver q_a3_sigma3() {
  qv::ValuedGraph g({1, 2, 3}, {{1, 2, 1, 1}, {2, 3, 1, 1}}, {{1, 1}, {2, 1}, {3, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}, {3, 2}});
  return {g, o};
}

// Single arrow 1 -> 2.
inline qv::ValuedQuiver q_a2() {
  qv::ValuedGraph g({1, 2}, {{1, 2, 1, 1}}, {{1, 1}, {2, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
  return {g, o};
}

// One edge with multiplicity (2,2): symmetric, affine type.
inline qv::ValuedQuiver q_k2() {
  qv::ValuedGraph g({1, 2}, {{1, 2, 2, 2}}, {{1, 1}, {2, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
  return {g, o};
}

// One edge with multiplicity (1,2), weights d = (2,1): non-symmetric.
inline qv::ValuedQuiver q_b2() {
  qv::ValuedGraph g({1, 2}, {{1, 2, 1, 2}}, {{1, 2}, {2, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
  return {g, o};
}

// 1 -> 2 -> 3 plus the shortcut 1 -> 3: the arrow 1 -> 3 has a bypass.
inline qv::ValuedQuiver q_triangle() {
  qv::ValuedGraph g({1, 2, 3}, {{1, 2, 1, 1}, {2, 3, 1, 1}, {1, 3, 1, 1}},
                    {{1, 1}, {2, 1}, {3, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}});
  return {g, o};
}

}  // namespace fixtures
