#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fixtures;
using qv::errc;

TEST_CASE("construction rejects unknown vertices and duplicate edges") {
  CHECK_THROWS_AS(qv::ValuedGraph({1, 2}, {{1, 3, 1, 1}}, {{1, 1}, {2, 1}}), qv::error);
  try {
    qv::ValuedGraph({1, 2}, {{1, 2, 1, 1}, {2, 1, 1, 1}}, {{1, 1}, {2, 1}});
    FAIL("duplicate edge accepted");
  } catch (const qv::error& e) {
    CHECK(e.code() == errc::bad_argument);
  }
}

TEST_CASE("validate accepts the fixtures") {
  for (const auto& q : {q_a3(), q_a3_sigma3(), q_a2(), q_k2(), q_b2(), q_triangle()})
    CHECK_NOTHROW(qv::validate(q.graph, q.orient));
}

TEST_CASE("validate flags bad valuations") {
  // b = (1,2) needs d = (2,1); equal weights break symmetrizability.
  qv::ValuedGraph g({1, 2}, {{1, 2, 1, 2}}, {{1, 1}, {2, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
  auto vs = qv::violations(g, o);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].code == errc::symmetrizability);
  CHECK_THROWS_AS(qv::validate(g, o), qv::error);
}

TEST_CASE("validate flags structural problems") {
  {
    qv::ValuedGraph g({1}, {}, {{1, 1}});
    auto vs = qv::violations(g, qv::Orientation{});
    REQUIRE_FALSE(vs.empty());
    CHECK(vs[0].code == errc::single_vertex);
  }
  {
    qv::ValuedGraph g({1, 2, 3, 4}, {{1, 2, 1, 1}, {3, 4, 1, 1}},
                      {{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    bool saw = false;
    for (const auto& v : qv::violations(g, o)) saw |= v.code == errc::disconnected;
    CHECK(saw);
  }
  {
    qv::ValuedGraph g({1, 2}, {{1, 2, 0, 1}}, {{1, 1}, {2, 1}});
    qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
    bool saw = false;
    for (const auto& v : qv::violations(g, o)) saw |= v.code == errc::invalid_valuation;
    CHECK(saw);
  }
  {
    // missing weight for vertex 2
    qv::ValuedGraph g({1, 2}, {{1, 2, 1, 1}}, {{1, 1}});
    qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
    bool saw = false;
    for (const auto& v : qv::violations(g, o)) saw |= v.code == errc::invalid_valuation;
    CHECK(saw);
  }
  {
    // unoriented edge
    qv::ValuedGraph g({1, 2, 3}, {{1, 2, 1, 1}, {2, 3, 1, 1}}, {{1, 1}, {2, 1}, {3, 1}});
    qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}});
    bool saw = false;
    for (const auto& v : qv::violations(g, o)) saw |= v.code == errc::bad_argument;
    CHECK(saw);
  }
}

TEST_CASE("validate flags oriented cycles") {
  qv::ValuedGraph g({1, 2, 3}, {{1, 2, 1, 1}, {2, 3, 1, 1}, {1, 3, 1, 1}},
                    {{1, 1}, {2, 1}, {3, 1}});
  qv::Orientation o(std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}});
  auto vs = qv::violations(g, o);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].code == errc::oriented_cycle);
}

TEST_CASE("sinks and sources") {
  CHECK(qv::sinks(q_a3()) == std::vector<int>{3});
  CHECK(qv::sources(q_a3()) == std::vector<int>{1});
  CHECK(qv::sinks(q_a3_sigma3()) == std::vector<int>{2});
  CHECK(qv::sources(q_a3_sigma3()) == std::vector<int>{1, 3});
  CHECK(qv::sinks(q_triangle()) == std::vector<int>{3});
}

TEST_CASE("reflection reverses incident arrows and is an involution") {
  qv::ValuedQuiver q = q_a3();
  qv::ValuedQuiver r = qv::reflect_orientation(q, 3);
  CHECK(r == q_a3_sigma3());
  CHECK(qv::reflect_orientation(r, 3) == q);

  // Reflecting the middle vertex reverses both incident arrows.
  qv::ValuedQuiver m = qv::reflect_orientation(q, 2);
  CHECK(m.has_arrow(2, 1));
  CHECK(m.has_arrow(3, 2));
}

TEST_CASE("reflection refuses to create cycles") {
  try {
    qv::reflect_orientation(q_triangle(), 2);
    FAIL("cycle not detected");
  } catch (const qv::error& e) {
    CHECK(e.code() == errc::cycle_created);
  }
  CHECK_THROWS_AS(qv::reflect_orientation(q_a3(), 9), qv::error);
}

TEST_CASE("vertex poset is path reachability") {
  qv::VertexPoset p = qv::vertex_poset(q_a3());
  CHECK(p.leq(1, 3));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(3, 1));
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

  qv::VertexPoset ps = qv::vertex_poset(q_a3_sigma3());
  CHECK(ps.leq(1, 2));
  CHECK(ps.leq(3, 2));
  CHECK_FALSE(ps.leq(1, 3));
  CHECK_FALSE(ps.leq(3, 1));
}

TEST_CASE("bypass detection against the Hasse diagram") {
  CHECK_FALSE(qv::has_bypass(q_a3()));
  CHECK_FALSE(qv::has_bypass(q_k2()));
  CHECK(qv::has_bypass(q_triangle()));

  CHECK(qv::to_digraph(q_a3()) == qv::hasse_diagram(qv::vertex_poset(q_a3())));
  CHECK_FALSE(qv::to_digraph(q_triangle()) ==
              qv::hasse_diagram(qv::vertex_poset(q_triangle())));
}

TEST_CASE("connectivity of full subgraphs") {
  CHECK(qv::connected_on(q_a3(), {1, 2, 3}));
  CHECK(qv::connected_on(q_a3(), {2, 3}));
  CHECK_FALSE(qv::connected_on(q_a3(), {1, 3}));
  CHECK(qv::connected_on(q_a3(), {}));
}
