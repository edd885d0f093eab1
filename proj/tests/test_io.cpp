#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "qv/io.hpp"

using namespace fixtures;
using qv::errc;
using qv::QMat;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

errc parse_code(const std::string& text) {
  try {
    qv::parse_quiver(text);
  } catch (const qv::error& e) {
    return e.code();
  }
  return errc::internal;
}

std::string parse_message(const std::string& text) {
  try {
    qv::parse_quiver(text);
  } catch (const qv::error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("quiver files parse") {
  std::string text =
      "# a three vertex chain\n"
      "vertices: 1 2 3\n"
      "\n"
      "d: 1=1 2=1 3=1\n"
      "edge: 1 2 b=1,1   # unit valuation\n"
      "arrow: 1 -> 2\n"
      "edge: 2 3 b=1,1\n"
      "arrow: 2 -> 3\n";
  CHECK(qv::parse_quiver(text) == q_a3());

  std::string b2 =
      "vertices: 1 2\n"
      "d: 1=2 2=1\n"
      "edge: 1 2 b=1,2\n"
      "arrow: 1 -> 2\n";
  CHECK(qv::parse_quiver(b2) == q_b2());
}

TEST_CASE("quiver serialization round-trips and is byte-stable") {
  for (const auto& q : {q_a3(), q_a3_sigma3(), q_a2(), q_k2(), q_b2(), q_triangle()})
    CHECK(qv::parse_quiver(qv::serialize_quiver(q)) == q);

  CHECK(qv::serialize_quiver(q_a3()) ==
        "vertices: 1 2 3\n"
        "d: 1=1 2=1 3=1\n"
        "edge: 1 2 b=1,1\n"
        "arrow: 1 -> 2\n"
        "edge: 2 3 b=1,1\n"
        "arrow: 2 -> 3\n");
}

TEST_CASE("quiver parse errors carry line numbers") {
  CHECK(parse_code("vertices: 1 x\n") == errc::parse);
  CHECK(parse_message("vertices: 1 2\nd: 1=1 2=1\nedge: 1 2 b=1,1\narrow: 1 => 2\n")
            .find("line 4") != std::string::npos);

  CHECK(parse_message("d: 1=1\n").find("vertices") != std::string::npos);
  CHECK(parse_message("vertices: 1 2\nedge: 1 2 b=1,1\narrow: 1 -> 2\n").find("\"d\"") !=
        std::string::npos);

  CHECK(parse_code("vertices: 1\nvertices: 2\nd: 1=1\n") == errc::parse);
  CHECK(parse_code("vertices:\nd: 1=1\n") == errc::parse);
  CHECK(parse_code("vertices: 1 2\nd: 1=1 2=1\nedge: 1 2 b=1,1\n") == errc::parse);
  CHECK(parse_code("vertices: 1 2\nd: 1=1 2=1\nedge: 1 2 b=1,1\narrow: 1 -> 2\narrow: 2 -> 1\n") ==
        errc::parse);
  CHECK(parse_code("vertices: 1 2 3\nd: 1=1 2=1 3=1\nedge: 1 2 b=1,1\narrow: 1 -> 2\n"
                   "arrow: 2 -> 3\n") == errc::parse);  // arrow without edge
  CHECK(parse_code("vertices: 1 2\nd: 1=1 2=1\nedge: 1 2 b=1\narrow: 1 -> 2\n") == errc::parse);
  CHECK(parse_code("vertices: 1 2\nd: 1=1 2=1\nedge: 1 2 b=1,1 junk\narrow: 1 -> 2\n") ==
        errc::parse);
  CHECK(parse_code("grape: 1 2\n") == errc::parse);
  CHECK(parse_code("no colon here\n") == errc::parse);

  // well-formed text, bad quiver: the validator reports, not the parser
  CHECK(parse_code("vertices: 1 2 3\nd: 1=1 2=1 3=1\n"
                   "edge: 1 2 b=1,1\narrow: 1 -> 2\n"
                   "edge: 2 3 b=1,1\narrow: 2 -> 3\n"
                   "edge: 1 3 b=1,1\narrow: 3 -> 1\n") == errc::oriented_cycle);
}

TEST_CASE("representation files parse") {
  qv::ValuedQuiver q = q_k2();
  std::string text =
      "# generic rank three map\n"
      "dim: 1=2 2=3\n"
      "map: 1->2 = [[1,0,0,0],[0,1,1,0],[0,0,1,1]]\n";
  auto rep = qv::parse_representation(text, q);
  CHECK(rep.dims() == std::map<int, int>{{1, 2}, {2, 3}});
  CHECK(rep.map(1, 2) == QMat{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});

  // rationals and negative entries
  auto r2 = qv::parse_representation("dim: 1=1 2=1\nmap: 1->2 = [[1/2,-3]]\n", q);
  CHECK(r2.map(1, 2)(0, 0) == qv::Rat(1) / 2);
  CHECK(r2.map(1, 2)(0, 1) == qv::Rat(-3));

  // omitted maps are zero
  auto r3 = qv::parse_representation("dim: 1=1 2=1\n", q);
  CHECK(r3.map(1, 2).is_zero());
}

TEST_CASE("representation parse and validation errors") {
  qv::ValuedQuiver q = q_k2();
  auto code_of = [&](const std::string& text) {
    try {
      qv::parse_representation(text, q);
    } catch (const qv::error& e) {
      return e.code();
    }
    return errc::internal;
  };
  CHECK(code_of("map: 1->2 = [[1,0]]\n") == errc::parse);  // no dim section
  CHECK(code_of("dim: 1=1 2=1\nmap: 1->2 = [[1,0]]\nmap: 1->2 = [[0,1]]\n") == errc::parse);
  CHECK(code_of("dim: 1=1 2=1\nmap: 1->2 = [[1,2],[3]]\n") == errc::parse);
  CHECK(code_of("dim: 1=1 2=1\nmap: 1->2 = 1,2\n") == errc::parse);
  CHECK(code_of("dim: 1=1 2=1\nmap: 1->2 = [[1,1/0]]\n") == errc::parse);
  CHECK(code_of("dim: 1=1 2=1\nmap: 1->2 = [[1]]\n") == errc::shape_mismatch);
  CHECK(code_of("dim: 1=1\n") == errc::bad_argument);  // vertex 2 has no dimension
  CHECK(code_of("dim: 1=1 2=1\nmap: 2->1 = [[1,1]]\n") == errc::bad_argument);
}

TEST_CASE("representation serialization round-trips") {
  qv::ValuedQuiver q = q_a3();
  qv::Representation rep(q, {{1, 1}, {2, 1}, {3, 0}}, {{{1, 2}, QMat{{1}}}});
  std::string text = qv::serialize_representation(rep);
  CHECK(text ==
        "dim: 1=1 2=1 3=0\n"
        "map: 1->2 = [[1]]\n");  // the 0x1 map at 2->3 is omitted
  auto back = qv::parse_representation(text, q);
  CHECK(back.dims() == rep.dims());
  CHECK(back.map(1, 2) == rep.map(1, 2));

  qv::Representation half(q_k2(), {{1, 1}, {2, 1}}, {{{1, 2}, QMat{{qv::Rat(1) / 2, 1}}}});
  auto again = qv::parse_representation(qv::serialize_representation(half), q_k2());
  CHECK(again.map(1, 2) == half.map(1, 2));
}

TEST_CASE("sequence arguments parse") {
  CHECK(qv::parse_sequence("3,2,3") == std::vector<int>{3, 2, 3});
  CHECK(qv::parse_sequence(" 3 , 2 ") == std::vector<int>{3, 2});
  CHECK(qv::parse_sequence("").empty());
  CHECK(qv::parse_sequence("-").empty());
  CHECK(qv::parse_sequence("(empty)").empty());
  CHECK_THROWS_AS(qv::parse_sequence("3,,2"), qv::error);
  CHECK_THROWS_AS(qv::parse_sequence("a"), qv::error);
}

TEST_CASE("DOT output for quivers") {
  CHECK(qv::emit_dot(q_a3()) ==
        "digraph quiver {\n"
        "  rankdir=LR;\n"
        "  v1 [label=\"1\"];\n"
        "  v2 [label=\"2\"];\n"
        "  v3 [label=\"3\"];\n"
        "  v1 -> v2;\n"
        "  v2 -> v3;\n"
        "}\n");
  // non-unit valuations are labeled
  CHECK(qv::emit_dot(q_k2()).find("v1 -> v2 [label=\"(2,2)\"];") != std::string::npos);
  CHECK(qv::emit_dot(q_b2()).find("[label=\"(1,2)\"]") != std::string::npos);
}

TEST_CASE("DOT output for slices and Hasse diagrams") {
  std::string slice = qv::emit_dot(qv::build_slice(q_a3(), 1));
  CHECK(count_occurrences(slice, "[label=\"(") == 6);
  CHECK(count_occurrences(slice, " -> ") == 9);  // 6 arrows + 3 translations
  CHECK(count_occurrences(slice, "style=dashed") == 3);
  CHECK(slice.find("v0_1 -> v1_2;") != std::string::npos);
  CHECK(slice.find("v1_2 -> v0_2 [style=dashed];") != std::string::npos);

  std::string hasse = qv::emit_dot(qv::principal_hasse(q_a3(), 2));
  CHECK(count_occurrences(hasse, "[label=\"S(") == 6);
  CHECK(count_occurrences(hasse, "style=dashed") == 3);
  CHECK(hasse.find("s1_3 [label=\"S(1,3)\"];") != std::string::npos);
  CHECK(hasse.find("s1_3 -> s1_2;") != std::string::npos);
  CHECK(hasse.find("s2_3 -> s1_3 [style=dashed];") != std::string::npos);

  // determinism
  CHECK(slice == qv::emit_dot(qv::build_slice(q_a3(), 1)));
}
