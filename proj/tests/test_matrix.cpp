#include "qv/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

using qv::IMat;
using qv::Int;
using qv::QMat;
using qv::Rat;

TEST_CASE("fraction-free elimination finds rank and pivots") {
  IMat a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  qv::Echelon e = qv::montante(a);
  CHECK(e.rank() == 2);
  CHECK(e.pivot_cols == std::vector<int>{0, 1});

  CHECK(qv::montante(IMat::identity(4)).rank() == 4);
  CHECK(qv::montante(IMat(3, 5)).rank() == 0);
}

TEST_CASE("echelon rows stay integral and pivot columns are cleared") {
  IMat a{{2, 1, 1}, {4, 3, 1}, {6, 5, 1}};
  qv::Echelon e = qv::montante(a);
  for (int i = 0; i < e.rank(); ++i)
    for (int j = 0; j < e.rank(); ++j)
      CHECK(e.m(i, e.pivot_cols[j]) == (i == j ? e.pivot : Int(0)));
}

TEST_CASE("kernel basis is exact, normalized and deterministic") {
  QMat m{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  QMat k = qv::kernel_basis(m);
  REQUIRE(k.cols() == 1);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 0) == 0);
  CHECK(k(1, 0) == 1);
  CHECK(k(2, 0) == -1);
  CHECK(k(3, 0) == 1);
  CHECK((m * k).is_zero());
}

TEST_CASE("kernel of rational input matches the clearing of denominators") {
  QMat m(2, 3);
  m(0, 0) = Rat(1, 2);
  m(0, 1) = Rat(1, 3);
  m(0, 2) = Rat(1, 6);
  m(1, 0) = Rat(1);
  m(1, 1) = Rat(2, 3);
  m(1, 2) = Rat(1, 3);
  QMat k = qv::kernel_basis(m);
  CHECK(k.cols() == 3 - qv::rank(m));
  CHECK((m * k).is_zero());
  CHECK(qv::rank(k) == k.cols());
}

TEST_CASE("kernel edge shapes") {
  CHECK(qv::kernel_basis(QMat(0, 3)).cols() == 3);   // no constraints
  CHECK(qv::kernel_basis(QMat(3, 0)).cols() == 0);   // no unknowns
  CHECK(qv::kernel_basis(qv::to_rational(IMat::identity(3))).cols() == 0);
}

TEST_CASE("rref produces unit pivots") {
  QMat m{{2, 4, 2}, {1, 3, 3}};
  QMat r = qv::rref(m);
  REQUIRE(r.rows() == 2);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 1) == 0);
  CHECK(r(1, 0) == 0);
  CHECK(r(1, 1) == 1);
}

TEST_CASE("cokernel projection kills exactly the column span") {
  QMat m{{1, 0}, {0, 1}, {1, 1}};
  QMat pi = qv::cokernel_projection(m);
  REQUIRE(pi.rows() == 1);  // 3 - rank 2
  CHECK((pi * m).is_zero());
  CHECK(qv::rank(pi) == 1);

  // Stacking pi on top of a basis of im(m) must give full rank: ker pi = im m.
  QMat top = qv::vstack(pi, m.transpose());
  CHECK(qv::rank(top) == 3);
}

TEST_CASE("cokernel of a surjective map is zero-dimensional") {
  QMat m{{1, 0, 2}, {0, 1, 3}};
  CHECK(qv::cokernel_projection(m).rows() == 0);
}

TEST_CASE("stacking and blocks") {
  QMat a{{1, 2}, {3, 4}};
  QMat b{{5, 6}};
  QMat v = qv::vstack(a, b);
  REQUIRE(v.rows() == 3);
  CHECK(v(2, 1) == 6);
  QMat h = qv::hstack(a, a);
  REQUIRE(h.cols() == 4);
  CHECK(h(1, 3) == 4);
  QMat blk = qv::block(v, 1, 0, 2, 2);
  CHECK(blk(0, 0) == 3);
  CHECK(blk(1, 1) == 6);
}

TEST_CASE("multiplication handles zero-size operands") {
  QMat a(3, 0), b(0, 2);
  QMat p = a * b;
  CHECK(p.rows() == 3);
  CHECK(p.cols() == 2);
  CHECK(p.is_zero());
}

TEST_CASE("clear_denominators scales rows independently") {
  QMat m(1, 2);
  m(0, 0) = Rat(1, 2);
  m(0, 1) = Rat(2, 3);
  IMat c = qv::clear_denominators(m);
  CHECK(c(0, 0) == 3);
  CHECK(c(0, 1) == 4);
}
