// Small dense matrices over exact scalars, plus the fraction-free
// elimination (Montante/Bareiss, Gauss-Jordan variant) that kernels, ranks
// and cokernel projections are built on.
//
// The double-step update (p*a[i][j] - a[i][c]*a[p][j]) / prev stays in the
// integers, so elimination never touches rationals; rational input is
// row-scaled to integers first (which changes neither kernel nor row span).
#pragma once

#include "qv/numeric.hpp"

#include <cassert>
#include <initializer_list>
#include <vector>

namespace qv {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {
    assert(rows >= 0 && cols >= 0);
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    data_.reserve(size_t(rows_) * size_t(cols_));
    for (const auto& r : rows) {
      assert(int(r.size()) == cols_);
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[size_t(r) * size_t(cols_) + size_t(c)];
  }
  const T& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[size_t(r) * size_t(cols_) + size_t(c)];
  }

  bool operator==(const Matrix&) const = default;

  Matrix operator*(const Matrix& rhs) const {
    assert(cols_ == rhs.rows_);
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (v != T(0)) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using IMat = Matrix<Int>;
using QMat = Matrix<Rat>;

inline QMat to_rational(const IMat& m) {
  QMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

// Scale each row by the lcm of its denominators.  Kernel and row span are
// unchanged, entries become integers.
inline IMat clear_denominators(const QMat& m) {
  IMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = m(i, j);
      out(i, j) = numerator(q) * (l / denominator(q));
    }
  }
  return out;
}

// Fully reduced fraction-free echelon form.  On return every pivot entry
// equals `pivot` (always positive), pivot columns are zero elsewhere,
// non-pivot rows are zero.
struct Echelon {
  IMat m;
  Int pivot = 1;
  std::vector<int> pivot_cols;
  int rank() const { return int(pivot_cols.size()); }
};

inline Echelon montante(IMat a) {
  Echelon ech;
  Int prev = 1;
  int pivrow = 0;
  for (int col = 0; col < a.cols() && pivrow < a.rows(); ++col) {
    int sel = -1;
    for (int r = pivrow; r < a.rows(); ++r)
      if (a(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivrow)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(pivrow, j));
    Int p = a(pivrow, col);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == pivrow) continue;
      Int f = a(i, col);
      for (int j = 0; j < a.cols(); ++j) {
        Int num = p * a(i, j) - f * a(pivrow, j);
        assert(num % prev == 0);
        a(i, j) = num / prev;
      }
    }
    prev = p;
    ech.pivot_cols.push_back(col);
    ++pivrow;
  }
  // boost's checked rational constructor rejects negative denominators for
  // unbounded integers, so keep the pivot positive for rref's m/pivot.
  if (prev < 0) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    prev = -prev;
  }
  ech.m = std::move(a);
  ech.pivot = prev;
  return ech;
}

inline int rank(const QMat& m) { return montante(clear_denominators(m)).rank(); }

// Kernel basis as matrix columns.  Entries are integers, each column is
// gcd-normalized with its first nonzero entry positive, free columns are
// taken in ascending order; the result is deterministic.
inline QMat kernel_basis(const QMat& m) {
  const int n = m.cols();
  Echelon ech = montante(clear_denominators(m));
  std::vector<bool> is_pivot(n, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMat out(n, int(free_cols.size()));
  for (int t = 0; t < int(free_cols.size()); ++t) {
    std::vector<Int> v(n, Int(0));
    v[free_cols[t]] = ech.pivot;
    for (int i = 0; i < ech.rank(); ++i) v[ech.pivot_cols[i]] = -ech.m(i, free_cols[t]);
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) g = 1;
    Int sign = 1;
    for (const Int& x : v)
      if (x != 0) {
        sign = x < 0 ? -1 : 1;
        break;
      }
    g *= sign;
    for (int r = 0; r < n; ++r) out(r, t) = Rat(v[r] / g);
  }
  assert((to_rational(clear_denominators(m)) * out).is_zero());
  return out;
}

// Reduced row echelon form (unit pivots, zero rows dropped).
inline QMat rref(const QMat& m) {
  Echelon ech = montante(clear_denominators(m));
  QMat out(ech.rank(), m.cols());
  for (int i = 0; i < ech.rank(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(ech.m(i, j), ech.pivot);
  return out;
}

// A surjection pi with pi*m = 0 and ker(pi) = im(m): a concrete model of
// the cokernel of m.  Rows are indexed by the non-pivot coordinates of the
// column space in RREF coordinates.
inline QMat cokernel_projection(const QMat& m) {
  const int n = m.rows();
  QMat basis = rref(m.transpose());  // rows: RREF basis of the column space
  std::vector<int> pivots;
  {
    int c = 0;
    for (int i = 0; i < basis.rows(); ++i) {
      while (c < n && basis(i, c) == 0) ++c;
      assert(c < n);
      pivots.push_back(c);
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_coords;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);

  QMat pi(int(free_coords.size()), n);
  for (int t = 0; t < int(free_coords.size()); ++t) {
    pi(t, free_coords[t]) = 1;
    for (int i = 0; i < int(pivots.size()); ++i) pi(t, pivots[i]) = -basis(i, free_coords[t]);
  }
  assert((pi * m).is_zero());
  return pi;
}

inline QMat hstack(const QMat& a, const QMat& b) {
  assert(a.rows() == b.rows());
  QMat out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline QMat vstack(const QMat& a, const QMat& b) {
  assert(a.cols() == b.cols());
  QMat out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

inline QMat block(const QMat& m, int row0, int col0, int rows, int cols) {
  assert(row0 + rows <= m.rows() && col0 + cols <= m.cols());
  QMat out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = m(row0 + i, col0 + j);
  return out;
}

}  // namespace qv
