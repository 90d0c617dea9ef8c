#pragma once

#include <cassert>
#include <vector>

namespace diagalg {

// Dense matrix over a field-like type K (needs K(long), + - * /, ==, is_zero
// detectable via == K(0)).
template <class K>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, K(0)) {}
  K& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const K& at(int i, int j) const { return a[(size_t)i * cols + j]; }
  bool operator==(const Matrix& o) const = default;

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols == o.rows);
    Matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const K& v = at(i, k);
        if (v == K(0)) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) = r.at(i, j) + v * o.at(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
    return r;
  }
  Matrix operator*(const K& v) const {
    Matrix r = *this;
    for (auto& x : r.a) x = x * v;
    return r;
  }
  Matrix transposed() const {
    Matrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  bool is_zero() const {
    for (auto& x : a)
      if (!(x == K(0))) return false;
    return true;
  }
  std::vector<K> apply(const std::vector<K>& v) const {
    assert((int)v.size() == cols);
    std::vector<K> r(rows, K(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!(at(i, j) == K(0))) r[i] = r[i] + at(i, j) * v[j];
    return r;
  }
};

// In-place row echelon reduction; returns rank.  Exact over any field K.
template <class K>
int echelonize(Matrix<K>& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!(m.at(i, col) == K(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    K inv = K(1) / m.at(rank, col);
    for (int j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      K f = m.at(i, col);
      if (f == K(0)) continue;
      for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class K>
int matrix_rank(Matrix<K> m) {
  return echelonize(m);
}

// Inverse of a square full-rank matrix via elimination on [m | I].
template <class K>
Matrix<K> matrix_inverse(const Matrix<K>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Matrix<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = K(1);
  }
  int rank = echelonize(aug);
  assert(rank == n);
  Matrix<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

template <class K>
K matrix_det(Matrix<K> m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  K det = K(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!(m.at(i, col) == K(0))) {
        piv = i;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = K(0) - det;
    }
    det = det * m.at(col, col);
    K inv = K(1) / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      K f = m.at(i, col) * inv;
      if (f == K(0)) continue;
      for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return det;
}

// Basis of the right null space (vectors v with M v = 0), echelon-derived.
template <class K>
std::vector<std::vector<K>> null_space(Matrix<K> m) {
  int rank = echelonize(m);
  std::vector<int> pivot_col(rank), is_pivot(m.cols, -1);
  for (int i = 0; i < rank; ++i) {
    int c = 0;
    while (c < m.cols && m.at(i, c) == K(0)) ++c;
    pivot_col[i] = c;
    is_pivot[c] = i;
  }
  std::vector<std::vector<K>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c] >= 0) continue;
    std::vector<K> v(m.cols, K(0));
    v[c] = K(1);
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = K(0) - m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental echelon span for membership/closure computations.
template <class K>
struct EchelonSpan {
  int dim;
  std::vector<std::vector<K>> rows;  // reduced rows, unit pivots
  std::vector<int> pivots;

  explicit EchelonSpan(int d) : dim(d) {}
  int rank() const { return (int)rows.size(); }

  // Reduces v against the span in place; returns pivot column or -1 if v in span.
  int reduce(std::vector<K>& v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      const K& c = v[pivots[i]];
      if (c == K(0)) continue;
      K f = c;
      const auto& r = rows[i];
      for (int j = 0; j < dim; ++j)
        if (!(r[j] == K(0))) v[j] = v[j] - f * r[j];
    }
    for (int j = 0; j < dim; ++j)
      if (!(v[j] == K(0))) return j;
    return -1;
  }

  // Returns true if v enlarged the span.
  bool insert(std::vector<K> v) {
    int p = reduce(v);
    if (p < 0) return false;
    K inv = K(1) / v[p];
    for (auto& x : v) x = x * inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  bool contains(std::vector<K> v) const { return reduce(v) < 0; }
};

}  // namespace diagalg
