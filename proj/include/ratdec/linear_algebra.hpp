#pragma once

// Exact dense linear algebra over a field: row reduction, determinants and
// nullspaces. Matrices are small here (Sylvester matrices, Moebius and Pade
// systems), so plain Gauss-Jordan elimination is used.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ratdec {

template <class K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == K(0)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const K inv = K(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == K(0)) continue;
      const K f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  K det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == K(0)) ++p;
    if (p == n) return K(0);
    if (p != col) {
      m.swap_rows(p, col);
      det = -det;
    }
    det *= m(col, col);
    const K inv = K(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == K(0)) continue;
      const K f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

}  // namespace ratdec
