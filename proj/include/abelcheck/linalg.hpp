#pragma once

// Linear algebra over an exact field K (Rational, CycloNum, Fq).

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abelcheck/exactnum.hpp"

namespace abelcheck {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Sparse row: (column, nonzero value) sorted by column.
template <class K>
using SparseRow = std::vector<std::pair<std::size_t, K>>;

namespace detail {

// r - c*p, both sorted; drops cancelled entries.
template <class K>
SparseRow<K> axpy_row(const SparseRow<K>& r, const K& c, const SparseRow<K>& p) {
  SparseRow<K> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(c * p[j].second));
      ++j;
    } else {
      K v = r[i].second - c * p[j].second;
      if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Rank of a set of sparse rows by incremental elimination on leading columns.
template <class K>
std::size_t sparse_rank(const std::vector<SparseRow<K>>& rows) {
  std::map<std::size_t, SparseRow<K>> pivots;
  for (SparseRow<K> r : rows) {
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const K inv = one_like(r.front().second) / r.front().second;
        for (auto& [c, v] : r) v *= inv;
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const K c = r.front().second;
      r = detail::axpy_row(r, c, it->second);
    }
  }
  return pivots.size();
}

/// Row echelon form in place; returns the pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && is_zero(m[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const K inv = one_like(m[r][c]) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const K f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return row_reduce(m).size();
}

template <class K>
K determinant(Matrix<K> m, const K& one) {
  const std::size_t n = m.size();
  K det = one;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t sel = c;
    while (sel < n && is_zero(m[sel][c])) ++sel;
    if (sel == n) return zero_like(one);
    if (sel != c) {
      std::swap(m[c], m[sel]);
      det = -det;
    }
    det *= m[c][c];
    const K inv = one / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      const K f = m[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Basis of {x : m x = 0}.
template <class K>
Matrix<K> kernel_basis(Matrix<K> m, std::size_t cols, const K& one) {
  const auto piv = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  Matrix<K> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols, zero_like(one));
    v[f] = one;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b, const K& zero) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<K> out(n, std::vector<K>(m, zero));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

}  // namespace abelcheck
