#pragma once

// Skew-symmetric matrices over a commutative ring R and their Pfaffians.
// Convention: Pf([[0,a],[-a,0]]) = a, expanded along the first remaining row
// with sign (-1)^(p+1) for the p-th remaining index (0-based position).

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelcheck/exactnum.hpp"
#include "abelcheck/mpoly.hpp"

namespace abelcheck {

/// Sign c in M * adj(M) = c * Pf(M) * I, fixed by the generic 4x4 expansion.
inline constexpr int kAdjugateSign = +1;

template <class R>
class SkewMatrix {
 public:
  SkewMatrix(std::size_t n, R zero) : n_(n), zero_(zero), upper_(n * (n - 1) / 2, zero) {
    if (n < 2) throw std::invalid_argument("skew matrix needs size >= 2");
  }

  /// Validates a full square array: zero diagonal, a_ji = -a_ij.
  static SkewMatrix from_rows(const std::vector<std::vector<R>>& rows, const R& zero) {
    SkewMatrix m(rows.size(), zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("skew matrix rows must be square");
      if (!is_zero(rows[i][i])) throw std::invalid_argument("nonzero diagonal entry at " + std::to_string(i));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (!is_zero(rows[i][j] + rows[j][i]))
          throw std::invalid_argument("matrix not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        m.set(i, j, rows[i][j]);
      }
    return m;
  }

  std::size_t size() const { return n_; }
  const R& zero() const { return zero_; }

  R at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("skew matrix index");
    if (i == j) return zero_;
    return i < j ? upper_[slot(i, j)] : -upper_[slot(j, i)];
  }
  R operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  void set(std::size_t i, std::size_t j, R v) {
    if (i == j || i >= n_ || j >= n_) throw std::out_of_range("skew matrix index");
    if (i < j) upper_[slot(i, j)] = std::move(v);
    else upper_[slot(j, i)] = -v;
  }

  std::vector<std::vector<R>> dense() const {
    std::vector<std::vector<R>> out(n_, std::vector<R>(n_, zero_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
  }

  /// Principal submatrix on the given (sorted, distinct) indices.
  SkewMatrix principal(const std::vector<std::size_t>& idx) const {
    SkewMatrix out(idx.size(), zero_);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) out.set(a, b, at(idx[a], idx[b]));
    return out;
  }

  template <class F>
  auto map(F&& f) const -> SkewMatrix<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    SkewMatrix<S> out(n_, f(zero_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) out.set(i, j, f(upper_[slot(i, j)]));
    return out;
  }

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.n_ == b.n_ && a.upper_ == b.upper_; }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

  std::size_t n_;
  R zero_;
  std::vector<R> upper_;
};

namespace detail {

template <class R>
class PfaffianMemo {
 public:
  explicit PfaffianMemo(const SkewMatrix<R>& m) : m_(m) {
    if (m.size() > 30) throw std::invalid_argument("Pfaffian memo supports size <= 30");
  }

  R of_mask(std::uint32_t mask) {
    const int count = std::popcount(mask);
    if (count % 2 != 0) throw std::invalid_argument("Pfaffian of odd-size matrix");
    if (count == 0) return one();
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int first = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << first);
    R acc = m_.zero();
    int pos = 0;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = std::countr_zero(r);
      ++pos;
      const R& e = m_.at(first, j);
      if (is_zero(e)) continue;
      const R sub = of_mask(rest & ~(std::uint32_t{1} << j));
      if (pos % 2 == 1) acc += e * sub;
      else acc -= e * sub;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  std::uint32_t full() const { return m_.size() >= 32 ? ~0u : ((std::uint32_t{1} << m_.size()) - 1); }

 private:
  // The empty Pfaffian is 1; for polynomial rings we build it from an entry.
  R one() {
    if (!one_) one_ = unit_of(m_);
    return *one_;
  }
  static R unit_of(const SkewMatrix<R>& m);

  const SkewMatrix<R>& m_;
  std::unordered_map<std::uint32_t, R> memo_;
  std::optional<R> one_;
};

}  // namespace detail

/// Multiplicative identity of the entry ring. Specialize via overloads of
/// ring_one(const R& zero).
inline Rational ring_one(const Rational&) { return Rational(1); }
inline CycloNum ring_one(const CycloNum& z) { return one_like(z); }
inline Fq ring_one(const Fq& z) { return one_like(z); }

template <class K>
struct is_sparse_poly : std::false_type {};
template <class K>
struct is_sparse_poly<SparsePoly<K>> : std::true_type {};

template <class R>
R detail::PfaffianMemo<R>::unit_of(const SkewMatrix<R>& m) {
  if constexpr (is_sparse_poly<R>::value) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const R e = m.at(i, j);
        if (!e.is_zero()) return R::constant(e.nvars(), one_like(e.terms().begin()->second));
      }
    throw std::domain_error("cannot infer the unit of an all-zero polynomial matrix");
  } else {
    return ring_one(m.zero());
  }
}

template <class R>
R pfaffian(const SkewMatrix<R>& m) {
  if (m.size() % 2 != 0) throw std::invalid_argument("Pfaffian of odd-size matrix");
  detail::PfaffianMemo<R> memo(m);
  return memo.of_mask(memo.full());
}

/// Pfaffian of the principal submatrix on the complement of `deleted`.
template <class R>
R sub_pfaffian(const SkewMatrix<R>& m, const std::set<std::size_t>& deleted) {
  for (auto d : deleted)
    if (d >= m.size()) throw std::out_of_range("deleted index outside matrix");
  if ((m.size() - deleted.size()) % 2 != 0) throw std::invalid_argument("sub-Pfaffian of odd-size complement");
  detail::PfaffianMemo<R> memo(m);
  std::uint32_t mask = memo.full();
  for (auto d : deleted) mask &= ~(std::uint32_t{1} << d);
  return memo.of_mask(mask);
}

/// Pfaffian of the principal submatrix on `kept` indices.
template <class R>
R pfaffian_on(const SkewMatrix<R>& m, const std::vector<std::size_t>& kept) {
  std::set<std::size_t> deleted;
  for (std::size_t i = 0; i < m.size(); ++i) deleted.insert(i);
  for (auto k : kept) deleted.erase(k);
  return sub_pfaffian(m, deleted);
}

/// M*_ij = (-1)^(i+j) Pf^{ij}(M) for i < j, extended antisymmetrically.
template <class R>
SkewMatrix<R> pfaffian_adjugate(const SkewMatrix<R>& m) {
  if (m.size() % 2 != 0) throw std::invalid_argument("Pfaffian adjugate of odd-size matrix");
  detail::PfaffianMemo<R> memo(m);
  SkewMatrix<R> out(m.size(), m.zero());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      R p = memo.of_mask(memo.full() & ~(std::uint32_t{1} << i) & ~(std::uint32_t{1} << j));
      out.set(i, j, (i + j) % 2 == 0 ? p : -p);
    }
  return out;
}

/// v_i = (-1)^i Pf(M minus row/column i); M v = 0 identically.
template <class R>
std::vector<R> odd_kernel_vector(const SkewMatrix<R>& m) {
  if (m.size() % 2 != 1) throw std::invalid_argument("odd_kernel_vector needs odd size");
  detail::PfaffianMemo<R> memo(m);
  std::vector<R> v;
  for (std::size_t i = 0; i < m.size(); ++i) {
    R p = memo.of_mask(memo.full() & ~(std::uint32_t{1} << i));
    v.push_back(i % 2 == 0 ? p : -p);
  }
  return v;
}

template <class R>
std::vector<std::vector<R>> dense_product(const std::vector<std::vector<R>>& a, const std::vector<std::vector<R>>& b,
                                          const R& zero) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  std::vector<std::vector<R>> out(n, std::vector<R>(m, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(b[l][j])) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

template <class R>
std::vector<R> apply(const SkewMatrix<R>& m, const std::vector<R>& v) {
  if (v.size() != m.size()) throw std::invalid_argument("vector length mismatch");
  std::vector<R> out(m.size(), m.zero());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      const R e = m.at(i, j);
      if (!is_zero(e) && !is_zero(v[j])) out[i] += e * v[j];
    }
  return out;
}

}  // namespace abelcheck
