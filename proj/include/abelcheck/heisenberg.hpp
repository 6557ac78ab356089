#pragma once

// Heisenberg group H_d acting on k[x_0..x_{d-1}]:
//   sigma(x_i) = x_{i-1},  tau(x_i) = xi^{-i} x_i,  iota(x_i) = x_{-i}.
// Also the quadric matrix R, the odd eigenspace chart and the Moore matrix.

#include <optional>
#include <stdexcept>
#include <vector>

#include "abelcheck/exactnum.hpp"
#include "abelcheck/linalg.hpp"
#include "abelcheck/mpoly.hpp"
#include "abelcheck/pfaffian.hpp"

namespace abelcheck {

using QPoly = SparsePoly<Rational>;
using CPoly = SparsePoly<CycloNum>;

inline std::size_t mod_index(long i, long d) { return static_cast<std::size_t>(((i % d) + d) % d); }

class HeisenbergContext {
 public:
  explicit HeisenbergContext(int d) : d_(d), xi_(CycloNum::root(d, 1)) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("Heisenberg level must be odd and >= 3");
  }
  int d() const { return d_; }
  const CycloNum& xi() const { return xi_; }
  CycloNum one() const { return CycloNum::from_rational(d_, Rational(1)); }
  std::size_t half() const { return static_cast<std::size_t>((d_ + 1) / 2); }

 private:
  int d_;
  CycloNum xi_;
};

enum class Gen { sigma, sigma_inv, tau, tau_inv, iota };
/// A word g_1 g_2 ... g_k acts as the composite g_1 o g_2 o ... o g_k.
using GroupWord = std::vector<Gen>;

namespace detail {

// x_i -> scale(i) * x_{target(i)}, a monomial-preserving automorphism.
template <class K, class Target, class Weight>
SparsePoly<K> monomial_action(const SparsePoly<K>& f, std::size_t d, Target target, Weight weight) {
  SparsePoly<K> out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g(e.size(), 0);
    long w = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (e[i] == 0) continue;
      g[target(i)] = static_cast<std::uint16_t>(g[target(i)] + e[i]);
      w += weight(i) * static_cast<long>(e[i]);
    }
    out.add_term(g, w == 0 ? c : c * CycloNum::root(c.order(), w));
  }
  return out;
}

}  // namespace detail

inline CPoly apply_generator(const HeisenbergContext& ctx, const CPoly& f, Gen g) {
  const long d = ctx.d();
  if (f.nvars() != static_cast<std::size_t>(d)) throw std::invalid_argument("polynomial not in the d-variable ring");
  auto same = [](std::size_t i) { return i; };
  auto none = [](std::size_t) { return 0L; };
  switch (g) {
    case Gen::sigma:
      return detail::monomial_action(f, d, [d](std::size_t i) { return mod_index(static_cast<long>(i) - 1, d); }, none);
    case Gen::sigma_inv:
      return detail::monomial_action(f, d, [d](std::size_t i) { return mod_index(static_cast<long>(i) + 1, d); }, none);
    case Gen::tau:
      return detail::monomial_action(f, d, same, [](std::size_t i) { return -static_cast<long>(i); });
    case Gen::tau_inv:
      return detail::monomial_action(f, d, same, [](std::size_t i) { return static_cast<long>(i); });
    case Gen::iota:
      return detail::monomial_action(f, d, [d](std::size_t i) { return mod_index(-static_cast<long>(i), d); }, none);
  }
  throw std::logic_error("unknown generator");
}

inline CPoly apply_group(const HeisenbergContext& ctx, const CPoly& f, const GroupWord& w) {
  CPoly out = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_generator(ctx, out, *it);
  return out;
}

inline CPoly to_cyclo(const QPoly& f, int order) {
  return lift(f, CycloNum::from_rational(order, Rational(1)));
}

/// R_ij = x_{j+i} x_{j-i}, 0 <= i <= (d-1)/2, 0 <= j < d.
inline std::vector<std::vector<QPoly>> build_R(const HeisenbergContext& ctx) {
  const long d = ctx.d();
  std::vector<std::vector<QPoly>> r(ctx.half(), std::vector<QPoly>(static_cast<std::size_t>(d)));
  for (long i = 0; i < static_cast<long>(ctx.half()); ++i)
    for (long j = 0; j < d; ++j) {
      Exponent e(static_cast<std::size_t>(d), 0);
      ++e[mod_index(j + i, d)];
      ++e[mod_index(j - i, d)];
      r[i][j] = QPoly::monomial(e, Rational(1));
    }
  return r;
}

/// The d quadrics of v.R.
inline std::vector<CPoly> row_combination(const HeisenbergContext& ctx, const std::vector<std::vector<QPoly>>& r,
                                          const std::vector<CycloNum>& v) {
  if (v.size() != r.size()) throw std::invalid_argument("row vector length mismatch");
  std::vector<CPoly> out(r[0].size(), CPoly(static_cast<std::size_t>(ctx.d())));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < r[i].size(); ++j) out[j] += to_cyclo(r[i][j], ctx.d()).scaled(v[i]);
  }
  return out;
}

namespace detail {

// Coefficient rows of homogeneous polynomials of a common degree.
inline Matrix<CycloNum> coefficient_rows(const std::vector<CPoly>& polys, std::size_t nvars, unsigned degree,
                                         const CycloNum& zero) {
  const auto basis = graded_monomials(nvars, degree);
  std::map<Exponent, std::size_t, GrevlexGreater> col;
  for (std::size_t k = 0; k < basis.size(); ++k) col.emplace(basis[k], k);
  Matrix<CycloNum> rows;
  for (const auto& p : polys) {
    std::vector<CycloNum> row(basis.size(), zero);
    for (const auto& [e, c] : p.terms()) {
      auto it = col.find(e);
      if (it == col.end()) throw std::invalid_argument("polynomial not homogeneous of the expected degree");
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// True iff span(polys) is carried into itself by sigma and tau.
inline bool span_is_subrep(const HeisenbergContext& ctx, const std::vector<CPoly>& polys) {
  std::vector<CPoly> nonzero;
  for (const auto& p : polys)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return true;
  const unsigned deg = nonzero.front().degree();
  const std::size_t n = static_cast<std::size_t>(ctx.d());
  const CycloNum zero(ctx.d());
  const std::size_t base = rank(detail::coefficient_rows(nonzero, n, deg, zero));
  std::vector<CPoly> all = nonzero;
  for (const auto& p : nonzero) {
    all.push_back(apply_generator(ctx, p, Gen::sigma));
    all.push_back(apply_generator(ctx, p, Gen::tau));
  }
  return rank(detail::coefficient_rows(all, n, deg, zero)) == base;
}

inline bool row_span_is_subrep(const HeisenbergContext& ctx, const std::vector<CycloNum>& v) {
  bool any = false;
  for (const auto& c : v) any = any || !c.is_zero();
  if (!any) throw std::invalid_argument("row_span_is_subrep needs v != 0");
  return span_is_subrep(ctx, row_combination(ctx, build_R(ctx), v));
}

/// Chart on an eigenspace of iota: x_{d-k} = eps * x_k (and x_0 = 0 when
/// eps = -1). Restricted polynomials live in (d+1)/2 variables x_0..x_m so
/// that indices keep their names.
struct PminusChart {
  int d;
  int eps;

  std::size_t nvars() const { return static_cast<std::size_t>((d + 1) / 2); }

  std::map<std::size_t, QPoly> substitution() const {
    std::map<std::size_t, QPoly> m;
    const std::size_t n = nvars(), half = static_cast<std::size_t>((d - 1) / 2);
    m[0] = eps < 0 ? QPoly(n) : QPoly::variable(n, 0, Rational(1));
    for (std::size_t k = 1; k <= half; ++k) {
      m[k] = QPoly::variable(n, k, Rational(1));
      m[static_cast<std::size_t>(d) - k] = QPoly::variable(n, k, Rational(eps));
    }
    return m;
  }

  QPoly restrict(const QPoly& f) const { return substitute(f, substitution(), nvars(), Rational(1), true); }

  /// Coordinates (x_0..x_m) of a point of P^{d-1} lying on the eigenspace.
  template <class K>
  std::optional<std::vector<K>> restrict_point(const std::vector<K>& p) const {
    if (p.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("point has wrong dimension");
    for (std::size_t k = 1; k < p.size(); ++k) {
      K expect = p[k];
      if (eps < 0) expect = -expect;
      if (!(p[static_cast<std::size_t>(d) - k] == expect)) return std::nullopt;
    }
    if (eps < 0 && !is_zero(p[0])) return std::nullopt;
    return std::vector<K>(p.begin(), p.begin() + static_cast<long>(nvars()));
  }
};

/// The square block of R on columns 0..(d-1)/2 restricted to the chart;
/// nullopt when the result is not antisymmetric.
inline std::optional<SkewMatrix<QPoly>> try_restrict_to_pminus(const std::vector<std::vector<QPoly>>& r,
                                                               const PminusChart& chart) {
  const std::size_t n = r.size();
  std::vector<std::vector<QPoly>> block(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) block[i][j] = chart.restrict(r[i][j]);
  try {
    return SkewMatrix<QPoly>::from_rows(block, QPoly(chart.nvars()));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

inline SkewMatrix<QPoly> restrict_to_pminus(const std::vector<std::vector<QPoly>>& r, const PminusChart& chart) {
  auto s = try_restrict_to_pminus(r, chart);
  if (!s) throw std::domain_error("restricted block is not antisymmetric; wrong eigenspace sign");
  return *s;
}

/// The sign for which the restricted block is antisymmetric.
inline PminusChart calibrate_pminus(const HeisenbergContext& ctx) {
  const auto r = build_R(ctx);
  std::optional<PminusChart> found;
  for (int eps : {+1, -1}) {
    PminusChart c{ctx.d(), eps};
    if (try_restrict_to_pminus(r, c)) {
      if (found) throw std::logic_error("both eigenspace signs give an antisymmetric block");
      found = c;
    }
  }
  if (!found) throw std::logic_error("no eigenspace sign gives an antisymmetric block");
  return *found;
}

/// M(x, y)_ij = x_{5(i+j)} y_{5(i-j)} on Z/9.
template <class K>
SkewMatrix<SparsePoly<K>> build_moore(const std::vector<K>& y) {
  constexpr long d = 9;
  if (y.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("Moore matrix needs 9 coordinates");
  std::vector<std::vector<SparsePoly<K>>> rows(d, std::vector<SparsePoly<K>>(d, SparsePoly<K>(d)));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      const K& c = y[mod_index(5 * (i - j), d)];
      if (is_zero(c)) continue;
      Exponent e(d, 0);
      e[mod_index(5 * (i + j), d)] = 1;
      rows[i][j] = SparsePoly<K>::monomial(e, c);
    }
  return SkewMatrix<SparsePoly<K>>::from_rows(rows, SparsePoly<K>(d));
}

}  // namespace abelcheck
