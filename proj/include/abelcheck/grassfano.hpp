#pragma once

// Pluecker coordinates on Gr(2, 2m), rank strata of skew forms, the level-11
// kernel map via the Pfaffian adjugate, and the Klein cubic construction.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "abelcheck/heisenberg.hpp"
#include "abelcheck/linalg.hpp"
#include "abelcheck/mpoly.hpp"
#include "abelcheck/pfaffian.hpp"

namespace abelcheck {

/// Pf(M_Klein) = kKleinSign * sum x_i^2 x_{i+1}.
inline constexpr int kKleinSign = -1;
/// Pf(S) = kSexticSign * f6 for the restricted level-11 block.
inline constexpr int kSexticSign = +1;

/// Coordinates p_ab, 1 <= a < b <= n, with p_ba = -p_ab. Labels are 1-based.
template <class R>
class PluckerVector {
 public:
  PluckerVector(std::size_t n, R zero) : m_(n, std::move(zero)) {}
  explicit PluckerVector(SkewMatrix<R> m) : m_(std::move(m)) {}

  std::size_t ambient() const { return m_.size(); }
  R p(std::size_t a, std::size_t b) const { return m_.at(a - 1, b - 1); }
  void set(std::size_t a, std::size_t b, R v) { m_.set(a - 1, b - 1, std::move(v)); }
  const SkewMatrix<R>& as_skew() const { return m_; }
  const R& zero() const { return m_.zero(); }

  bool is_zero() const {
    for (std::size_t a = 1; a <= ambient(); ++a)
      for (std::size_t b = a + 1; b <= ambient(); ++b)
        if (!abelcheck::is_zero(p(a, b))) return false;
    return true;
  }

 private:
  SkewMatrix<R> m_;
};

/// p_ij = a_i b_j - a_j b_i.
template <class K>
PluckerVector<K> plucker_from_span(const std::vector<K>& a, const std::vector<K>& b, const K& zero) {
  if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("span rows must have equal length >= 2");
  PluckerVector<K> out(a.size(), zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) out.set(i + 1, j + 1, a[i] * b[j] - a[j] * b[i]);
  return out;
}

struct QuadIndex {
  std::size_t i, j, k, l;
};

inline std::vector<QuadIndex> quadruples(std::size_t n) {
  std::vector<QuadIndex> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l) out.push_back({i, j, k, l});
  return out;
}

/// p_ij p_kl - p_ik p_jl + p_il p_jk for every i<j<k<l.
template <class R>
std::vector<R> three_term_relations(const PluckerVector<R>& p) {
  std::vector<R> out;
  for (const auto& q : quadruples(p.ambient()))
    out.push_back(p.p(q.i, q.j) * p.p(q.k, q.l) - p.p(q.i, q.k) * p.p(q.j, q.l) + p.p(q.i, q.l) * p.p(q.j, q.k));
  return out;
}

template <class R>
bool is_decomposable(const PluckerVector<R>& p) {
  for (const auto& r : three_term_relations(p))
    if (!is_zero(r)) return false;
  return true;
}

/// For a nonzero decomposable vector, two rows spanning the plane;
/// nullopt if the vector is zero or not decomposable.
template <class K>
std::optional<std::array<std::vector<K>, 2>> reconstruct_span(const PluckerVector<K>& p) {
  const std::size_t n = p.ambient();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b) {
      if (is_zero(p.p(a, b))) continue;
      std::vector<K> u(n, p.zero()), w(n, p.zero());
      for (std::size_t k = 1; k <= n; ++k) {
        if (k != a) u[k - 1] = p.p(a, k);
        if (k != b) w[k - 1] = p.p(b, k);
      }
      // u ^ w = p_ab * p on decomposable input.
      const auto back = plucker_from_span(u, w, p.zero());
      const K scale = p.p(a, b);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          if (!(back.p(i, j) == p.p(i, j) * scale)) return std::nullopt;
      return std::array<std::vector<K>, 2>{u, w};
    }
  return std::nullopt;
}

struct StratumInfo {
  std::size_t rank;
  std::size_t k;  // smallest k with rank <= 2k; 0 only for the zero matrix
};

template <class K>
StratumInfo rank_stratum(const SkewMatrix<K>& h) {
  const std::size_t r = rank(h.dense());
  return {r, (r + 1) / 2};
}

/// Linear form sum c * p_ab on Pluecker coordinates.
struct PluckerTerm {
  int coeff;
  std::size_t a, b;
};
using PluckerForm = std::vector<PluckerTerm>;

struct LinearSection {
  std::vector<PluckerForm> forms;
  std::vector<std::string> names;

  template <class R>
  std::vector<R> evaluate(const PluckerVector<R>& p) const {
    std::vector<R> out;
    for (const auto& f : forms) {
      R acc = p.zero();
      for (const auto& t : f) acc += t.coeff > 0 ? p.p(t.a, t.b) : -p.p(t.a, t.b);
      out.push_back(acc);
    }
    return out;
  }
};

/// p23 + p15, p26 - p13, p14 + p35, p16 - p45, p46 + p12.
inline LinearSection v14_section() {
  return {{{{1, 2, 3}, {1, 1, 5}},
           {{1, 2, 6}, {-1, 1, 3}},
           {{1, 1, 4}, {1, 3, 5}},
           {{1, 1, 6}, {-1, 4, 5}},
           {{1, 4, 6}, {1, 1, 2}}},
          {"p23+p15", "p26-p13", "p14+p35", "p16-p45", "p46+p12"}};
}

/// Restricted level-11 block S in x_0..x_5 (x_0 unused).
inline SkewMatrix<QPoly> s_matrix_d11() {
  const HeisenbergContext ctx(11);
  return restrict_to_pminus(build_R(ctx), calibrate_pminus(ctx));
}

inline QPoly sextic_f6() { return pfaffian(s_matrix_d11()).scaled(Rational(kSexticSign)); }

/// p_ab = adj(S)_{a-1,b-1}.
inline PluckerVector<QPoly> theta_plucker_d11() { return PluckerVector<QPoly>(pfaffian_adjugate(s_matrix_d11())); }

enum class RelationStatus { identity, modulo_f6, fails };

inline const char* to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::identity: return "identity";
    case RelationStatus::modulo_f6: return "modulo_f6";
    case RelationStatus::fails: return "fails";
  }
  return "?";
}

/// Identity first, then divisibility by f6.
inline RelationStatus classify_relation(const QPoly& value, const QPoly& f6) {
  if (value.is_zero()) return RelationStatus::identity;
  return divide_exact(value, f6) ? RelationStatus::modulo_f6 : RelationStatus::fails;
}

inline QPoly klein_cubic() {
  return parse_poly("x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0", 5);
}

/// x_i^2 + 2 x_{i+1} x_{i+2}, i in Z/5.
inline std::vector<QPoly> jacobian_quadrics() {
  std::vector<QPoly> out;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto v = [](std::size_t k) { return "x" + std::to_string(k % 5); };
    out.push_back(parse_poly(v(i) + "^2 + 2*" + v(i + 1) + "*" + v(i + 2), 5));
  }
  return out;
}

inline QPoly partial_derivative(const QPoly& f, std::size_t var) {
  QPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent g(e);
    --g[var];
    out.add_term(g, c * Rational(e[var]));
  }
  return out;
}

struct KleinConstruction {
  std::vector<std::vector<Rational>> hyperplanes;  // 5 x 15, dual coordinates x_ab in label order
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  std::vector<std::vector<Rational>> dual_equations;  // annihilator of the hyperplane span
  SkewMatrix<QPoly> m;
  QPoly cubic;
};

/// The point sum t_r H_r of the dual P^4, written in x_0..x_4 through the
/// coordinate choice x0=x12, x2=x13, x1=x14, x4=x15, x3=x16.
inline KleinConstruction klein_from_hyperplanes() {
  const LinearSection sec = v14_section();
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = a + 1; b <= 6; ++b) {
      slot[{a, b}] = labels.size();
      labels.emplace_back(a, b);
    }
  std::vector<std::vector<Rational>> h(sec.forms.size(), std::vector<Rational>(labels.size(), Rational(0)));
  for (std::size_t r = 0; r < sec.forms.size(); ++r)
    for (const auto& t : sec.forms[r]) h[r][slot.at({t.a, t.b})] += Rational(t.coeff);

  // Coordinate x_ab of the generic point as a linear form in t_0..t_4.
  const std::size_t nt = sec.forms.size();
  std::vector<QPoly> coord(labels.size(), QPoly(nt));
  for (std::size_t c = 0; c < labels.size(); ++c)
    for (std::size_t r = 0; r < nt; ++r)
      if (!is_zero(h[r][c])) coord[c] += QPoly::variable(nt, r, Rational(1)).scaled(h[r][c]);

  // Solve x_k = coord(chosen_k) for t.
  const std::array<std::pair<std::size_t, std::size_t>, 5> chosen{{{1, 2}, {1, 4}, {1, 3}, {1, 6}, {1, 5}}};
  Matrix<Rational> a(nt, std::vector<Rational>(2 * nt, Rational(0)));
  for (std::size_t k = 0; k < nt; ++k) {
    const std::size_t c = slot.at(chosen[k]);
    for (std::size_t r = 0; r < nt; ++r) a[k][r] = h[r][c];
    a[k][nt + k] = 1;
  }
  const auto piv = row_reduce(a);
  if (piv.size() != nt || piv.back() != nt - 1) throw std::logic_error("chosen dual coordinates are dependent");
  std::map<std::size_t, QPoly> t_of_x;
  for (std::size_t r = 0; r < nt; ++r) {
    QPoly t(5);
    for (std::size_t k = 0; k < nt; ++k)
      if (!is_zero(a[r][nt + k])) t += QPoly::variable(5, k, Rational(1)).scaled(a[r][nt + k]);
    t_of_x[r] = t;
  }

  SkewMatrix<QPoly> m(6, QPoly(5));
  for (std::size_t c = 0; c < labels.size(); ++c)
    m.set(labels[c].first - 1, labels[c].second - 1, substitute(coord[c], t_of_x, 5, Rational(1), true));

  KleinConstruction out{h, labels, kernel_basis(h, labels.size(), Rational(1)), m, pfaffian(m)};
  return out;
}

struct JacobianMatch {
  std::vector<QPoly> values;            // section forms evaluated on adj(M)
  std::vector<std::size_t> quadric_of;  // bijection: form r -> Jacobian quadric index
  std::vector<Rational> scalar;         // values[r] = scalar[r] * quadric[quadric_of[r]]
};

/// Scalar c with a = c*b, if any.
inline std::optional<Rational> proportionality(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero() || a.num_terms() != b.num_terms()) return std::nullopt;
  const Rational c = a.terms().begin()->second / b.terms().begin()->second;
  if (a != b.scaled(c)) return std::nullopt;
  return c;
}

inline JacobianMatch jacobian_system() {
  const auto k = klein_from_hyperplanes();
  const PluckerVector<QPoly> adj(pfaffian_adjugate(k.m));
  const auto quad = jacobian_quadrics();
  JacobianMatch out;
  out.values = v14_section().evaluate(adj);
  std::vector<bool> used(quad.size(), false);
  for (const auto& v : out.values) {
    bool matched = false;
    for (std::size_t i = 0; i < quad.size() && !matched; ++i) {
      if (used[i]) continue;
      if (auto c = proportionality(v, quad[i])) {
        used[i] = true;
        out.quadric_of.push_back(i);
        out.scalar.push_back(*c);
        matched = true;
      }
    }
    if (!matched) throw std::domain_error("section value not proportional to a Jacobian quadric: " + render(v));
  }
  return out;
}

}  // namespace abelcheck
