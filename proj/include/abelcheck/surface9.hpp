#pragma once

// Level-9 constructions: the kernel map of the 5x5 block, the base point,
// the degenerate fiber at z0 and the J-family of ideals.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelcheck/expected.hpp"
#include "abelcheck/heisenberg.hpp"
#include "abelcheck/mpoly.hpp"
#include "abelcheck/pfaffian.hpp"

namespace abelcheck {

/// kernel vector of S9 = kTheta9Sign * (v0..v4) as displayed.
inline constexpr int kTheta9Sign = +1;

inline SkewMatrix<QPoly> s_matrix_d9() {
  const HeisenbergContext ctx(9);
  return restrict_to_pminus(build_R(ctx), calibrate_pminus(ctx));
}

/// (v0..v4) in x_0..x_4 (x_0 unused).
inline std::vector<QPoly> theta9_closed_form() {
  auto v = odd_kernel_vector(s_matrix_d9());
  for (auto& p : v) p = p.scaled(Rational(kTheta9Sign));
  return v;
}

inline std::vector<Rational> to_rationals(std::span<const int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

/// The nine quadrics of v.R_4 for a rational row vector v.
inline std::vector<QPoly> quadrics_of(const std::vector<Rational>& v) {
  const HeisenbergContext ctx(9);
  const auto r = build_R(ctx);
  if (v.size() != r.size()) throw std::invalid_argument("level-9 row vector needs 5 entries");
  std::vector<QPoly> out(9, QPoly(9));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (!is_zero(v[i])) out[j] += r[i][j].scaled(v[i]);
  return out;
}

/// True iff v0 = -v3 and every quadric of v.R_4 vanishes at (1:0:0:1:0:0:1:0:0).
inline bool base_point_check(const std::vector<Rational>& v) {
  if (v.size() != 5) throw std::invalid_argument("level-9 row vector needs 5 entries");
  const auto p = to_rationals(expected::kBasePoint);
  for (const auto& q : quadrics_of(v))
    if (!is_zero(evaluate<Rational>(q, p, Rational(0)))) return false;
  return true;
}

inline std::vector<Rational> z0_point() { return to_rationals(expected::kZ0); }

/// Theta9 evaluated at the chart image of z0.
inline std::vector<Rational> theta9_at_z0() {
  const PminusChart chart = calibrate_pminus(HeisenbergContext(9));
  const auto r = chart.restrict_point(z0_point());
  if (!r) throw std::logic_error("z0 is not on the odd eigenspace");
  std::vector<Rational> out;
  for (const auto& v : theta9_closed_form()) out.push_back(evaluate<Rational>(v, *r, Rational(0)));
  return out;
}

/// True iff a and b are proportional nonzero vectors.
template <class K>
bool projectively_equal(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return std::any_of(a.begin(), a.end(), [](const K& x) { return !is_zero(x); }) &&
         std::any_of(b.begin(), b.end(), [](const K& x) { return !is_zero(x); });
}

inline SkewMatrix<QPoly> moore_at_z0() { return build_moore(z0_point()); }

/// 1-based row/column labels -> 0-based indices.
inline std::vector<std::size_t> zero_based(std::span<const int> rows) {
  std::vector<std::size_t> out;
  for (int r : rows) out.push_back(static_cast<std::size_t>(r - 1));
  return out;
}

/// sigma^k on P^8 polynomials: x_i -> x_{i-k}.
inline QPoly shift9(const QPoly& f, long k) {
  std::vector<std::size_t> target(9);
  for (long i = 0; i < 9; ++i) target[i] = mod_index(i - k, 9);
  return permute_variables(f, target, 9);
}

/// Sign-normalized (leading coefficient positive) and made primitive over Z.
inline QPoly normalize_generator(const QPoly& f) { return monic(f); }

struct GeneratorSet {
  std::vector<QPoly> quadrics;
  std::vector<QPoly> cubics;

  std::set<std::string> canonical() const {
    std::set<std::string> out;
    for (const auto& g : quadrics) out.insert(render(normalize_generator(g)));
    for (const auto& g : cubics) out.insert(render(normalize_generator(g)));
    return out;
  }
  std::vector<QPoly> all() const {
    std::vector<QPoly> out = quadrics;
    out.insert(out.end(), cubics.begin(), cubics.end());
    return out;
  }
};

/// Drops every term divisible by one of the monomials.
inline QPoly delete_divisible_terms(const QPoly& f, const std::vector<QPoly>& monomials) {
  QPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    bool hit = false;
    for (const auto& m : monomials) hit = hit || divides(m.terms().begin()->first, e);
    if (!hit) out.add_term(e, c);
  }
  return out;
}

/// The quadrics x_i x_{i+2}, i in Z/9.
inline std::vector<QPoly> gap_two_quadrics() {
  std::vector<QPoly> out;
  for (long i = 0; i < 9; ++i) {
    Exponent e(9, 0);
    ++e[mod_index(i, 9)];
    ++e[mod_index(i + 2, 9)];
    out.push_back(QPoly::monomial(e, Rational(1)));
  }
  return out;
}

struct DegenerateFiber {
  std::vector<QPoly> quadrics;         // v.R_4 at Theta(z0)
  QPoly cubic_a, cubic_b;              // the two Moore Pfaffians
  QPoly reduced_a, reduced_b;          // after deleting quadric multiples
  GeneratorSet generators;             // sigma-closure, normalized
};

inline DegenerateFiber degenerate_fiber_ideal() {
  DegenerateFiber out;
  out.quadrics = quadrics_of(theta9_at_z0());
  std::vector<QPoly> monos;
  for (const auto& q : out.quadrics) {
    if (q.num_terms() != 1) throw std::logic_error("quadrics at Theta(z0) are expected to be monomials");
    monos.push_back(monic(q));
  }
  const auto m = moore_at_z0();
  out.cubic_a = pfaffian_on(m, zero_based(expected::kMooreRowsA));
  out.cubic_b = pfaffian_on(m, zero_based(expected::kMooreRowsB));
  out.reduced_a = delete_divisible_terms(out.cubic_a, monos);
  out.reduced_b = delete_divisible_terms(out.cubic_b, monos);

  std::set<std::string> seen;
  for (const auto& q : monos)
    if (seen.insert(render(q)).second) out.generators.quadrics.push_back(q);
  for (const auto& c : {out.reduced_a, out.reduced_b})
    for (long k = 0; k < 9; ++k) {
      const QPoly g = normalize_generator(shift9(c, k));
      if (seen.insert(render(g)).second) out.generators.cubics.push_back(g);
    }
  return out;
}

/// J_2 plus lambda x_{i+4}x_{i+7}^2 - mu x_{i+3}x_{i+7}x_{i+8} + lambda x_{i+2}x_{i+8}^2.
inline GeneratorSet j_family(const Rational& lambda, const Rational& mu) {
  if (is_zero(lambda) && is_zero(mu)) throw std::invalid_argument("(lambda:mu) = (0:0) is not a point of P^1");
  GeneratorSet g;
  g.quadrics = gap_two_quadrics();
  auto mono = [](std::initializer_list<long> idx) {
    Exponent e(9, 0);
    for (long i : idx) ++e[mod_index(i, 9)];
    return QPoly::monomial(e, Rational(1));
  };
  for (long i = 0; i < 3; ++i) g.cubics.push_back(mono({i, i + 3, i + 6}));
  for (long i = 0; i < 9; ++i) {
    QPoly t = mono({i + 4, i + 7, i + 7}).scaled(lambda) - mono({i + 3, i + 7, i + 8}).scaled(mu) +
              mono({i + 2, i + 8, i + 8}).scaled(lambda);
    g.cubics.push_back(t);
  }
  return g;
}

inline Ideal<Rational> as_ideal(const GeneratorSet& g) { return Ideal<Rational>(9, g.all()); }

struct QuadricComponent {
  std::vector<std::size_t> vanishing;  // L_k = {x_a = 0 for a in vanishing}
  QPoly quadric;                       // sigma^k(lambda x3 x6 - mu x2 x7)
  bool contains_family = false;        // all J-generators vanish on Q_k
};

/// Q_k = sigma^k(L_0 cap {lambda x3 x6 - mu x2 x7 = 0}), L_0 = {x0=x1=x4=x5=x8=0}.
inline std::vector<QuadricComponent> quadric_decomposition(const Rational& lambda, const Rational& mu) {
  const GeneratorSet gens = j_family(lambda, mu);
  const QPoly q0 = parse_poly("x3*x6", 9).scaled(lambda) - parse_poly("x2*x7", 9).scaled(mu);
  const std::array<long, 5> l0{0, 1, 4, 5, 8};
  std::vector<QuadricComponent> out;
  for (long k = 0; k < 9; ++k) {
    QuadricComponent c;
    std::map<std::size_t, QPoly> kill;
    for (long a : l0) {
      c.vanishing.push_back(mod_index(a - k, 9));
      kill[mod_index(a - k, 9)] = QPoly(9);
    }
    c.quadric = shift9(q0, k);
    c.contains_family = true;
    for (const auto& g : gens.all()) {
      const QPoly r = substitute(g, kill, Rational(1));
      if (r.is_zero()) continue;
      if (!divide_exact(r, c.quadric)) c.contains_family = false;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace abelcheck
