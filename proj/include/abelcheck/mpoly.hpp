#pragma once

// Sparse multivariate polynomials with dense exponent vectors, iterated in
// graded reverse lexicographic order (largest term first).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abelcheck/exactnum.hpp"

namespace abelcheck {

using Exponent = std::vector<std::uint16_t>;

inline unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Strict "a > b" in grevlex: higher total degree first; on ties the smaller
/// exponent in the last differing variable wins.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

inline bool divides(const Exponent& d, const Exponent& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

template <class K>
class SparsePoly {
 public:
  using Coeff = K;
  using TermMap = std::map<Exponent, K, GrevlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const K& c) {
    SparsePoly p(nvars);
    if (!abelcheck::is_zero(c)) p.terms_.emplace(Exponent(nvars, 0), c);
    return p;
  }
  static SparsePoly monomial(Exponent e, const K& c) {
    SparsePoly p(e.size());
    if (!abelcheck::is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t i, const K& one) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e), one);
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  K coefficient(const Exponent& e, const K& zero) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const K& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
    if (abelcheck::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (abelcheck::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_arity(b);
    SparsePoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  SparsePoly operator-() const {
    SparsePoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  SparsePoly scaled(const K& s) const {
    SparsePoly r(nvars_);
    if (abelcheck::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  SparsePoly times_monomial(const Exponent& m) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f(e);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::uint16_t>(f[i] + m[i]);
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  /// Coefficientwise image under a ring map K -> L.
  template <class F>
  auto map_coefficients(F&& f) const -> SparsePoly<std::decay_t<decltype(f(std::declval<const K&>()))>> {
    using L = std::decay_t<decltype(f(std::declval<const K&>()))>;
    SparsePoly<L> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

 private:
  void check_arity(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class K>
bool is_zero(const SparsePoly<K>& p) {
  return p.is_zero();
}

template <class K>
SparsePoly<K> pow(const SparsePoly<K>& p, unsigned e, const K& one) {
  SparsePoly<K> r = SparsePoly<K>::constant(p.nvars(), one);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

/// Simultaneous substitution x_i -> images[i]. Variables without an image
/// are kept when target_nvars equals f.nvars(); otherwise (or when total is
/// set) an unmapped variable that occurs in f is an error.
template <class K>
SparsePoly<K> substitute(const SparsePoly<K>& f, const std::map<std::size_t, SparsePoly<K>>& images,
                         std::size_t target_nvars, const K& one, bool total = false) {
  for (const auto& [v, img] : images)
    if (img.nvars() != target_nvars) throw std::invalid_argument("substitution image has wrong arity");
  std::vector<std::vector<SparsePoly<K>>> powers(f.nvars());
  auto image_of = [&](std::size_t v) -> SparsePoly<K> {
    auto it = images.find(v);
    if (it != images.end()) return it->second;
    if (total || target_nvars != f.nvars())
      throw std::invalid_argument("unmapped variable x" + std::to_string(v) + " in substitution");
    return SparsePoly<K>::variable(target_nvars, v, one);
  };
  auto power = [&](std::size_t v, unsigned k) -> const SparsePoly<K>& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(SparsePoly<K>::constant(target_nvars, one));
    while (pv.size() <= k) {
      const auto base = image_of(v);
      pv.push_back(pv.back() * base);
    }
    return pv[k];
  };
  SparsePoly<K> out(target_nvars);
  for (const auto& [e, c] : f.terms()) {
    SparsePoly<K> t = SparsePoly<K>::constant(target_nvars, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) t = t * power(v, e[v]);
    out += t;
  }
  return out;
}

template <class K>
SparsePoly<K> substitute(const SparsePoly<K>& f, const std::map<std::size_t, SparsePoly<K>>& images, const K& one) {
  return substitute(f, images, f.nvars(), one);
}

/// Renames variables by an index map old -> new (a ring map of monomials).
template <class K>
SparsePoly<K> permute_variables(const SparsePoly<K>& f, const std::vector<std::size_t>& target_of,
                                std::size_t target_nvars) {
  SparsePoly<K> out(target_nvars);
  for (const auto& [e, c] : f.terms()) {
    Exponent g(target_nvars, 0);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) g[target_of.at(v)] = static_cast<std::uint16_t>(g[target_of.at(v)] + e[v]);
    out.add_term(g, c);
  }
  return out;
}

/// f(point) where coefficients are sent into the point's field by hom.
template <class K, class V, class Hom>
V evaluate(const SparsePoly<K>& f, std::span<const V> point, const V& zero, Hom&& hom) {
  if (point.size() != f.nvars()) throw std::invalid_argument("evaluation point has wrong dimension");
  V acc = zero;
  for (const auto& [e, c] : f.terms()) {
    V t = hom(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (unsigned k = 0; k < e[v]; ++k) t *= point[v];
    acc += t;
  }
  return acc;
}

template <class K>
K evaluate(const SparsePoly<K>& f, std::span<const K> point, const K& zero) {
  return evaluate(f, point, zero, [](const K& c) { return c; });
}

/// Single-divisor division with remainder under grevlex. Returns the quotient
/// only when the remainder is zero.
template <class K>
std::optional<SparsePoly<K>> divide_exact(const SparsePoly<K>& f, const SparsePoly<K>& d) {
  if (d.is_zero()) throw std::domain_error("divide_exact by the zero polynomial");
  if (f.nvars() != d.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  const auto& [lead_exp, lead_coef] = *d.terms().begin();
  SparsePoly<K> p = f, q(f.nvars());
  while (!p.is_zero()) {
    const auto [pe, pc] = *p.terms().begin();
    if (!divides(lead_exp, pe)) return std::nullopt;  // leading term would land in the remainder
    Exponent m(pe);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] - lead_exp[i]);
    const K c = pc / lead_coef;
    q.add_term(m, c);
    p -= d.times_monomial(m).scaled(c);
  }
  return q;
}

/// All exponent vectors of the given degree, grevlex-descending.
inline std::vector<Exponent> graded_monomials(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == nvars) {
      e[v] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = static_cast<std::uint16_t>(k);
      rec(v + 1, left - k);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

/// Homogeneous ideal given by generators.
template <class K>
struct Ideal {
  std::size_t nvars = 0;
  std::vector<SparsePoly<K>> generators;

  Ideal() = default;
  Ideal(std::size_t n, std::vector<SparsePoly<K>> gens) : nvars(n), generators(std::move(gens)) {
    for (const auto& g : generators) {
      if (g.nvars() != nvars) throw std::invalid_argument("ideal generator arity mismatch");
      if (g.is_zero()) throw std::invalid_argument("zero ideal generator");
      if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous ideal generator");
    }
  }

  bool is_monomial() const {
    return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.num_terms() == 1; });
  }
};

// ---------------------------------------------------------------------------
// Text rendering and parsing. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' integer]
//   primary:= integer ['/' integer] | name | '(' expr ')'
// Variable names are "x<index>" unless a custom resolver is supplied.

inline std::string variable_name(std::size_t i) { return "x" + std::to_string(i); }

template <class K>
std::string render(const SparsePoly<K>& f,
                   const std::function<std::string(std::size_t)>& name = variable_name) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string coef = to_string(c);
    bool neg = false;
    const bool simple = coef.find_first_of("+ ", 1) == std::string::npos;
    if (simple && !coef.empty() && coef[0] == '-') {
      neg = true;
      coef.erase(0, 1);
    }
    if (!simple) coef = "(" + coef + ")";
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << coef;
    } else {
      if (coef != "1") os << coef << "*";
      os << mono;
    }
  }
  return os.str();
}

class PolyParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VariableResolver = std::function<std::optional<std::size_t>(std::string_view)>;

inline VariableResolver indexed_variables(std::string prefix = "x") {
  return [prefix](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::size_t idx = 0;
    for (char ch : name.substr(prefix.size())) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      idx = idx * 10 + static_cast<std::size_t>(ch - '0');
    }
    return idx;
  };
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, VariableResolver resolve)
      : s_(text), nvars_(nvars), resolve_(std::move(resolve)) {}

  SparsePoly<Rational> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  using P = SparsePoly<Rational>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  P expr() {
    P acc(nvars_);
    bool neg = accept('-');
    if (!neg) accept('+');
    P t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }
  P term() {
    P acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  P factor() {
    P base = primary();
    if (accept('^')) {
      const Integer e = integer();
      if (e > 1000) fail("exponent too large");
      base = abelcheck::pow(base, static_cast<unsigned>(e.get_ui()), Rational(1));
    }
    return base;
  }
  P primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r(integer());
      if (accept('/')) {
        const Integer den = integer();
        if (den == 0) fail("zero denominator");
        r /= Rational(den);
      }
      r.canonicalize();
      return P::constant(nvars_, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      const auto idx = resolve_(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      if (*idx >= nvars_) fail("variable '" + std::string(name) + "' outside the ring");
      return P::variable(nvars_, *idx, Rational(1));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  VariableResolver resolve_;
};

}  // namespace detail

inline SparsePoly<Rational> parse_poly(std::string_view text, std::size_t nvars,
                                       VariableResolver resolve = indexed_variables()) {
  return detail::PolyParser(text, nvars, std::move(resolve)).parse();
}

inline Rational rational_like(const Rational&, const Rational& r) { return r; }
inline CycloNum rational_like(const CycloNum& one, const Rational& r) { return one.scaled(r); }
inline Fq rational_like(const Fq& one, const Rational& r) { return reduce_mod(r, one.modulus()); }

/// Lifts a rational polynomial into any coefficient field containing Q
/// (or its reduction mod q).
template <class K>
SparsePoly<K> lift(const SparsePoly<Rational>& f, const K& one) {
  return f.map_coefficients([&](const Rational& r) { return rational_like(one, r); });
}

inline SparsePoly<Fq> reduce_mod(const SparsePoly<Rational>& f, std::uint64_t q) {
  return f.map_coefficients([q](const Rational& r) { return reduce_mod(r, q); });
}

/// Normalizes a nonzero polynomial so its leading coefficient is 1.
template <class K>
SparsePoly<K> monic(const SparsePoly<K>& f) {
  if (f.is_zero()) return f;
  const K lead = f.terms().begin()->second;
  return f.scaled(one_like(lead) / lead);
}

}  // namespace abelcheck
