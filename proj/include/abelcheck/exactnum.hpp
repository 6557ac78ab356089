#pragma once

// Exact scalars: rationals, cyclotomic fields Q(xi_n) and prime fields F_q.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelcheck {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b.
inline std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Phi_n over Z, computed as (t^n - 1) / prod_{d | n, d < n} Phi_d.
inline UPoly cyclotomic_polynomial(int n) {
  UPoly num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = upoly_divmod(num, cyclotomic_polynomial(d));
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    num = q;
  }
  return num;
}

class CycloField {
 public:
  explicit CycloField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    degree_ = static_cast<int>(phi_.size()) - 1;
    // t^k mod Phi_n for k < 2*degree, used when reducing products.
    powers_.reserve(static_cast<std::size_t>(2 * degree_));
    for (int k = 0; k < 2 * degree_; ++k) {
      UPoly tk(static_cast<std::size_t>(k) + 1, Rational(0));
      tk[static_cast<std::size_t>(k)] = 1;
      auto rem = upoly_divmod(tk, phi_).second;
      rem.resize(static_cast<std::size_t>(degree_), Rational(0));
      powers_.push_back(std::move(rem));
    }
  }

  int order() const { return n_; }
  int degree() const { return degree_; }
  const UPoly& phi() const { return phi_; }
  const std::vector<Rational>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

  static std::shared_ptr<const CycloField> get(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto field = std::make_shared<const CycloField>(n);
    cache.emplace(n, field);
    return field;
  }

 private:
  int n_;
  int degree_ = 0;
  UPoly phi_;
  std::vector<std::vector<Rational>> powers_;
};

}  // namespace detail

/// Element of Q(xi_n) stored on the power basis 1, xi, ..., xi^(phi(n)-1).
/// The representation is the unique reduction mod Phi_n, so equality is
/// coefficientwise.
class CycloNum {
 public:
  CycloNum() : CycloNum(1) {}
  explicit CycloNum(int order)
      : field_(detail::CycloField::get(order)),
        coeffs_(static_cast<std::size_t>(field_->degree()), Rational(0)) {}

  static CycloNum from_rational(int order, const Rational& r) {
    CycloNum c(order);
    c.coeffs_[0] = r;
    return c;
  }

  /// xi_n^k for any integer k.
  static CycloNum root(int order, long k = 1) {
    CycloNum c(order);
    const long n = order;
    const long e = ((k % n) + n) % n;
    c.coeffs_ = reduce_power(*c.field_, static_cast<int>(e));
    return c;
  }

  /// Reduce sum_k coeffs[k] t^k modulo Phi_n.
  static CycloNum from_power_coefficients(int order, std::span<const Rational> coeffs) {
    CycloNum c(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (abelcheck::is_zero(coeffs[k])) continue;
      const auto e = static_cast<int>(k % static_cast<std::size_t>(order));
      const auto basis = reduce_power(*c.field_, e);
      for (std::size_t i = 0; i < basis.size(); ++i) c.coeffs_[i] += coeffs[k] * basis[i];
    }
    return c;
  }

  int order() const { return field_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return std::nullopt;
    return coeffs_[0];
  }

  CycloNum& operator+=(const CycloNum& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CycloNum& operator-=(const CycloNum& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CycloNum& operator*=(const CycloNum& o) {
    check_order(o);
    const int deg = field_->degree();
    std::vector<Rational> prod(static_cast<std::size_t>(2 * deg), Rational(0));
    for (int i = 0; i < deg; ++i) {
      if (sgn(coeffs_[static_cast<std::size_t>(i)]) == 0) continue;
      for (int j = 0; j < deg; ++j) {
        if (sgn(o.coeffs_[static_cast<std::size_t>(j)]) == 0) continue;
        prod[static_cast<std::size_t>(i + j)] +=
            coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + deg);
    for (int k = deg; k < 2 * deg; ++k) {
      const auto& c = prod[static_cast<std::size_t>(k)];
      if (sgn(c) == 0) continue;
      const auto& tk = field_->power(k);
      for (int i = 0; i < deg; ++i) out[static_cast<std::size_t>(i)] += c * tk[static_cast<std::size_t>(i)];
    }
    coeffs_ = std::move(out);
    return *this;
  }
  CycloNum& operator/=(const CycloNum& o) {
    check_order(o);
    return *this *= o.inverse();
  }

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  CycloNum operator-() const {
    CycloNum r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  CycloNum scaled(const Rational& r) const {
    CycloNum c(*this);
    for (auto& x : c.coeffs_) x *= r;
    return c;
  }

  // Extended Euclid in Q[t] against Phi_n.
  CycloNum inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(xi_n)");
    detail::UPoly r0 = field_->phi(), r1(coeffs_.begin(), coeffs_.end());
    detail::trim(r1);
    detail::UPoly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
      auto [q, r] = detail::upoly_divmod(r0, r1);
      auto s = detail::upoly_sub(s0, detail::upoly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
      if (r1.empty()) throw std::logic_error("Phi_n shares a factor with a nonzero element");
    }
    const Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return from_power_coefficients(order(), s1);
  }

  CycloNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum result = from_rational(order(), Rational(1)), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Complex conjugation, the automorphism xi -> xi^-1.
  CycloNum conj() const {
    std::vector<Rational> c(static_cast<std::size_t>(order()), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) == 0) continue;
      const std::size_t e = (static_cast<std::size_t>(order()) - k) % static_cast<std::size_t>(order());
      c[e] += coeffs_[k];
    }
    return from_power_coefficients(order(), c);
  }

 private:
  void check_order(const CycloNum& o) const {
    if (o.order() != order()) throw std::invalid_argument("cyclotomic order mismatch");
  }

  static std::vector<Rational> reduce_power(const detail::CycloField& f, int e) {
    if (e < 2 * f.degree()) return f.power(e);
    std::vector<Rational> t(static_cast<std::size_t>(e) + 1, Rational(0));
    t[static_cast<std::size_t>(e)] = 1;
    auto rem = detail::upoly_divmod(t, f.phi()).second;
    rem.resize(static_cast<std::size_t>(f.degree()), Rational(0));
    return rem;
  }

  std::shared_ptr<const detail::CycloField> field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycloNum& c) { return c.is_zero(); }
inline CycloNum zero_like(const CycloNum& c) { return CycloNum(c.order()); }
inline CycloNum one_like(const CycloNum& c) { return CycloNum::from_rational(c.order(), Rational(1)); }

inline std::string to_string(const CycloNum& c) {
  std::ostringstream os;
  bool first = true;
  const auto co = c.coeffs();
  for (std::size_t k = 0; k < co.size(); ++k) {
    if (sgn(co[k]) == 0) continue;
    Rational a = co[k];
    const bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "xi";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

/// Image of a under xi_m -> xi_n^(n/m).
inline CycloNum embed(const CycloNum& a, int target_order) {
  const int m = a.order();
  if (target_order < 1 || target_order % m != 0)
    throw std::invalid_argument("embed: source order does not divide target order");
  const int step = target_order / m;
  const auto co = a.coeffs();
  std::vector<Rational> c(static_cast<std::size_t>(step) * co.size() + 1, Rational(0));
  for (std::size_t k = 0; k < co.size(); ++k) c[k * static_cast<std::size_t>(step)] = co[k];
  return CycloNum::from_power_coefficients(target_order, c);
}

inline int legendre_symbol(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  long r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

/// Quadratic Gauss sum sum_a (a/p) xi_p^a, i.e. sqrt(p*) with p* = (-1)^((p-1)/2) p.
inline CycloNum quadratic_gauss_sum(int p) {
  CycloNum g(p);
  for (int a = 1; a < p; ++a) {
    const auto r = CycloNum::root(p, a);
    if (legendre_symbol(a, p) > 0) g += r; else g -= r;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Prime fields

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  b %= q;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % q);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % q);
    e >>= 1;
  }
  return r;
}

/// Element of F_q for a runtime prime q < 2^32.
class Fq {
 public:
  Fq() = default;
  Fq(std::uint64_t q, long long v) : q_(q) {
    const auto m = static_cast<long long>(q);
    v_ = static_cast<std::uint64_t>(((v % m) + m) % m);
  }

  std::uint64_t modulus() const { return q_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fq& operator+=(const Fq& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= q_) v_ -= q_;
    return *this;
  }
  Fq& operator-=(const Fq& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + q_ - o.v_;
    return *this;
  }
  Fq& operator*=(const Fq& o) {
    check(o);
    v_ = v_ * o.v_ % q_;
    return *this;
  }
  Fq& operator/=(const Fq& o) { return *this *= o.inverse(); }
  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
  Fq operator-() const { return Fq(q_, -static_cast<long long>(v_)); }
  friend bool operator==(const Fq& a, const Fq& b) { return a.q_ == b.q_ && a.v_ == b.v_; }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

  Fq inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_q");
    Fq r;
    r.q_ = q_;
    r.v_ = pow_mod(v_, q_ - 2, q_);
    return r;
  }
  Fq pow(std::uint64_t e) const {
    Fq r;
    r.q_ = q_;
    r.v_ = pow_mod(v_, e, q_);
    return r;
  }

 private:
  void check(const Fq& o) const {
    if (o.q_ != q_) throw std::invalid_argument("prime field modulus mismatch");
  }
  std::uint64_t q_ = 2;
  std::uint64_t v_ = 0;
};

inline bool is_zero(const Fq& a) { return a.is_zero(); }
inline Fq zero_like(const Fq& a) { return Fq(a.modulus(), 0); }
inline Fq one_like(const Fq& a) { return Fq(a.modulus(), 1); }
inline std::string to_string(const Fq& a) { return std::to_string(a.value()); }

/// Smallest element of F_q of exact multiplicative order n.
inline Fq nth_root_in_prime_field(std::uint64_t n, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("modulus is not prime");
  if (n == 0 || (q - 1) % n != 0) throw std::invalid_argument("n does not divide q-1");
  std::vector<std::uint64_t> prime_factors;
  for (std::uint64_t m = n, p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    prime_factors.push_back(p);
    while (m % p == 0) m /= p;
  }
  for (std::uint64_t g = 1; g < q; ++g) {
    if (pow_mod(g, n, q) != 1) continue;
    bool exact = true;
    for (auto p : prime_factors)
      if (pow_mod(g, n / p, q) == 1) exact = false;
    if (exact) return Fq(q, static_cast<long long>(g));
  }
  throw std::logic_error("no element of the requested order");
}

inline Fq reduce_mod(const Rational& r, std::uint64_t q) {
  const Integer num = r.get_num() % Integer(static_cast<unsigned long>(q));
  const Integer den = r.get_den() % Integer(static_cast<unsigned long>(q));
  if (den == 0) throw std::domain_error("denominator vanishes modulo q");
  return Fq(q, num.get_si()) / Fq(q, den.get_si());
}

/// Ring homomorphism Q(xi_n) -> F_q sending xi_n to the designated root
/// nth_root_in_prime_field(n, q).
class CycloReduction {
 public:
  CycloReduction(int n, std::uint64_t q) : n_(n), q_(q), root_(nth_root_in_prime_field(static_cast<std::uint64_t>(n), q)) {}
  Fq operator()(const CycloNum& c) const {
    if (c.order() != n_) throw std::invalid_argument("cyclotomic order mismatch in reduction");
    Fq acc(q_, 0), p(q_, 1);
    for (const auto& a : c.coeffs()) {
      acc += reduce_mod(a, q_) * p;
      p *= root_;
    }
    return acc;
  }
  Fq operator()(const Rational& r) const { return reduce_mod(r, q_); }
  const Fq& root() const { return root_; }
  std::uint64_t modulus() const { return q_; }

 private:
  int n_;
  std::uint64_t q_;
  Fq root_;
};

}  // namespace abelcheck
