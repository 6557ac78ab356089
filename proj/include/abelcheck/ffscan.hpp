#pragma once

// Exhaustive scans of P^n(F_q): rank strata of a skew matrix of forms and
// common zeros of a polynomial system.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "abelcheck/exactnum.hpp"
#include "abelcheck/grassfano.hpp"
#include "abelcheck/mpoly.hpp"
#include "abelcheck/surface9.hpp"

namespace abelcheck {

using ProjPoint = std::vector<std::uint64_t>;  // first nonzero coordinate is 1

inline std::uint64_t projective_count(std::uint64_t q, std::size_t n) {
  std::uint64_t s = 0, p = 1;
  for (std::size_t k = 0; k <= n; ++k, p *= q) s += p;
  return s;
}

/// The idx-th canonical point of P^n(F_q): leading 1 in position p, zeros
/// before it, the tail read as a base-q number.
inline ProjPoint point_at(std::uint64_t idx, std::uint64_t q, std::size_t n) {
  ProjPoint x(n + 1, 0);
  for (std::size_t lead = 0; lead <= n; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t k = lead + 1; k <= n; ++k) block *= q;
    if (idx < block) {
      x[lead] = 1;
      for (std::size_t k = n; k > lead; --k) {
        x[k] = idx % q;
        idx /= q;
      }
      return x;
    }
    idx -= block;
  }
  throw std::out_of_range("point index beyond P^n(F_q)");
}

inline ProjPoint canonical(std::vector<std::uint64_t> x, std::uint64_t q) {
  auto it = std::find_if(x.begin(), x.end(), [](std::uint64_t v) { return v != 0; });
  if (it == x.end()) throw std::invalid_argument("zero vector is not a projective point");
  const std::uint64_t inv = pow_mod(*it, q - 2, q);
  for (auto& v : x) v = v * inv % q;
  return x;
}

/// A polynomial compiled to flat terms mod q.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const SparsePoly<Fq>& f, std::uint64_t q) : q_(q) {
    for (const auto& [e, c] : f.terms()) {
      Term t{c.value(), {}};
      for (std::size_t v = 0; v < e.size(); ++v)
        for (unsigned k = 0; k < e[v]; ++k) t.vars.push_back(static_cast<std::uint8_t>(v));
      terms_.push_back(std::move(t));
    }
  }
  std::uint64_t operator()(const std::vector<std::uint64_t>& x) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms_) {
      std::uint64_t m = t.coeff;
      for (auto v : t.vars) m = m * x[v] % q_;
      acc += m;
    }
    return acc % q_;
  }
  bool is_zero() const { return terms_.empty(); }

 private:
  struct Term {
    std::uint64_t coeff;
    std::vector<std::uint8_t> vars;
  };
  std::uint64_t q_ = 2;
  std::vector<Term> terms_;
};

inline std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t q) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const std::uint64_t inv = pow_mod(m[r][c], q - 2, q);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c] * inv % q;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = (m[i][k] + (q - f) * m[r][k]) % q;
    }
    ++r;
  }
  return r;
}

/// Skew matrix of forms in the chart variables x_1..x_n (x_0 ignored) mod q.
class CompiledSkew {
 public:
  CompiledSkew(const SkewMatrix<QPoly>& s, std::uint64_t q) : n_(s.size()), q_(q) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) entries_.emplace_back(reduce_mod(s.at(i, j), q), q);
  }
  std::size_t size() const { return n_; }
  /// x holds x_0..x_m with x_0 the unused chart slot.
  std::vector<std::vector<std::uint64_t>> evaluate(const std::vector<std::uint64_t>& x) const {
    std::vector<std::vector<std::uint64_t>> m(n_, std::vector<std::uint64_t>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m[i][j] = entries_[i * n_ + j](x);
    return m;
  }
  std::size_t rank_at(const std::vector<std::uint64_t>& x) const { return rank_mod(evaluate(x), q_); }

 private:
  std::size_t n_;
  std::uint64_t q_;
  std::vector<CompiledPoly> entries_;
};

struct StratumCensus {
  int d = 0;
  std::uint64_t q = 0;
  std::size_t n = 0;                              // projective dimension
  std::map<std::size_t, std::uint64_t> counts;    // rank -> number of points
  std::size_t min_rank = 0;
  std::vector<ProjPoint> min_points;              // canonical, in scan order
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [r, c] : counts) s += c;
    return s;
  }
};

inline SkewMatrix<QPoly> odd_block(int d) {
  if (d == 9) return s_matrix_d9();
  if (d == 11) return s_matrix_d11();
  throw std::invalid_argument("odd block available for d in {9, 11}");
}

inline void require_root_of_unity(int d, std::uint64_t q) {
  if (!is_prime(q) || (q - 1) % static_cast<std::uint64_t>(d) != 0)
    throw std::invalid_argument("scan needs a prime q with d | q-1 (d=" + std::to_string(d) +
                                ", q=" + std::to_string(q) + ")");
}

/// Rank of the odd block at every point of P^{(d-3)/2}(F_q). Workers split the
/// index range into contiguous blocks; the merge is order-independent.
inline StratumCensus scan_strata(int d, std::uint64_t q, unsigned workers = 1) {
  require_root_of_unity(d, q);
  const CompiledSkew s(odd_block(d), q);
  const std::size_t n = static_cast<std::size_t>((d - 3) / 2);
  const std::uint64_t total = projective_count(q, n);
  workers = std::max(1u, workers);
  struct Partial {
    std::map<std::size_t, std::uint64_t> counts;
    std::map<std::size_t, std::vector<std::uint64_t>> first_by_rank;  // indices
  };
  std::vector<Partial> parts(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    std::vector<std::uint64_t> x(n + 2, 0);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const auto p = point_at(idx, q, n);
      std::copy(p.begin(), p.end(), x.begin() + 1);
      const std::size_t r = s.rank_at(x);
      ++parts[w].counts[r];
      parts[w].first_by_rank[r].push_back(idx);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  StratumCensus c;
  c.d = d;
  c.q = q;
  c.n = n;
  std::map<std::size_t, std::vector<std::uint64_t>> idx_by_rank;
  for (auto& p : parts) {
    for (const auto& [r, k] : p.counts) c.counts[r] += k;
    for (auto& [r, v] : p.first_by_rank) idx_by_rank[r].insert(idx_by_rank[r].end(), v.begin(), v.end());
  }
  c.min_rank = c.counts.begin()->first;
  auto& mins = idx_by_rank[c.min_rank];
  std::sort(mins.begin(), mins.end());
  for (auto i : mins) c.min_points.push_back(point_at(i, q, n));
  return c;
}

/// First canonical point (scan order) whose block has the given rank.
inline std::optional<ProjPoint> find_stratum_point(int d, std::uint64_t q, std::size_t target_rank) {
  require_root_of_unity(d, q);
  const CompiledSkew s(odd_block(d), q);
  const std::size_t n = static_cast<std::size_t>((d - 3) / 2);
  const std::uint64_t total = projective_count(q, n);
  std::vector<std::uint64_t> x(n + 2, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto p = point_at(idx, q, n);
    std::copy(p.begin(), p.end(), x.begin() + 1);
    if (s.rank_at(x) == target_rank) return p;
  }
  return std::nullopt;
}

/// Points of P^{nvars-1}(F_q) where every polynomial of the system vanishes.
inline std::vector<ProjPoint> common_zeros(const std::vector<QPoly>& system, std::uint64_t q) {
  if (system.empty()) throw std::invalid_argument("empty polynomial system");
  const std::size_t nv = system.front().nvars();
  std::vector<CompiledPoly> comp;
  for (const auto& f : system) comp.emplace_back(reduce_mod(f, q), q);
  std::vector<ProjPoint> out;
  const std::uint64_t total = projective_count(q, nv - 1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto p = point_at(idx, q, nv - 1);
    if (std::all_of(comp.begin(), comp.end(), [&](const CompiledPoly& f) { return f(p) == 0; })) out.push_back(p);
  }
  return out;
}

struct JacobianScan {
  std::uint64_t q = 0;
  std::vector<ProjPoint> quadric_zeros;  // zeros of the five quadrics
  std::size_t on_cubic = 0;              // of those, on the Klein cubic
  std::size_t count() const { return on_cubic; }
};

/// Common zeros of x_i^2 + 2x_{i+1}x_{i+2} and of the Klein cubic.
inline JacobianScan jacobian_zero_scan(std::uint64_t q) {
  if (q == 2) throw std::invalid_argument("q = 2 kills the coefficient 2 of the system");
  if (!is_prime(q)) throw std::invalid_argument("jacobian_zero_scan needs a prime");
  JacobianScan s;
  s.q = q;
  s.quadric_zeros = common_zeros(jacobian_quadrics(), q);
  const CompiledPoly b(reduce_mod(klein_cubic(), q), q);
  for (const auto& p : s.quadric_zeros)
    if (b(p) == 0) ++s.on_cubic;
  return s;
}

inline std::string census_csv(const std::vector<StratumCensus>& cs) {
  std::ostringstream os;
  os << "q,d,rank,count\n";
  for (const auto& c : cs)
    for (const auto& [r, k] : c.counts) os << c.q << ',' << c.d << ',' << r << ',' << k << '\n';
  return os.str();
}

inline std::string point_string(const ProjPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace abelcheck
