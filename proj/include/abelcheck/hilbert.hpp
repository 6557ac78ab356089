#pragma once

// Hilbert functions of homogeneous ideals: by monomial counting for
// monomial ideals, by degreewise rank computation in general.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelcheck/exactnum.hpp"
#include "abelcheck/linalg.hpp"
#include "abelcheck/mpoly.hpp"

namespace abelcheck {

inline constexpr std::uint64_t kRankPrimeA = 1073741789;
inline constexpr std::uint64_t kRankPrimeB = 1073741783;

struct HilbertProfile {
  std::vector<Integer> values;  // values[t], t = 0..t_max
  std::vector<std::string> method;  // how each rank was settled

  friend bool operator==(const HilbertProfile& a, const HilbertProfile& b) { return a.values == b.values; }
};

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

template <class K>
std::vector<Exponent> leading_monomials(const Ideal<K>& ideal) {
  std::vector<Exponent> out;
  for (const auto& g : ideal.generators) {
    if (g.num_terms() != 1) throw std::invalid_argument("monomial ideal expected");
    out.push_back(g.terms().begin()->first);
  }
  return out;
}

template <class K>
HilbertProfile monomial_hilbert(const Ideal<K>& ideal, unsigned t_max) {
  const auto gens = leading_monomials(ideal);
  HilbertProfile h;
  for (unsigned t = 0; t <= t_max; ++t) {
    std::size_t count = 0;
    for (const auto& m : graded_monomials(ideal.nvars, t))
      if (std::none_of(gens.begin(), gens.end(), [&](const Exponent& g) { return divides(g, m); })) ++count;
    h.values.emplace_back(static_cast<unsigned long>(count));
    h.method.push_back("count");
  }
  return h;
}

/// Faces of the Stanley-Reisner complex of a squarefree monomial ideal,
/// as sorted vertex lists (the empty face excluded).
class SimplicialComplex {
 public:
  template <class K>
  explicit SimplicialComplex(const Ideal<K>& ideal) : n_(ideal.nvars) {
    if (n_ > 20) throw std::invalid_argument("too many vertices for subset enumeration");
    std::vector<std::uint32_t> nonfaces;
    for (const auto& e : leading_monomials(ideal)) {
      std::uint32_t mask = 0;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] > 1) throw std::invalid_argument("generator is not squarefree");
        if (e[v] == 1) mask |= std::uint32_t{1} << v;
      }
      nonfaces.push_back(mask);
    }
    for (std::uint32_t f = 1; f < (std::uint32_t{1} << n_); ++f)
      if (std::none_of(nonfaces.begin(), nonfaces.end(), [f](std::uint32_t g) { return (g & f) == g; }))
        faces_.push_back(f);
  }

  std::size_t vertices() const { return n_; }
  const std::vector<std::uint32_t>& faces() const { return faces_; }

  bool contains(std::initializer_list<std::size_t> face) const {
    std::uint32_t mask = 0;
    for (auto v : face) mask |= std::uint32_t{1} << v;
    return std::find(faces_.begin(), faces_.end(), mask) != faces_.end();
  }

  /// f_k = number of faces with k+1 vertices.
  std::vector<std::size_t> face_vector() const {
    std::vector<std::size_t> f;
    for (auto m : faces_) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(m));
      if (f.size() < k) f.resize(k, 0);
      ++f[k - 1];
    }
    return f;
  }

  long euler_characteristic() const {
    long chi = 0;
    const auto f = face_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(f[k]);
    return chi;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> faces_;
};

template <class K>
std::vector<std::size_t> face_vector(const Ideal<K>& ideal) {
  return SimplicialComplex(ideal).face_vector();
}

/// Face-ring Hilbert function: sum_i f_{i-1} C(t-1, i-1) for t >= 1.
inline Integer face_ring_hilbert(const std::vector<std::size_t>& f, unsigned t) {
  if (t == 0) return 1;
  Integer sum = 0;
  for (std::size_t i = 1; i <= f.size(); ++i)
    if (t >= i) sum += Integer(static_cast<unsigned long>(f[i - 1])) * binomial(t - 1, static_cast<unsigned>(i - 1));
  return sum;
}

namespace detail {

// Rows g*m for every generator g and monomial m with deg(g*m) = t.
template <class K>
std::vector<SparseRow<K>> degree_slice(const std::vector<SparsePoly<K>>& gens, std::size_t nvars, unsigned t) {
  const auto cols = graded_monomials(nvars, t);
  std::map<Exponent, std::size_t, GrevlexGreater> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], k);
  std::vector<SparseRow<K>> rows;
  for (const auto& g : gens) {
    const unsigned dg = g.degree();
    if (dg > t) continue;
    for (const auto& m : graded_monomials(nvars, t - dg)) {
      SparseRow<K> row;
      for (const auto& [e, c] : g.terms()) {
        Exponent s(e);
        for (std::size_t v = 0; v < s.size(); ++v) s[v] = static_cast<std::uint16_t>(s[v] + m[v]);
        row.emplace_back(index.at(s), c);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace detail

struct RankOptions {
  std::uint64_t prime_a = kRankPrimeA;
  std::uint64_t prime_b = kRankPrimeB;
  bool exact_only = false;  // skip the modular path
};

/// values[t] = dim(ring/I)_t from rank of the degree-t slice of I.
inline HilbertProfile graded_hilbert(const Ideal<Rational>& ideal, unsigned t_max, const RankOptions& opt = {}) {
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous()) throw std::invalid_argument("graded_hilbert needs homogeneous generators");
  std::vector<SparsePoly<Fq>> ga, gb;
  if (!opt.exact_only)
    for (const auto& g : ideal.generators) {
      ga.push_back(reduce_mod(g, opt.prime_a));
      gb.push_back(reduce_mod(g, opt.prime_b));
    }
  HilbertProfile h;
  for (unsigned t = 0; t <= t_max; ++t) {
    const auto n = static_cast<unsigned>(ideal.nvars);
    const Integer total = binomial(t + n - 1, n - 1);
    std::size_t r = 0;
    std::string how;
    bool settled = false;
    if (!opt.exact_only) {
      const std::size_t ra = sparse_rank(detail::degree_slice(ga, ideal.nvars, t));
      const std::size_t rb = sparse_rank(detail::degree_slice(gb, ideal.nvars, t));
      if (ra == rb) {
        r = ra;
        how = "two-prime";
        settled = true;
      }
    }
    if (!settled) {
      r = sparse_rank(detail::degree_slice(ideal.generators, ideal.nvars, t));
      how = "exact";
    }
    h.values.push_back(total - Integer(static_cast<unsigned long>(r)));
    h.method.push_back(how);
  }
  return h;
}

/// 9 t^2 for t >= 1, 1 at t = 0.
inline std::vector<Integer> abelian_surface_profile(unsigned t_max) {
  std::vector<Integer> out;
  for (unsigned t = 0; t <= t_max; ++t) out.push_back(t == 0 ? 1 : 9 * t * t);
  return out;
}

struct FlatnessRow {
  Rational lambda, mu;
  HilbertProfile profile;
};

struct FlatnessEvidence {
  bool constant = false;
  std::vector<FlatnessRow> rows;
};

template <class Sampler>
FlatnessEvidence flatness_evidence(Sampler&& ideal_of, const std::vector<std::pair<Rational, Rational>>& samples,
                                   unsigned t_max, const RankOptions& opt = {}) {
  if (samples.size() < 2) throw std::invalid_argument("flatness evidence needs at least two samples");
  FlatnessEvidence ev;
  for (const auto& [l, m] : samples) ev.rows.push_back({l, m, graded_hilbert(ideal_of(l, m), t_max, opt)});
  ev.constant = std::all_of(ev.rows.begin(), ev.rows.end(),
                            [&](const FlatnessRow& r) { return r.profile == ev.rows.front().profile; });
  return ev;
}

}  // namespace abelcheck
