#pragma once

// PSL_2(F_11) as 2x2 matrices mod +-1, its conjugacy classes and power maps,
// and character arithmetic with values in Q(xi_55).

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelcheck/exactnum.hpp"
#include "abelcheck/expected.hpp"
#include "abelcheck/mpoly.hpp"

namespace abelcheck {

inline constexpr int kCharField = 55;

/// (a, b, c, d) for [[a, b], [c, d]], entries in 0..10, the smaller of M, -M.
struct PElement {
  std::array<int, 4> m;

  static PElement make(int a, int b, int c, int d) {
    auto r = [](int x) { return ((x % 11) + 11) % 11; };
    std::array<int, 4> p{r(a), r(b), r(c), r(d)};
    std::array<int, 4> n{r(-a), r(-b), r(-c), r(-d)};
    if ((p[0] * p[3] - p[1] * p[2] - 1) % 11 != 0) throw std::invalid_argument("matrix does not have determinant 1");
    return {std::min(p, n)};
  }
  PElement operator*(const PElement& o) const {
    const auto& a = m;
    const auto& b = o.m;
    return make(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3]);
  }
  PElement inverse() const { return make(m[3], -m[1], -m[2], m[0]); }
  PElement pow(int k) const {
    PElement r = make(1, 0, 0, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  bool is_identity() const { return *this == make(1, 0, 0, 1); }
  friend bool operator==(const PElement& a, const PElement& b) { return a.m == b.m; }
  friend bool operator<(const PElement& a, const PElement& b) { return a.m < b.m; }
};

inline PElement gen_S() { return PElement::make(1, 1, 0, 1); }
inline PElement gen_T() { return PElement::make(0, -1, 1, 0); }

/// Class representatives I, g1..g7 in table order.
inline std::array<PElement, 8> class_representatives() {
  return {PElement::make(1, 0, 0, 1), PElement::make(0, -1, 1, 0), PElement::make(1, -1, 1, 0),
          PElement::make(3, 0, 0, 4), PElement::make(5, 0, 0, 9), PElement::make(3, 2, 4, 3),
          PElement::make(1, 1, 0, 1), PElement::make(1, 2, 0, 1)};
}

class PSL211 {
 public:
  PSL211() {
    // Closure of {S, T} under right multiplication.
    std::set<PElement> seen{PElement::make(1, 0, 0, 1)};
    std::vector<PElement> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<PElement> next;
      for (const auto& g : frontier)
        for (const auto& s : {gen_S(), gen_T()}) {
          const PElement h = g * s;
          if (seen.insert(h).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    const auto reps = class_representatives();
    class_of_.assign(elements_.size(), -1);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      for (const auto& g : elements_) {
        const PElement conj = g * reps[c] * g.inverse();
        const auto idx = index(conj);
        if (class_of_[idx] >= 0 && class_of_[idx] != static_cast<int>(c))
          throw std::logic_error("class representatives are conjugate");
        class_of_[idx] = static_cast<int>(c);
      }
    }
    for (int c : class_of_)
      if (c < 0) throw std::logic_error("class representatives do not cover the group");
    sizes_.assign(reps.size(), 0);
    for (int c : class_of_) ++sizes_[static_cast<std::size_t>(c)];
  }

  static const PSL211& instance() {
    static const PSL211 g;
    return g;
  }

  const std::vector<PElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<std::size_t>& class_sizes() const { return sizes_; }
  std::size_t num_classes() const { return sizes_.size(); }

  bool contains(const PElement& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

  std::size_t class_of(const PElement& g) const { return static_cast<std::size_t>(class_of_[index(g)]); }

  std::vector<PElement> members(std::size_t c) const {
    std::vector<PElement> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (class_of_[i] == static_cast<int>(c)) out.push_back(elements_[i]);
    return out;
  }

  /// Class of g^k for g in class c.
  std::size_t power_map(std::size_t c, int k) const {
    if (k < 1) throw std::invalid_argument("power_map needs k >= 1");
    return class_of(class_representatives().at(c).pow(k));
  }

 private:
  std::size_t index(const PElement& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g)) throw std::out_of_range("element not in the group");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  std::vector<PElement> elements_;
  std::vector<int> class_of_;
  std::vector<std::size_t> sizes_;
};

using CharacterVector = std::vector<CycloNum>;

// Table values in the polynomial grammar over Q with "xi" = xi_55.
inline constexpr std::string_view kCharacterTableText = R"(# PSL2(F11) character table, values as polynomials in xi = exp(2 pi i/55)
# alpha  = -1/2 + 1/2*(xi^11 - xi^22 - xi^33 + xi^44)
# beta   = -1/2 + 1/2*(sum of (a/11) xi^(5a))
# classes: I g1 g2 g3 g4 g5 g6 g7
chi1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
chi2 | 5 | 1 | -1 | 0 | 0 | 1 | BETA | BETABAR
chi3 | 5 | 1 | -1 | 0 | 0 | 1 | BETABAR | BETA
chi4 | 10 | -2 | 1 | 0 | 0 | 1 | -1 | -1
chi5 | 10 | 2 | 1 | 0 | 0 | -1 | -1 | -1
chi6 | 11 | -1 | -1 | 1 | 1 | -1 | 0 | 0
chi7 | 12 | 0 | 0 | ALPHA | ALPHAPRIME | 0 | 1 | 1
chi8 | 12 | 0 | 0 | ALPHAPRIME | ALPHA | 0 | 1 | 1
ALPHA = -1/2 + 1/2*xi^11 - 1/2*xi^22 - 1/2*xi^33 + 1/2*xi^44
ALPHAPRIME = -1/2 - 1/2*xi^11 + 1/2*xi^22 + 1/2*xi^33 - 1/2*xi^44
BETA = -1/2 + 1/2*xi^5 - 1/2*xi^10 + 1/2*xi^15 + 1/2*xi^20 + 1/2*xi^25 - 1/2*xi^30 - 1/2*xi^35 - 1/2*xi^40 + 1/2*xi^45 - 1/2*xi^50
BETABAR = -1/2 - 1/2*xi^5 + 1/2*xi^10 - 1/2*xi^15 - 1/2*xi^20 - 1/2*xi^25 + 1/2*xi^30 + 1/2*xi^35 + 1/2*xi^40 - 1/2*xi^45 + 1/2*xi^50
)";

/// Parses a univariate polynomial in "xi" into Q(xi_order).
inline CycloNum parse_cyclo(std::string_view text, int order) {
  const auto p = parse_poly(text, 1, [](std::string_view n) -> std::optional<std::size_t> {
    if (n == "xi") return 0;
    return std::nullopt;
  });
  std::vector<Rational> coeffs(static_cast<std::size_t>(order), Rational(0));
  for (const auto& [e, c] : p.terms()) coeffs[e[0] % static_cast<unsigned>(order)] += c;
  return CycloNum::from_power_coefficients(order, coeffs);
}

struct CharacterTable {
  std::vector<std::string> names;
  std::vector<CharacterVector> rows;
  std::map<std::string, CycloNum> constants;
};

inline std::string trim_copy(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/// Rows "name | v1 | ... | v8"; constants "NAME = expr". '#' starts a comment.
inline CharacterTable parse_character_table(std::string_view text) {
  CharacterTable t;
  std::vector<std::pair<std::string, std::vector<std::string>>> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim_copy(line);
    if (line.empty()) continue;
    if (line.find('|') != std::string::npos) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, '|')) cells.push_back(trim_copy(cell));
      const std::string name = cells.front();
      cells.erase(cells.begin());
      raw.emplace_back(name, cells);
    } else if (auto eq = line.find('='); eq != std::string::npos) {
      t.constants.emplace(trim_copy(line.substr(0, eq)), parse_cyclo(trim_copy(line.substr(eq + 1)), kCharField));
    } else {
      throw std::invalid_argument("unrecognized character table line: " + line);
    }
  }
  for (const auto& [name, cells] : raw) {
    CharacterVector row;
    for (const auto& c : cells) {
      auto it = t.constants.find(c);
      row.push_back(it != t.constants.end() ? it->second : parse_cyclo(c, kCharField));
    }
    t.names.push_back(name);
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline const CharacterTable& character_table() {
  static const CharacterTable t = parse_character_table(kCharacterTableText);
  return t;
}

/// <a, b> = (1/|G|) sum_c |c| a(c) conj(b(c)).
inline CycloNum inner_product(const CharacterVector& a, const CharacterVector& b,
                              const std::vector<std::size_t>& sizes) {
  CycloNum acc(kCharField);
  std::size_t total = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    acc += (a[c] * b[c].conj()).scaled(Rational(static_cast<long>(sizes[c])));
    total += sizes[c];
  }
  return acc.scaled(Rational(1, static_cast<long>(total)));
}

/// Symmetric square and cube via the power maps of the group.
inline CharacterVector sym_power_character(const CharacterVector& chi, int k, const PSL211& g) {
  CharacterVector out;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const CycloNum& x1 = chi[c];
    const CycloNum& x2 = chi[g.power_map(c, 2)];
    if (k == 2) {
      out.push_back((x1 * x1 + x2).scaled(make_rational(1, 2)));
    } else if (k == 3) {
      const CycloNum& x3 = chi[g.power_map(c, 3)];
      out.push_back((x1 * x1 * x1 + (x1 * x2).scaled(Rational(3)) + x3.scaled(Rational(2))).scaled(make_rational(1, 6)));
    } else {
      throw std::invalid_argument("symmetric powers supported for k in {2, 3}");
    }
  }
  return out;
}

/// Multiplicities over the table rows; throws if chi is not a character.
inline std::vector<long> decompose(const CharacterVector& chi, const CharacterTable& t,
                                   const std::vector<std::size_t>& sizes) {
  std::vector<long> mult;
  for (const auto& row : t.rows) {
    const auto m = inner_product(chi, row, sizes).as_rational();
    if (!m || m->get_den() != 1 || sgn(*m) < 0)
      throw std::domain_error("not a character: multiplicity " + (m ? m->get_str() : std::string("irrational")));
    mult.push_back(m->get_num().get_si());
  }
  return mult;
}

inline std::string describe_decomposition(const std::vector<long>& mult, const CharacterTable& t) {
  std::string s;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (mult[i] > 1) s += std::to_string(mult[i]);
    s += t.names[i];
  }
  return s.empty() ? "0" : s;
}

/// The table with the two columns of each listed pair exchanged for the
/// listed rows, i.e. the other consistent root labeling.
inline CharacterTable swap_columns(const CharacterTable& t, std::size_t a, std::size_t b) {
  CharacterTable out = t;
  for (auto& row : out.rows) std::swap(row[a], row[b]);
  return out;
}

}  // namespace abelcheck
