#pragma once

// Named verification checks, their suites, run configuration and reports.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelcheck/chartab.hpp"
#include "abelcheck/expected.hpp"
#include "abelcheck/ffscan.hpp"
#include "abelcheck/grassfano.hpp"
#include "abelcheck/heisenberg.hpp"
#include "abelcheck/hilbert.hpp"
#include "abelcheck/mpoly.hpp"
#include "abelcheck/pfaffian.hpp"
#include "abelcheck/surface9.hpp"

namespace abelcheck {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, warn };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::warn: return "warn";
  }
  return "?";
}

struct CheckReport {
  std::string check_id;
  Status status = Status::fail;
  json details = json::object();
  long elapsed_ms = 0;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::uint64_t> primes{3, 7, 13, 23, 31};
  std::vector<std::uint64_t> reported_primes{11};
  std::map<int, std::uint64_t> scan_primes{{9, 19}, {11, 23}};
  unsigned t_max = 5;
  std::vector<std::pair<long, long>> lambda_mu_samples{{0, 1}, {1, 1}, {1, 2}, {2, 1}, {1, 0}};
  std::uint64_t rank_prime_a = kRankPrimeA;
  std::uint64_t rank_prime_b = kRankPrimeB;
  unsigned workers = 1;
  std::string report_path;
  std::string format = "text";

  void validate() const {
    for (auto q : primes)
      if (q == 2 || !is_prime(q)) throw ConfigError("primes: " + std::to_string(q) + " is not an odd prime");
    for (auto q : reported_primes)
      if (q == 2 || !is_prime(q)) throw ConfigError("reported_primes: " + std::to_string(q) + " is not an odd prime");
    for (const auto& [d, q] : scan_primes) {
      if (d != 9 && d != 11) throw ConfigError("scan_primes: level must be 9 or 11");
      if (!is_prime(q) || (q - 1) % static_cast<std::uint64_t>(d) != 0)
        throw ConfigError("scan_primes: need a prime q with " + std::to_string(d) + " | q-1, got " + std::to_string(q));
    }
    if (t_max < 2) throw ConfigError("t_max must be >= 2");
    if (lambda_mu_samples.size() < 2) throw ConfigError("lambda_mu_samples needs at least two pairs");
    for (const auto& [l, m] : lambda_mu_samples)
      if (l == 0 && m == 0) throw ConfigError("lambda_mu_samples: (0:0) is not a point");
    if (!is_prime(rank_prime_a) || !is_prime(rank_prime_b) || rank_prime_a == rank_prime_b)
      throw ConfigError("rank primes must be two distinct primes");
    if (format != "json" && format != "text") throw ConfigError("format must be json or text");
    if (workers == 0) throw ConfigError("workers must be >= 1");
  }

  RankOptions rank_options() const { return {rank_prime_a, rank_prime_b, false}; }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim_copy(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a nonnegative integer, got '" + v + "'");
  }
}

inline long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
}

}  // namespace detail

/// Applies one key=value setting.
inline void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  using detail::parse_uint;
  if (key == "primes" || key == "reported_primes") {
    std::vector<std::uint64_t> ps;
    for (const auto& p : detail::split(value, ',')) ps.push_back(parse_uint(key, p));
    (key == "primes" ? c.primes : c.reported_primes) = ps;
  } else if (key == "scan_primes") {
    c.scan_primes.clear();
    for (const auto& item : detail::split(value, ',')) {
      const auto kv = detail::split(item, ':');
      if (kv.size() != 2) throw ConfigError("scan_primes: expected d:q pairs, got '" + item + "'");
      c.scan_primes[static_cast<int>(parse_uint(key, kv[0]))] = parse_uint(key, kv[1]);
    }
  } else if (key == "t_max") {
    c.t_max = static_cast<unsigned>(parse_uint(key, value));
  } else if (key == "lambda_mu_samples") {
    c.lambda_mu_samples.clear();
    for (const auto& item : detail::split(value, ',')) {
      const auto kv = detail::split(item, ':');
      if (kv.size() != 2) throw ConfigError("lambda_mu_samples: expected l:m pairs, got '" + item + "'");
      c.lambda_mu_samples.emplace_back(detail::parse_long(key, kv[0]), detail::parse_long(key, kv[1]));
    }
  } else if (key == "rank_primes") {
    const auto ps = detail::split(value, ',');
    if (ps.size() != 2) throw ConfigError("rank_primes: expected two primes");
    c.rank_prime_a = parse_uint(key, ps[0]);
    c.rank_prime_b = parse_uint(key, ps[1]);
  } else if (key == "workers") {
    c.workers = static_cast<unsigned>(parse_uint(key, value));
  } else if (key == "report_path") {
    c.report_path = value;
  } else if (key == "format") {
    c.format = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

/// key=value lines; '#' comments; blank lines ignored.
inline RunConfig parse_config(std::istream& in, RunConfig base = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim_copy(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(base, trim_copy(line.substr(0, eq)), trim_copy(line.substr(eq + 1)));
  }
  return base;
}

inline RunConfig load_config(const std::string& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in, std::move(base));
}

/// Shared constructions, built on first use and reused across checks.
class Context {
 public:
  const SkewMatrix<QPoly>& s11() { return get(s11_, [] { return s_matrix_d11(); }); }
  const SkewMatrix<QPoly>& s9() { return get(s9_, [] { return s_matrix_d9(); }); }
  const SkewMatrix<QPoly>& adj11() { return get(adj11_, [this] { return pfaffian_adjugate(s11()); }); }
  const QPoly& pf11() { return get(pf11_, [this] { return pfaffian(s11()); }); }
  const QPoly& f6() { return get(f6_, [] { return parse_poly(expected::kSexticF6, 6); }); }
  const KleinConstruction& klein() { return get(klein_, [] { return klein_from_hyperplanes(); }); }
  const std::vector<QPoly>& theta9() { return get(theta9_, [] { return theta9_closed_form(); }); }
  const PSL211& group() { return PSL211::instance(); }

 private:
  template <class T, class F>
  const T& get(std::optional<T>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  std::optional<SkewMatrix<QPoly>> s11_, s9_, adj11_;
  std::optional<QPoly> pf11_, f6_;
  std::optional<KleinConstruction> klein_;
  std::optional<std::vector<QPoly>> theta9_;
};

struct Outcome {
  Status status;
  json details;
};

inline Outcome verdict(bool ok, json details) { return {ok ? Status::pass : Status::fail, std::move(details)}; }

struct CheckDef {
  std::string id;
  std::string suite;
  std::function<Outcome(Context&, const RunConfig&)> run;
};

namespace checks {

template <std::size_t N>
std::vector<std::vector<QPoly>> parse_rows(const std::array<std::array<std::string_view, N>, N>& rows,
                                           std::size_t nvars) {
  std::vector<std::vector<QPoly>> out;
  for (const auto& r : rows) {
    std::vector<QPoly> row;
    for (auto s : r) row.push_back(parse_poly(s, nvars));
    out.push_back(std::move(row));
  }
  return out;
}

template <class R>
json mismatches(const SkewMatrix<QPoly>& got, const std::vector<std::vector<R>>& want) {
  json out = json::array();
  for (std::size_t i = 0; i < got.size(); ++i)
    for (std::size_t j = 0; j < got.size(); ++j)
      if (got.at(i, j) != want[i][j])
        out.push_back({{"entry", {i, j}}, {"expected", render(want[i][j])}, {"actual", render(got.at(i, j))}});
  return out;
}

inline std::vector<std::string> render_all(const std::vector<QPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render(p));
  return out;
}

inline Outcome chart_calibration(Context& ctx, const RunConfig&) {
  const PminusChart c11 = calibrate_pminus(HeisenbergContext(11));
  const PminusChart c9 = calibrate_pminus(HeisenbergContext(9));
  const json m11 = mismatches(ctx.s11(), parse_rows(expected::kSMatrix11, 6));
  const json m9 = mismatches(ctx.s9(), parse_rows(expected::kSMatrix9, 5));
  return verdict(m11.empty() && m9.empty(),
                 {{"claim", "restricted quadric blocks equal the target 6x6 and 5x5 matrices"},
                  {"eps_d11", c11.eps}, {"eps_d9", c9.eps}, {"mismatch_d11", m11}, {"mismatch_d9", m9}});
}

inline Outcome rows_subrep(int d) {
  const HeisenbergContext h(d);
  bool units = true;
  for (std::size_t i = 0; i < h.half(); ++i) {
    std::vector<CycloNum> v(h.half(), CycloNum(d));
    v[i] = h.one();
    units = units && row_span_is_subrep(h, v);
  }
  std::vector<CycloNum> mixed;
  for (std::size_t i = 0; i < h.half(); ++i)
    mixed.push_back(CycloNum::from_rational(d, make_rational(static_cast<long>(2 * i + 1) * (i % 2 ? -1 : 1), 3)));
  const bool combo = row_span_is_subrep(h, mixed);
  const CPoly a = to_cyclo(QPoly::variable(static_cast<std::size_t>(d), 0, Rational(1)), d);
  const CPoly b = to_cyclo(QPoly::variable(static_cast<std::size_t>(d), 1, Rational(1)), d);
  const bool partial = span_is_subrep(h, {a * a, b * b});
  return verdict(units && combo && !partial,
                 {{"claim", "spans of row combinations of R are sigma- and tau-stable"},
                  {"unit_rows", units}, {"rational_combination", combo}, {"span_x0sq_x1sq", partial}});
}

inline Outcome f6_check(Context& ctx, const RunConfig&) {
  const QPoly want = ctx.f6().scaled(Rational(kSexticSign));
  return verdict(ctx.pf11() == want, {{"claim", "Pf(S) equals the 15-term sextic"},
                                      {"sign", kSexticSign},
                                      {"terms", ctx.pf11().num_terms()},
                                      {"actual", render(ctx.pf11())}});
}

inline Outcome f6_specialize(Context& ctx, const RunConfig&) {
  const QPoly s = substitute(ctx.pf11(), {{4, QPoly(6)}, {5, QPoly(6)}}, Rational(1));
  const QPoly want = parse_poly(expected::kSexticSpecialized, 6).scaled(Rational(kSexticSign));
  return verdict(s == want && s.num_terms() == 1,
                 {{"claim", "setting x4 = x5 = 0 leaves a single term"}, {"actual", render(s)}});
}

inline Outcome v14_linear(Context& ctx, const RunConfig&) {
  const LinearSection sec = v14_section();
  const auto values = sec.evaluate(PluckerVector<QPoly>(ctx.adj11()));
  json per = json::object();
  bool ok = true;
  for (std::size_t r = 0; r < values.size(); ++r) {
    const RelationStatus st = classify_relation(values[r], ctx.pf11());
    per[sec.names[r]] = to_string(st);
    ok = ok && st != RelationStatus::fails;
  }
  return verdict(ok, {{"claim", "the five linear relations vanish on the adjugate Pluecker coordinates"},
                      {"labels", "1-based rows of S"},
                      {"relations", per}});
}

inline Outcome plucker_3term(Context& ctx, const RunConfig&) {
  const auto& s = ctx.s11();
  const QPoly& pf = ctx.pf11();
  auto pf_minus = [&](std::set<std::size_t> del) { return sub_pfaffian(s, del); };
  std::size_t symbolic_ok = 0, quotient_ok = 0;
  const auto quads = quadruples(6);
  for (const auto& q : quads) {
    const std::size_t i = q.i - 1, j = q.j - 1, k = q.k - 1, l = q.l - 1;
    const QPoly lhs = pf_minus({i, j}) * pf_minus({k, l}) - pf_minus({i, k}) * pf_minus({j, l}) +
                      pf_minus({i, l}) * pf_minus({j, k});
    const QPoly small = pf_minus({i, j, k, l});
    if (lhs == pf * small) ++symbolic_ok;
    if (auto quo = divide_exact(lhs, pf); quo && *quo == small) ++quotient_ok;
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::size_t numeric_ok = 0;
  constexpr std::size_t kSamples = 50;
  for (std::size_t t = 0; t < kSamples; ++t) {
    SkewMatrix<Rational> m(6, Rational(0));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b) m.set(a, b, make_rational(dist(rng), 1 + (a + b) % 3));
    const Rational p = pfaffian(m);
    bool all = true;
    for (const auto& q : quads) {
      const std::size_t i = q.i - 1, j = q.j - 1, k = q.k - 1, l = q.l - 1;
      auto sp = [&](std::set<std::size_t> del) { return sub_pfaffian(m, del); };
      const Rational lhs = sp({i, j}) * sp({k, l}) - sp({i, k}) * sp({j, l}) + sp({i, l}) * sp({j, k});
      all = all && lhs == p * sp({i, j, k, l});
    }
    if (all) ++numeric_ok;
  }
  return verdict(symbolic_ok == quads.size() && quotient_ok == quads.size() && numeric_ok == kSamples,
                 {{"claim", "three-term Pfaffian identity on S and on random skew matrices"},
                  {"symbolic", std::to_string(symbolic_ok) + "/" + std::to_string(quads.size())},
                  {"exact_quotient", std::to_string(quotient_ok) + "/" + std::to_string(quads.size())},
                  {"numeric", std::to_string(numeric_ok) + "/" + std::to_string(kSamples)}});
}

inline Outcome klein_pfaffian(Context& ctx, const RunConfig&) {
  const auto& k = ctx.klein();
  const json mm = mismatches(k.m, parse_rows(expected::kKleinMatrix, 5));
  const QPoly want = parse_poly(expected::kKleinCubic, 5).scaled(Rational(kKleinSign));
  // The dual equations must span the same space as the target list.
  auto dual_var = [&](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() != 3 || name[0] != 'x') return std::nullopt;
    const std::pair<std::size_t, std::size_t> ab{static_cast<std::size_t>(name[1] - '0'),
                                                 static_cast<std::size_t>(name[2] - '0')};
    auto it = std::find(k.labels.begin(), k.labels.end(), ab);
    if (it == k.labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - k.labels.begin());
  };
  Matrix<Rational> target;
  for (auto e : expected::kDualP4Equations) {
    const QPoly p = parse_poly(e, 15, dual_var);
    std::vector<Rational> row(15, Rational(0));
    for (const auto& [ex, c] : p.terms())
      for (std::size_t v = 0; v < 15; ++v)
        if (ex[v]) row[v] = c;
    target.push_back(row);
  }
  Matrix<Rational> both = target;
  both.insert(both.end(), k.dual_equations.begin(), k.dual_equations.end());
  const std::size_t rt = rank(target), rk = rank(k.dual_equations), rb = rank(both);
  const bool dual_ok = rt == 10 && rk == 10 && rb == 10;
  return verdict(mm.empty() && k.cubic == want && dual_ok,
                 {{"claim", "hyperplane span gives the linear matrix M with Pf(M) the Klein cubic"},
                  {"sign", kKleinSign},
                  {"pfaffian", render(k.cubic)},
                  {"dual_equations_match", dual_ok},
                  {"mismatch", mm}});
}

inline Outcome klein_adjugate(Context& ctx, const RunConfig&) {
  const auto& k = ctx.klein();
  const auto adj = pfaffian_adjugate(k.m);
  const json mm = mismatches(adj, parse_rows(expected::kKleinAdjugate, 5));
  const auto prod = dense_product(k.m.dense(), adj.dense(), QPoly(5));
  bool scalar = true;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      scalar = scalar && prod[i][j] == (i == j ? k.cubic.scaled(Rational(kAdjugateSign)) : QPoly(5));
  return verdict(mm.empty() && scalar, {{"claim", "the Pfaffian adjugate of M equals the quadric matrix"},
                                        {"product_is_pf_identity", scalar},
                                        {"adjugate_sign", kAdjugateSign},
                                        {"mismatch", mm}});
}

inline Outcome klein_jacobian(Context&, const RunConfig& cfg) {
  JacobianMatch jm;
  try {
    jm = jacobian_system();
  } catch (const std::domain_error& e) {
    return verdict(false, {{"error", e.what()}});
  }
  const LinearSection sec = v14_section();
  json forms = json::array();
  for (std::size_t r = 0; r < jm.values.size(); ++r)
    forms.push_back({{"form", sec.names[r]}, {"value", render(jm.values[r])},
                     {"quadric_index", jm.quadric_of[r]}, {"scalar", jm.scalar[r].get_str()}});
  // Same degree-2 span as the partial derivatives of the cubic.
  const QPoly klein = klein_cubic();
  std::vector<QPoly> partials;
  for (std::size_t v = 0; v < 5; ++v) partials.push_back(partial_derivative(klein, v));
  const HilbertProfile hp = graded_hilbert(Ideal<Rational>(5, partials), 2, {kRankPrimeA, kRankPrimeB, true});
  const HilbertProfile hq = graded_hilbert(Ideal<Rational>(5, jm.values), 2, {kRankPrimeA, kRankPrimeB, true});
  std::vector<QPoly> joint = partials;
  joint.insert(joint.end(), jm.values.begin(), jm.values.end());
  const HilbertProfile hj = graded_hilbert(Ideal<Rational>(5, joint), 2, {kRankPrimeA, kRankPrimeB, true});
  const bool same_span = hp.values[2] == hq.values[2] && hq.values[2] == hj.values[2];
  // Euler relation.
  QPoly euler(5);
  for (std::size_t v = 0; v < 5; ++v) euler += QPoly::variable(5, v, Rational(1)) * partials[v];
  const bool euler_ok = euler == klein.scaled(Rational(3));

  json scans = json::array();
  bool zero_everywhere = true;
  for (auto q : cfg.primes) {
    const auto s = jacobian_zero_scan(q);
    zero_everywhere = zero_everywhere && s.count() == 0;
    scans.push_back({{"q", q}, {"system_zeros", s.count()}, {"quadric_zeros", s.quadric_zeros.size()}});
  }
  json reported = json::array();
  for (auto q : cfg.reported_primes) {
    const auto s = jacobian_zero_scan(q);
    reported.push_back({{"q", q}, {"system_zeros", s.count()}, {"quadric_zeros", s.quadric_zeros.size()}});
  }
  return verdict(same_span && euler_ok && zero_everywhere,
                 {{"claim", "section forms on adj(M) are the Jacobian quadrics; no common zero with the cubic"},
                  {"forms", forms},
                  {"same_span_as_partials", same_span},
                  {"euler_relation", euler_ok},
                  {"scans", scans},
                  {"reported_only", reported}});
}

inline Outcome theta_witness(Context& ctx, const RunConfig& cfg) {
  const std::uint64_t q = cfg.scan_primes.count(11) ? cfg.scan_primes.at(11) : 23;
  const auto p = find_stratum_point(11, q, 4);
  if (!p) return verdict(false, {{"error", "no rank-4 point found"}, {"q", q}});
  std::vector<Fq> x{Fq(q, 0)};
  for (auto c : *p) x.emplace_back(q, static_cast<long long>(c));
  auto at = [&](const QPoly& f) { return evaluate<Fq>(reduce_mod(f, q), x, Fq(q, 0)); };
  const auto adj = ctx.adj11().map(at);
  const auto s = ctx.s11().map(at);
  const PluckerVector<Fq> pv(adj);
  const bool nonzero = !pv.is_zero();
  const bool decomposable = is_decomposable(pv);
  const auto span = reconstruct_span(pv);
  bool kills = span.has_value();
  if (span)
    for (const auto& row : *span) {
      const auto img = apply(s, row);
      kills = kills && std::all_of(img.begin(), img.end(), [](const Fq& v) { return v.is_zero(); });
    }
  return verdict(nonzero && decomposable && kills,
                 {{"claim", "at a rank-4 point the adjugate is a decomposable plane killed by S(P)"},
                  {"q", q},
                  {"point", point_string(*p)},
                  {"decomposable", decomposable},
                  {"span_in_kernel", kills}});
}

inline Outcome theta9_closedform(Context& ctx, const RunConfig&) {
  const auto& v = ctx.theta9();
  std::vector<QPoly> want;
  for (auto s : expected::kTheta9) want.push_back(parse_poly(s, 5));
  const bool match = v == want;
  const bool v03 = (v[0] + v[3]).is_zero();
  const auto img = apply(ctx.s9(), v);
  const bool kernel = std::all_of(img.begin(), img.end(), [](const QPoly& p) { return p.is_zero(); });
  return verdict(match && v03 && kernel, {{"claim", "kernel vector of S9 equals the displayed quartics"},
                                          {"sign", kTheta9Sign},
                                          {"v0_plus_v3_zero", v03},
                                          {"in_kernel", kernel},
                                          {"actual", render_all(v)}});
}

inline json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.get_str());
  return a;
}

inline Outcome theta9_z0(Context&, const RunConfig&) {
  const auto v = theta9_at_z0();
  const auto want = to_rationals(expected::kThetaAtZ0);
  return verdict(projectively_equal(v, want),
                 {{"claim", "Theta at z0 is (0:1:0:0:0)"}, {"actual", rationals_json(v)}});
}

inline Outcome basepoint(Context&, const RunConfig&) {
  const std::vector<std::vector<Rational>> basis{
      {1, 0, 0, -1, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}};
  bool all = true;
  for (const auto& v : basis) all = all && base_point_check(v);
  const bool violating = base_point_check({1, 0, 0, 0, 0});
  return verdict(all && !violating, {{"claim", "quadrics of v.R4 with v0 = -v3 vanish at (1:0:0:1:0:0:1:0:0)"},
                                     {"subspace_basis_ok", all},
                                     {"v_1_0_0_0_0", violating}});
}

inline std::vector<std::vector<CycloNum>> special_points_cyclo() {
  std::vector<std::vector<CycloNum>> pts;
  for (const auto& p : expected::kSpecialPoints) {
    std::vector<CycloNum> x;
    for (const auto& e : p)
      x.push_back(e.coeff == 0 ? CycloNum(9) : CycloNum::root(9, e.power).scaled(Rational(e.coeff)));
    pts.push_back(std::move(x));
  }
  return pts;
}

inline Outcome special_points(Context& ctx, const RunConfig&) {
  const PminusChart chart = calibrate_pminus(HeisenbergContext(9));
  const CycloNum zero(9), one = CycloNum::from_rational(9, Rational(1));
  json per = json::array();
  bool ok = true;
  for (const auto& p : special_points_cyclo()) {
    const auto r = chart.restrict_point(p);
    if (!r) return verdict(false, {{"error", "special point not on the odd eigenspace"}});
    bool vanish = true;
    for (const auto& v : ctx.theta9()) vanish = vanish && evaluate<Rational, CycloNum>(v, *r, zero, [&](const Rational& c) { return one.scaled(c); }).is_zero();
    const auto s = ctx.s9().map([&](const QPoly& f) {
      return evaluate<Rational, CycloNum>(f, *r, zero, [&](const Rational& c) { return one.scaled(c); });
    });
    const std::size_t rk = rank(s.dense());
    ok = ok && vanish && rk == 2;
    per.push_back({{"theta_vanishes", vanish}, {"rank", rk}});
  }
  return verdict(ok, {{"claim", "Theta vanishes and S9 has rank 2 at the four special points"}, {"points", per}});
}

inline Outcome fiber_ideal(Context&, const RunConfig&) {
  const auto fib = degenerate_fiber_ideal();
  const QPoly want_a = parse_poly(expected::kMooreCubicA, 9), want_b = parse_poly(expected::kMooreCubicB, 9);
  const auto m = moore_at_z0();
  const bool entry = m.at(0, 3) == parse_poly("-x6", 9) && m.at(0, 0).is_zero();
  const auto got = fib.generators.canonical();
  const auto want = j_family(Rational(1), Rational(1)).canonical();
  std::vector<std::string> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  const bool quadrics_monomial = fib.quadrics.size() == 9;
  return verdict(fib.cubic_a == want_a && fib.cubic_b == want_b && entry && missing.empty() && extra.empty() &&
                     quadrics_monomial,
                 {{"claim", "Moore Pfaffians, reduction and sigma-closure give the generators of J(1:1)"},
                  {"cubic_a", render(fib.cubic_a)},
                  {"cubic_b", render(fib.cubic_b)},
                  {"reduced_b", render(fib.reduced_b)},
                  {"generators", got.size()},
                  {"missing", missing},
                  {"extra", extra}});
}

inline Outcome jfamily_components(Context&, const RunConfig& cfg) {
  json per = json::array();
  bool ok = true;
  for (const auto& [l, m] : cfg.lambda_mu_samples) {
    const auto comps = quadric_decomposition(Rational(l), Rational(m));
    const bool all = std::all_of(comps.begin(), comps.end(), [](const QuadricComponent& c) { return c.contains_family; });
    ok = ok && all;
    per.push_back({{"lambda", l}, {"mu", m}, {"on_all_components", all}});
  }
  // (0:1) is the monomial ideal J1.
  const auto j1 = j_family(Rational(0), Rational(1));
  std::set<std::string> want;
  for (long i = 0; i < 9; ++i) {
    auto v = [&](long k) { return "x" + std::to_string(mod_index(i + k, 9)); };
    want.insert(render(parse_poly(v(0) + "*" + v(2), 9)));
    want.insert(render(parse_poly(v(0) + "*" + v(3) + "*" + v(6), 9)));
    want.insert(render(parse_poly(v(3) + "*" + v(7) + "*" + v(8), 9)));
  }
  const bool j1_ok = j1.canonical() == want;
  return verdict(ok && j1_ok, {{"claim", "J-family generators vanish on the nine quadric surfaces; J(0:1) = J1"},
                               {"samples", per},
                               {"j1_generators_match", j1_ok}});
}

inline Ideal<Rational> j1_ideal() {
  auto g = j_family(Rational(0), Rational(1));
  for (auto& c : g.cubics) c = monic(c);
  return as_ideal(g);
}

inline json integers_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Outcome hilbert_monomial(Context&, const RunConfig& cfg) {
  const auto h = monomial_hilbert(j1_ideal(), cfg.t_max);
  const auto f = face_vector(j1_ideal());
  bool face_ring = true;
  for (unsigned t = 0; t <= cfg.t_max; ++t) face_ring = face_ring && face_ring_hilbert(f, t) == h.values[t];
  const auto want = abelian_surface_profile(cfg.t_max);
  return verdict(h.values == want && face_ring, {{"claim", "Hilbert function of J1 is 1, 9t^2"},
                                                 {"actual", integers_json(h.values)},
                                                 {"face_ring_identity", face_ring}});
}

inline Outcome hilbert_faces(Context&, const RunConfig&) {
  const SimplicialComplex c(j1_ideal());
  const auto f = c.face_vector();
  auto j2 = j_family(Rational(1), Rational(0));
  GeneratorSet only_j2;
  only_j2.quadrics = j2.quadrics;
  only_j2.cubics.assign(j2.cubics.begin(), j2.cubics.begin() + 3);
  const SimplicialComplex c2(as_ideal(only_j2));
  const auto f2 = c2.face_vector();
  auto cyclic = [&](std::array<long, 4> offsets) {
    bool all = true;
    for (long i = 0; i < 9 && all; ++i)
      all = c2.contains({mod_index(i + offsets[0], 9), mod_index(i + offsets[1], 9), mod_index(i + offsets[2], 9),
                         mod_index(i + offsets[3], 9)});
    return all;
  };
  const bool tets = f2.size() == 4 && f2[3] == 9 && cyclic({0, 1, 4, 5});
  const bool quoted_pattern = cyclic({0, 1, 3, 4});
  bool contains_j1 = true;
  for (auto face : c.faces())
    contains_j1 = contains_j1 && std::find(c2.faces().begin(), c2.faces().end(), face) != c2.faces().end();
  const std::vector<std::size_t> want{9, 27, 18};
  return verdict(f == want && c.euler_characteristic() == 0 && tets && contains_j1,
                 {{"claim", "J1 is the face ideal of a 9-vertex torus; J2 adds the nine tetrahedra"},
                  {"f_J1", f},
                  {"euler", c.euler_characteristic()},
                  {"f_J2", f2},
                  {"J2_tetrahedra", "{i,i+1,i+4,i+5}"},
                  {"J2_tetrahedra_ok", tets},
                  {"pattern_i_i1_i3_i4_present", quoted_pattern},
                  {"J2_contains_J1_faces", contains_j1}});
}

inline Outcome hilbert_flatness(Context&, const RunConfig& cfg) {
  std::vector<std::pair<Rational, Rational>> samples;
  for (const auto& [l, m] : cfg.lambda_mu_samples) samples.emplace_back(Rational(l), Rational(m));
  const auto ev = flatness_evidence(
      [](const Rational& l, const Rational& m) { return as_ideal(j_family(l, m)); }, samples, cfg.t_max,
      cfg.rank_options());
  const auto want = abelian_surface_profile(cfg.t_max);
  bool matches = true;
  json rows = json::array();
  for (const auto& r : ev.rows) {
    matches = matches && r.profile.values == want;
    rows.push_back({{"lambda", r.lambda.get_str()}, {"mu", r.mu.get_str()},
                    {"profile", integers_json(r.profile.values)}, {"method", r.profile.method}});
  }
  return verdict(ev.constant && matches,
                 {{"claim", "sampled J(lambda:mu) share the Hilbert function 1, 9t^2 up to t_max"},
                  {"t_max", cfg.t_max},
                  {"scope", "sampled parameters and degrees only"},
                  {"samples", rows}});
}

/// A fixed point of the odd chart used as a general Theta(P).
inline std::vector<Rational> general_chart_point() { return {0, 2, -3, 5, 7}; }

inline Outcome hilbert_cubic_gap(Context& ctx, const RunConfig& cfg) {
  std::vector<Rational> v;
  for (const auto& f : ctx.theta9()) v.push_back(evaluate<Rational>(f, general_chart_point(), Rational(0)));
  const auto h = graded_hilbert(Ideal<Rational>(9, quadrics_of(v)), 3, cfg.rank_options());
  const Integer gap = h.values[3] - 81;
  const auto hz = graded_hilbert(Ideal<Rational>(9, quadrics_of(theta9_at_z0())), 3, cfg.rank_options());
  return verdict(gap == 6, {{"claim", "nine quadrics of a general Theta(P) leave 6 cubics beyond 9t^2"},
                            {"v", rationals_json(v)},
                            {"profile", integers_json(h.values)},
                            {"gap", gap.get_str()},
                            {"gap_at_theta_z0", Integer(hz.values[3] - 81).get_str()}});
}

inline ProjPoint reduce_special_point(const std::vector<CycloNum>& p, const PminusChart& chart, std::uint64_t q) {
  const CycloReduction red(9, q);
  const auto r = chart.restrict_point(p);
  if (!r) throw std::logic_error("special point not on the odd eigenspace");
  std::vector<std::uint64_t> x;
  for (std::size_t k = 1; k < r->size(); ++k) x.push_back(red((*r)[k]).value());
  return canonical(x, q);
}

inline Outcome scan_d9(Context&, const RunConfig& cfg) {
  const std::uint64_t q = cfg.scan_primes.at(9);
  const auto c = scan_strata(9, q, cfg.workers);
  std::set<ProjPoint> rank2;
  const bool have_rank2 = c.min_rank == 2;
  if (have_rank2) rank2.insert(c.min_points.begin(), c.min_points.end());
  std::vector<QPoly> ci;
  for (auto s : expected::kRank2Cubics) {
    // x1..x4 -> projective coordinates 0..3.
    ci.push_back(permute_variables(parse_poly(s, 5), {0, 0, 1, 2, 3}, 4));
  }
  const auto ci_pts = common_zeros(ci, q);
  std::set<ProjPoint> predicted(ci_pts.begin(), ci_pts.end());
  const PminusChart chart = calibrate_pminus(HeisenbergContext(9));
  std::size_t overlaps = 0;
  for (const auto& p : special_points_cyclo()) {
    const auto r = reduce_special_point(p, chart, q);
    if (!predicted.insert(r).second) ++overlaps;
  }
  const std::uint64_t rank0 = c.counts.count(0) ? c.counts.at(0) : 0;
  const bool ok = rank0 == 0 && have_rank2 && rank2 == predicted && c.total() == projective_count(q, c.n);
  json counts = json::object();
  for (const auto& [r, k] : c.counts) counts[std::to_string(r)] = k;
  return verdict(ok, {{"claim", "rank-2 locus over F_q is the CI curve plus the four special points"},
                      {"q", q},
                      {"counts", counts},
                      {"ci_points", ci_pts.size()},
                      {"special_point_overlaps", overlaps},
                      {"rank2_points", rank2.size()}});
}

struct Window {
  double lo, hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Heuristic windows: genus-26 curve for rank 2, a sextic threefold scale for rank 4.
inline Window curve_window(double q) { return {q + 1 - 52 * std::sqrt(q), q + 1 + 52 * std::sqrt(q)}; }
inline Window hypersurface_window(double q) {
  const double mid = q * q * q + q * q + q + 1, slack = 6 * q * q * std::sqrt(q);
  return {mid - slack, mid + slack};
}

inline Outcome scan_d11(Context&, const RunConfig& cfg) {
  const std::uint64_t q = cfg.scan_primes.at(11);
  const auto c = scan_strata(11, q, cfg.workers);
  auto count = [&](std::size_t r) -> std::uint64_t { return c.counts.count(r) ? c.counts.at(r) : 0; };
  const Window w2 = curve_window(static_cast<double>(q)), w4 = hypersurface_window(static_cast<double>(q));
  const bool in2 = w2.contains(static_cast<double>(count(2))), in4 = w4.contains(static_cast<double>(count(4)));
  const bool exact = c.total() == projective_count(q, c.n) && count(0) == 0;
  json counts = json::object();
  for (const auto& [r, k] : c.counts) counts[std::to_string(r)] = k;
  Status st = (in2 && in4 && exact) ? Status::pass : Status::warn;
  return {st, {{"claim", "rank strata counts of S over F_q fit curve and hypersurface scales"},
               {"severity", "sanity"},
               {"heuristic_windows", true},
               {"q", q},
               {"counts", counts},
               {"rank2_window", {w2.lo, w2.hi}},
               {"rank4_window", {w4.lo, w4.hi}},
               {"rank4_window_constant", 1}}};
}

inline Outcome chars_group(Context& ctx, const RunConfig&) {
  const auto& g = ctx.group();
  const PElement s = gen_S(), t = gen_T();
  const bool rel = t.pow(2).is_identity() && (s * t).pow(3).is_identity() && s.pow(11).is_identity() &&
                   (s.pow(2) * t * s.pow(6) * t).pow(3).is_identity();
  std::vector<int> sizes;
  for (auto z : g.class_sizes()) sizes.push_back(static_cast<int>(z));
  const bool sizes_ok = std::equal(sizes.begin(), sizes.end(), expected::kClassSizes.begin());
  std::mt19937 rng(91);
  bool power_const = true;
  json pmaps = json::object();
  for (int k : {2, 3}) {
    json row = json::array();
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
      const auto members = g.members(c);
      const std::size_t want = g.power_map(c, k);
      for (int i = 0; i < 10; ++i) {
        const auto& e = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
        power_const = power_const && g.class_of(e.pow(k)) == want;
      }
      row.push_back(want);
    }
    pmaps[std::to_string(k)] = row;
  }
  const bool samples = g.power_map(6, 2) == 7 && g.power_map(1, 2) == 0;
  return verdict(g.order() == 660 && rel && sizes_ok && power_const && samples,
                 {{"claim", "group of order 660 with the stated classes and relations"},
                  {"order", g.order()},
                  {"relations", rel},
                  {"class_sizes", sizes},
                  {"power_maps", pmaps},
                  {"power_map_constant_on_classes", power_const}});
}

inline Outcome chars_orthonormality(Context& ctx, const RunConfig&) {
  const auto& t = character_table();
  const auto& sizes = ctx.group().class_sizes();
  bool rows = true;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.rows.size(); ++j)
      rows = rows && inner_product(t.rows[i], t.rows[j], sizes) ==
                         CycloNum::from_rational(kCharField, Rational(i == j ? 1 : 0));
  bool cols = true;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    CycloNum s(kCharField);
    for (const auto& row : t.rows) s += row[c] * row[c].conj();
    cols = cols && s == CycloNum::from_rational(kCharField, make_rational(660, static_cast<long>(sizes[c])));
  }
  return verdict(rows && cols, {{"claim", "character table rows are orthonormal; columns orthogonal"},
                                {"rows", rows},
                                {"columns", cols}});
}

struct Labeling {
  std::string name;
  CharacterTable table;
};

/// The transcribed table and the relabelings by the two root choices.
inline std::vector<Labeling> labelings() {
  const auto& t = character_table();
  return {{"as transcribed", t},
          {"g6 <-> g7 values", swap_columns(t, 6, 7)},
          {"g3 <-> g4 values", swap_columns(t, 3, 4)},
          {"both swapped", swap_columns(swap_columns(t, 6, 7), 3, 4)}};
}

inline std::size_t row_index(const CharacterTable& t, const std::string& name) {
  return static_cast<std::size_t>(std::find(t.names.begin(), t.names.end(), name) - t.names.begin());
}

inline Outcome chars_sym(Context& ctx, const RunConfig&, int k, const std::string& base, const std::string& claim,
                         const std::string& mirror_base, const std::string& mirror_claim) {
  const auto& sizes = ctx.group().class_sizes();
  json per = json::array();
  bool holds = false;
  for (const auto& lab : labelings()) {
    const auto& t = lab.table;
    const auto d = describe_decomposition(decompose(sym_power_character(t.rows[row_index(t, base)], k, ctx.group()), t, sizes), t);
    const auto dm =
        describe_decomposition(decompose(sym_power_character(t.rows[row_index(t, mirror_base)], k, ctx.group()), t, sizes), t);
    const bool ok = d == claim && dm == mirror_claim;
    holds = holds || ok;
    per.push_back({{"labeling", lab.name}, {base, d}, {mirror_base, dm}, {"claim_holds", ok}});
  }
  return verdict(holds, {{"claim", "Sym^" + std::to_string(k) + "(" + base + ") = " + claim},
                         {"mirror", "Sym^" + std::to_string(k) + "(" + mirror_base + ") = " + mirror_claim},
                         {"accepted_if", "claim and mirror hold in one consistent labeling"},
                         {"labelings", per}});
}

inline Outcome chars_invariant(Context& ctx, const RunConfig&, int k, long want) {
  const auto& sizes = ctx.group().class_sizes();
  bool ok = true;
  json per = json::array();
  for (const auto& lab : labelings()) {
    const auto& t = lab.table;
    for (const std::string base : {"chi2", "chi3"}) {
      const auto m = decompose(sym_power_character(t.rows[row_index(t, base)], k, ctx.group()), t, sizes);
      ok = ok && m[0] == want;
      per.push_back({{"labeling", lab.name}, {"character", base}, {"chi1_multiplicity", m[0]}});
    }
  }
  return verdict(ok, {{"claim", "Sym^" + std::to_string(k) + " of the 5-dimensional character has " +
                                    std::to_string(want) + " invariant(s)"},
                      {"results", per}});
}

}  // namespace checks

inline const std::vector<CheckDef>& all_checks() {
  using namespace checks;
  static const std::vector<CheckDef> defs{
      {"d11.chart.calibration", "d11", chart_calibration},
      {"d11.rows.subrep", "d11", [](Context&, const RunConfig&) { return rows_subrep(11); }},
      {"d11.pfaffian.f6", "d11", f6_check},
      {"d11.f6.specialize", "d11", f6_specialize},
      {"d11.v14.linear", "d11", v14_linear},
      {"d11.plucker.3term", "d11", plucker_3term},
      {"d11.theta.witness", "d11", theta_witness},
      {"klein.pfaffian", "d11", klein_pfaffian},
      {"klein.adjugate", "d11", klein_adjugate},
      {"klein.jacobian", "d11", klein_jacobian},
      {"d9.rows.subrep", "d9", [](Context&, const RunConfig&) { return rows_subrep(9); }},
      {"d9.theta.closedform", "d9", theta9_closedform},
      {"d9.theta.z0", "d9", theta9_z0},
      {"d9.basepoint", "d9", basepoint},
      {"d9.special.points", "d9", special_points},
      {"d9.fiber.ideal", "d9", fiber_ideal},
      {"d9.jfamily.components", "d9", jfamily_components},
      {"d9.hilbert.monomial", "hilbert", hilbert_monomial},
      {"d9.hilbert.faces", "hilbert", hilbert_faces},
      {"d9.hilbert.flatness", "hilbert", hilbert_flatness},
      {"d9.hilbert.cubic_gap", "hilbert", hilbert_cubic_gap},
      {"chars.group", "chars", chars_group},
      {"chars.orthonormality", "chars", chars_orthonormality},
      {"chars.sym2", "chars",
       [](Context& c, const RunConfig& r) { return chars_sym(c, r, 2, "chi3", "chi3+chi5", "chi2", "chi2+chi5"); }},
      {"chars.sym2.invariant", "chars", [](Context& c, const RunConfig& r) { return chars_invariant(c, r, 2, 0); }},
      {"chars.sym3", "chars",
       [](Context& c, const RunConfig& r) {
         return chars_sym(c, r, 3, "chi3", "chi1+chi5+chi6+chi7", "chi2", "chi1+chi5+chi6+chi7");
       }},
      {"chars.sym3.invariant", "chars", [](Context& c, const RunConfig& r) { return chars_invariant(c, r, 3, 1); }},
      {"scan.d9.q19", "scan", scan_d9},
      {"scan.d11.q23", "scan", scan_d11},
  };
  return defs;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "d11", "d9", "chars", "hilbert", "scan"};
  return names;
}

/// Runs a suite or an explicit list of check ids, in registry order.
inline std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const RunConfig& cfg,
                                           Context* shared = nullptr) {
  cfg.validate();
  Context local;
  Context& ctx = shared ? *shared : local;
  std::vector<CheckReport> out;
  for (const auto& def : all_checks()) {
    if (std::find(ids.begin(), ids.end(), def.id) == ids.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    r.check_id = def.id;
    try {
      Outcome o = def.run(ctx, cfg);
      r.status = o.status;
      r.details = std::move(o.details);
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.details = {{"error", e.what()}};
    }
    r.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<std::string> suite_ids(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ConfigError("unknown suite '" + suite + "'");
  std::vector<std::string> ids;
  for (const auto& d : all_checks())
    if (suite == "all" || d.suite == suite) ids.push_back(d.id);
  return ids;
}

inline std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& cfg) {
  return run_checks(suite_ids(suite), cfg);
}

inline int exit_status(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::fail; })
             ? 1
             : 0;
}

inline std::vector<CheckReport> sorted_by_id(std::vector<CheckReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return reports;
}

inline json report_json(const std::vector<CheckReport>& reports, bool with_timing = true) {
  json arr = json::array();
  for (const auto& r : sorted_by_id(reports)) {
    json o = {{"check_id", r.check_id}, {"status", to_string(r.status)}, {"details", r.details}};
    if (with_timing) o["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(o));
  }
  return arr;
}

inline std::string render_report(const std::vector<CheckReport>& reports, const std::string& format) {
  if (format == "json") return report_json(reports).dump(2) + "\n";
  if (format != "text") throw ConfigError("format must be json or text");
  auto rs = sorted_by_id(reports);
  std::stable_partition(rs.begin(), rs.end(), [](const CheckReport& r) { return r.status == Status::fail; });
  std::size_t width = 8;
  for (const auto& r : rs) width = std::max(width, r.check_id.size());
  std::ostringstream os;
  std::size_t np = 0, nf = 0, nw = 0;
  for (const auto& r : rs) {
    os << r.check_id << std::string(width + 2 - r.check_id.size(), ' ') << to_string(r.status);
    os << std::string(6 - std::string(to_string(r.status)).size(), ' ') << r.elapsed_ms << " ms";
    if (r.status != Status::pass && r.details.contains("claim")) os << "  " << r.details["claim"].get<std::string>();
    if (r.details.contains("error")) os << "  error: " << r.details["error"].get<std::string>();
    os << '\n';
    (r.status == Status::pass ? np : r.status == Status::fail ? nf : nw)++;
  }
  os << np << " passed, " << nf << " failed, " << nw << " warnings\n";
  return os.str();
}

/// Writes through a temporary file in the same directory, then renames.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write report to " + path);
    out << content;
    out.flush();
    if (!out) throw ConfigError("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace abelcheck
