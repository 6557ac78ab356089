#include <gtest/gtest.h>

#include <random>

#include "abelcheck/mpoly.hpp"

using namespace abelcheck;
using P = SparsePoly<Rational>;

namespace {

const char* kF6 =
    "-x1^2*x2*x3^3+x1^3*x3*x4^2-x2^3*x3^2*x5+x1*x4^3*x5^2+x2^2*x4*x5^3+x1*x2^4*x4-x2*x3*x4^4"
    "-x1^4*x2*x5+x3^4*x4*x5+x1*x3*x5^4+x1*x2*x3^2*x4^2-x1^2*x2^2*x3*x5-x1*x2^2*x4^2*x5"
    "-x1^2*x3*x4*x5^2+x2*x3^2*x4*x5^2";

P random_poly(std::size_t n, std::mt19937& rng, int terms, unsigned maxdeg) {
  std::uniform_int_distribution<int> c(-4, 4), e(0, static_cast<int>(maxdeg));
  P p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent x(n);
    for (auto& v : x) v = static_cast<std::uint16_t>(e(rng) % 3 == 0 ? e(rng) : 0);
    p.add_term(x, Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST(Mpoly, Arithmetic) {
  const P a = parse_poly("x1^2", 6), b = parse_poly("x2^2", 6);
  EXPECT_EQ(render(a * b), "x1^2*x2^2");
  const P f6 = parse_poly(kF6, 6);
  EXPECT_EQ(f6.num_terms(), 15u);
  EXPECT_TRUE((f6 - f6).is_zero());
  EXPECT_EQ((parse_poly("x0^2*x1 + x1^2*x2", 5) * parse_poly("x4", 5)).num_terms(), 2u);
  EXPECT_THROW(a + parse_poly("x1", 3), std::invalid_argument);
}

TEST(Mpoly, Substitute) {
  const P f6 = parse_poly(kF6, 6);
  std::map<std::size_t, P> m{{4, P(6)}, {5, P(6)}};
  EXPECT_EQ(substitute(f6, m, Rational(1)), parse_poly("-x1^2*x2*x3^3", 6));
  EXPECT_EQ(substitute(f6, {}, Rational(1)), f6);
  const P klein = parse_poly("x0^2*x1+x1^2*x2+x2^2*x3+x3^2*x4+x4^2*x0", 5);
  std::map<std::size_t, P> shift;
  for (std::size_t i = 0; i < 5; ++i) shift[i] = P::variable(5, (i + 1) % 5, Rational(1));
  EXPECT_EQ(substitute(klein, shift, Rational(1)), klein);
  EXPECT_THROW(substitute(klein, {{0, P(5)}}, 5, Rational(1), true), std::invalid_argument);
}

TEST(Mpoly, SubstitutePermutationRoundTrip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const P f = random_poly(5, rng, 8, 4);
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::size_t, P> fwd, back;
    for (std::size_t v = 0; v < 5; ++v) {
      fwd[v] = P::variable(5, perm[v], Rational(1));
      back[perm[v]] = P::variable(5, v, Rational(1));
    }
    EXPECT_EQ(substitute(substitute(f, fwd, Rational(1)), back, Rational(1)), f);
  }
}

TEST(Mpoly, Evaluate) {
  const P f6 = parse_poly(kF6, 6);
  std::vector<Rational> pt{0, 1, 0, 0, 0, 0};
  EXPECT_EQ(evaluate<Rational>(f6, pt, Rational(0)), 0);
  const P klein = parse_poly("x0^2*x1+x1^2*x2+x2^2*x3+x3^2*x4+x4^2*x0", 5);
  std::vector<Rational> e0{1, 0, 0, 0, 0};
  EXPECT_EQ(evaluate<Rational>(klein, e0, Rational(0)), 0);
  std::vector<Rational> bad{1, 0};
  EXPECT_THROW(evaluate<Rational>(klein, bad, Rational(0)), std::invalid_argument);
}

TEST(Mpoly, EvaluateIsMultiplicative) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int i = 0; i < 30; ++i) {
    const P f = random_poly(4, rng, 5, 3), g = random_poly(4, rng, 5, 3);
    std::vector<Rational> pt;
    for (int k = 0; k < 4; ++k) pt.push_back(make_rational(d(rng), 1 + k));
    EXPECT_EQ(evaluate<Rational>(f * g, pt, Rational(0)),
              evaluate<Rational>(f, pt, Rational(0)) * evaluate<Rational>(g, pt, Rational(0)));
  }
}

TEST(Mpoly, RingAxioms) {
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    const P a = random_poly(4, rng, 4, 3), b = random_poly(4, rng, 4, 3), c = random_poly(4, rng, 4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Mpoly, DivideExact) {
  const P f6 = parse_poly(kF6, 6), x1 = parse_poly("x1", 6);
  auto q = divide_exact(f6 * x1, f6);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x1);
  EXPECT_FALSE(divide_exact(parse_poly("x1^2", 6), parse_poly("x2", 6)).has_value());
  EXPECT_THROW(divide_exact(x1, P(6)), std::domain_error);
}

TEST(Mpoly, DivideExactRandomPairs) {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 200) {
    const P f = random_poly(5, rng, 6, 3), d = random_poly(5, rng, 4, 3);
    if (d.is_zero()) continue;
    auto q = divide_exact(f * d, d);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
    ++checked;
  }
}

TEST(Mpoly, GradedMonomials) {
  EXPECT_EQ(graded_monomials(9, 2).size(), 45u);
  EXPECT_EQ(graded_monomials(5, 3).size(), 35u);
  const auto m = graded_monomials(9, 5);
  EXPECT_EQ(m.size(), 1287u);
  EXPECT_TRUE(std::is_sorted(m.begin(), m.end(), GrevlexGreater{}));
  EXPECT_EQ(std::adjacent_find(m.begin(), m.end()), m.end());
}

TEST(Mpoly, GrevlexOrder) {
  // In grevlex x0^2 > x0*x1 > x1^2 > x0*x2.
  const P p = parse_poly("x0*x2 + x1^2 + x0*x1 + x0^2", 3);
  EXPECT_EQ(render(p), "x0^2 + x0*x1 + x1^2 + x0*x2");
}

TEST(Mpoly, RenderParseRoundTrip) {
  const P f6 = parse_poly(kF6, 6);
  EXPECT_EQ(parse_poly(render(f6), 6), f6);
  const P r = parse_poly("1/2*x0 - 3/4 + (x1 - x2)^2", 3);
  EXPECT_EQ(parse_poly(render(r), 3), r);
  EXPECT_THROW(parse_poly("x1 +* x2", 3), PolyParseError);
  EXPECT_THROW(parse_poly("x7", 3), PolyParseError);
  EXPECT_THROW(parse_poly("y1", 3), PolyParseError);
}

TEST(Mpoly, IdealValidation) {
  EXPECT_THROW(Ideal<Rational>(3, {parse_poly("x0 + x1^2", 3)}), std::invalid_argument);
  EXPECT_THROW(Ideal<Rational>(3, {P(3)}), std::invalid_argument);
  Ideal<Rational> i(3, {parse_poly("x0*x1", 3), parse_poly("x2^3", 3)});
  EXPECT_TRUE(i.is_monomial());
}
