#include <gtest/gtest.h>

#include "abelcheck/expected.hpp"
#include "abelcheck/grassfano.hpp"

using namespace abelcheck;

namespace {

std::vector<Rational> rv(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Grassfano, DecomposableVectors) {
  const auto p = plucker_from_span(rv({1, 2, 0, -1}), rv({0, 1, 3, 5}), Rational(0));
  EXPECT_TRUE(is_decomposable(p));
  EXPECT_EQ(p.p(1, 2), Rational(1));
  EXPECT_EQ(p.p(2, 1), Rational(-1));
  PluckerVector<Rational> e12_e34(4, Rational(0));
  e12_e34.set(1, 2, Rational(1));
  e12_e34.set(3, 4, Rational(1));
  EXPECT_FALSE(is_decomposable(e12_e34));
  EXPECT_FALSE(reconstruct_span(e12_e34).has_value());
  EXPECT_FALSE(reconstruct_span(PluckerVector<Rational>(4, Rational(0))).has_value());
  EXPECT_THROW(plucker_from_span(rv({1}), rv({2}), Rational(0)), std::invalid_argument);
}

TEST(Grassfano, ReconstructSpanRoundTrip) {
  const auto u = rv({1, 0, 2, -1, 3, 0}), w = rv({0, 1, -1, 4, 0, 2});
  const auto p = plucker_from_span(u, w, Rational(0));
  const auto span = reconstruct_span(p);
  ASSERT_TRUE(span.has_value());
  const auto back = plucker_from_span((*span)[0], (*span)[1], Rational(0));
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = a + 1; b <= 6; ++b) EXPECT_EQ(back.p(a, b), p.p(a, b) * p.p(1, 2));
}

TEST(Grassfano, QuadruplesAndStrata) {
  EXPECT_EQ(quadruples(6).size(), 15u);
  EXPECT_EQ(quadruples(4).size(), 1u);
  SkewMatrix<Rational> m(6, Rational(0));
  EXPECT_EQ(rank_stratum(m).rank, 0u);
  m.set(0, 1, Rational(1));
  EXPECT_EQ(rank_stratum(m).rank, 2u);
  EXPECT_EQ(rank_stratum(m).k, 1u);
  m.set(2, 3, Rational(1));
  m.set(4, 5, Rational(1));
  EXPECT_EQ(rank_stratum(m).rank, 6u);
}

TEST(Grassfano, SexticAndSpecialization) {
  const QPoly f6 = sextic_f6();
  EXPECT_EQ(f6, parse_poly(expected::kSexticF6, 6));
  EXPECT_EQ(f6.num_terms(), 15u);
  EXPECT_TRUE(f6.is_homogeneous());
  EXPECT_EQ(substitute(f6, {{4, QPoly(6)}, {5, QPoly(6)}}, Rational(1)), parse_poly(expected::kSexticSpecialized, 6));
}

TEST(Grassfano, SectionRelationsAreIdentities) {
  const auto values = v14_section().evaluate(theta_plucker_d11());
  ASSERT_EQ(values.size(), 5u);
  for (const auto& v : values) {
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(classify_relation(v, sextic_f6()), RelationStatus::identity);
  }
  EXPECT_EQ(classify_relation(sextic_f6().scaled(Rational(3)) * parse_poly("x1", 6), sextic_f6()),
            RelationStatus::modulo_f6);
  EXPECT_EQ(classify_relation(parse_poly("x1^7", 6), sextic_f6()), RelationStatus::fails);
}

TEST(Grassfano, AdjugateIsPlueckerOnVariety) {
  for (const auto& r : three_term_relations(theta_plucker_d11()))
    EXPECT_TRUE(divide_exact(r, sextic_f6()).has_value());
}

TEST(Grassfano, KleinConstruction) {
  const auto k = klein_from_hyperplanes();
  EXPECT_EQ(k.m.size(), 6u);
  EXPECT_EQ(k.cubic, klein_cubic().scaled(Rational(kKleinSign)));
  EXPECT_EQ(k.dual_equations.size(), 10u);
  const QPoly c = klein_cubic();
  QPoly shifted = permute_variables(c, {1, 2, 3, 4, 0}, 5);
  EXPECT_EQ(shifted, c);
}

TEST(Grassfano, JacobianSystem) {
  const auto jm = jacobian_system();
  EXPECT_EQ(jm.quadric_of, (std::vector<std::size_t>{3, 1, 0, 2, 4}));
  EXPECT_EQ(jm.scalar, rv({1, -1, 1, 1, 1}));
  const auto quad = jacobian_quadrics();
  EXPECT_EQ(render(quad[0]), "x0^2 + 2*x1*x2");
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(partial_derivative(klein_cubic(), i).num_terms(), 2u);
  EXPECT_FALSE(proportionality(quad[0], quad[1]).has_value());
  EXPECT_EQ(*proportionality(quad[0].scaled(Rational(-4)), quad[0]), Rational(-4));
}
