#include <gtest/gtest.h>

#include <random>

#include "abelcheck/exactnum.hpp"

using namespace abelcheck;

namespace {

CycloNum random_cyclo(int order, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c;
  for (int k = 0; k < order; ++k) c.push_back(make_rational(d(rng), 1 + (k % 3)));
  return CycloNum::from_power_coefficients(order, c);
}

}  // namespace

TEST(Cyclo, RootsOfUnitySumToZero) {
  CycloNum s(11);
  for (int k = 0; k <= 10; ++k) s += CycloNum::root(11, k);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclo, RootOrder) {
  EXPECT_EQ(CycloNum::root(9, 3) * CycloNum::root(9, 6), CycloNum::from_rational(9, Rational(1)));
  EXPECT_EQ(CycloNum::root(9, 1).pow(9), CycloNum::from_rational(9, Rational(1)));
  EXPECT_NE(CycloNum::root(9, 1).pow(3), CycloNum::from_rational(9, Rational(1)));
}

TEST(Cyclo, GaussSumMinus11) {
  const CycloNum g = embed(quadratic_gauss_sum(11), 55);
  EXPECT_EQ(g * g, CycloNum::from_rational(55, Rational(-11)));
  const CycloNum one = CycloNum::from_rational(55, Rational(1));
  const CycloNum beta = (g - one).scaled(make_rational(1, 2));
  // beta^2 + beta + 3 = 0
  EXPECT_TRUE((beta * beta + beta + one.scaled(Rational(3))).is_zero());
}

TEST(Cyclo, SqrtFive) {
  const CycloNum s5 = CycloNum::root(5, 1) + CycloNum::root(5, 4) - CycloNum::root(5, 2) - CycloNum::root(5, 3);
  EXPECT_EQ(s5, quadratic_gauss_sum(5));
  const CycloNum e = embed(s5, 55);
  EXPECT_EQ(e * e, CycloNum::from_rational(55, Rational(5)));
}

TEST(Cyclo, Embed) {
  EXPECT_EQ(embed(CycloNum::root(5, 1), 55), CycloNum::root(55, 11));
  EXPECT_EQ(embed(CycloNum::from_rational(11, Rational(1)), 55), CycloNum::from_rational(55, Rational(1)));
  EXPECT_THROW(embed(CycloNum::root(9, 1), 55), std::invalid_argument);
}

TEST(Cyclo, Errors) {
  EXPECT_THROW(CycloNum::root(9, 1) + CycloNum::root(11, 1), std::invalid_argument);
  EXPECT_THROW(CycloNum::root(9, 1) / CycloNum(9), std::domain_error);
}

TEST(Cyclo, FieldAxiomsOnSamples) {
  std::mt19937 rng(7);
  for (int order : {9, 11, 55}) {
    for (int i = 0; i < 20; ++i) {
      const CycloNum a = random_cyclo(order, rng), b = random_cyclo(order, rng), c = random_cyclo(order, rng);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycloNum::from_rational(order, Rational(1)));
      }
    }
  }
}

TEST(Cyclo, EmbedIsInjectiveHomomorphism) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const int src = (i % 2) ? 5 : 11;
    const CycloNum a = random_cyclo(src, rng), b = random_cyclo(src, rng);
    EXPECT_EQ(embed(a * b, 55), embed(a, 55) * embed(b, 55));
    EXPECT_EQ(embed(a, 55) == embed(b, 55), a == b);
  }
}

TEST(Cyclo, CanonicalForm) {
  // xi^11 reduces to the power basis; equal values have identical coefficients.
  const CycloNum a = CycloNum::root(11, 11);
  EXPECT_EQ(a.coeffs(), CycloNum::from_rational(11, Rational(1)).coeffs());
  EXPECT_EQ(a.coeffs().size(), 10u);
  const CycloNum b = CycloNum::root(11, 10);
  CycloNum c(11);
  for (int k = 0; k < 10; ++k) c -= CycloNum::root(11, k);
  EXPECT_EQ(b.coeffs(), c.coeffs());
}

TEST(PrimeField, NthRoot) {
  EXPECT_EQ(nth_root_in_prime_field(9, 19).value(), 4u);
  EXPECT_EQ(nth_root_in_prime_field(1, 23).value(), 1u);
  const Fq r = nth_root_in_prime_field(11, 23);
  std::uint64_t expect = 0;
  for (std::uint64_t g = 2; g < 23 && expect == 0; ++g) {
    std::uint64_t x = 1, ord = 0;
    do {
      x = x * g % 23;
      ++ord;
    } while (x != 1);
    if (ord == 11) expect = g;
  }
  EXPECT_EQ(r.value(), expect);
  EXPECT_THROW(nth_root_in_prime_field(9, 23), std::invalid_argument);
}

TEST(PrimeField, ReductionIsHomomorphism) {
  const CycloReduction red(9, 19);
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const CycloNum a = random_cyclo(9, rng), b = random_cyclo(9, rng);
    EXPECT_EQ(red(a * b), red(a) * red(b));
    EXPECT_EQ(red(a + b), red(a) + red(b));
  }
  EXPECT_EQ(red(CycloNum::root(9, 1)).value(), 4u);
  EXPECT_THROW(CycloReduction(9, 23), std::invalid_argument);
}

TEST(Rational, Normalized) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
}
