#include <gtest/gtest.h>

#include <random>

#include "abelcheck/linalg.hpp"
#include "abelcheck/pfaffian.hpp"

using namespace abelcheck;
using QPoly = SparsePoly<Rational>;

namespace {

SkewMatrix<Rational> random_skew(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-7, 7);
  SkewMatrix<Rational> m(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, make_rational(c(rng), 1 + (i * j) % 4));
  return m;
}

/// Generic skew matrix with entry (i,j) the variable y_k, k the upper-triangle index.
SkewMatrix<QPoly> generic_skew(std::size_t n) {
  const std::size_t nv = n * (n - 1) / 2;
  SkewMatrix<QPoly> m(n, QPoly(nv));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, QPoly::variable(nv, k++, Rational(1)));
  return m;
}

}  // namespace

TEST(Pfaffian, SmallCases) {
  SkewMatrix<Rational> m2(2, Rational(0));
  m2.set(0, 1, Rational(3));
  EXPECT_EQ(pfaffian(m2), Rational(3));
  EXPECT_EQ(m2.at(1, 0), Rational(-3));
  // Pf = a01 a23 - a02 a13 + a03 a12
  const auto g = generic_skew(4);
  EXPECT_EQ(render(pfaffian(g)), "x2*x3 - x1*x4 + x0*x5");
  EXPECT_THROW(SkewMatrix<Rational>(1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(pfaffian(SkewMatrix<Rational>(3, Rational(0))), std::invalid_argument);
}

TEST(Pfaffian, SquareIsDeterminant) {
  std::mt19937 rng(7);
  for (std::size_t n : {2u, 4u, 6u, 8u})
    for (int t = 0; t < 5; ++t) {
      const auto m = random_skew(n, rng);
      const Rational p = pfaffian(m);
      EXPECT_EQ(p * p, determinant(m.dense(), Rational(1)));
    }
}

TEST(Pfaffian, AdjugateIdentitySymbolic) {
  for (std::size_t n : {4u, 6u}) {
    const auto g = generic_skew(n);
    const QPoly p = pfaffian(g);
    const auto prod = dense_product(g.dense(), pfaffian_adjugate(g).dense(), g.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(prod[i][j], i == j ? p.scaled(Rational(kAdjugateSign)) : g.zero()) << n << " " << i << j;
  }
}

TEST(Pfaffian, OddKernelVector) {
  const auto g = generic_skew(5);
  const auto v = odd_kernel_vector(g);
  for (const auto& e : abelcheck::apply(g, v)) EXPECT_TRUE(e.is_zero());
  EXPECT_THROW(odd_kernel_vector(generic_skew(4)), std::invalid_argument);
}

TEST(Pfaffian, ThreeTermIdentityNumeric) {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_skew(6, rng);
    const Rational p = pfaffian(m);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        for (std::size_t k = j + 1; k < 6; ++k)
          for (std::size_t l = k + 1; l < 6; ++l) {
            auto s = [&](std::set<std::size_t> d) { return sub_pfaffian(m, d); };
            EXPECT_EQ(s({i, j}) * s({k, l}) - s({i, k}) * s({j, l}) + s({i, l}) * s({j, k}), p * s({i, j, k, l}));
          }
  }
}

TEST(Pfaffian, SubPfaffianAgreesWithPrincipal) {
  std::mt19937 rng(3);
  const auto m = random_skew(6, rng);
  EXPECT_EQ(sub_pfaffian(m, {1, 4}), pfaffian(m.principal({0, 2, 3, 5})));
  EXPECT_EQ(pfaffian_on(m, {0, 2, 3, 5}), sub_pfaffian(m, {1, 4}));
  EXPECT_THROW(sub_pfaffian(m, {1}), std::invalid_argument);
  EXPECT_THROW(sub_pfaffian(m, {1, 9}), std::out_of_range);
}

TEST(Pfaffian, FromRowsValidates) {
  const std::vector<std::vector<Rational>> good{{0, 2}, {-2, 0}}, bad{{0, 2}, {2, 0}}, diag{{1, 2}, {-2, 0}};
  EXPECT_EQ(SkewMatrix<Rational>::from_rows(good, Rational(0)).at(0, 1), Rational(2));
  EXPECT_THROW(SkewMatrix<Rational>::from_rows(bad, Rational(0)), std::invalid_argument);
  EXPECT_THROW(SkewMatrix<Rational>::from_rows(diag, Rational(0)), std::invalid_argument);
}

TEST(Pfaffian, WorksOverFiniteField) {
  SkewMatrix<Fq> m(4, Fq(23, 0));
  m.set(0, 1, Fq(23, 5));
  m.set(2, 3, Fq(23, 7));
  m.set(0, 2, Fq(23, 1));
  m.set(1, 3, Fq(23, 1));
  EXPECT_EQ(pfaffian(m).value(), (35 + 22) % 23);
}
