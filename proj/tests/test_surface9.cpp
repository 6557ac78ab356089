#include <gtest/gtest.h>

#include "abelcheck/expected.hpp"
#include "abelcheck/surface9.hpp"

using namespace abelcheck;

TEST(Surface9, KernelVectorClosedForm) {
  const auto v = theta9_closed_form();
  ASSERT_EQ(v.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(v[i], parse_poly(expected::kTheta9[i], 5)) << i;
  EXPECT_TRUE((v[0] + v[3]).is_zero());
  for (const auto& e : abelcheck::apply(s_matrix_d9(), v)) EXPECT_TRUE(e.is_zero());
  for (const auto& p : v) EXPECT_EQ(p.degree(), 4u);
}

TEST(Surface9, ThetaAtZ0) {
  const auto v = theta9_at_z0();
  EXPECT_TRUE(projectively_equal(v, to_rationals(expected::kThetaAtZ0)));
  EXPECT_EQ(v[1], Rational(-1));
  EXPECT_FALSE(projectively_equal(v, std::vector<Rational>{1, 0, 0, 0, 0}));
}

TEST(Surface9, BasePoint) {
  EXPECT_TRUE(base_point_check({1, 0, 0, -1, 0}));
  EXPECT_TRUE(base_point_check({3, -2, 5, -3, 7}));
  EXPECT_FALSE(base_point_check({1, 0, 0, 0, 0}));
  EXPECT_FALSE(base_point_check({0, 0, 0, 1, 0}));
  EXPECT_EQ(quadrics_of({0, 1, 0, 0, 0}).size(), 9u);
}

TEST(Surface9, QuadricsAtZ0AreGapTwoMonomials) {
  std::set<std::string> got, want;
  for (const auto& q : quadrics_of(theta9_at_z0())) got.insert(render(monic(q)));
  for (const auto& q : gap_two_quadrics()) want.insert(render(q));
  EXPECT_EQ(got, want);
}

TEST(Surface9, MoorePfaffians) {
  const auto f = degenerate_fiber_ideal();
  EXPECT_EQ(f.cubic_a, parse_poly(expected::kMooreCubicA, 9));
  EXPECT_EQ(f.cubic_b, parse_poly(expected::kMooreCubicB, 9));
  EXPECT_EQ(render(f.reduced_b), "-x0*x3*x6");
  EXPECT_EQ(f.reduced_a, parse_poly("x4*x7^2 - x3*x7*x8 + x2*x8^2", 9));
  EXPECT_EQ(moore_at_z0().at(0, 3), parse_poly("-x6", 9));
}

TEST(Surface9, FiberIdealIsJOneOne) {
  const auto f = degenerate_fiber_ideal();
  EXPECT_EQ(f.generators.quadrics.size(), 9u);
  EXPECT_EQ(f.generators.cubics.size(), 12u);
  EXPECT_EQ(f.generators.canonical(), j_family(Rational(1), Rational(1)).canonical());
}

TEST(Surface9, JFamily) {
  const auto g = j_family(make_rational(2, 3), Rational(-1));
  EXPECT_EQ(g.all().size(), 21u);
  EXPECT_EQ(render(g.cubics[3]), "2/3*x4*x7^2 + x3*x7*x8 + 2/3*x2*x8^2");
  EXPECT_THROW(j_family(Rational(0), Rational(0)), std::invalid_argument);
  EXPECT_EQ(render(shift9(parse_poly("x0*x8", 9), 1)), "x7*x8");
}

TEST(Surface9, QuadricDecomposition) {
  for (auto [l, m] : std::vector<std::pair<long, long>>{{1, 1}, {2, 5}, {0, 1}, {1, 0}}) {
    const auto comps = quadric_decomposition(Rational(l), Rational(m));
    ASSERT_EQ(comps.size(), 9u);
    for (const auto& c : comps) EXPECT_TRUE(c.contains_family) << l << ":" << m;
    EXPECT_EQ(comps[0].vanishing, (std::vector<std::size_t>{0, 1, 4, 5, 8}));
  }
}
