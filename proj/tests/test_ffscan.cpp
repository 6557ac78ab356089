#include <gtest/gtest.h>

#include <set>

#include "abelcheck/checks.hpp"

using namespace abelcheck;

TEST(Ffscan, ProjectiveEnumeration) {
  EXPECT_EQ(projective_count(19, 3), 7240u);
  EXPECT_EQ(projective_count(23, 4), 292561u);
  std::set<ProjPoint> seen;
  for (std::uint64_t i = 0; i < projective_count(5, 2); ++i) {
    const auto p = point_at(i, 5, 2);
    EXPECT_EQ(canonical(p, 5), p);
    seen.insert(p);
  }
  EXPECT_EQ(seen.size(), 31u);
  EXPECT_EQ(canonical({0, 3, 6}, 7), (ProjPoint{0, 1, 2}));
}

TEST(Ffscan, RankModPrime) {
  EXPECT_EQ(rank_mod({{1, 2}, {2, 4}}, 7), 1u);
  EXPECT_EQ(rank_mod({{1, 2}, {2, 5}}, 7), 2u);
  EXPECT_EQ(rank_mod({{0, 0}, {0, 0}}, 7), 0u);
}

TEST(Ffscan, CensusLevelNine) {
  const auto c = scan_strata(9, 19);
  EXPECT_EQ(c.counts, (std::map<std::size_t, std::uint64_t>{{2, 40}, {4, 7200}}));
  EXPECT_EQ(c.min_rank, 2u);
  EXPECT_EQ(c.min_points.size(), 40u);
  EXPECT_EQ(census_csv({c}), "q,d,rank,count\n19,9,2,40\n19,9,4,7200\n");
}

TEST(Ffscan, CensusIsIndependentOfWorkers) {
  const auto a = scan_strata(9, 37, 1), b = scan_strata(9, 37, 3);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.min_points, b.min_points);
}

TEST(Ffscan, CensusLevelEleven) {
  const auto c = scan_strata(11, 23, 2);
  EXPECT_EQ(c.counts, (std::map<std::size_t, std::uint64_t>{{2, 60}, {4, 15840}, {6, 276661}}));
  const auto p = find_stratum_point(11, 23, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(point_string(*p), "(1:0:0:0:1)");
}

TEST(Ffscan, RequiresRootOfUnity) {
  EXPECT_THROW(scan_strata(9, 23), std::invalid_argument);
  EXPECT_THROW(scan_strata(11, 21), std::invalid_argument);
  EXPECT_THROW(odd_block(7), std::invalid_argument);
}

TEST(Ffscan, SpecialPointReductions) {
  const PminusChart chart = calibrate_pminus(HeisenbergContext(9));
  std::vector<ProjPoint> got;
  for (const auto& p : checks::special_points_cyclo()) got.push_back(checks::reduce_special_point(p, chart, 19));
  EXPECT_EQ(got, (std::vector<ProjPoint>{{0, 0, 1, 0}, {1, 18, 0, 1}, {1, 12, 0, 11}, {1, 8, 0, 7}}));
}

TEST(Ffscan, CommonZerosOfCompleteIntersection) {
  std::vector<QPoly> ci;
  for (auto s : expected::kRank2Cubics) ci.push_back(permute_variables(parse_poly(s, 5), {0, 0, 1, 2, 3}, 4));
  EXPECT_EQ(common_zeros(ci, 19).size(), 36u);
  EXPECT_EQ(common_zeros({parse_poly("x0", 3), parse_poly("x1", 3)}, 7), (std::vector<ProjPoint>{{0, 0, 1}}));
}

TEST(Ffscan, JacobianScans) {
  const std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> want{
      {3, {1, 0}}, {7, {0, 0}}, {11, {1, 1}}, {13, {0, 0}}, {23, {0, 0}}, {31, {0, 0}}};
  for (const auto& [q, w] : want) {
    const auto s = jacobian_zero_scan(q);
    EXPECT_EQ(s.quadric_zeros.size(), w.first) << q;
    EXPECT_EQ(s.count(), w.second) << q;
  }
  EXPECT_THROW(jacobian_zero_scan(2), std::invalid_argument);
  EXPECT_THROW(jacobian_zero_scan(9), std::invalid_argument);
}
