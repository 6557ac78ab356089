#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "abelcheck/chartab.hpp"

using namespace abelcheck;

namespace {

const PSL211& group() { return PSL211::instance(); }

std::size_t row(const std::string& name) {
  const auto& t = character_table();
  return static_cast<std::size_t>(std::find(t.names.begin(), t.names.end(), name) - t.names.begin());
}

std::string sym(const std::string& name, int k) {
  const auto& t = character_table();
  return describe_decomposition(decompose(sym_power_character(t.rows[row(name)], k, group()), t, group().class_sizes()), t);
}

CycloNum q55(long a, long b = 1) { return CycloNum::from_rational(kCharField, make_rational(a, b)); }

}  // namespace

TEST(Chartab, DataFileMatchesEmbeddedTable) {
  std::ifstream in(std::string(ABELCHECK_DATA_DIR) + "/psl2_11_character_table.txt");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), std::string(kCharacterTableText));
  const auto parsed = parse_character_table(ss.str());
  EXPECT_EQ(parsed.rows, character_table().rows);
}

TEST(Chartab, GroupStructure) {
  EXPECT_EQ(group().order(), 660u);
  EXPECT_EQ(group().class_sizes(), (std::vector<std::size_t>{1, 55, 110, 132, 132, 110, 60, 60}));
  EXPECT_TRUE(gen_S().pow(11).is_identity());
  EXPECT_TRUE(gen_T().pow(2).is_identity());
  EXPECT_TRUE((gen_S() * gen_T()).pow(3).is_identity());
  EXPECT_FALSE(gen_S().is_identity());
  EXPECT_EQ(PElement::make(-1, 0, 0, -1), PElement::make(1, 0, 0, 1));
  EXPECT_THROW(PElement::make(1, 1, 1, 1), std::invalid_argument);
  const auto g = PElement::make(2, 3, 1, 2);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_TRUE(group().contains(g));
}

TEST(Chartab, PowerMaps) {
  std::vector<std::size_t> p2, p3;
  for (std::size_t c = 0; c < 8; ++c) {
    p2.push_back(group().power_map(c, 2));
    p3.push_back(group().power_map(c, 3));
  }
  EXPECT_EQ(p2, (std::vector<std::size_t>{0, 0, 2, 4, 3, 2, 7, 6}));
  EXPECT_EQ(p3, (std::vector<std::size_t>{0, 1, 0, 4, 3, 1, 6, 7}));
  EXPECT_EQ(group().class_of(PElement::make(1, 2, 0, 1)), 7u);
  EXPECT_THROW(group().power_map(0, 0), std::invalid_argument);
}

TEST(Chartab, IrrationalitiesSquareCorrectly) {
  const auto& k = character_table().constants;
  const CycloNum r11 = k.at("BETA") * q55(2) + q55(1);
  EXPECT_EQ(r11 * r11, q55(-11));
  const CycloNum r5 = k.at("ALPHA") * q55(2) + q55(1);
  EXPECT_EQ(r5 * r5, q55(5));
  EXPECT_EQ(k.at("ALPHA") + k.at("ALPHAPRIME"), q55(-1));
  EXPECT_EQ(k.at("BETA").conj(), k.at("BETABAR"));
  EXPECT_EQ(parse_cyclo("-1/2 + xi^55", kCharField), q55(1, 2));
}

TEST(Chartab, Orthonormality) {
  const auto& t = character_table();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      EXPECT_EQ(inner_product(t.rows[i], t.rows[j], group().class_sizes()), q55(i == j ? 1 : 0)) << i << j;
}

TEST(Chartab, SymmetricPowers) {
  EXPECT_EQ(sym("chi1", 2), "chi1");
  EXPECT_EQ(sym("chi3", 2), "chi2+chi5");
  EXPECT_EQ(sym("chi2", 2), "chi3+chi5");
  EXPECT_EQ(sym("chi3", 3), "chi1+chi5+chi7+chi8");
  EXPECT_EQ(sym("chi2", 3), "chi1+chi5+chi7+chi8");
  const auto& t = character_table();
  EXPECT_EQ(sym_power_character(t.rows[row("chi3")], 3, group())[0], q55(35));
  EXPECT_EQ(sym_power_character(t.rows[row("chi3")], 2, group())[0], q55(15));
}

TEST(Chartab, LabelingSwapsRenameConjugates) {
  const auto& t = character_table();
  const auto s = swap_columns(t, 6, 7);
  EXPECT_EQ(s.rows[row("chi2")], t.rows[row("chi3")]);
  EXPECT_EQ(swap_columns(s, 6, 7).rows, t.rows);
}

TEST(Chartab, DecomposeRejectsNonCharacters) {
  const auto& t = character_table();
  CharacterVector half = t.rows[row("chi3")];
  for (auto& v : half) v = v * q55(1, 2);
  EXPECT_THROW(decompose(half, t, group().class_sizes()), std::domain_error);
}
