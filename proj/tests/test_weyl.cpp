#include "weylcoh/cache.hpp"
#include "weylcoh/chartab.hpp"
#include "weylcoh/moduli.hpp"
#include "weylcoh/reference.hpp"
#include "weylcoh/weyl.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace weylcoh;

namespace {

ModuliWorkbench& workbench() {
  static Cache cache(Cache::default_dir());
  static ModuliWorkbench wb({1, {2, 3, 4, 5}, cache.enabled() ? &cache : nullptr});
  return wb;
}

struct GroupCase {
  std::string type;
  int roots;
  std::size_t order;
  int classes;
};

class RootGroups : public ::testing::TestWithParam<GroupCase> {};

}  // namespace

TEST_P(RootGroups, RootCountOrderAndClasses) {
  const auto& c = GetParam();
  RootSystem rs = root_system(c.type);
  EXPECT_EQ(rs.size(), c.roots);
  EXPECT_EQ(int(rs.positive_indices().size()), c.roots / 2);
  WeylGroup g = root_group(c.type);
  EXPECT_EQ(g.order(), c.order);
  EXPECT_EQ(g.num_classes(), c.classes);
  std::size_t total = 0;
  for (const auto& cl : g.classes()) {
    EXPECT_EQ(g.order() % cl.size, 0u);
    total += cl.size;
  }
  EXPECT_EQ(total, g.order());
}

TEST_P(RootGroups, CharacterTableOrthogonalAndSquaresSumToOrder) {
  WeylGroup g = root_group(GetParam().type);
  CharacterTable t = CharacterTable::compute(g);
  EXPECT_TRUE(t.verify());
  EXPECT_EQ(t.size(), g.num_classes());
  Int squares = 0;
  for (const auto& ir : t.irreps()) squares += ir.degree() * ir.degree();
  EXPECT_EQ(std::size_t(squares), g.order());
}

INSTANTIATE_TEST_SUITE_P(Types, RootGroups,
                         ::testing::Values(GroupCase{"A1", 2, 2, 2}, GroupCase{"A2", 6, 6, 3}, GroupCase{"A3", 12, 24, 5},
                                           GroupCase{"A4", 20, 120, 7}, GroupCase{"D4", 24, 192, 13},
                                           GroupCase{"D5", 40, 1920, 18}, GroupCase{"E6", 72, 51840, 25},
                                           GroupCase{"F4", 48, 1152, 25}),
                         [](const auto& info) { return info.param.type; });

TEST(Roots, DelPezzoRootsOrthogonalToCanonicalClass) {
  RootSystem rs = del_pezzo_roots(3);
  const MarkedLattice& lat = rs.lattice;
  ASSERT_TRUE(lat.canonical_class.has_value());
  for (const auto& r : rs.roots) {
    EXPECT_EQ(lat.product(r, r), -2);
    EXPECT_EQ(lat.product(r, *lat.canonical_class), 0);
  }
}

TEST(Roots, F4HasShortAndLongRoots) {
  RootSystem rs = root_system("F4");
  int shorter = 0, longer = 0;
  for (const auto& r : rs.roots) {
    Int n = rs.lattice.product(r, r);
    if (n == -2) ++shorter;
    if (n == -4) ++longer;
  }
  EXPECT_EQ(shorter, 24);
  EXPECT_EQ(longer, 24);
}

TEST(Groups, ReflectionsAreInvolutionsPermutingRoots) {
  auto rs = std::make_shared<RootSystem>(root_system("D4"));
  for (int i : rs->simple) {
    IntMatrix s = rs->reflection(i);
    EXPECT_EQ(s * s, IntMatrix::identity(s.rows));
    for (const auto& r : rs->roots) EXPECT_GE(rs->index_of(s * r), 0);
  }
}

TEST(Groups, MultiplicationMatchesMatrices) {
  WeylGroup g = root_group("A3");
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, int(g.order()) - 1);
  for (int k = 0; k < 30; ++k) {
    ElementId a = d(rng), b = d(rng);
    EXPECT_EQ(g.matrix(g.multiply(a, b)), g.matrix(a) * g.matrix(b));
    EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
  }
}

TEST(Labels, E6CarterLabelsAreTheStandardOnes) {
  const auto& t = workbench().e6_table();
  auto got = t.labels();
  std::set<std::string> a(got.begin(), got.end());
  std::set<std::string> b(reference::e6_labels().begin(), reference::e6_labels().end());
  EXPECT_EQ(a, b);
  EXPECT_GE(t.find("phi_{6}^{1}"), 0);  // the reflection representation
}

TEST(Labels, SymmetricGroupTablesMatchMurnaghanNakayama) {
  auto& wb = workbench();
  for (auto* t : {&wb.s5_table(), &wb.s6_table()}) {
    const WeylGroup& g = t->group();
    int n = g.order() == 120 ? 5 : 6;
    std::vector<int> points;
    for (int i = 1; i <= n; ++i) points.push_back(i);
    for (const auto& ir : t->irreps())
      for (int c = 0; c < g.num_classes(); ++c) {
        auto mu = cycle_type_on(g.matrix(g.classes()[c].representative), points);
        EXPECT_EQ(ir.values[c], symmetric_group_character(ir.partition, mu)) << ir.label;
      }
  }
}

TEST(Labels, SymmetricGroupTablesOrthogonal) {
  auto& wb = workbench();
  EXPECT_TRUE(wb.s5_table().verify());
  EXPECT_TRUE(wb.s6_table().verify());
  EXPECT_TRUE(wb.d5_table().verify());
  EXPECT_EQ(wb.s5_table().size(), 7);
  EXPECT_EQ(wb.s6_table().size(), 11);
}

TEST(Embeddings, FrobeniusReciprocityOnRandomPairs) {
  auto& wb = workbench();
  std::mt19937 rng(1);
  struct Case {
    SubgroupEmbedding e;
    const CharacterTable* small;
    const CharacterTable* big;
  };
  std::vector<Case> cases{{wb.s6_in_e6(), &wb.s6_table(), &wb.e6_table()},
                          {wb.s5_in_d5(), &wb.s5_table(), &wb.d5_table()},
                          {wb.d5_in_e6(), &wb.d5_table(), &wb.e6_table()}};
  for (const auto& c : cases)
    for (int k = 0; k < 20; ++k) {
      int i = std::uniform_int_distribution<int>(0, c.small->size() - 1)(rng);
      int j = std::uniform_int_distribution<int>(0, c.big->size() - 1)(rng);
      ClassFunction a = c.small->character(i), b = c.big->character(j);
      EXPECT_EQ(inner_product(induce_function(a, c.e), b), inner_product(a, restrict_function(b, c.e)));
    }
}

TEST(Embeddings, IndicesAndInducedTrivialDegree) {
  auto& wb = workbench();
  EXPECT_EQ(wb.s6_in_e6().index(), 72);
  EXPECT_EQ(wb.d5_in_e6().index(), 27);
  EXPECT_EQ(wb.s5_in_d5().index(), 16);
  EXPECT_EQ(wb.d5_kernel().size(), 16u);
  auto e = wb.d5_in_e6();
  ClassFunction ind = induce_function(ClassFunction::constant(wb.d5(), 1), e);
  // permutation character on the 27 lines: 1 + 6 + 20
  auto m = wb.e6_table().multiplicities(ind);
  EXPECT_EQ(m[wb.e6_table().find("phi_{1}^{0}")], 1);
  EXPECT_EQ(m[wb.e6_table().find("phi_{6}^{1}")], 1);
  EXPECT_EQ(m[wb.e6_table().find("phi_{20}^{2}")], 1);
}

TEST(Characters, SymmetricPowersOfReflectionAreCharacters) {
  WeylGroup g = root_group("A3");
  CharacterTable t = CharacterTable::compute(g);
  for (const auto& f : symmetric_powers(reflection_character(g), 4))
    for (Int m : t.multiplicities(f)) EXPECT_GE(m, 0);
}
