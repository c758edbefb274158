#include "weylcoh/cache.hpp"
#include "weylcoh/moduli.hpp"
#include "weylcoh/reference.hpp"
#include "weylcoh/sieve.hpp"
#include "weylcoh/verify.hpp"

#include <gtest/gtest.h>

using namespace weylcoh;

namespace {

ModuliWorkbench& workbench() {
  static Cache cache(Cache::default_dir());
  static ModuliWorkbench wb({1, {2, 3, 4, 5}, cache.enabled() ? &cache : nullptr});
  return wb;
}

void expect_check(const CheckResult& r) { EXPECT_TRUE(r.ok) << r.name << ": " << r.detail; }

Int euler(const std::vector<Int>& betti) {
  Int chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 ? -1 : 1) * betti[i];
  return chi;
}

}  // namespace

TEST(Recipes, EveryIdentifierBuilds) {
  for (const auto& id : moduli_ids()) {
    ModuliRecipe r = build_recipe(id);
    EXPECT_EQ(r.id, id);
    EXPECT_GT(r.dim, 0) << id;
  }
  EXPECT_THROW(build_recipe("D7"), std::runtime_error);
}

TEST(PointCounts, SixPointPolynomialsMatchPublished) { expect_check(check_counts(workbench(), 6)); }

TEST(PointCounts, FivePointTracesMatchPublished) { expect_check(check_five_point_traces(workbench())); }

TEST(PointCounts, SixPointCohomologyOverS6MatchesPublished) { expect_check(check_six_point_cohomology(workbench())); }

TEST(PointCounts, SixPointBettiNumbersTwoWays) {
  EXPECT_EQ(poly_trim(five_point_poincare()), (Poly{1, 5, 6}));
  EXPECT_EQ(poly_trim(fibre_poincare({7, 11, 13})), (Poly{1, 10, 25}));
  expect_check(check_six_point_betti(workbench()));
}

TEST(Quartics, UniqueLiftsToD5) { expect_check(check_quartic_lifts(workbench())); }

TEST(Quartics, LiftsRestrictToFivePointCohomology) {
  // a marked quartic del Pezzo surface is five points in general position up to projectivities
  auto& wb = workbench();
  CohomologyTable lifts = wb.quartic_lifts();
  CohomologyTable s5 = wb.point_count_cohomology(5);
  auto e = wb.s5_in_d5();
  for (std::size_t d = 0; d < lifts.multiplicities.size(); ++d)
    EXPECT_EQ(restrict_function(lifts.character(int(d)), e).values, s5.character(int(d)).values) << "H^" << d;
}

class MatchingCubicTables : public ::testing::TestWithParam<std::string> {};

TEST_P(MatchingCubicTables, EqualsPublished) { expect_check(check_space(workbench(), GetParam())); }

INSTANTIATE_TEST_SUITE_P(Strata, MatchingCubicTables, ::testing::Values("D3n", "D3c", "D3_tn", "D3_tp"));

TEST(Cubics, NodalBettiNumbers) { expect_check(check_nodal_betti(workbench())); }

TEST(Cubics, SieveReproducesMarkedCubics) { expect_check(check_sieve(workbench())); }

TEST(Cubics, SieveCandidateCounts) {
  SieveReport r = run_sieve(workbench());
  EXPECT_EQ(r.searched.candidates[3].size(), 2u);
  EXPECT_EQ(r.searched.candidates[4].size(), 8u);
  EXPECT_EQ(r.positive.h3_alive().size(), 1u);
  EXPECT_EQ(r.positive.h4_alive().size(), 8u);
  EXPECT_EQ(r.signed_euler.h4_alive().size(), 4u);
  EXPECT_EQ(r.twisted_euler.h4_alive().size(), 1u);
  EXPECT_EQ(r.zero_classes_signed, 6);
  EXPECT_EQ(r.new_zero_classes_signed, 2);
}

TEST(Cubics, MarkedCubicsHaveTheBettiNumbersOfSixPoints) {
  // a marked cubic surface is six points in general position up to projectivities
  EXPECT_EQ(workbench().compute_cohomology("D3").dimensions(), reference::six_point_betti());
}

TEST(Consistency, BlowupUnionsSplitAsSequences) {
  // H^i(union) = H^i(toric part) - H^{i-1}(projective part), checked on the class functions
  auto& wb = workbench();
  for (const std::string id : {"D3n_union_c", "D3_2n_union_tn", "D3_3n_union_tp"}) {
    ModuliRecipe r = build_recipe(id);
    const auto& u = wb.character(id);
    const auto& t = wb.character(r.toric_part);
    const auto& p = wb.character(r.projective_part);
    for (int c = 0; c < wb.e6().num_classes(); ++c)
      for (int i = 0; i <= 6; ++i)
        EXPECT_EQ(poly_coeff(u.values[c], i), poly_coeff(t.values[c], i) - poly_coeff(p.values[c], i - 1)) << id;
  }
}

TEST(Consistency, FirstCohomologyOfTriplyNodalFromTriplePoint) {
  // the triple-point stratum is the projectivized part of the three-nodal blowup; H^1 of the
  // toric side is H^0 + H^1 of the projective side
  auto& wb = workbench();
  CohomologyTable toric = wb.compute_cohomology("D3_3n_hat");
  CohomologyTable proj = wb.compute_cohomology("D3_tp");
  for (int j = 0; j < wb.e6_table().size(); ++j)
    EXPECT_EQ(toric.multiplicities[1][j], proj.multiplicities[0][j] + proj.multiplicities[1][j])
        << wb.e6_table().irreps()[j].label;
}

TEST(Consistency, InversionQuotientHalvesEulerCharacteristic) {
  // inversion acts freely on the toric complements, so each component has half the Euler
  // characteristic of the complement
  auto& wb = workbench();
  for (const std::string id : {"D3n", "D3_2n_hat", "D3_3n_hat"}) {
    ModuliRecipe r = build_recipe(id);
    const LatticeArrangement& a = wb.arrangement(r.root_type, r.kind, r.classes, r.family);
    Poly full = complement_poincare(a.poset, IntMatrix::identity(a.poset.rank));
    Int chi_full = 0;
    for (std::size_t k = 0; k < full.size(); ++k) chi_full += (k % 2 ? -1 : 1) * full[k];
    auto dims = wb.compute_cohomology(id).dimensions();
    EXPECT_EQ(euler(dims) * 2, chi_full * r.components) << id;
  }
}

TEST(Consistency, ToricThreeNodalDiffersFromPublishedOnlyByTwoColumns) {
  // the published table for this stratum exchanges the phi_60^5 and phi_60^11 columns
  auto& wb = workbench();
  CohomologyTable t = wb.compute_cohomology("D3_3n_hat");
  const auto& ref = reference::cohomology("D3_3n_hat");
  for (std::size_t d = 0; d < t.multiplicities.size(); ++d)
    for (const auto& label : ref.labels) {
      std::string mine = label == "phi_{60}^{5}" ? "phi_{60}^{11}" : label == "phi_{60}^{11}" ? "phi_{60}^{5}" : label;
      EXPECT_EQ(t.multiplicities[d][wb.e6_table().find(mine)], ref.at(int(d), label)) << "H^" << d << " " << label;
    }
}

TEST(Consistency, QuarticStrataAreGenuineCharacters) {
  auto& wb = workbench();
  for (const auto& id : moduli_ids()) {
    ModuliRecipe r = build_recipe(id);
    if (r.family != SpaceFamily::quartic || r.derived) continue;
    CohomologyTable t = wb.compute_cohomology(id);
    for (const auto& row : t.multiplicities)
      for (Int m : row) EXPECT_GE(m, 0) << id;
    EXPECT_GE(t.dimensions()[0], 1) << id;
  }
}

TEST(Consistency, CubicH0CountsComponents) {
  auto& wb = workbench();
  for (const auto& id : moduli_ids()) {
    ModuliRecipe r = build_recipe(id);
    if (r.family != SpaceFamily::cubic || r.derived || !r.toric_part.empty()) continue;
    EXPECT_EQ(wb.compute_cohomology(id).dimensions()[0], r.components) << id;
  }
}

TEST(Properties, AllInvariantsHold) {
  for (const auto& r : property_checks(workbench())) expect_check(r);
}
