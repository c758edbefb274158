#include "weylcoh/arrangements.hpp"
#include "weylcoh/cache.hpp"
#include "weylcoh/moduli.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace weylcoh;

namespace {

Cache& cache() {
  static Cache c(Cache::default_dir());
  return c;
}

Cache* cache_ptr() { return cache().enabled() ? &cache() : nullptr; }

struct PosetCase {
  std::string type;
  ArrangementKind kind;
};

std::string case_name(const PosetCase& c) {
  return c.type + (c.kind == ArrangementKind::toric ? "_toric" : "_linear");
}

class RootPosets : public ::testing::TestWithParam<PosetCase> {};

std::vector<PosetCase> all_cases() {
  std::vector<PosetCase> v;
  for (std::string t : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "F4"})
    for (auto k : {ArrangementKind::linear, ArrangementKind::toric}) v.push_back({t, k});
  return v;
}

}  // namespace

TEST_P(RootPosets, MobiusSumsVanishOnEveryInterval) {
  LatticeArrangement a = root_arrangement(GetParam().type, GetParam().kind, cache_ptr());
  const ArrangementPoset& p = a.poset;
  ASSERT_EQ(p.mobius[0], 1);
  for (int z = 1; z < p.size(); ++z) {
    Int sum = p.mobius[z];
    for (int y = 0; y < p.size(); ++y)
      if (p.above[z].test(y)) sum += p.mobius[y];
    EXPECT_EQ(sum, 0) << "layer " << z;
  }
}

TEST_P(RootPosets, OrderIsConsistentWithCodimension) {
  LatticeArrangement a = root_arrangement(GetParam().type, GetParam().kind, cache_ptr());
  const ArrangementPoset& p = a.poset;
  for (int z = 0; z < p.size(); ++z) {
    for (int y = 0; y < p.size(); ++y)
      if (p.above[z].test(y)) EXPECT_LT(p.layers[y].codim(), p.layers[z].codim());
    for (int c : p.children[z]) EXPECT_EQ(p.layers[c].codim(), p.layers[z].codim() + 1);
  }
  EXPECT_EQ(p.layers[0].codim(), 0);
}

TEST_P(RootPosets, GroupPermutesLayers) {
  LatticeArrangement a = root_arrangement(GetParam().type, GetParam().kind, cache_ptr());
  WeylGroup g = root_group(GetParam().type);
  for (ElementId x : g.generators()) {
    IntMatrix m = restrict_to_sublattice(g.matrix(x), a.basis);
    std::set<int> image;
    for (const auto& l : a.poset.layers) {
      int j = a.poset.find(act_on_layer(a.poset.kind, l, m));
      ASSERT_GE(j, 0);
      image.insert(j);
    }
    EXPECT_EQ(int(image.size()), a.poset.size());
  }
}

INSTANTIATE_TEST_SUITE_P(Types, RootPosets, ::testing::ValuesIn(all_cases()),
                         [](const auto& info) { return case_name(info.param); });

class SmallArrangements : public ::testing::TestWithParam<PosetCase> {};

TEST_P(SmallArrangements, MacmeikanAgreesWithBruteForceAtEveryClass) {
  WeylGroup g = root_group(GetParam().type);
  LatticeArrangement a = root_arrangement(GetParam().type, GetParam().kind);
  int nontrivial = 0;
  for (const auto& c : g.classes()) {
    IntMatrix m = restrict_to_sublattice(g.matrix(c.representative), a.basis);
    Poly p = complement_poincare(a.poset, m);
    if (c.order > 1) ++nontrivial;
    for (Int q : {2, 3, 4, 5})
      EXPECT_EQ(count_from_poincare(p, a.poset.rank, q), Rational(oracle_count(a.poset.kind, a.poset.roots, m, q)))
          << "class of order " << c.order << " at q = " << q;
  }
  if (GetParam().type == "A3") EXPECT_GE(nontrivial, 3);
}

INSTANTIATE_TEST_SUITE_P(Types, SmallArrangements,
                         ::testing::Values(PosetCase{"A1", ArrangementKind::linear}, PosetCase{"A1", ArrangementKind::toric},
                                           PosetCase{"A2", ArrangementKind::linear}, PosetCase{"A2", ArrangementKind::toric},
                                           PosetCase{"A3", ArrangementKind::linear}, PosetCase{"A3", ArrangementKind::toric}),
                         [](const auto& info) { return case_name(info.param); });

TEST(Projectivize, ExactForEveryLinearRootArrangement) {
  for (std::string type : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "F4"}) {
    LatticeArrangement a = root_arrangement(type, ArrangementKind::linear, cache_ptr());
    WeylGroup g = root_group(type);
    GradedClassFunction f = equivariant_poincare(a, g);
    GradedClassFunction p = projectivize(f);
    for (int c = 0; c < g.num_classes(); ++c)
      EXPECT_EQ(poly_mul(p.values[c], Poly{0, 1, 1}), poly_trim(f.values[c])) << type << " class " << c;
  }
}

TEST(Posets, BraidArrangementCharacteristicPolynomial) {
  // A3 flats: chi(x) = (x - 1)(x - 2)(x - 3); one line, seven planes, six hyperplanes
  LatticeArrangement a = root_arrangement("A3", ArrangementKind::linear);
  const ArrangementPoset& p = a.poset;
  EXPECT_EQ(poly_trim(p.characteristic_polynomial()), (Poly{-6, 11, -6, 1}));
  EXPECT_EQ(p.count_by_dimension(), (std::vector<int>{1, 7, 6, 1}));
}

TEST(Posets, ToricA2MeetsOnlyAtIdentity) {
  // any two roots of A2 span its root lattice, so the three hypertori share one point
  LatticeArrangement a = root_arrangement("A2", ArrangementKind::toric);
  const ArrangementPoset& p = a.poset;
  EXPECT_EQ(p.count_by_dimension(), (std::vector<int>{1, 3, 1}));
}

TEST(Posets, ToricE6LayersAndInversionOrbits) {
  LatticeArrangement a = root_arrangement("E6", ArrangementKind::toric, cache_ptr());
  const ArrangementPoset& p = a.poset;
  EXPECT_EQ(p.size(), 5119);
  IntMatrix minus = -IntMatrix::identity(p.rank);
  std::set<int> seen;
  int orbits = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (seen.count(i)) continue;
    ++orbits;
    seen.insert(i);
    seen.insert(p.find(act_on_layer(p.kind, p.layers[i], minus)));
  }
  EXPECT_EQ(orbits, 5079);
}

TEST(Posets, ToricEulerCharacteristicIsSumOverPoints) {
  // chi of the complement is the Moebius value summed over zero-dimensional layers, up to sign
  LatticeArrangement a = root_arrangement("A2", ArrangementKind::toric);
  const ArrangementPoset& p = a.poset;
  Poly poincare = complement_poincare(p, IntMatrix::identity(p.rank));
  Int chi = 0;
  for (std::size_t k = 0; k < poincare.size(); ++k) chi += (k % 2 ? -1 : 1) * poincare[k];
  Int mu_points = 0;
  for (int z = 0; z < p.size(); ++z)
    if (p.dim(z) == 0) mu_points += p.mobius[z];
  EXPECT_EQ(chi, mu_points);
}

TEST(Averages, InversionAverageIsIntegral) {
  WeylGroup g = root_group("A3");
  LatticeArrangement a = root_arrangement("A3", ArrangementKind::toric);
  auto plain = equivariant_poincare(a, g, false);
  auto twisted = equivariant_poincare(a, g, true, 2);
  auto avg = inversion_average(plain, twisted);
  CharacterTable t = CharacterTable::compute(g);
  for (int k = 0; k <= avg.degree(); ++k) EXPECT_NO_THROW(t.multiplicities(avg.coefficient(k)));
}

TEST(Averages, QuotientByKernelIsIntegral) {
  ModuliWorkbench wb({1, {2, 3, 4, 5}, cache_ptr()});
  for (auto kind : {ArrangementKind::linear, ArrangementKind::toric}) {
    const LatticeArrangement& a = wb.arrangement("D5", kind, {}, SpaceFamily::quartic);
    auto avg = quotient_average(equivariant_poincare(a, wb.d5()), wb.d5_kernel());
    for (int k = 0; k <= avg.degree(); ++k) {
      auto m = wb.d5_table().multiplicities(avg.coefficient(k));
      // the average only involves irreducibles trivial on the kernel
      for (int j = 0; j < wb.d5_table().size(); ++j) {
        if (m[j] == 0) continue;
        ClassFunction chi = wb.d5_table().character(j);
        for (ElementId x : wb.d5_kernel()) EXPECT_EQ(chi.values[wb.d5().class_of(x)], chi.values[0]);
      }
    }
  }
}

TEST(Threads, EquivariantPoincareIndependentOfWorkers) {
  WeylGroup g = root_group("D4");
  LatticeArrangement a = root_arrangement("D4", ArrangementKind::toric, cache_ptr());
  EXPECT_EQ(equivariant_poincare(a, g, false, 1).values, equivariant_poincare(a, g, false, 4).values);
}
