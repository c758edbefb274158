#include "weylcoh/pointcount.hpp"
#include "weylcoh/reference.hpp"

#include <gtest/gtest.h>

using namespace weylcoh;

TEST(Permutations, TypesRoundTrip) {
  for (int n : {5, 6})
    for (const auto& t : count_table_types(n)) EXPECT_EQ(cycle_type_of(permutation_of_type(t)), t);
  EXPECT_EQ(count_table_types(5).size(), 7u);
  EXPECT_EQ(count_table_types(6).size(), 11u);
  EXPECT_EQ(count_table_types(6).back(), std::vector<int>(6, 1));
}

TEST(Counts, FourPointsAreOneFrame) {
  // PGL_3 acts simply transitively on ordered frames
  for (Int q : {2, 3, 4, 5}) EXPECT_EQ(count_fixed({permutation_of_type({1, 1, 1, 1}), q, true}).orbits, 1);
}

TEST(Counts, DoubleTranspositionOverF2HasNoSixPoints) {
  EXPECT_EQ(count_fixed({permutation_of_type({2, 2, 1, 1}), 2, true}).orbits, 0);
}

TEST(Counts, RawCountIsDivisibleByPgl3) {
  for (Int q : {2, 3, 4}) {
    auto r = count_fixed({permutation_of_type({1, 1, 1, 1, 1}), q, true});
    EXPECT_EQ(r.raw, r.orbits * pgl3_order(q));
  }
}

TEST(Counts, ThreadCountDoesNotChangeResult) {
  auto a = count_fixed({permutation_of_type({3, 2}), 5, true}, 1);
  auto b = count_fixed({permutation_of_type({3, 2}), 5, true}, 3);
  EXPECT_EQ(a.raw, b.raw);
  EXPECT_EQ(a.orbits, b.orbits);
}

TEST(Counts, FivePointPolynomialsMatchPublished) {
  auto got = count_polynomials(5, {2, 3, 4, 5});
  const auto& want = reference::twisted_counts(5);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].cycle_type, want[i].cycle_type);
    EXPECT_EQ(poly_trim(got[i].poly), poly_trim(want[i].poly)) << cycle_notation(want[i].cycle_type);
  }
}

TEST(Counts, FivePointIdentityGivesBettiNumbers) {
  // P^2 minus six lines: 1 + 5t + 6t^2
  auto r = count_polynomials(5, {2, 3, 4});
  EXPECT_EQ(counts_to_cohomology(r.back().poly, 2), (Vec{1, 5, 6}));
}
