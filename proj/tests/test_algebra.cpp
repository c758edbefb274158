#include "weylcoh/intmat.hpp"
#include "weylcoh/poly.hpp"
#include "weylcoh/pointcount.hpp"
#include "weylcoh/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace weylcoh;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int bound) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (auto& x : m.data) x = d(rng);
  return m;
}

}  // namespace

TEST(Hermite, IsUnimodularTransformOfInput) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5, 6);
    HermiteForm h = hermite(a);
    EXPECT_EQ(h.rank, rank(a));
    EXPECT_EQ(std::abs(determinant(h.T)), 1);
    IntMatrix ta = h.T * a;
    for (int i = 0; i < h.rank; ++i) EXPECT_EQ(ta.row(i), h.H.row(i));
    for (int i = h.rank; i < ta.rows; ++i) EXPECT_EQ(ta.row(i), Vec(5, 0));
  }
}

TEST(Smith, DiagonalDividesAndReconstructs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4, 9);
    SmithForm s = smith(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    for (std::size_t i = 1; i < s.diag.size(); ++i) EXPECT_EQ(s.diag[i] % s.diag[i - 1], 0);
    for (Int d : s.diag) EXPECT_GT(d, 0);
  }
}

TEST(Lattice, SaturationAndKernel) {
  IntMatrix a = IntMatrix::from_rows({{2, 0, 0}, {0, 2, 2}});
  IntMatrix sat = saturate(a);
  EXPECT_EQ(sat, IntMatrix::from_rows({{1, 0, 0}, {0, 1, 1}}));
  IntMatrix k = kernel(IntMatrix::from_rows({{1, 1, 1}}));
  EXPECT_EQ(k.rows, 2);
  for (int i = 0; i < k.rows; ++i) EXPECT_EQ(dot(k.row(i), {1, 1, 1}), 0);
  auto x = lattice_coordinates(sat, {3, 5, 5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vec{3, 5}));
  EXPECT_FALSE(lattice_coordinates(sat, {0, 1, 2}).has_value());
}

TEST(Lattice, CharacteristicPolynomialOfPermutation) {
  IntMatrix cyc = IntMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(characteristic_polynomial(cyc), (Vec{-1, 0, 0, 1}));
  EXPECT_EQ(exterior_trace_polynomial(cyc), (Vec{1, 0, 0, 1}));
}

TEST(Checked, OverflowThrows) {
  Int big = Int(1) << 62;
  EXPECT_THROW(checked_mul(big, 4), std::runtime_error);
  EXPECT_THROW(checked_add(big, big), std::runtime_error);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(mod_floor(-7, 3), 2);
}

TEST(Rational, NormalizedArithmetic) {
  Rational a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(a + Rational(3, 2), Rational(0));
  EXPECT_EQ(a * Rational(2, 3), Rational(-1));
  EXPECT_LT(a, Rational(-1));
  EXPECT_THROW(Rational(1, 0), std::runtime_error);
  EXPECT_THROW(Rational(1, 2).to_integer(), std::runtime_error);
}

TEST(Poly, ExactDivision) {
  Poly a = poly_mul({1, 2, 1}, {0, 1, 1});
  EXPECT_EQ(poly_div_exact(a, Poly{0, 1, 1}), (Poly{1, 2, 1}));
  EXPECT_THROW(poly_div_exact(Poly{1, 1}, Poly{0, 1, 1}), std::runtime_error);
  EXPECT_EQ(poly_eval({1, -3, 1}, 4), 5);
  EXPECT_EQ(poly_to_string({1, -3, 1}), "q^2 - 3q + 1");
}

TEST(Interpolate, RecoversPolynomialAndRejectsInconsistentSamples) {
  Poly p{6, -5, 1};
  std::vector<std::pair<Int, Int>> samples;
  for (Int q : {2, 3, 4, 5}) samples.push_back({q, poly_eval(p, q)});
  EXPECT_EQ(interpolate(samples, 2, true), p);
  samples.back().second += 1;
  EXPECT_THROW(interpolate(samples, 2, true), std::runtime_error);
}

TEST(Interpolate, CountToCohomologyAlternatesSigns) {
  // q^2 - 5q + 6 on a surface: H^0 = 1, H^1 = 5, H^2 = 6
  EXPECT_EQ(counts_to_cohomology({6, -5, 1}, 2), (Vec{1, 5, 6}));
}
