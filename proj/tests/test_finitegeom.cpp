#include "weylcoh/finitegeom.hpp"

#include <gtest/gtest.h>

using namespace weylcoh;

TEST(Field, FourElementsCubeToOne) {
  FieldTower F(4, 1);
  EXPECT_EQ(F.size(), 4);
  for (auto x : F.subfield_elements(1)) {
    if (x == F.zero()) continue;
    EXPECT_EQ(F.mul(F.mul(x, x), x), F.one());
  }
}

TEST(Field, ArithmeticIsAField) {
  for (Int q : {2, 3, 4, 5, 7, 8, 9}) {
    FieldTower F(q, 2);
    for (auto a : F.subfield_elements(2)) {
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
      if (a != F.zero()) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
      for (auto b : F.subfield_elements(1)) EXPECT_EQ(F.add(a, b), F.add(b, a));
    }
  }
}

TEST(Field, FrobeniusHasExactOrder) {
  for (Int q : {2, 3, 4}) {
    for (int m : {2, 3}) {
      FieldTower F(q, m);
      FieldTower::Elt g = 1;  // a primitive element generates the top field
      EXPECT_EQ(F.frobenius(g, m), g);
      for (int k = 1; k < m; ++k) EXPECT_NE(F.frobenius(g, k), g);
      EXPECT_EQ(Int(F.subfield_elements(1).size()), q);
      for (auto x : F.subfield_elements(1)) EXPECT_EQ(F.frobenius(x), x);
    }
  }
}

TEST(Field, RejectsNonPrimePower) {
  EXPECT_THROW(FieldTower(6, 1), std::runtime_error);
  EXPECT_THROW(FieldTower(1, 1), std::runtime_error);
}

TEST(Plane, PointCount) {
  for (Int q : {2, 3, 4, 5}) {
    FieldTower F(q, 1);
    EXPECT_EQ(Int(projective_plane(F, 1).size()), q * q + q + 1);
  }
}

TEST(Plane, NormalizationIsUnique) {
  FieldTower F(5, 1);
  auto p = normalize(F, {F.from_int(0), F.from_int(3), F.from_int(2)});
  EXPECT_EQ(p[0], F.zero());
  EXPECT_EQ(p[1], F.one());
  EXPECT_EQ(normalize(F, {F.zero(), F.one(), F.from_int(4)}), p);
}

TEST(GeneralPosition, StandardFrameAndCollinearTriple) {
  FieldTower F(3, 1);
  auto pt = [&](Int a, Int b, Int c) { return normalize(F, {F.from_int(a), F.from_int(b), F.from_int(c)}); };
  EXPECT_TRUE(general_position(F, {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)}, false));
  EXPECT_FALSE(general_position(F, {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}, false));
  EXPECT_FALSE(general_position(F, {pt(1, 0, 0), pt(1, 0, 0)}, false));
}

TEST(GeneralPosition, SixPointsOnAConic) {
  FieldTower F(7, 1);
  std::vector<ProjectivePoint> pts;
  for (Int t = 0; t < 6; ++t) pts.push_back(normalize(F, {F.one(), F.from_int(t), F.from_int(t * t % 7)}));
  EXPECT_TRUE(general_position(F, pts, false));
  EXPECT_FALSE(general_position(F, pts, true));
  std::vector<ProjectivePoint> seven = pts;
  seven.push_back(pts[0]);
  EXPECT_THROW(general_position(F, seven, false), std::runtime_error);
}

TEST(Pgl3, OrderFormula) {
  EXPECT_EQ(pgl3_order(2), 168);
  EXPECT_EQ(pgl3_order(3), 5616);
  EXPECT_EQ(pgl3_order(5), 31 * 120 * 100);
  EXPECT_THROW(pgl3_order(1), std::runtime_error);
}
