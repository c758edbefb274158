#pragma once

#include "weylcoh/intmat.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace weylcoh {

// F_{q^L} for q = p^n, with elements stored as discrete logarithms of a fixed primitive
// element; zero is the sentinel value Q - 1. Addition goes through a Zech table.
class FieldTower {
 public:
  using Elt = std::uint32_t;

  FieldTower(Int q, int L);

  Int p() const { return p_; }
  Int q() const { return q_; }
  int extension_degree() const { return L_; }
  Int size() const { return Q_; }
  Elt zero() const { return zero_; }
  Elt one() const { return 0; }

  Elt mul(Elt a, Elt b) const {
    if (a == zero_ || b == zero_) return zero_;
    std::uint32_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  Elt neg(Elt a) const {
    if (a == zero_ || half_ == 0) return a;
    std::uint32_t s = a + half_;
    return s >= m_ ? s - m_ : s;
  }
  Elt add(Elt a, Elt b) const {
    if (a == zero_) return b;
    if (b == zero_) return a;
    std::uint32_t d = b >= a ? b - a : b + m_ - a;
    Elt z = zech_[d];
    if (z == zero_) return zero_;
    std::uint32_t s = a + z;
    return s >= m_ ? s - m_ : s;
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt inv(Elt a) const;
  // x -> x^{q^k}
  Elt frobenius(Elt a, int k = 1) const;
  bool in_subfield(Elt a, int c) const;
  // all elements of F_{q^c}, zero first
  std::vector<Elt> subfield_elements(int c) const;
  // the element with polynomial-basis digits equal to the base-p expansion of v (v < p: prime field)
  Elt from_int(Int v) const;
  Int to_int(Elt a) const { return a == zero_ ? 0 : exp_[a]; }

 private:
  Int p_, q_, Q_;
  int n_, L_, N_;
  std::uint32_t m_, zero_, half_;
  std::vector<Elt> zech_;
  std::vector<Elt> log_;  // polynomial encoding -> log
  std::vector<Int> exp_;  // log -> polynomial encoding
};

using ProjectivePoint = std::array<FieldTower::Elt, 3>;

// Rescale so that the first nonzero coordinate is 1.
ProjectivePoint normalize(const FieldTower& F, ProjectivePoint p);
// Normalized points of P^2(F_{q^c}) inside the tower.
std::vector<ProjectivePoint> projective_plane(const FieldTower& F, int c);
FieldTower::Elt det3(const FieldTower& F, const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c);
// Six points lie on a conic iff this determinant vanishes.
FieldTower::Elt conic_det(const FieldTower& F, const ProjectivePoint* pts);
// Pairwise distinct, no three collinear and, with check_conic and six points, not all on one
// conic. At most six points.
bool general_position(const FieldTower& F, const std::vector<ProjectivePoint>& pts, bool check_conic);

Int pgl3_order(Int q);

}  // namespace weylcoh
