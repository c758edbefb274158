#pragma once

#include "weylcoh/chartab.hpp"
#include "weylcoh/intmat.hpp"
#include "weylcoh/poly.hpp"
#include "weylcoh/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace weylcoh {

// A layer of a toric arrangement: the component of {chi_v = exp(2 pi i psi(v)), v in Gamma}
// with Gamma a saturated sublattice given by its HNF basis. For flats of a linear
// arrangement psi is empty and the layer is the annihilator of Gamma.
struct Layer {
  IntMatrix basis;
  std::vector<Rational> psi;  // in [0, 1), one per basis row

  int codim() const { return basis.rows; }
  std::vector<Int> key() const;
  bool operator==(const Layer& o) const { return basis == o.basis && psi == o.psi; }
};

enum class ArrangementKind { linear, toric };

// Dense bitset over poset indices.
class BitRow {
 public:
  explicit BitRow(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  BitRow& operator|=(const BitRow& o);
  std::size_t count() const;
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::vector<std::uint64_t> w_;
};

class ArrangementPoset {
 public:
  ArrangementKind kind = ArrangementKind::linear;
  int rank = 0;
  std::vector<Vec> roots;              // one per hyperplane or hypertorus, lattice coordinates
  std::vector<Layer> layers;           // layers[0] is the whole space; codimension nondecreasing
  std::vector<std::vector<int>> children;  // components of intersections with one more root
  std::vector<BitRow> above;           // strictly larger layers (containing this one)
  std::vector<Int> mobius;             // mu(whole space, layer)

  int size() const { return int(layers.size()); }
  int dim(int i) const { return rank - layers[i].codim(); }
  int find(const Layer& l) const;  // -1 if absent
  std::vector<int> count_by_dimension() const;
  // Characteristic polynomial sum_Z mu(Z) x^{dim Z}.
  Poly characteristic_polynomial() const;

  // Recompute `above`, `mobius` and the lookup index from `layers` and `children`.
  void rebuild_order();

 private:
  std::map<std::vector<Int>, int> index_;
};

ArrangementPoset build_poset(ArrangementKind kind, int rank, const std::vector<Vec>& roots);
inline ArrangementPoset hyperplane_poset(int rank, const std::vector<Vec>& roots) {
  return build_poset(ArrangementKind::linear, rank, roots);
}
inline ArrangementPoset toric_poset(int rank, const std::vector<Vec>& roots) {
  return build_poset(ArrangementKind::toric, rank, roots);
}

// Components of layer ∩ {chi_alpha = 1} (or the flat ∩ ker alpha).
std::vector<Layer> intersect_layer(ArrangementKind kind, const Layer& layer, const Vec& alpha);
// Image of a layer under the lattice automorphism m (acting on column vectors).
Layer act_on_layer(ArrangementKind kind, const Layer& layer, const IntMatrix& m);

std::vector<int> fixed_layers(const ArrangementPoset& p, const IntMatrix& g);
// Moebius function of the induced subposet on `subset` (which must contain index 0).
std::vector<Int> mobius_on(const ArrangementPoset& p, const std::vector<int>& subset);

// Compactly supported Poincare polynomial of the layer, as a trace of g.
Poly layer_poincare(const ArrangementPoset& p, int layer, const IntMatrix& g);
// Compactly supported equivariant Poincare polynomial of the complement, evaluated at g.
Poly complement_poincare(const ArrangementPoset& p, const IntMatrix& g);

// Divide by the compactly supported polynomial t + t^2 of C^*.
Poly projectivize(const Poly& p);
// Ordinary cohomology traces H^i = coefficient of t^{2 dim - i}, i = 0..2 dim.
std::vector<Int> compact_to_ordinary(const Poly& p, int dim);
// Inverse check: |X^{F g}| = sum_k c_k (-1)^k q^{k - dim}.
Rational count_from_poincare(const Poly& p, int dim, Int q);

// Number of points of the complement fixed by g composed with Frobenius over F_q.
Int oracle_count(ArrangementKind kind, const std::vector<Vec>& roots, const IntMatrix& g, Int q);

// An arrangement on a sublattice of a group's ambient lattice: `basis` rows span the lattice
// (ambient coordinates) and the poset roots are written in that basis.
struct LatticeArrangement {
  IntMatrix basis;
  ArrangementPoset poset;
};
// Hypertori or hyperplanes of the given roots (ambient coordinates) on the lattice `basis`.
LatticeArrangement make_arrangement(ArrangementKind kind, const IntMatrix& basis, const std::vector<Vec>& roots);

// Compactly supported equivariant Poincare polynomial, one value per class of g. The group acts
// on the ambient lattice and must preserve the sublattice; with minus_identity every element is
// composed with -id. Classes are evaluated on `threads` workers.
GradedClassFunction equivariant_poincare(const LatticeArrangement& a, const WeylGroup& g, bool minus_identity = false,
                                         int threads = 1);
// (1/|Gamma|) sum_gamma P(sigma gamma) for a normal subgroup Gamma (given by its elements).
GradedClassFunction quotient_average(const GradedClassFunction& f, const std::vector<ElementId>& gamma);
// Average of P(sigma) and P(-sigma): invariants of the extra inversion.
GradedClassFunction inversion_average(const GradedClassFunction& plain, const GradedClassFunction& twisted);
// Classwise division by t + t^2.
GradedClassFunction projectivize(const GradedClassFunction& f);
// Compact degrees of a space of dimension dim to ordinary degrees (coefficient of t^i is H^i).
GradedClassFunction to_ordinary(const GradedClassFunction& compact, int dim);
// H^i(X) - H^{i-1}(E), both in ordinary degrees.
GradedClassFunction blowup_combine(const GradedClassFunction& x, const GradedClassFunction& e);

}  // namespace weylcoh
