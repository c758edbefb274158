#pragma once

#include "weylcoh/intmat.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace weylcoh {

// Z^n with an integral symmetric form, optionally marked with a canonical class.
struct MarkedLattice {
  IntMatrix gram;
  std::vector<std::string> labels;
  std::optional<Vec> canonical_class;

  int rank() const { return gram.rows; }
  Int product(const Vec& a, const Vec& b) const;
};

// Picard lattice of a degree d del Pezzo surface: basis l, e1..e_{9-d}, form diag(1,-1,...,-1).
MarkedLattice del_pezzo_lattice(int degree);
// Z^n with form -I, so that e_i - e_j has norm -2.
MarkedLattice negative_lattice(int n);

struct RootSystem {
  MarkedLattice lattice;
  std::string type;
  std::vector<Vec> roots;        // lexicographically sorted
  std::vector<char> positive;    // parallel to roots
  std::vector<int> simple;       // indices into roots
  std::vector<Vec> complement;   // pointwise fixed vectors completing the simple roots to a Q-basis

  int size() const { return int(roots.size()); }
  int rank() const { return int(simple.size()); }
  int index_of(const Vec& v) const;  // -1 if absent
  int negative_of(int i) const;
  std::vector<int> positive_indices() const;
  std::vector<Vec> positive_roots() const;
  // v -> v - 2 (a.v)/(a.a) a; throws if the root does not give an integral reflection.
  IntMatrix reflection(int root) const;
};

RootSystem del_pezzo_roots(int degree);
// "A1".."A8", "D4".."D8" in Z^n with form -I, "E6" as the degree 3 Picard roots,
// "F4" as the roots orthogonal to a standard tritangent trio in the degree 3 lattice.
RootSystem root_system(const std::string& type);
// Roots of `ambient` orthogonal to all `classes`; with add_long, also the norm -4 sums of
// orthogonal pairs of such roots (the long roots of an F4 inside E6).
RootSystem orthogonal_subsystem(const RootSystem& ambient, const std::vector<Vec>& classes,
                                const std::string& expected_type, bool add_long = false);
// The standard tritangent trio (2l-e1-..-e5, l-e5-e6, e5) in the degree 3 lattice.
std::vector<Vec> standard_tritangent_trio();
// Lattice of vectors orthogonal to `classes`, as HNF basis rows.
IntMatrix orthogonal_complement(const MarkedLattice& lat, const std::vector<Vec>& classes);
// Matrix R with M b_j = sum_i R_ij b_i for the rows b_j of `basis`; throws if not stable.
IntMatrix restrict_to_sublattice(const IntMatrix& m, const IntMatrix& basis);

using ElementId = std::uint32_t;

struct ConjugacyClass {
  ElementId representative = 0;
  std::size_t size = 0;
  int order = 1;
  Int trace = 0;  // trace on the ambient lattice
  Vec charpoly;
};

// A finite group of lattice automorphisms, stored as permutations of the acting root list.
class WeylGroup {
 public:
  WeylGroup(std::shared_ptr<const RootSystem> acting, const std::vector<IntMatrix>& generators,
            std::string name, std::size_t max_order = 2'000'000);

  const std::string& name() const { return name_; }
  const RootSystem& acting() const { return *acting_; }
  std::shared_ptr<const RootSystem> acting_ptr() const { return acting_; }
  std::size_t order() const { return n_elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int num_classes() const { return int(classes_.size()); }
  int class_of(ElementId g) const { return class_of_[g]; }
  ElementId identity() const { return identity_; }

  ElementId multiply(ElementId a, ElementId b) const;  // a after b
  ElementId inverse(ElementId a) const;
  ElementId power(ElementId a, Int k) const;
  int element_order(ElementId a) const;
  int image(ElementId g, int root) const { return perm_[std::size_t(g) * n_roots_ + root]; }
  IntMatrix matrix(ElementId g) const;
  std::optional<ElementId> find(const IntMatrix& m) const;
  std::optional<ElementId> find_perm(const std::vector<int>& perm) const;
  std::vector<int> perm(ElementId g) const;

  // class of g^k for each class
  std::vector<int> power_map(Int k) const;
  std::vector<int> inverse_class_map() const;
  Int exponent() const;

  // Optional reflection data: the root subsystem whose span carries the reflection representation.
  std::shared_ptr<const RootSystem> reflection_roots;
  Int reflection_trace(ElementId g) const;

 private:
  std::uint64_t key_of_perm(const std::uint8_t* p) const;
  std::uint64_t key_of_product(ElementId a, ElementId b) const;
  std::vector<int> matrix_to_perm(const IntMatrix& m) const;
  void compute_classes();

  std::shared_ptr<const RootSystem> acting_;
  std::string name_;
  int n_roots_ = 0;
  std::size_t n_elements_ = 0;
  std::vector<std::uint8_t> perm_;
  std::unordered_map<std::uint64_t, ElementId> index_;
  std::vector<ElementId> generators_;
  ElementId identity_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  IntMatrix basis_;  // columns: simple roots then complement
  IntMatrix reflection_basis_;
  std::vector<int> key_roots_;
};

WeylGroup weyl_group(std::shared_ptr<const RootSystem> rs, std::string name = "");
WeylGroup subgroup(const WeylGroup& g, const std::vector<ElementId>& gens, std::string name);
// Elements of g satisfying pred; a small generating set is chosen greedily.
WeylGroup stabilizer(const WeylGroup& g, const std::function<bool(ElementId)>& pred, std::string name);
// Subgroup of g generated by reflections in the simple roots of `sub` (roots of g's acting system).
WeylGroup reflection_subgroup(const WeylGroup& g, std::shared_ptr<const RootSystem> sub, std::string name);
// Permutations of the coordinates `points` (indices into the lattice basis) inside g.
WeylGroup symmetric_subgroup(const WeylGroup& g, const std::vector<int>& points, std::string name);

enum class Twist { none, minus_identity };

struct ExtendedElement {
  ElementId w = 0;
  Twist twist = Twist::none;
  IntMatrix composed(const WeylGroup& g) const;
};

struct SubgroupEmbedding {
  const WeylGroup* source = nullptr;
  const WeylGroup* target = nullptr;
  std::vector<int> fusion;  // source class -> target class
  Int index() const { return Int(target->order() / source->order()); }
};

// Both groups act on the same root list (source elements are target elements).
SubgroupEmbedding embed(const WeylGroup& source, const WeylGroup& target);
// Source matrices mapped into the target lattice by `lift`; checked to be a homomorphism on generators.
SubgroupEmbedding embed(const WeylGroup& source, const WeylGroup& target,
                        const std::function<IntMatrix(const IntMatrix&)>& lift);

// Cycle type (sorted decreasing) of a matrix permuting the basis vectors listed in `points`.
std::vector<int> cycle_type_on(const IntMatrix& m, const std::vector<int>& points);

}  // namespace weylcoh
