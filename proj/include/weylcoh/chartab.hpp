#pragma once

#include "weylcoh/poly.hpp"
#include "weylcoh/rational.hpp"
#include "weylcoh/weyl.hpp"

#include <string>
#include <vector>

namespace weylcoh {

struct ClassFunction {
  const WeylGroup* group = nullptr;
  std::vector<Rational> values;  // indexed by class

  ClassFunction() = default;
  ClassFunction(const WeylGroup& g, std::vector<Rational> v);
  static ClassFunction constant(const WeylGroup& g, Rational c);
  bool is_integral() const;
  std::vector<Int> integer_values() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(Rational s, const ClassFunction& a);
  bool operator==(const ClassFunction& o) const { return group == o.group && values == o.values; }
};

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

struct Irrep {
  std::string label;
  std::vector<Int> values;
  int carter_d = -1, carter_e = -1;
  std::vector<int> partition;
  Int degree() const { return values.front(); }
};

class CharacterTable {
 public:
  // Dixon-Schneider over a prime field; characters must be rational-valued.
  static CharacterTable compute(const WeylGroup& g);

  const WeylGroup& group() const { return *group_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  int size() const { return int(irreps_.size()); }
  ClassFunction character(int i) const;
  int find(const std::string& label) const;  // -1 if absent
  std::vector<std::string> labels() const;

  // Label by the smallest symmetric power of the reflection character containing each irrep.
  void label_by_symmetric_powers();
  // Label by partitions; the group must permute the basis vectors `points`.
  void label_by_partitions(const std::vector<int>& points);

  std::vector<Rational> decompose(const ClassFunction& f) const;
  // Multiplicities of a virtual character; throws unless all are integers.
  std::vector<Int> multiplicities(const ClassFunction& f) const;
  ClassFunction from_multiplicities(const std::vector<Int>& m) const;
  // Exact row orthogonality and sum of squared degrees.
  bool verify() const;

  static CharacterTable from_values(const WeylGroup& g, std::vector<Irrep> irreps);

 private:
  const WeylGroup* group_ = nullptr;
  std::vector<Irrep> irreps_;
};

// Value of the irreducible S_n character of shape lambda at cycle type mu.
Int symmetric_group_character(const std::vector<int>& lambda, const std::vector<int>& mu);
std::vector<std::vector<int>> partitions(int n);
// "s_{3,1^2}" style label.
std::string partition_label(const std::vector<int>& lambda);
std::string carter_label_string(int d, int e);

// Characters of Sym^0 .. Sym^kmax of a character.
std::vector<ClassFunction> symmetric_powers(const ClassFunction& chi, int kmax);
ClassFunction reflection_character(const WeylGroup& g);
// (d, e) with e the least k such that chi occurs in Sym^k of the reflection representation.
std::pair<int, int> carter_label(const ClassFunction& irreducible, const ClassFunction& reflection, int kmax);

ClassFunction restrict_function(const ClassFunction& f, const SubgroupEmbedding& e);
ClassFunction induce_function(const ClassFunction& f, const SubgroupEmbedding& e);

// Graded virtual character: one polynomial in t per class.
struct GradedClassFunction {
  const WeylGroup* group = nullptr;
  std::vector<Poly> values;
  ClassFunction coefficient(int k) const;
  int degree() const;
};
GradedClassFunction restrict_function(const GradedClassFunction& f, const SubgroupEmbedding& e);
GradedClassFunction induce_function(const GradedClassFunction& f, const SubgroupEmbedding& e);

struct CohomologyTable {
  const CharacterTable* table = nullptr;
  std::vector<std::vector<Int>> multiplicities;  // [degree][irrep]
  std::vector<Int> dimensions() const;
  ClassFunction character(int degree) const;
  bool operator==(const CohomologyTable& o) const { return multiplicities == o.multiplicities; }
};

}  // namespace weylcoh
