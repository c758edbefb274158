#pragma once

#include "weylcoh/arrangements.hpp"
#include "weylcoh/chartab.hpp"
#include "weylcoh/pointcount.hpp"
#include "weylcoh/weyl.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace weylcoh {

class Cache;

enum class SpaceFamily { cubic, quartic };

// How a moduli space is assembled from an arrangement complement.
struct ModuliRecipe {
  std::string id;
  SpaceFamily family = SpaceFamily::cubic;
  std::string description;
  int dim = 0;

  // Arrangement on the lattice classes^⊥ of the Picard lattice, with the roots of `root_type`
  // orthogonal to the classes (F4 adds its long roots).
  std::string root_type;
  std::vector<Vec> classes;
  ArrangementKind kind = ArrangementKind::toric;
  bool projective = false;       // complement modulo scaling
  bool inversion_quotient = false;  // quotient by -id on the lattice
  bool kernel_quotient = false;     // quotient by the (Z/2)^4 of automorphisms of a quartic
  // The group acting on one component: the stabilizer of the classes (as a set) in the cubic
  // case, the reflection group of the roots in the quartic case. Components = its index.
  Int components = 1;

  // Blowup union: H^i(toric part) - H^{i-1}(projective part).
  std::string toric_part, projective_part;
  // D3 comes from the sieve and D4 from point counts.
  bool derived = false;
};

const std::vector<std::string>& moduli_ids();
ModuliRecipe build_recipe(const std::string& id);

struct WorkbenchOptions {
  int threads = 1;
  std::vector<Int> q_samples{2, 3, 4, 5};
  Cache* cache = nullptr;
};

// Groups, character tables and arrangements shared by all spaces, built on first use.
class ModuliWorkbench {
 public:
  explicit ModuliWorkbench(WorkbenchOptions opt = {});
  ~ModuliWorkbench();
  const WorkbenchOptions& options() const { return opt_; }

  // W(E6) on the cubic Picard lattice, S6 permuting e1..e6, W(D5) = Stab(e6).
  const WeylGroup& e6();
  const CharacterTable& e6_table();
  const WeylGroup& s6();
  const CharacterTable& s6_table();
  SubgroupEmbedding s6_in_e6();

  // W(D5) on the quartic Picard lattice, S5 permuting e1..e5, the kernel (Z/2)^4.
  const WeylGroup& d5();
  const CharacterTable& d5_table();
  const WeylGroup& s5();
  const CharacterTable& s5_table();
  SubgroupEmbedding s5_in_d5();
  const std::vector<ElementId>& d5_kernel();
  // Quartic W(D5) inside W(E6) by blowing up a sixth point.
  SubgroupEmbedding d5_in_e6();

  // Ordinary-degree character of a space: over W(E6) for the cubic family, S5 for the quartic.
  const GradedClassFunction& character(const std::string& id);
  const CharacterTable& table_for(SpaceFamily f);
  CohomologyTable compute_cohomology(const std::string& id);

  // Twisted point counts of n = 5, 6 points interpolated from the q samples.
  const std::vector<CountPolynomial>& point_counts(int n);
  // Traces of H^i(P_n) at the classes of S5 resp. S6, from the counts.
  GradedClassFunction point_count_character(int n);
  CohomologyTable point_count_cohomology(int n);
  // Irreducibles of W(D5) trivial on the kernel restricting to each S5 row of the quartic
  // space; throws unless each row has exactly one.
  CohomologyTable quartic_lifts();

  const LatticeArrangement& arrangement(const std::string& root_type, ArrangementKind kind,
                                        const std::vector<Vec>& classes, SpaceFamily family);

 private:
  const WeylGroup& component_group(const ModuliRecipe& r);
  GradedClassFunction compute_character(const ModuliRecipe& r);

  WorkbenchOptions opt_;
  std::unique_ptr<WeylGroup> e6_, s6_, d5e6_, f4_, d5_, s5_;
  std::unique_ptr<CharacterTable> e6_table_, s6_table_, d5_table_, s5_table_;
  std::map<std::string, std::unique_ptr<WeylGroup>> subgroups_;
  std::vector<ElementId> kernel_;
  std::map<std::string, std::unique_ptr<LatticeArrangement>> arrangements_;
  std::map<std::string, GradedClassFunction> characters_;
  std::map<int, std::vector<CountPolynomial>> counts_;
};

// Weyl group of a root_system type acting on its ambient lattice; W(F4) is the stabilizer of
// the standard tritangent trio in W(E6).
WeylGroup root_group(const std::string& type);
// Arrangement of the positive roots of a root_system type on their span (for F4 the full
// complement of the trio), read from and written to the cache when one is given.
LatticeArrangement root_arrangement(const std::string& type, ArrangementKind kind, Cache* cache = nullptr);

// Multiplicities of each degree of an ordinary-degree character.
CohomologyTable decompose_graded(const CharacterTable& t, const GradedClassFunction& f);

}  // namespace weylcoh
