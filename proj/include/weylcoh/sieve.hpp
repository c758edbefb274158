#pragma once

#include "weylcoh/chartab.hpp"

#include <string>
#include <utility>
#include <vector>

namespace weylcoh {

class ModuliWorkbench;

// Candidate cohomology of the marked cubic space, degree by degree, over W(E6).
struct SieveState {
  const CharacterTable* table = nullptr;
  // candidates[i] lists multiplicity vectors for H^i.
  std::vector<std::vector<std::vector<Int>>> candidates;
  // Surviving (H^3, H^4) candidate index pairs.
  std::vector<std::pair<int, int>> assignments;
  std::vector<std::string> log;

  std::vector<int> h3_alive() const;
  std::vector<int> h4_alive() const;
};

// Multiplicity vectors m >= 0 with m_j <= bound_j and sum_j m_j res_j = target, where res_j is the
// restriction of irreducible j to the subgroup (all in the subgroup's irreducible basis).
std::vector<std::vector<Int>> restriction_solutions(const std::vector<std::vector<Int>>& res,
                                                    const std::vector<Int>& target, const std::vector<Int>& bound);

// Bounded search: each H^i restricts to six_point's row i and is bounded by every comparison table.
SieveState sieve_candidates(const CharacterTable& e6, const CharacterTable& s6, const SubgroupEmbedding& s6_in_e6,
                            const CohomologyTable& six_point,
                            const std::vector<std::pair<std::string, CohomologyTable>>& comparisons);

// Drop the H^3 candidates for which every H^4 candidate gives a negative count
// sum_i Tr(g, H^i) (-q)^{4-i} at some class and some q.
SieveState positivity_filter(SieveState s, const std::vector<Int>& qs);

// Class data for the Euler filters: for each W(D5) class, its W(E6) class, whether it is new
// (its W(E6) class misses S6), and the signed and sign-free Euler sums of the quartic space.
struct EulerData {
  std::vector<int> fusion;
  std::vector<char> is_new;
  std::vector<int> order;
  std::vector<Int> signed_sum, unsigned_sum;
};

// Drop H^4 candidates whose signed (twisted = false) or sign-free (twisted = true) Euler sum is
// nonzero at a new class where the quartic sum vanishes.
SieveState euler_filter(SieveState s, const EulerData& d, bool twisted);

struct SieveReport {
  SieveState searched, positive, signed_euler, twisted_euler;
  std::vector<std::string> comparison_ids;
  CohomologyTable result;
  int zero_classes_signed = 0, new_zero_classes_signed = 0;
};

// The full sieve from the workbench's point counts, comparison spaces and quartic lifts.
SieveReport run_sieve(ModuliWorkbench& wb);

// Character of a multiplicity table as a graded class function (coefficient of t^i is H^i).
GradedClassFunction graded_character(const CohomologyTable& t);
// "phi_{10}^{9} + 2 phi_{15}^{4}" style sum of labels; "0" when empty.
std::string format_multiplicities(const CharacterTable& t, const std::vector<Int>& m);

}  // namespace weylcoh
