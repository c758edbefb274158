#pragma once

#include "weylcoh/moduli.hpp"
#include "weylcoh/reference.hpp"

#include <string>
#include <vector>

namespace weylcoh {

struct TableMismatch {
  int degree = 0;
  std::string label;
  Int got = 0, want = 0;
};

// Entry-by-entry comparison over every label of either table and every degree of either.
std::vector<TableMismatch> compare_table(const CohomologyTable& computed, const reference::LabeledTable& want);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Twisted point-count polynomials for n = 5 or 6 against the published ones.
CheckResult check_counts(ModuliWorkbench& wb, int n);
// Traces of H^0..H^2 of five points at the published S5 classes.
CheckResult check_five_point_traces(ModuliWorkbench& wb);
CheckResult check_six_point_cohomology(ModuliWorkbench& wb);
// One tabulated moduli space.
CheckResult check_space(ModuliWorkbench& wb, const std::string& id);
// The W(D5) lifts of the quartic space.
CheckResult check_quartic_lifts(ModuliWorkbench& wb);
// The sieve result against the published W(E6) cohomology of marked cubics.
CheckResult check_marked_cubics(ModuliWorkbench& wb);
CheckResult check_nodal_betti(ModuliWorkbench& wb);
// Candidate sets of the sieve, what each filter removes, and the final answer.
CheckResult check_sieve(ModuliWorkbench& wb);
// Betti numbers of six points two ways: product of the five-point space and the fibre, and the
// identity column of the six-point counts.
CheckResult check_six_point_betti(ModuliWorkbench& wb);

// Invariants that do not refer to any published value: character table orthogonality, Moebius
// identities, Macmeikan sums against brute-force counts, exact projectivization, integral
// quotient averages and Frobenius reciprocity.
std::vector<CheckResult> property_checks(ModuliWorkbench& wb);

// Every check above, in a fixed order.
std::vector<CheckResult> verify_all(ModuliWorkbench& wb);

// Ordinary Poincare polynomial of P^2 minus the six lines through four general points.
Poly five_point_poincare();
// Ordinary Poincare polynomial of P^2 minus the ten lines and the conic through five general
// points, from F_q counts at the given q (minimally pure, so the count is the polynomial).
Poly fibre_poincare(const std::vector<Int>& qs);

}  // namespace weylcoh
