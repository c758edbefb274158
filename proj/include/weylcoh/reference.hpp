#pragma once

#include "weylcoh/poly.hpp"

#include <string>
#include <vector>

// Published values that computed results are checked against.
namespace weylcoh::reference {

// Multiplicities of the irreducibles `labels` (one row per ordinary degree, from 0).
struct LabeledTable {
  std::vector<std::string> labels;
  std::vector<std::vector<Int>> rows;
  Int at(int degree, const std::string& label) const;  // 0 past the last row
};

// W(E6) irreducibles in the column order of the cubic tables.
const std::vector<std::string>& e6_labels();
// S5 and S6 irreducibles in the column order of the quartic and six-point tables.
const std::vector<std::string>& s5_labels();
const std::vector<std::string>& s6_labels();

struct CountRow {
  std::vector<int> cycle_type;
  Poly poly;  // |P_n^{F sigma}| as a polynomial in q
};
// Twisted point counts of n points in general position, n = 5 or 6, in count_table_types order.
const std::vector<CountRow>& twisted_counts(int n);

// Traces of H^0..H^2 of five points in general position at the S5 classes `cycle_types`.
struct TraceTable {
  std::vector<std::vector<int>> cycle_types;
  std::vector<std::vector<Int>> rows;
};
const TraceTable& five_point_traces();
// H^i of six points in general position over S6.
const LabeledTable& six_point_cohomology();

// Tabulated cohomology of a moduli space by identifier (D3n, D3c, D3_2n_hat, D3_tn, D3_3n_hat,
// D3_tp, D4n, D4c, D4_2n_A4, D4_tn_A4, D4_2n_D4, D4_tn_D4, D4_3n, D4_tp, D4_4n).
const LabeledTable& cohomology(const std::string& id);
std::vector<std::string> tabulated_spaces();

// Cohomology of the marked cubic moduli space over W(E6) and of the quartic one over W(D5).
const LabeledTable& cubic_cohomology();
const LabeledTable& quartic_cohomology();

// Betti numbers of the nodal cubic space and of six points in general position.
const std::vector<Int>& nodal_betti();
const std::vector<Int>& six_point_betti();

// Sieve candidates as lists of labels (with repetition for multiplicity).
const std::vector<std::vector<std::string>>& h3_candidates();
const std::vector<std::vector<std::string>>& h4_candidates();

}  // namespace weylcoh::reference
