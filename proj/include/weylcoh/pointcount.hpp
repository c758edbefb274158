#pragma once

#include "weylcoh/finitegeom.hpp"
#include "weylcoh/poly.hpp"

#include <utility>
#include <vector>

namespace weylcoh {

// Ordered n-tuples in general position in P^2 with P_{sigma(i)} = F(P_i), counted over F_q.
struct TwistedCountTask {
  std::vector<int> sigma;  // permutation of 0..n-1
  Int q = 2;
  bool check_conic = true;  // only matters for n >= 6
};

struct CountResult {
  std::vector<int> cycle_type;
  Int q = 0;
  Int raw = 0;     // labelled configurations
  Int orbits = 0;  // raw / |PGL_3(F_q)|
};

CountResult count_fixed(const TwistedCountTask& task, int threads = 1);
// Rough number of inner checks, used to skip infeasible samples.
double count_cost(const std::vector<int>& sigma, Int q);

std::vector<int> permutation_of_type(const std::vector<int>& cycle_type);
std::vector<int> cycle_type_of(const std::vector<int>& sigma);
// Cycle types of S_n in the row order used for the count table, identity last.
std::vector<std::vector<int>> count_table_types(int n);
std::string cycle_notation(const std::vector<int>& cycle_type);

// Polynomial of the given degree through the samples (q, value); with monic the leading
// coefficient is forced to 1. Extra samples are checked; throws if any disagrees or a
// coefficient is not an integer.
Poly interpolate(const std::vector<std::pair<Int, Int>>& samples, int degree, bool monic = true);
// Trace on H^i for i = 0..dim, from a point-count polynomial of a minimally pure space.
std::vector<Int> counts_to_cohomology(const Poly& count, int dim);

struct CountPolynomial {
  std::vector<int> cycle_type;
  Poly poly;
  std::vector<CountResult> samples;
};
std::vector<CountPolynomial> count_polynomials(int n, const std::vector<Int>& qs, int threads = 1);

}  // namespace weylcoh
