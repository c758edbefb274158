#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcoh {

using Int = std::int64_t;
using Vec = std::vector<Int>;

[[noreturn]] inline void fail(const std::string& msg) { throw std::runtime_error(msg); }

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int floor_div(Int a, Int b);
Int mod_floor(Int a, Int b);
Int gcd(Int a, Int b);

// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, int cols = -1);

  Int& operator()(int i, int j) { return data[std::size_t(i) * cols + j]; }
  Int operator()(int i, int j) const { return data[std::size_t(i) * cols + j]; }
  Vec row(int i) const;
  Vec col(int j) const;
  void append_row(const Vec& v);
  IntMatrix transpose() const;
  Int trace() const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
Vec operator*(const IntMatrix& a, const Vec& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Int dot(const Vec& a, const Vec& b);

// Row-style Hermite normal form: H = T * A with T unimodular, nonzero rows of H
// first, positive pivots, entries above a pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;  // only the nonzero rows
  IntMatrix T;  // rows x rows transform; first rank rows produce H
  int rank = 0;
};
HermiteForm hermite(const IntMatrix& a);

// U * A * V = D with D diagonal, d_1 | d_2 | ..., positive.
struct SmithForm {
  IntMatrix U, D, V;
  std::vector<Int> diag;  // nonzero invariant factors
  int rank = 0;
};
SmithForm smith(const IntMatrix& a);

int rank(const IntMatrix& a);
Int determinant(const IntMatrix& a);
IntMatrix inverse_unimodular(const IntMatrix& a);

// HNF basis of (row space of A tensor Q) intersected with Z^n.
IntMatrix saturate(const IntMatrix& a);
// HNF basis of the integer kernel {x : A x = 0}.
IntMatrix kernel(const IntMatrix& a);
// x with x^T * basis = v, if v lies in the row lattice.
std::optional<Vec> lattice_coordinates(const IntMatrix& basis, const Vec& v);
// Rational solve of X * B = C for square invertible B; requires integral result.
IntMatrix solve_right_integral(const IntMatrix& c, const IntMatrix& b);

// Coefficients of det(lambda I - A), constant term first.
Vec characteristic_polynomial(const IntMatrix& a);
// Coefficients of det(1 + x A), constant term first.
Vec exterior_trace_polynomial(const IntMatrix& a);

}  // namespace weylcoh
