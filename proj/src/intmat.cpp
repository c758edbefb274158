#include "weylcoh/intmat.hpp"

#include "weylcoh/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace weylcoh {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail("integer overflow in multiplication");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail("integer overflow in addition");
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

Int gcd(Int a, Int b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
  if (cols < 0) {
    if (rows.empty()) fail("from_rows: cannot infer column count");
    cols = int(rows[0].size());
  }
  IntMatrix m(int(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    if (int(rows[i].size()) != cols) fail("from_rows: ragged rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec IntMatrix::row(int i) const { return Vec(data.begin() + std::size_t(i) * cols, data.begin() + std::size_t(i + 1) * cols); }

Vec IntMatrix::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::append_row(const Vec& v) {
  if (rows == 0 && cols == 0) cols = int(v.size());
  if (int(v.size()) != cols) fail("append_row: wrong length");
  data.insert(data.end(), v.begin(), v.end());
  ++rows;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int IntMatrix::trace() const {
  Int s = 0;
  for (int i = 0; i < std::min(rows, cols); ++i) s += (*this)(i, i);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail("matrix product: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      Int x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data) x = -x;
  return c;
}

Vec operator*(const IntMatrix& a, const Vec& v) {
  if (a.cols != int(v.size())) fail("matrix-vector product: shape mismatch");
  Vec r(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] = checked_add(r[i], checked_mul(a(i, j), v[j]));
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (int i = 0; i < m.rows; ++i) {
    os << '[';
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, int dst, int src, Int q) {
  if (!q) return;
  for (int j = 0; j < m.cols; ++j) m(dst, j) = checked_add(m(dst, j), -checked_mul(q, m(src, j)));
}

void col_axpy(IntMatrix& m, int dst, int src, Int q) {
  if (!q) return;
  for (int i = 0; i < m.rows; ++i) m(i, dst) = checked_add(m(i, dst), -checked_mul(q, m(i, src)));
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hermite(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix t = IntMatrix::identity(a.rows);
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < a.rows; ++i)
        if (h(i, c) != 0 && (best < 0 || std::abs(h(i, c)) < std::abs(h(best, c)))) best = i;
      if (best < 0) break;
      swap_rows(h, r, best);
      swap_rows(t, r, best);
      bool clean = true;
      for (int i = r + 1; i < a.rows; ++i) {
        if (!h(i, c)) continue;
        Int q = floor_div(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(t, i, r, q);
        if (h(i, c)) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(t, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      row_axpy(h, i, r, q);
      row_axpy(t, i, r, q);
    }
    ++r;
  }
  HermiteForm out;
  out.rank = r;
  out.H = IntMatrix(r, a.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < a.cols; ++j) out.H(i, j) = h(i, j);
  out.T = std::move(t);
  return out;
}

SmithForm smith(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows);
  IntMatrix v = IntMatrix::identity(a.cols);
  int n = std::min(a.rows, a.cols);
  int t = 0;
  for (; t < n; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j)
        if (d(i, j) != 0 && (pi < 0 || std::abs(d(i, j)) < std::abs(d(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    swap_rows(d, t, pi);
    swap_rows(u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(v, t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < a.rows; ++i) {
        if (!d(i, t)) continue;
        Int q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t)) clean = false;
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (!d(t, j)) continue;
        Int q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j)) clean = false;
      }
      if (!clean) {
        int bi = -1, bj = -1;
        Int bv = std::abs(d(t, t));
        for (int i = t + 1; i < a.rows; ++i)
          if (d(i, t) && std::abs(d(i, t)) < bv) bv = std::abs(d(i, t)), bi = i, bj = -1;
        for (int j = t + 1; j < a.cols; ++j)
          if (d(t, j) && std::abs(d(t, j)) < bv) bv = std::abs(d(t, j)), bj = j, bi = -1;
        if (bi >= 0) {
          swap_rows(d, t, bi);
          swap_rows(u, t, bi);
        } else if (bj >= 0) {
          swap_cols(d, t, bj);
          swap_cols(v, t, bj);
        }
        continue;
      }
      // enforce divisibility of the remaining block by the pivot
      int bad = -1;
      for (int i = t + 1; i < a.rows && bad < 0; ++i)
        for (int j = t + 1; j < a.cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(d, t, bad, -1);
      row_axpy(u, t, bad, -1);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  SmithForm s;
  s.rank = t;
  for (int i = 0; i < t; ++i) s.diag.push_back(d(i, i));
  s.U = std::move(u);
  s.D = std::move(d);
  s.V = std::move(v);
  return s;
}

int rank(const IntMatrix& a) { return hermite(a).rank; }

namespace {

using Q = Rational;

std::vector<std::vector<Q>> to_rational(const IntMatrix& a) {
  std::vector<std::vector<Q>> m(a.rows, std::vector<Q>(a.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m[i][j] = a(i, j);
  return m;
}

// Gauss-Jordan inverse over Q; throws if singular.
std::vector<std::vector<Q>> rational_inverse(const IntMatrix& a) {
  if (a.rows != a.cols) fail("inverse: matrix not square");
  int n = a.rows;
  auto m = to_rational(a);
  std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) fail("inverse: singular matrix");
    std::swap(m[c], m[p]);
    std::swap(inv[c], inv[p]);
    Q piv = m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (int j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

Int determinant(const IntMatrix& a) {
  if (a.rows != a.cols) fail("determinant: matrix not square");
  int n = a.rows;
  auto m = to_rational(a);
  Q det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[c], m[p]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  if (det.den() != 1) fail("determinant: non-integral result");
  return det.num();
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  auto inv = rational_inverse(a);
  IntMatrix r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      if (inv[i][j].den() != 1) fail("inverse_unimodular: matrix is not unimodular");
      r(i, j) = inv[i][j].num();
    }
  return r;
}

IntMatrix solve_right_integral(const IntMatrix& c, const IntMatrix& b) {
  auto inv = rational_inverse(b);
  if (c.cols != b.rows) fail("solve_right_integral: shape mismatch");
  IntMatrix x(c.rows, b.cols);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      Q s = 0;
      for (int k = 0; k < c.cols; ++k) s += Q(c(i, k)) * inv[k][j];
      if (s.den() != 1) fail("solve_right_integral: non-integral solution");
      x(i, j) = s.num();
    }
  return x;
}

IntMatrix kernel(const IntMatrix& a) {
  SmithForm s = smith(a);
  IntMatrix k(0, a.cols);
  for (int j = s.rank; j < a.cols; ++j) k.append_row(s.V.col(j));
  if (k.rows == 0) return k;
  return hermite(k).H;
}

IntMatrix saturate(const IntMatrix& a) {
  if (a.rows == 0) return IntMatrix(0, a.cols);
  IntMatrix k = kernel(a);
  if (k.rows == 0) return IntMatrix::identity(a.cols);
  return kernel(k);
}

std::optional<Vec> lattice_coordinates(const IntMatrix& basis, const Vec& v) {
  if (int(v.size()) != basis.cols) fail("lattice_coordinates: length mismatch");
  HermiteForm hf = hermite(basis);
  Vec rest = v;
  Vec y(hf.rank, 0);
  for (int k = 0; k < hf.rank; ++k) {
    int p = 0;
    while (hf.H(k, p) == 0) ++p;
    if (rest[p] % hf.H(k, p) != 0) return std::nullopt;
    y[k] = rest[p] / hf.H(k, p);
    for (int j = 0; j < basis.cols; ++j) rest[j] = checked_add(rest[j], -checked_mul(y[k], hf.H(k, j)));
  }
  for (Int x : rest)
    if (x) return std::nullopt;
  Vec out(basis.rows, 0);
  for (int k = 0; k < hf.rank; ++k)
    for (int i = 0; i < basis.rows; ++i) out[i] = checked_add(out[i], checked_mul(y[k], hf.T(k, i)));
  return out;
}

Vec characteristic_polynomial(const IntMatrix& a) {
  if (a.rows != a.cols) fail("characteristic_polynomial: matrix not square");
  int n = a.rows;
  Vec c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    Int tr = (a * m).trace();
    if (tr % k != 0) fail("characteristic_polynomial: inexact division");
    c[n - k] = -tr / k;
  }
  return c;
}

Vec exterior_trace_polynomial(const IntMatrix& a) {
  Vec c = characteristic_polynomial(a);
  int n = a.rows;
  Vec e(n + 1);
  for (int j = 0; j <= n; ++j) e[j] = (j % 2 ? -1 : 1) * c[n - j];
  return e;
}

}  // namespace weylcoh
