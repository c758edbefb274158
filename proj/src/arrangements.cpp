#include "weylcoh/arrangements.hpp"

#include "weylcoh/finitegeom.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <exception>
#include <numeric>
#include <thread>

namespace weylcoh {

namespace {

Rational frac(const Rational& r) { return r - Rational(floor_div(r.num(), r.den())); }

Layer whole_space(int rank) { return Layer{IntMatrix(0, rank), {}}; }

// psi values on the rows of T * A, given values y on the rows of A.
std::vector<Rational> transform_psi(const IntMatrix& t, int rows, const std::vector<Rational>& y) {
  std::vector<Rational> out;
  for (int k = 0; k < rows; ++k) {
    Rational s(0);
    for (int j = 0; j < t.cols; ++j)
      if (t(k, j)) s += Rational(t(k, j)) * y[j];
    out.push_back(frac(s));
  }
  return out;
}

int matrix_order(const IntMatrix& m) {
  IntMatrix p = m;
  IntMatrix id = IntMatrix::identity(m.rows);
  for (int k = 1; k <= 720; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  fail("matrix_order: not of finite order");
}

}  // namespace

std::vector<Int> Layer::key() const {
  std::vector<Int> k{basis.rows, basis.cols};
  k.insert(k.end(), basis.data.begin(), basis.data.end());
  for (const auto& r : psi) {
    k.push_back(r.num());
    k.push_back(r.den());
  }
  return k;
}

BitRow& BitRow::operator|=(const BitRow& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::size_t(std::popcount(w));
  return c;
}

int ArrangementPoset::find(const Layer& l) const {
  auto it = index_.find(l.key());
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> ArrangementPoset::count_by_dimension() const {
  std::vector<int> out(rank + 1, 0);
  for (int i = 0; i < size(); ++i) ++out[dim(i)];
  return out;
}

Poly ArrangementPoset::characteristic_polynomial() const {
  Poly p(rank + 1, 0);
  for (int i = 0; i < size(); ++i) p[dim(i)] += mobius[i];
  return poly_trim(p);
}

void ArrangementPoset::rebuild_order() {
  int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) index_[layers[i].key()] = i;
  above.assign(n, BitRow(n));
  for (int i = 0; i < n; ++i)
    for (int c : children[i]) {
      if (c <= i) fail("rebuild_order: children must follow their parents");
      above[c] |= above[i];
      above[c].set(i);
    }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  mobius = mobius_on(*this, all);
}

std::vector<Layer> intersect_layer(ArrangementKind kind, const Layer& layer, const Vec& alpha) {
  int s = layer.codim();
  IntMatrix b = layer.basis;
  b.append_row(alpha);
  if (rank(b) == s) return {};
  if (kind == ArrangementKind::linear) return {Layer{saturate(b), {}}};

  SmithForm sf = smith(b);  // U B V = D
  IntMatrix w = inverse_unimodular(sf.V);
  IntMatrix a(s + 1, b.cols);
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j < b.cols; ++j) a(i, j) = w(i, j);
  HermiteForm hf = hermite(a);
  // Values of psi on the rows of U B = D W, i.e. on d_i w_i.
  std::vector<Rational> c(s + 1, Rational(0));
  for (int i = 0; i <= s; ++i) {
    Rational v(0);
    for (int j = 0; j < s; ++j)
      if (sf.U(i, j)) v += Rational(sf.U(i, j)) * layer.psi[j];
    c[i] = v;
  }
  std::vector<Int> d(s + 1);
  for (int i = 0; i <= s; ++i) d[i] = sf.D(i, i);
  std::vector<Layer> out;
  std::vector<Int> m(s + 1, 0);
  for (;;) {
    std::vector<Rational> y(s + 1);
    for (int i = 0; i <= s; ++i) y[i] = (c[i] + Rational(m[i])) / Rational(d[i]);
    out.push_back(Layer{hf.H, transform_psi(hf.T, s + 1, y)});
    int k = 0;
    while (k <= s && ++m[k] == d[k]) m[k++] = 0;
    if (k > s) break;
  }
  return out;
}

Layer act_on_layer(ArrangementKind kind, const Layer& layer, const IntMatrix& m) {
  if (layer.codim() == 0) return layer;
  IntMatrix a = layer.basis * m.transpose();
  HermiteForm hf = hermite(a);
  if (kind == ArrangementKind::linear) return Layer{hf.H, {}};
  return Layer{hf.H, transform_psi(hf.T, hf.rank, layer.psi)};
}

ArrangementPoset build_poset(ArrangementKind kind, int rank, const std::vector<Vec>& roots) {
  ArrangementPoset p;
  p.kind = kind;
  p.rank = rank;
  p.roots = roots;
  for (const auto& r : roots)
    if (int(r.size()) != rank) fail("build_poset: root has the wrong length");
  std::map<std::vector<Int>, int> seen;
  p.layers.push_back(whole_space(rank));
  p.children.emplace_back();
  seen[p.layers[0].key()] = 0;
  for (std::size_t i = 0; i < p.layers.size(); ++i) {
    std::vector<int> kids;
    for (const auto& r : roots) {
      Layer cur = p.layers[i];
      for (auto& l : intersect_layer(kind, cur, r)) {
        auto key = l.key();
        auto it = seen.find(key);
        int idx;
        if (it == seen.end()) {
          idx = int(p.layers.size());
          seen.emplace(std::move(key), idx);
          p.layers.push_back(std::move(l));
          p.children.emplace_back();
        } else {
          idx = it->second;
        }
        kids.push_back(idx);
      }
    }
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    p.children[i] = kids;
  }
  p.rebuild_order();
  return p;
}

std::vector<int> fixed_layers(const ArrangementPoset& p, const IntMatrix& g) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    Layer img = act_on_layer(p.kind, p.layers[i], g);
    if (img == p.layers[i]) {
      out.push_back(i);
    } else if (p.find(img) < 0) {
      fail("fixed_layers: the element does not preserve the arrangement");
    }
  }
  return out;
}

std::vector<Int> mobius_on(const ArrangementPoset& p, const std::vector<int>& subset) {
  if (subset.empty() || subset[0] != 0) fail("mobius_on: subset must start with the whole space");
  std::vector<Int> mu(p.size(), 0);
  std::vector<Int> out;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    int z = subset[a];
    Int v = a == 0 ? 1 : 0;
    for (std::size_t b = 0; b < a; ++b)
      if (p.above[z].test(subset[b])) v -= mu[subset[b]];
    mu[z] = v;
  }
  if (subset.size() == std::size_t(p.size())) return mu;
  for (int z : subset) out.push_back(mu[z]);
  return out;
}

Poly layer_poincare(const ArrangementPoset& p, int layer, const IntMatrix& g) {
  const Layer& l = p.layers[layer];
  int d = p.rank - l.codim();
  Poly out(2 * d + 1, 0);
  if (p.kind == ArrangementKind::linear) {
    out[2 * d] = 1;
    return out;
  }
  Poly full = exterior_trace_polynomial(g);
  Poly sub{1};
  if (l.codim() > 0) sub = exterior_trace_polynomial(restrict_to_sublattice(g, l.basis));
  Poly quot = poly_div_exact(full, sub);
  for (int j = 0; j <= d; ++j) out[2 * d - j] = poly_coeff(quot, j);
  return poly_trim(out);
}

Poly complement_poincare(const ArrangementPoset& p, const IntMatrix& g) {
  auto fixed = fixed_layers(p, g);
  auto mu = mobius_on(p, fixed);
  Poly total;
  for (std::size_t a = 0; a < fixed.size(); ++a) {
    if (mu[a] == 0) continue;
    int z = fixed[a];
    int c = p.layers[z].codim();
    Poly term(c + 1, 0);
    term[c] = (c % 2 ? -1 : 1) * mu[a];
    total = poly_add(total, poly_mul(term, layer_poincare(p, z, g)));
  }
  return total;
}

Poly projectivize(const Poly& p) { return poly_div_exact(p, Poly{0, 1, 1}); }

std::vector<Int> compact_to_ordinary(const Poly& p, int dim) {
  std::vector<Int> out;
  for (int i = 0; i <= 2 * dim; ++i) out.push_back(poly_coeff(p, 2 * dim - i));
  if (poly_degree(p) > 2 * dim) fail("compact_to_ordinary: degree exceeds twice the dimension");
  return out;
}

Rational count_from_poincare(const Poly& p, int dim, Int q) {
  Rational total(0);
  for (int k = 0; k <= poly_degree(p); ++k) {
    Int c = poly_coeff(p, k);
    if (!c) continue;
    Rational term(k % 2 ? -c : c);
    int e = k - dim;
    for (int i = 0; i < std::abs(e); ++i) term = e > 0 ? term * Rational(q) : term / Rational(q);
    total += term;
  }
  return total;
}

namespace {

Int toric_oracle(const std::vector<Vec>& roots, const IntMatrix& g, Int q) {
  int r = g.rows;
  IntMatrix ginvt = inverse_unimodular(g).transpose();
  IntMatrix a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = q * ginvt(i, j) - (i == j ? 1 : 0);
  // Points of the torus are a in (Q/Z)^r; Frobenius is a -> q a.
  SmithForm sf = smith(a);
  if (sf.rank != r) fail("oracle_count: twisted Frobenius has a fixed direction");
  Int n = sf.D(r - 1, r - 1);
  std::vector<Int> d(r);
  for (int i = 0; i < r; ++i) d[i] = sf.D(i, i);
  // a = V b with b_i in (1/d_i) Z; numerators over the common denominator n.
  std::vector<Vec> root_rows;
  for (const auto& al : roots) {
    Vec row(r, 0);
    for (int i = 0; i < r; ++i) {
      Int s = 0;
      for (int j = 0; j < r; ++j) s += al[j] * sf.V(j, i);
      row[i] = mod_floor(s * (n / d[i]), n);
    }
    root_rows.push_back(row);
  }
  std::vector<Int> k(r, 0);
  Int count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& row : root_rows) {
      Int s = 0;
      for (int i = 0; i < r; ++i) s = (s + row[i] * k[i]) % n;
      if (s == 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < r && ++k[i] == d[i]) k[i++] = 0;
    if (i == r) break;
  }
  return count;
}

Int linear_oracle(const std::vector<Vec>& roots, const IntMatrix& g, Int q) {
  int r = g.rows;
  IntMatrix m = inverse_unimodular(g).transpose();
  int order = matrix_order(m);
  FieldTower F(q, order);
  Int p = F.p();
  int N = 0;
  for (Int t = F.size(); t > 1; t /= p) ++N;
  int dim = r * N;
  auto scalar = [&](Int v) { return F.from_int(mod_floor(v, p)); };
  auto digits = [&](FieldTower::Elt e, Vec& out, int offset) {
    Int v = F.to_int(e);
    for (int k = 0; k < N; ++k) {
      out[offset + k] = v % p;
      v /= p;
    }
  };
  // Columns: images of the F_p-basis under x -> M x^(q) - x.
  std::vector<Vec> cols;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < N; ++k) {
      Int enc = 1;
      for (int t = 0; t < k; ++t) enc *= p;
      FieldTower::Elt e = F.from_int(enc);
      Vec col(dim, 0);
      for (int row = 0; row < r; ++row) {
        FieldTower::Elt v = F.mul(scalar(m(row, i)), F.frobenius(e));
        if (row == i) v = F.sub(v, e);
        digits(v, col, row * N);
      }
      cols.push_back(col);
    }
  // Kernel over F_p by Gaussian elimination on the dim x dim matrix.
  std::vector<Vec> a(dim, Vec(dim, 0));
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) a[i][j] = cols[j][i];
  auto inv_p = [&](Int x) {
    Int res = 1, b = mod_floor(x, p), e = p - 2;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < dim && row < dim; ++c) {
    int piv = -1;
    for (int i = row; i < dim; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    Int iv = inv_p(a[row][c]);
    for (auto& x : a[row]) x = x * iv % p;
    for (int i = 0; i < dim; ++i)
      if (i != row && a[i][c]) {
        Int f = a[i][c];
        for (int j = 0; j < dim; ++j) a[i][j] = mod_floor(a[i][j] - f * a[row][j], p);
      }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(dim, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    Vec v(dim, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = mod_floor(-a[i][f], p);
    basis.push_back(v);
  }
  Int expected = 1;
  for (int i = 0; i < r; ++i) expected *= q;
  Int total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
  if (total != expected) fail("oracle_count: twisted form has the wrong number of points");
  // Enumerate the kernel and test every hyperplane.
  std::vector<Int> coef(basis.size(), 0);
  Int count = 0;
  std::vector<FieldTower::Elt> x(r);
  for (;;) {
    Vec v(dim, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coef[b])
        for (int j = 0; j < dim; ++j) v[j] = (v[j] + coef[b] * basis[b][j]) % p;
    for (int i = 0; i < r; ++i) {
      Int enc = 0;
      for (int k = N - 1; k >= 0; --k) enc = enc * p + v[i * N + k];
      x[i] = F.from_int(enc);
    }
    bool ok = true;
    for (const auto& al : roots) {
      FieldTower::Elt s = F.zero();
      for (int i = 0; i < r; ++i)
        if (mod_floor(al[i], p)) s = F.add(s, F.mul(scalar(al[i]), x[i]));
      if (s == F.zero()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t b = 0;
    while (b < coef.size() && ++coef[b] == p) coef[b++] = 0;
    if (b == coef.size()) break;
  }
  return count;
}

}  // namespace

Int oracle_count(ArrangementKind kind, const std::vector<Vec>& roots, const IntMatrix& g, Int q) {
  return kind == ArrangementKind::toric ? toric_oracle(roots, g, q) : linear_oracle(roots, g, q);
}

LatticeArrangement make_arrangement(ArrangementKind kind, const IntMatrix& basis, const std::vector<Vec>& roots) {
  LatticeArrangement a;
  a.basis = basis;
  std::vector<Vec> local;
  for (const auto& r : roots) {
    auto x = lattice_coordinates(basis, r);
    if (!x) fail("make_arrangement: root outside the lattice");
    local.push_back(*x);
  }
  a.poset = build_poset(kind, basis.rows, local);
  return a;
}

GradedClassFunction equivariant_poincare(const LatticeArrangement& a, const WeylGroup& g, bool minus_identity,
                                         int threads) {
  GradedClassFunction out;
  out.group = &g;
  int n = g.num_classes();
  out.values.assign(n, Poly{});
  std::vector<IntMatrix> mats;
  for (const auto& c : g.classes()) {
    IntMatrix m = restrict_to_sublattice(g.matrix(c.representative), a.basis);
    mats.push_back(minus_identity ? -m : m);
  }
  // classes are independent; workers take them round-robin so the result is thread-count independent
  threads = std::clamp(threads, 1, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t]() {
      try {
        for (int c = t; c < n; c += threads) out.values[c] = complement_poincare(a.poset, mats[c]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

GradedClassFunction quotient_average(const GradedClassFunction& f, const std::vector<ElementId>& gamma) {
  const WeylGroup& g = *f.group;
  GradedClassFunction out;
  out.group = &g;
  for (const auto& c : g.classes()) {
    Poly sum;
    for (ElementId x : gamma) sum = poly_add(sum, f.values[g.class_of(g.multiply(c.representative, x))]);
    out.values.push_back(poly_div_exact(sum, Int(gamma.size())));
  }
  return out;
}

GradedClassFunction inversion_average(const GradedClassFunction& plain, const GradedClassFunction& twisted) {
  GradedClassFunction out;
  out.group = plain.group;
  for (std::size_t c = 0; c < plain.values.size(); ++c)
    out.values.push_back(poly_div_exact(poly_add(plain.values[c], twisted.values[c]), 2));
  return out;
}

GradedClassFunction projectivize(const GradedClassFunction& f) {
  GradedClassFunction out;
  out.group = f.group;
  for (const auto& p : f.values) out.values.push_back(projectivize(p));
  return out;
}

GradedClassFunction to_ordinary(const GradedClassFunction& compact, int dim) {
  GradedClassFunction out;
  out.group = compact.group;
  for (const auto& p : compact.values) out.values.push_back(poly_trim(compact_to_ordinary(p, dim)));
  return out;
}

GradedClassFunction blowup_combine(const GradedClassFunction& x, const GradedClassFunction& e) {
  if (x.group != e.group) fail("blowup_combine: different groups");
  GradedClassFunction out;
  out.group = x.group;
  for (std::size_t c = 0; c < x.values.size(); ++c)
    out.values.push_back(poly_sub(x.values[c], poly_mul(Poly{0, 1}, e.values[c])));
  return out;
}

}  // namespace weylcoh
