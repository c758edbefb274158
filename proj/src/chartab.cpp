#include "weylcoh/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace weylcoh {

ClassFunction::ClassFunction(const WeylGroup& g, std::vector<Rational> v) : group(&g), values(std::move(v)) {
  if (int(values.size()) != g.num_classes()) fail("ClassFunction: wrong number of values");
}

ClassFunction ClassFunction::constant(const WeylGroup& g, Rational c) {
  return ClassFunction(g, std::vector<Rational>(g.num_classes(), c));
}

bool ClassFunction::is_integral() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& r) { return r.is_integer(); });
}

std::vector<Int> ClassFunction::integer_values() const {
  std::vector<Int> out;
  for (const auto& r : values) out.push_back(r.to_integer());
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (group != o.group) fail("ClassFunction: groups differ");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (group != o.group) fail("ClassFunction: groups differ");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) fail("ClassFunction: groups differ");
  ClassFunction c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] *= b.values[i];
  return c;
}

ClassFunction operator*(Rational s, const ClassFunction& a) {
  ClassFunction c = a;
  for (auto& v : c.values) v *= s;
  return c;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group || !a.group) fail("inner_product: groups differ");
  const auto& cls = a.group->classes();
  Rational s = 0;
  for (std::size_t k = 0; k < cls.size(); ++k) s += Rational(Int(cls[k].size)) * a.values[k] * b.values[k];
  return s / Rational(Int(a.group->order()));
}

namespace {

Int powmod(Int b, Int e, Int p) {
  Int r = 1;
  b = mod_floor(b, p);
  while (e) {
    if (e & 1) r = Int(__int128(r) * b % p);
    b = Int(__int128(b) * b % p);
    e >>= 1;
  }
  return r;
}

Int invmod(Int a, Int p) {
  a = mod_floor(a, p);
  if (!a) fail("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ModMat = std::vector<std::vector<Int>>;

// Characteristic polynomial det(xI - A) mod p via Hessenberg reduction; constant term first.
std::vector<Int> charpoly_mod(ModMat a, Int p) {
  int n = int(a.size());
  for (int m = 1; m + 1 < n + 1 && m < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (a[i][m - 1]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
    }
    Int inv = invmod(a[m][m - 1], p);
    for (int i = m + 1; i < n; ++i) {
      Int u = a[i][m - 1] * inv % p;
      if (!u) continue;
      for (int j = 0; j < n; ++j) a[i][j] = mod_floor(a[i][j] - u * a[m][j], p);
      for (int j = 0; j < n; ++j) a[j][m] = (a[j][m] + u * a[j][i]) % p;
    }
  }
  std::vector<std::vector<Int>> polys(n + 1);
  polys[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // (x - h_mm) p_{m-1}
    std::vector<Int> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (int i = 0; i < int(prev.size()); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = mod_floor(cur[i] - a[m - 1][m - 1] * prev[i], p);
    }
    Int t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = t * a[i][i - 1] % p;
      Int coef = t * a[i - 1][m - 1] % p;
      const auto& q = polys[i - 1];
      for (int j = 0; j < int(q.size()); ++j) cur[j] = mod_floor(cur[j] - coef * q[j], p);
    }
    polys[m] = cur;
  }
  return polys[n];
}

// Basis of the nullspace of A mod p, as coordinate vectors.
std::vector<std::vector<Int>> nullspace_mod(ModMat a, Int p) {
  int rows = int(a.size()), cols = rows ? int(a[0].size()) : 0;
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    Int inv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || !a[i][c]) continue;
      Int u = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = mod_floor(a[i][j] - u * a[r][j], p);
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<char> is_piv(cols, 0);
  for (int c : pivcol) is_piv[c] = 1;
  std::vector<std::vector<Int>> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Int> v(cols, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = mod_floor(-a[i][f], p);
    out.push_back(v);
  }
  return out;
}

// Reduced row echelon basis with recorded pivots.
struct Space {
  std::vector<std::vector<Int>> rows;
  std::vector<int> pivots;
};

Space echelon(std::vector<std::vector<Int>> vs, Int p) {
  Space s;
  int cols = vs.empty() ? 0 : int(vs[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < int(vs.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(vs.size()); ++i)
      if (vs[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(vs[piv], vs[r]);
    Int inv = invmod(vs[r][c], p);
    for (auto& x : vs[r]) x = x * inv % p;
    for (int i = 0; i < int(vs.size()); ++i) {
      if (i == r || !vs[i][c]) continue;
      Int u = vs[i][c];
      for (int j = 0; j < cols; ++j) vs[i][j] = mod_floor(vs[i][j] - u * vs[r][j], p);
    }
    s.pivots.push_back(c);
    ++r;
  }
  vs.resize(r);
  s.rows = std::move(vs);
  return s;
}

Int symmetric_lift(Int x, Int p) {
  x = mod_floor(x, p);
  return x > p / 2 ? x - p : x;
}

}  // namespace

CharacterTable CharacterTable::compute(const WeylGroup& g) {
  const auto& cls = g.classes();
  int n = int(cls.size());
  Int order = Int(g.order());
  Int e = g.exponent();
  Int bound = 2 * Int(std::sqrt(double(order))) + 2;
  Int p = e + 1;
  while (p <= bound || !is_prime(p)) p += e;

  std::vector<ElementId> inv(g.order());
  for (ElementId x = 0; x < g.order(); ++x) inv[x] = g.inverse(x);
  // a[j][i][k] = #{x in C_j : x^{-1} z in C_i} for fixed z in C_k
  std::vector<Int> a(std::size_t(n) * n * n, 0);
  auto at = [&](int j, int i, int k) -> Int& { return a[(std::size_t(j) * n + i) * n + k]; };
  for (int k = 0; k < n; ++k) {
    ElementId z = cls[k].representative;
    for (ElementId x = 0; x < g.order(); ++x) ++at(g.class_of(x), g.class_of(g.multiply(inv[x], z)), k);
  }

  std::vector<Space> done, work;
  {
    std::vector<std::vector<Int>> id(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    work.push_back(echelon(id, p));
  }
  for (int j = 0; j < n && !work.empty(); ++j) {
    std::vector<Space> next;
    for (auto& sp : work) {
      int d = int(sp.rows.size());
      if (d == 1) {
        done.push_back(sp);
        continue;
      }
      ModMat r(d, std::vector<Int>(d, 0));
      for (int c = 0; c < d; ++c) {
        std::vector<Int> img(n, 0);
        for (int i = 0; i < n; ++i) {
          Int s = 0;
          for (int k = 0; k < n; ++k) s = (s + at(j, i, k) % p * sp.rows[c][k]) % p;
          img[i] = s;
        }
        std::vector<Int> resid = img;
        for (int b = 0; b < d; ++b) {
          Int coef = img[sp.pivots[b]];
          r[b][c] = coef;
          for (int k = 0; k < n; ++k) resid[k] = mod_floor(resid[k] - coef * sp.rows[b][k], p);
        }
        for (Int x : resid)
          if (x) fail("character table: eigenspace is not invariant");
      }
      auto cp = charpoly_mod(r, p);
      int found = 0;
      for (Int lam = 0; lam < p; ++lam) {
        Int v = 0;
        for (int i = int(cp.size()) - 1; i >= 0; --i) v = (v * lam + cp[i]) % p;
        if (v) continue;
        ModMat shifted = r;
        for (int i = 0; i < d; ++i) shifted[i][i] = mod_floor(shifted[i][i] - lam, p);
        auto ns = nullspace_mod(shifted, p);
        std::vector<std::vector<Int>> amb;
        for (const auto& c : ns) {
          std::vector<Int> w(n, 0);
          for (int b = 0; b < d; ++b)
            for (int k = 0; k < n; ++k) w[k] = (w[k] + c[b] * sp.rows[b][k]) % p;
          amb.push_back(w);
        }
        found += int(amb.size());
        Space s2 = echelon(amb, p);
        if (s2.rows.size() == 1)
          done.push_back(s2);
        else
          next.push_back(s2);
      }
      if (found != d) fail("character table: class matrix not diagonalizable modulo p");
    }
    work = std::move(next);
  }
  if (!work.empty()) fail("character table: eigenspaces did not split");

  auto invcls = g.inverse_class_map();
  int idc = g.class_of(g.identity());
  Int root = Int(std::sqrt(double(order))) + 1;
  std::vector<Irrep> irreps;
  for (const auto& sp : done) {
    std::vector<Int> w = sp.rows[0];
    Int s0 = w[idc];
    if (!s0) fail("character table: eigenvector vanishes at the identity");
    Int sc = invmod(s0, p);
    for (auto& x : w) x = x * sc % p;
    Int s = 0;
    for (int k = 0; k < n; ++k)
      s = (s + w[k] * w[invcls[k]] % p * invmod(Int(cls[k].size) % p, p)) % p;
    Int target = (order % p) * invmod(s, p) % p;
    Int deg = -1;
    for (Int d = 1; d <= root; ++d)
      if (d * d % p == target) {
        deg = d;
        break;
      }
    if (deg < 0) fail("character table: no degree found");
    Irrep ir;
    for (int k = 0; k < n; ++k)
      ir.values.push_back(symmetric_lift(w[k] * deg % p * invmod(Int(cls[k].size) % p, p), p));
    irreps.push_back(ir);
  }
  std::sort(irreps.begin(), irreps.end(), [](const Irrep& x, const Irrep& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.values > y.values;
  });
  for (std::size_t i = 0; i < irreps.size(); ++i) irreps[i].label = "chi_" + std::to_string(i + 1);
  CharacterTable t;
  t.group_ = &g;
  t.irreps_ = std::move(irreps);
  if (!t.verify()) fail("character table: orthogonality check failed");
  return t;
}

CharacterTable CharacterTable::from_values(const WeylGroup& g, std::vector<Irrep> irreps) {
  CharacterTable t;
  t.group_ = &g;
  t.irreps_ = std::move(irreps);
  for (const auto& ir : t.irreps_)
    if (int(ir.values.size()) != g.num_classes()) fail("character table: wrong number of values");
  return t;
}

ClassFunction CharacterTable::character(int i) const {
  std::vector<Rational> v;
  for (Int x : irreps_.at(i).values) v.push_back(x);
  return ClassFunction(*group_, v);
}

int CharacterTable::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (irreps_[i].label == label) return i;
  return -1;
}

std::vector<std::string> CharacterTable::labels() const {
  std::vector<std::string> out;
  for (const auto& ir : irreps_) out.push_back(ir.label);
  return out;
}

bool CharacterTable::verify() const {
  Int sum = 0;
  for (int i = 0; i < size(); ++i) {
    sum += irreps_[i].degree() * irreps_[i].degree();
    for (int j = i; j < size(); ++j) {
      Rational ip = inner_product(character(i), character(j));
      if (ip != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return size() == group_->num_classes() && sum == Int(group_->order());
}

std::vector<Rational> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<Rational> out;
  for (int i = 0; i < size(); ++i) out.push_back(inner_product(f, character(i)));
  return out;
}

std::vector<Int> CharacterTable::multiplicities(const ClassFunction& f) const {
  std::vector<Int> out;
  for (const auto& r : decompose(f)) {
    if (!r.is_integer()) fail("multiplicities: class function is not a virtual character");
    out.push_back(r.num());
  }
  return out;
}

ClassFunction CharacterTable::from_multiplicities(const std::vector<Int>& m) const {
  if (int(m.size()) != size()) fail("from_multiplicities: wrong length");
  ClassFunction f = ClassFunction::constant(*group_, 0);
  for (int i = 0; i < size(); ++i)
    if (m[i]) f += Rational(m[i]) * character(i);
  return f;
}

void CharacterTable::label_by_symmetric_powers() {
  if (!group_->reflection_roots) fail("label_by_symmetric_powers: group has no reflection representation");
  ClassFunction refl = reflection_character(*group_);
  int kmax = int(group_->reflection_roots->positive_indices().size());
  auto sym = symmetric_powers(refl, kmax);
  std::map<std::string, int> seen;
  for (int i = 0; i < size(); ++i) {
    ClassFunction chi = character(i);
    int e = -1;
    for (int k = 0; k <= kmax; ++k)
      if (inner_product(chi, sym[k]) > Rational(0)) {
        e = k;
        break;
      }
    if (e < 0) fail("label_by_symmetric_powers: no symmetric power contains the character");
    irreps_[i].carter_d = int(irreps_[i].degree());
    irreps_[i].carter_e = e;
    irreps_[i].label = carter_label_string(irreps_[i].carter_d, e);
    ++seen[irreps_[i].label];
  }
  // ties get primes in table order
  std::map<std::string, int> used;
  for (auto& ir : irreps_)
    if (seen[ir.label] > 1) ir.label += std::string(used[ir.label]++, '\'');
  std::stable_sort(irreps_.begin(), irreps_.end(), [](const Irrep& x, const Irrep& y) {
    if (x.carter_d != y.carter_d) return x.carter_d < y.carter_d;
    return x.carter_e < y.carter_e;
  });
}

void CharacterTable::label_by_partitions(const std::vector<int>& points) {
  int n = int(points.size());
  std::vector<std::vector<int>> types;
  for (const auto& c : group_->classes()) types.push_back(cycle_type_on(group_->matrix(c.representative), points));
  std::vector<char> used(size(), 0);
  for (const auto& lam : partitions(n)) {
    std::vector<Int> vals;
    for (const auto& mu : types) vals.push_back(symmetric_group_character(lam, mu));
    bool matched = false;
    for (int i = 0; i < size(); ++i)
      if (!used[i] && irreps_[i].values == vals) {
        used[i] = 1;
        irreps_[i].partition = lam;
        irreps_[i].label = partition_label(lam);
        matched = true;
        break;
      }
    if (!matched) fail("label_by_partitions: no irreducible matches shape " + partition_label(lam));
  }
}

namespace {

Int mn_beta(std::vector<int> beta, const std::vector<int>& mu, std::size_t pos, std::map<std::pair<std::vector<int>, std::size_t>, Int>& memo) {
  if (pos == mu.size()) return 1;
  auto key = std::make_pair(beta, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = mu[pos];
  Int total = 0;
  std::vector<char> occ;
  int top = beta.empty() ? 0 : *std::max_element(beta.begin(), beta.end());
  occ.assign(top + 1, 0);
  for (int b : beta) occ[b] = 1;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int nb = b - r;
    if (nb < 0 || occ[nb]) continue;
    int between = 0;
    for (int x = nb + 1; x < b; ++x) between += occ[x];
    auto nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end());
    Int v = mn_beta(nbeta, mu, pos + 1, memo);
    total += (between % 2 ? -v : v);
  }
  memo[key] = total;
  return total;
}

}  // namespace

Int symmetric_group_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  int l = int(lambda.size());
  std::vector<int> beta;
  for (int i = 0; i < l; ++i) beta.push_back(lambda[i] + l - 1 - i);
  std::sort(beta.begin(), beta.end());
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != std::accumulate(mu.begin(), mu.end(), 0))
    fail("symmetric_group_character: sizes differ");
  std::map<std::pair<std::vector<int>, std::size_t>, Int> memo;
  return mn_beta(beta, mu, 0, memo);
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (!left) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_label(const std::vector<int>& lambda) {
  std::ostringstream os;
  os << "s_{";
  bool first = true;
  for (std::size_t i = 0; i < lambda.size();) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    if (!first) os << ',';
    os << lambda[i];
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  os << '}';
  return os.str();
}

std::string carter_label_string(int d, int e) { return "phi_{" + std::to_string(d) + "}^{" + std::to_string(e) + "}"; }

std::vector<ClassFunction> symmetric_powers(const ClassFunction& chi, int kmax) {
  const WeylGroup& g = *chi.group;
  std::vector<std::vector<int>> pm(kmax + 1);
  for (int i = 1; i <= kmax; ++i) pm[i] = g.power_map(i);
  std::vector<ClassFunction> h;
  h.push_back(ClassFunction::constant(g, 1));
  for (int k = 1; k <= kmax; ++k) {
    ClassFunction acc = ClassFunction::constant(g, 0);
    for (int i = 1; i <= k; ++i) {
      ClassFunction pi = chi;
      for (int c = 0; c < g.num_classes(); ++c) pi.values[c] = chi.values[pm[i][c]];
      acc += pi * h[k - i];
    }
    h.push_back(Rational(1, k) * acc);
  }
  return h;
}

ClassFunction reflection_character(const WeylGroup& g) {
  std::vector<Rational> v;
  for (const auto& c : g.classes()) v.push_back(g.reflection_trace(c.representative));
  return ClassFunction(g, v);
}

std::pair<int, int> carter_label(const ClassFunction& irreducible, const ClassFunction& reflection, int kmax) {
  auto sym = symmetric_powers(reflection, kmax);
  for (int k = 0; k <= kmax; ++k)
    if (inner_product(irreducible, sym[k]) > Rational(0))
      return {int(irreducible.values[irreducible.group->class_of(irreducible.group->identity())].to_integer()), k};
  fail("carter_label: not found within the bound");
}

ClassFunction restrict_function(const ClassFunction& f, const SubgroupEmbedding& e) {
  if (f.group != e.target) fail("restrict: function lives on another group");
  std::vector<Rational> v;
  for (int c : e.fusion) v.push_back(f.values[c]);
  return ClassFunction(*e.source, v);
}

ClassFunction induce_function(const ClassFunction& f, const SubgroupEmbedding& e) {
  if (f.group != e.source) fail("induce: function lives on another group");
  const auto& gc = e.target->classes();
  const auto& hc = e.source->classes();
  std::vector<Rational> v(gc.size(), Rational(0));
  for (std::size_t c = 0; c < hc.size(); ++c) v[e.fusion[c]] += Rational(Int(hc[c].size)) * f.values[c];
  for (std::size_t k = 0; k < gc.size(); ++k)
    v[k] = v[k] * Rational(Int(e.target->order()), Int(gc[k].size) * Int(e.source->order()));
  return ClassFunction(*e.target, v);
}

ClassFunction GradedClassFunction::coefficient(int k) const {
  std::vector<Rational> v;
  for (const auto& p : values) v.push_back(poly_coeff(p, k));
  return ClassFunction(*group, v);
}

int GradedClassFunction::degree() const {
  int d = -1;
  for (const auto& p : values) d = std::max(d, poly_degree(p));
  return d;
}

namespace {

GradedClassFunction assemble(const WeylGroup& g, const std::vector<ClassFunction>& coeffs) {
  GradedClassFunction out;
  out.group = &g;
  out.values.assign(g.num_classes(), Poly{});
  for (int c = 0; c < g.num_classes(); ++c) {
    Poly p;
    for (const auto& cf : coeffs) p.push_back(cf.values[c].to_integer());
    out.values[c] = poly_trim(p);
  }
  return out;
}

}  // namespace

GradedClassFunction restrict_function(const GradedClassFunction& f, const SubgroupEmbedding& e) {
  std::vector<ClassFunction> cs;
  for (int k = 0; k <= f.degree(); ++k) cs.push_back(restrict_function(f.coefficient(k), e));
  return assemble(*e.source, cs);
}

GradedClassFunction induce_function(const GradedClassFunction& f, const SubgroupEmbedding& e) {
  std::vector<ClassFunction> cs;
  for (int k = 0; k <= f.degree(); ++k) cs.push_back(induce_function(f.coefficient(k), e));
  return assemble(*e.target, cs);
}

std::vector<Int> CohomologyTable::dimensions() const {
  std::vector<Int> out;
  for (const auto& row : multiplicities) {
    Int d = 0;
    for (int i = 0; i < table->size(); ++i) d += row[i] * table->irreps()[i].degree();
    out.push_back(d);
  }
  return out;
}

ClassFunction CohomologyTable::character(int degree) const { return table->from_multiplicities(multiplicities.at(degree)); }

}  // namespace weylcoh
