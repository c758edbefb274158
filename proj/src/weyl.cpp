#include "weylcoh/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace weylcoh {

Int MarkedLattice::product(const Vec& a, const Vec& b) const { return dot(a, gram * b); }

MarkedLattice del_pezzo_lattice(int degree) {
  if (degree < 1 || degree > 8) fail("del_pezzo_lattice: degree must be in 1..8");
  int r = 9 - degree;
  MarkedLattice lat;
  lat.gram = IntMatrix(r + 1, r + 1);
  lat.gram(0, 0) = 1;
  lat.labels.push_back("l");
  Vec k(r + 1, 1);
  k[0] = -3;
  for (int i = 1; i <= r; ++i) {
    lat.gram(i, i) = -1;
    lat.labels.push_back("e" + std::to_string(i));
  }
  lat.canonical_class = k;
  return lat;
}

MarkedLattice negative_lattice(int n) {
  MarkedLattice lat;
  lat.gram = -IntMatrix::identity(n);
  for (int i = 1; i <= n; ++i) lat.labels.push_back("x" + std::to_string(i));
  return lat;
}

int RootSystem::index_of(const Vec& v) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), v);
  if (it == roots.end() || *it != v) return -1;
  return int(it - roots.begin());
}

int RootSystem::negative_of(int i) const {
  Vec v = roots[i];
  for (auto& x : v) x = -x;
  return index_of(v);
}

std::vector<int> RootSystem::positive_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (positive[i]) out.push_back(i);
  return out;
}

std::vector<Vec> RootSystem::positive_roots() const {
  std::vector<Vec> out;
  for (int i : positive_indices()) out.push_back(roots[i]);
  return out;
}

IntMatrix RootSystem::reflection(int root) const {
  if (root < 0 || root >= size()) fail("reflection: not a root of the system");
  const Vec& a = roots[root];
  Int n = lattice.product(a, a);
  Vec ga = lattice.gram * a;
  int dim = lattice.rank();
  IntMatrix m = IntMatrix::identity(dim);
  for (int j = 0; j < dim; ++j) {
    Int num = 2 * ga[j];
    if (num % n != 0) fail("reflection: not integral on the lattice");
    Int c = num / n;
    for (int i = 0; i < dim; ++i) m(i, j) -= c * a[i];
  }
  return m;
}

namespace {

IntMatrix rows_of(const std::vector<Vec>& vs, int cols) { return IntMatrix::from_rows(vs, cols); }

// Positive iff the coefficient vector in the simple basis is lexicographically positive
// from the top index down; agrees with "all coefficients >= 0" on genuine roots.
bool height_positive(const IntMatrix& simple_rows, const Vec& v) {
  auto c = lattice_coordinates(simple_rows, v);
  if (!c) fail("root outside the span of the simple roots");
  for (int i = int(c->size()) - 1; i >= 0; --i) {
    if ((*c)[i] > 0) return true;
    if ((*c)[i] < 0) return false;
  }
  fail("zero vector has no sign");
}

std::vector<int> indecomposable(const RootSystem& rs) {
  std::set<Vec> sums;
  auto pos = rs.positive_indices();
  for (int a : pos)
    for (int b : pos) {
      Vec s = rs.roots[a];
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += rs.roots[b][i];
      sums.insert(s);
    }
  std::vector<int> out;
  for (int a : pos)
    if (!sums.count(rs.roots[a])) out.push_back(a);
  return out;
}

bool dynkin_connected(const RootSystem& rs) {
  int n = rs.rank();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && rs.lattice.product(rs.roots[rs.simple[i]], rs.roots[rs.simple[j]]) != 0) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

void check_type(const RootSystem& rs, const std::string& type) {
  if (type.empty()) return;
  char family = type[0];
  int n = std::stoi(type.substr(1));
  std::size_t expect = 0;
  switch (family) {
    case 'A': expect = std::size_t(n) * (n + 1); break;
    case 'D': expect = std::size_t(2) * n * (n - 1); break;
    case 'E': expect = n == 6 ? 72 : n == 7 ? 126 : 240; break;
    case 'F': expect = 48; break;
    case 'B':
    case 'C': expect = std::size_t(2) * n * n; break;
    case 'G': expect = 12; break;
    default: fail("unknown root system type " + type);
  }
  if (rs.roots.size() != expect || rs.rank() != n || !dynkin_connected(rs))
    fail("root system does not have type " + type + " (" + std::to_string(rs.roots.size()) + " roots, rank " +
         std::to_string(rs.rank()) + ")");
}

void finish_sorted(RootSystem& rs) {
  std::sort(rs.roots.begin(), rs.roots.end());
  rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
}

}  // namespace

RootSystem del_pezzo_roots(int degree) {
  if (degree < 3 || degree > 5) fail("del_pezzo_roots: supported degrees are 3, 4, 5");
  int r = 9 - degree;
  RootSystem rs;
  rs.lattice = del_pezzo_lattice(degree);
  rs.type = degree == 3 ? "E6" : degree == 4 ? "D5" : "A4";
  int n = r + 1;
  auto e = [&](int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j) {
        Vec v = e(i);
        v[j] = -1;
        rs.roots.push_back(v);
      }
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k) {
        Vec v(n, 0);
        v[0] = 1;
        v[i] = v[j] = v[k] = -1;
        rs.roots.push_back(v);
        for (auto& x : v) x = -x;
        rs.roots.push_back(v);
      }
  if (r >= 6) {
    Vec v(n, -1);
    v[0] = 2;
    rs.roots.push_back(v);
    for (auto& x : v) x = -x;
    rs.roots.push_back(v);
  }
  finish_sorted(rs);
  std::vector<Vec> simple;
  {
    Vec a(n, 0);
    a[0] = 1;
    a[1] = a[2] = a[3] = -1;
    simple.push_back(a);
    for (int i = 1; i < r; ++i) {
      Vec b = e(i);
      b[i + 1] = -1;
      simple.push_back(b);
    }
  }
  IntMatrix srows = rows_of(simple, n);
  for (const auto& v : rs.roots) rs.positive.push_back(height_positive(srows, v));
  for (const auto& s : simple) rs.simple.push_back(rs.index_of(s));
  rs.complement.push_back(*rs.lattice.canonical_class);
  check_type(rs, rs.type);
  return rs;
}

std::vector<Vec> standard_tritangent_trio() {
  return {{2, -1, -1, -1, -1, -1, 0}, {1, 0, 0, 0, 0, -1, -1}, {0, 0, 0, 0, 0, 1, 0}};
}

RootSystem root_system(const std::string& type) {
  if (type == "E6") return del_pezzo_roots(3);
  if (type == "F4") return orthogonal_subsystem(del_pezzo_roots(3), standard_tritangent_trio(), "F4", true);
  if (type.size() < 2 || (type[0] != 'A' && type[0] != 'D')) fail("root_system: unsupported type " + type);
  int n = std::stoi(type.substr(1));
  RootSystem rs;
  rs.type = type;
  std::vector<Vec> simple;
  if (type[0] == 'A') {
    if (n < 1 || n > 8) fail("root_system: rank out of range");
    int dim = n + 1;
    rs.lattice = negative_lattice(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != j) {
          Vec v(dim, 0);
          v[i] = 1;
          v[j] = -1;
          rs.roots.push_back(v);
        }
    for (int i = 0; i < n; ++i) {
      Vec v(dim, 0);
      v[i] = 1;
      v[i + 1] = -1;
      simple.push_back(v);
    }
    rs.complement.push_back(Vec(dim, 1));
  } else {
    if (n < 3 || n > 8) fail("root_system: rank out of range");
    rs.lattice = negative_lattice(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Vec v(n, 0);
            v[i] = si;
            v[j] = sj;
            rs.roots.push_back(v);
          }
    for (int i = 0; i + 1 < n; ++i) {
      Vec v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      simple.push_back(v);
    }
    Vec last(n, 0);
    last[n - 2] = last[n - 1] = 1;
    simple.push_back(last);
  }
  finish_sorted(rs);
  IntMatrix srows = rows_of(simple, rs.lattice.rank());
  for (const auto& v : rs.roots) rs.positive.push_back(height_positive(srows, v));
  for (const auto& s : simple) rs.simple.push_back(rs.index_of(s));
  check_type(rs, type == "D3" ? "A3" : type);
  return rs;
}

IntMatrix orthogonal_complement(const MarkedLattice& lat, const std::vector<Vec>& classes) {
  if (classes.empty()) return IntMatrix::identity(lat.rank());
  IntMatrix a(0, lat.rank());
  for (const auto& c : classes) a.append_row(lat.gram * c);
  return kernel(a);
}

RootSystem orthogonal_subsystem(const RootSystem& ambient, const std::vector<Vec>& classes,
                                const std::string& expected_type, bool add_long) {
  RootSystem rs;
  rs.lattice = ambient.lattice;
  rs.type = expected_type;
  std::vector<Vec> shortr;
  for (const auto& r : ambient.roots) {
    bool ok = true;
    for (const auto& c : classes)
      if (ambient.lattice.product(r, c) != 0) ok = false;
    if (ok) shortr.push_back(r);
  }
  rs.roots = shortr;
  if (add_long) {
    for (std::size_t a = 0; a < shortr.size(); ++a)
      for (std::size_t b = a + 1; b < shortr.size(); ++b) {
        if (ambient.lattice.product(shortr[a], shortr[b]) != 0) continue;
        Vec s = shortr[a];
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += shortr[b][i];
        if (ambient.lattice.product(s, s) == 2 * ambient.lattice.product(shortr[a], shortr[a])) rs.roots.push_back(s);
      }
  }
  finish_sorted(rs);
  std::vector<Vec> asimple;
  for (int i : ambient.simple) asimple.push_back(ambient.roots[i]);
  IntMatrix srows = rows_of(asimple, ambient.lattice.rank());
  for (const auto& v : rs.roots) rs.positive.push_back(height_positive(srows, v));
  rs.simple = indecomposable(rs);
  IntMatrix span = rows_of(rs.positive_roots(), rs.lattice.rank());
  for (const auto& c : ambient.complement) span.append_row(c);
  std::vector<Vec> spanning;
  for (int i = 0; i < span.rows; ++i) spanning.push_back(span.row(i));
  IntMatrix comp = orthogonal_complement(rs.lattice, spanning);
  for (const auto& c : ambient.complement) rs.complement.push_back(c);
  for (int i = 0; i < comp.rows; ++i) rs.complement.push_back(comp.row(i));
  check_type(rs, expected_type);
  return rs;
}

IntMatrix restrict_to_sublattice(const IntMatrix& m, const IntMatrix& basis) {
  int s = basis.rows;
  IntMatrix r(s, s);
  for (int j = 0; j < s; ++j) {
    Vec w = m * basis.row(j);
    auto c = lattice_coordinates(basis, w);
    if (!c) fail("restrict_to_sublattice: sublattice is not stable");
    for (int i = 0; i < s; ++i) r(i, j) = (*c)[i];
  }
  return r;
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> acting, const std::vector<IntMatrix>& generators,
                     std::string name, std::size_t max_order)
    : acting_(std::move(acting)), name_(std::move(name)) {
  const RootSystem& rs = *acting_;
  n_roots_ = rs.size();
  if (n_roots_ > 255) fail("WeylGroup: too many roots");
  key_roots_ = rs.simple;
  if (key_roots_.size() > 8) fail("WeylGroup: rank above 8 unsupported");
  int dim = rs.lattice.rank();
  basis_ = IntMatrix(dim, dim);
  int col = 0;
  for (int s : rs.simple) {
    for (int i = 0; i < dim; ++i) basis_(i, col) = rs.roots[s][i];
    ++col;
  }
  for (const auto& c : rs.complement) {
    if (col >= dim) fail("WeylGroup: too many complement vectors");
    for (int i = 0; i < dim; ++i) basis_(i, col) = c[i];
    ++col;
  }
  if (col != dim || determinant(basis_) == 0) fail("WeylGroup: simple roots and complement do not span");

  std::vector<std::vector<int>> gen_perms;
  for (const auto& g : generators) {
    if (g.rows != dim || g.cols != dim) fail("WeylGroup: generator has wrong shape");
    if (!(g.transpose() * rs.lattice.gram * g == rs.lattice.gram)) fail("WeylGroup: generator is not an isometry");
    for (const auto& c : rs.complement)
      if (g * c != c) fail("WeylGroup: generator moves the fixed complement");
    gen_perms.push_back(matrix_to_perm(g));
  }

  perm_.resize(n_roots_);
  std::iota(perm_.begin(), perm_.end(), 0);
  index_[key_of_perm(perm_.data())] = 0;
  n_elements_ = 1;
  std::vector<std::uint8_t> tmp(n_roots_);
  for (std::size_t e = 0; e < n_elements_; ++e) {
    for (const auto& s : gen_perms) {
      const std::uint8_t* p = &perm_[e * n_roots_];
      for (int r = 0; r < n_roots_; ++r) tmp[r] = std::uint8_t(s[p[r]]);
      auto key = key_of_perm(tmp.data());
      if (index_.count(key)) continue;
      if (n_elements_ >= max_order) fail("WeylGroup: order bound exceeded");
      index_[key] = ElementId(n_elements_);
      perm_.insert(perm_.end(), tmp.begin(), tmp.end());
      ++n_elements_;
    }
  }
  for (const auto& s : gen_perms) generators_.push_back(*find_perm(s));
  compute_classes();
}

std::uint64_t WeylGroup::key_of_perm(const std::uint8_t* p) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < key_roots_.size(); ++i) k |= std::uint64_t(p[key_roots_[i]]) << (8 * i);
  return k;
}

std::uint64_t WeylGroup::key_of_product(ElementId a, ElementId b) const {
  const std::uint8_t* pa = &perm_[std::size_t(a) * n_roots_];
  const std::uint8_t* pb = &perm_[std::size_t(b) * n_roots_];
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < key_roots_.size(); ++i) k |= std::uint64_t(pa[pb[key_roots_[i]]]) << (8 * i);
  return k;
}

std::vector<int> WeylGroup::matrix_to_perm(const IntMatrix& m) const {
  std::vector<int> p(n_roots_);
  for (int r = 0; r < n_roots_; ++r) {
    int j = acting_->index_of(m * acting_->roots[r]);
    if (j < 0) fail("WeylGroup: matrix does not permute the roots");
    p[r] = j;
  }
  return p;
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const { return index_.at(key_of_product(a, b)); }

ElementId WeylGroup::inverse(ElementId a) const {
  const std::uint8_t* p = &perm_[std::size_t(a) * n_roots_];
  std::vector<std::uint8_t> inv(n_roots_);
  for (int r = 0; r < n_roots_; ++r) inv[p[r]] = std::uint8_t(r);
  return index_.at(key_of_perm(inv.data()));
}

ElementId WeylGroup::power(ElementId a, Int k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  ElementId r = identity_, base = a;
  while (k) {
    if (k & 1) r = multiply(r, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return r;
}

int WeylGroup::element_order(ElementId a) const {
  int n = 1;
  ElementId x = a;
  while (x != identity_) {
    x = multiply(x, a);
    ++n;
  }
  return n;
}

std::vector<int> WeylGroup::perm(ElementId g) const {
  return std::vector<int>(perm_.begin() + std::size_t(g) * n_roots_, perm_.begin() + std::size_t(g + 1) * n_roots_);
}

IntMatrix WeylGroup::matrix(ElementId g) const {
  int dim = basis_.rows;
  IntMatrix y = basis_;
  const auto& rs = *acting_;
  for (std::size_t c = 0; c < rs.simple.size(); ++c) {
    const Vec& v = rs.roots[image(g, rs.simple[c])];
    for (int i = 0; i < dim; ++i) y(i, int(c)) = v[i];
  }
  return solve_right_integral(y, basis_);
}

std::optional<ElementId> WeylGroup::find_perm(const std::vector<int>& p) const {
  if (int(p.size()) != n_roots_) return std::nullopt;
  std::vector<std::uint8_t> q(p.begin(), p.end());
  auto it = index_.find(key_of_perm(q.data()));
  if (it == index_.end()) return std::nullopt;
  for (int r = 0; r < n_roots_; ++r)
    if (image(it->second, r) != p[r]) return std::nullopt;
  return it->second;
}

std::optional<ElementId> WeylGroup::find(const IntMatrix& m) const {
  std::vector<int> p;
  try {
    p = matrix_to_perm(m);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  auto id = find_perm(p);
  if (!id || !(matrix(*id) == m)) return std::nullopt;
  return id;
}

void WeylGroup::compute_classes() {
  class_of_.assign(n_elements_, -1);
  std::vector<ElementId> gen_inv;
  for (auto s : generators_) gen_inv.push_back(inverse(s));
  struct Raw {
    std::vector<ElementId> members;
  };
  std::vector<Raw> raw;
  for (std::size_t x = 0; x < n_elements_; ++x) {
    if (class_of_[x] >= 0) continue;
    int c = int(raw.size());
    raw.push_back({});
    auto& mem = raw.back().members;
    mem.push_back(ElementId(x));
    class_of_[x] = c;
    for (std::size_t i = 0; i < mem.size(); ++i) {
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        ElementId z = multiply(multiply(generators_[s], mem[i]), gen_inv[s]);
        if (class_of_[z] < 0) {
          class_of_[z] = c;
          mem.push_back(z);
        }
      }
    }
  }
  std::vector<ConjugacyClass> cls;
  for (const auto& r : raw) {
    ConjugacyClass cc;
    cc.representative = *std::min_element(r.members.begin(), r.members.end());
    cc.size = r.members.size();
    cc.order = element_order(cc.representative);
    IntMatrix m = matrix(cc.representative);
    cc.trace = m.trace();
    cc.charpoly = characteristic_polynomial(m);
    cls.push_back(cc);
  }
  std::vector<int> perm(cls.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto &x = cls[a], &y = cls[b];
    if (x.order != y.order) return x.order < y.order;
    if (x.size != y.size) return x.size < y.size;
    if (x.trace != y.trace) return x.trace > y.trace;
    if (x.charpoly != y.charpoly) return x.charpoly < y.charpoly;
    return x.representative < y.representative;
  });
  std::vector<int> newpos(cls.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    newpos[perm[i]] = int(i);
    classes_.push_back(cls[perm[i]]);
  }
  for (auto& c : class_of_) c = newpos[c];
}

std::vector<int> WeylGroup::power_map(Int k) const {
  std::vector<int> out;
  for (const auto& c : classes_) out.push_back(class_of(power(c.representative, k)));
  return out;
}

std::vector<int> WeylGroup::inverse_class_map() const { return power_map(-1); }

Int WeylGroup::exponent() const {
  Int e = 1;
  for (const auto& c : classes_) e = e / gcd(e, c.order) * c.order;
  return e;
}

Int WeylGroup::reflection_trace(ElementId g) const {
  if (!reflection_roots) fail("reflection_trace: group has no reflection representation");
  IntMatrix span = IntMatrix::from_rows(reflection_roots->positive_roots(), acting_->lattice.rank());
  IntMatrix basis = saturate(span);
  return restrict_to_sublattice(matrix(g), basis).trace();
}

WeylGroup weyl_group(std::shared_ptr<const RootSystem> rs, std::string name) {
  std::vector<IntMatrix> gens;
  for (int s : rs->simple) gens.push_back(rs->reflection(s));
  if (name.empty()) name = "W(" + rs->type + ")";
  WeylGroup w(rs, gens, name);
  w.reflection_roots = rs;
  return w;
}

WeylGroup subgroup(const WeylGroup& g, const std::vector<ElementId>& gens, std::string name) {
  std::vector<IntMatrix> mats;
  for (auto x : gens) mats.push_back(g.matrix(x));
  return WeylGroup(g.acting_ptr(), mats, std::move(name));
}

WeylGroup stabilizer(const WeylGroup& g, const std::function<bool(ElementId)>& pred, std::string name) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x)
    if (pred(x)) members.push_back(x);
  if (members.empty() || !pred(g.identity())) fail("stabilizer: predicate does not define a subgroup");
  std::vector<ElementId> gens;
  std::vector<char> inside(g.order(), 0);
  std::vector<ElementId> closure{g.identity()};
  inside[g.identity()] = 1;
  for (ElementId cand : members) {
    if (closure.size() == members.size()) break;
    if (inside[cand]) continue;
    gens.push_back(cand);
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (auto s : gens) {
        ElementId z = g.multiply(s, closure[i]);
        if (!inside[z]) {
          inside[z] = 1;
          closure.push_back(z);
        }
      }
  }
  if (closure.size() != members.size()) fail("stabilizer: predicate does not define a subgroup");
  for (auto x : closure)
    if (!pred(x)) fail("stabilizer: predicate does not define a subgroup");
  return subgroup(g, gens, std::move(name));
}

WeylGroup reflection_subgroup(const WeylGroup& g, std::shared_ptr<const RootSystem> sub, std::string name) {
  std::vector<IntMatrix> gens;
  for (int s : sub->simple) gens.push_back(g.acting().reflection(g.acting().index_of(sub->roots[s])));
  WeylGroup w(g.acting_ptr(), gens, std::move(name));
  w.reflection_roots = std::move(sub);
  return w;
}

WeylGroup symmetric_subgroup(const WeylGroup& g, const std::vector<int>& points, std::string name) {
  const auto& rs = g.acting();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Vec v(rs.lattice.rank(), 0);
    v[points[i]] = 1;
    v[points[i + 1]] = -1;
    int idx = rs.index_of(v);
    if (idx < 0) fail("symmetric_subgroup: transposition is not a reflection of the group");
    gens.push_back(rs.reflection(idx));
  }
  return WeylGroup(g.acting_ptr(), gens, std::move(name));
}

IntMatrix ExtendedElement::composed(const WeylGroup& g) const {
  IntMatrix m = g.matrix(w);
  return twist == Twist::minus_identity ? -m : m;
}

SubgroupEmbedding embed(const WeylGroup& source, const WeylGroup& target) {
  if (source.acting().roots != target.acting().roots) fail("embed: groups act on different root lists");
  SubgroupEmbedding e{&source, &target, {}};
  for (const auto& c : source.classes()) {
    auto id = target.find_perm(source.perm(c.representative));
    if (!id) fail("embed: source element is not in the target group");
    e.fusion.push_back(target.class_of(*id));
  }
  if (target.order() % source.order() != 0) fail("embed: order does not divide");
  return e;
}

SubgroupEmbedding embed(const WeylGroup& source, const WeylGroup& target,
                        const std::function<IntMatrix(const IntMatrix&)>& lift) {
  for (auto a : source.generators())
    for (auto b : source.generators())
      if (!(lift(source.matrix(a)) * lift(source.matrix(b)) == lift(source.matrix(source.multiply(a, b)))))
        fail("embed: lift is not multiplicative");
  SubgroupEmbedding e{&source, &target, {}};
  for (const auto& c : source.classes()) {
    auto id = target.find(lift(source.matrix(c.representative)));
    if (!id) fail("embed: lifted element is not in the target group");
    e.fusion.push_back(target.class_of(*id));
  }
  if (target.order() % source.order() != 0) fail("embed: order does not divide");
  return e;
}

std::vector<int> cycle_type_on(const IntMatrix& m, const std::vector<int>& points) {
  int n = int(points.size());
  std::vector<int> img(n, -1);
  for (int a = 0; a < n; ++a) {
    Vec c = m.col(points[a]);
    for (int b = 0; b < n; ++b) {
      Vec e(m.rows, 0);
      e[points[b]] = 1;
      if (c == e) img[a] = b;
    }
    if (img[a] < 0) fail("cycle_type_on: matrix does not permute the given points");
  }
  std::vector<int> type;
  std::vector<char> seen(n, 0);
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    int len = 0;
    for (int x = a; !seen[x]; x = img[x]) {
      seen[x] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace weylcoh
