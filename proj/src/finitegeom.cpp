#include "weylcoh/finitegeom.hpp"

#include <functional>
#include <random>

namespace weylcoh {

namespace {

using PolyP = std::vector<Int>;  // over F_p, constant first

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& f, Int p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // f is monic
  int n = int(f.size()) - 1;
  for (int k = int(r.size()) - 1; k >= n; --k) {
    Int c = r[k];
    if (!c) continue;
    for (int j = 0; j <= n; ++j) r[k - n + j] = mod_floor(r[k - n + j] - c * f[j], p);
  }
  if (int(r.size()) > n) r.resize(n);
  trim(r);
  return r;
}

PolyP powmod(PolyP b, Int e, const PolyP& f, Int p) {
  PolyP r{1};
  while (e) {
    if (e & 1) r = mulmod(r, b, f, p);
    b = mulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

Int inv_p(Int a, Int p) {
  Int r = 1, b = mod_floor(a, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

PolyP polygcd(PolyP a, PolyP b, Int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    Int li = inv_p(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      Int c = a.back() * li % p;
      std::size_t sh = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] = mod_floor(a[sh + j] - c * b[j], p);
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool irreducible(const PolyP& f, Int p) {
  int n = int(f.size()) - 1;
  PolyP x{0, 1};
  PolyP xp = x;
  std::vector<PolyP> frob(n + 1);
  frob[0] = x;
  for (int k = 1; k <= n; ++k) {
    xp = powmod(xp, p, f, p);
    frob[k] = xp;
  }
  PolyP diff = frob[n];
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = mod_floor(diff[1] - 1, p);
  trim(diff);
  if (!diff.empty()) return false;
  for (Int r : prime_factors(n)) {
    PolyP d = frob[n / r];
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = mod_floor(d[1] - 1, p);
    trim(d);
    PolyP g = polygcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Int encode(const PolyP& a, Int p) {
  Int v = 0;
  for (int i = int(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

}  // namespace

FieldTower::FieldTower(Int q, int L) : q_(q), L_(L) {
  if (q < 2 || L < 1) fail("FieldTower: bad parameters");
  auto pf = prime_factors(q);
  if (pf.size() != 1) fail("FieldTower: q must be a prime power");
  p_ = pf[0];
  n_ = 0;
  for (Int t = q; t > 1; t /= p_) ++n_;
  N_ = n_ * L_;
  Q_ = 1;
  for (int i = 0; i < N_; ++i) {
    Q_ *= p_;
    if (Q_ > (Int(1) << 26)) fail("FieldTower: field too large");
  }
  m_ = std::uint32_t(Q_ - 1);
  zero_ = m_;
  half_ = p_ == 2 ? 0 : m_ / 2;

  std::mt19937_64 rng(0x5eed1234ULL + std::uint64_t(Q_));
  PolyP f;
  if (N_ == 1) {
    f = {0, 1};
  } else {
    for (;;) {
      f.assign(N_ + 1, 0);
      f[N_] = 1;
      for (int i = 0; i < N_; ++i) f[i] = Int(rng() % std::uint64_t(p_));
      if (f[0] != 0 && irreducible(f, p_)) break;
    }
  }
  auto qf = prime_factors(Q_ - 1);
  PolyP g;
  for (;;) {
    if (N_ == 1) {
      g = {p_ == 2 ? 1 : Int(1 + rng() % std::uint64_t(p_ - 1))};
    } else {
      g.assign(N_, 0);
      for (int i = 0; i < N_; ++i) g[i] = Int(rng() % std::uint64_t(p_));
      trim(g);
      if (g.empty()) continue;
    }
    bool prim = true;
    for (Int r : qf) {
      PolyP h = powmod(g, (Q_ - 1) / r, f, p_);
      if (h.size() == 1 && h[0] == 1) prim = false;
    }
    if (prim) break;
  }
  log_.assign(Q_, zero_);
  std::vector<Int> expv(m_);
  PolyP cur{1};
  for (std::uint32_t k = 0; k < m_; ++k) {
    Int v = encode(cur, p_);
    if (log_[v] != zero_) fail("FieldTower: element is not primitive");
    log_[v] = k;
    expv[k] = v;
    cur = mulmod(cur, g, f, p_);
  }
  exp_ = expv;
  zech_.assign(m_, zero_);
  for (std::uint32_t d = 0; d < m_; ++d) {
    Int v = expv[d];
    Int d0 = v % p_;
    Int w = v - d0 + (d0 + 1) % p_;
    zech_[d] = w == 0 ? zero_ : log_[w];
  }
}

FieldTower::Elt FieldTower::inv(Elt a) const {
  if (a == zero_) fail("FieldTower: inverse of zero");
  return a == 0 ? 0 : m_ - a;
}

FieldTower::Elt FieldTower::frobenius(Elt a, int k) const {
  if (a == zero_) return a;
  std::uint64_t e = 1;
  for (int i = 0; i < k; ++i) e = e * std::uint64_t(q_) % m_;
  return Elt(std::uint64_t(a) * e % m_);
}

bool FieldTower::in_subfield(Elt a, int c) const {
  if (L_ % c != 0) fail("in_subfield: degree does not divide");
  if (a == zero_) return true;
  Int qc = 1;
  for (int i = 0; i < c; ++i) qc *= q_;
  Int step = Int(m_) / (qc - 1);
  return Int(a) % step == 0;
}

std::vector<FieldTower::Elt> FieldTower::subfield_elements(int c) const {
  if (L_ % c != 0) fail("subfield_elements: degree does not divide");
  Int qc = 1;
  for (int i = 0; i < c; ++i) qc *= q_;
  Int step = Int(m_) / (qc - 1);
  std::vector<Elt> out{zero_};
  for (Int k = 0; k < Int(m_); k += step) out.push_back(Elt(k));
  return out;
}

FieldTower::Elt FieldTower::from_int(Int v) const {
  if (v < 0 || v >= Q_) fail("from_int: out of range");
  return log_[v];
}

ProjectivePoint normalize(const FieldTower& F, ProjectivePoint p) {
  for (int i = 0; i < 3; ++i)
    if (p[i] != F.zero()) {
      auto s = F.inv(p[i]);
      for (auto& x : p) x = F.mul(x, s);
      return p;
    }
  fail("normalize: zero vector");
}

std::vector<ProjectivePoint> projective_plane(const FieldTower& F, int c) {
  auto s = F.subfield_elements(c);
  std::vector<ProjectivePoint> out;
  for (auto y : s)
    for (auto z : s) out.push_back({F.one(), y, z});
  for (auto z : s) out.push_back({F.zero(), F.one(), z});
  out.push_back({F.zero(), F.zero(), F.one()});
  return out;
}

FieldTower::Elt det3(const FieldTower& F, const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
  auto m0 = F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1]));
  auto m1 = F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0]));
  auto m2 = F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0]));
  return F.add(F.sub(F.mul(a[0], m0), F.mul(a[1], m1)), F.mul(a[2], m2));
}

FieldTower::Elt conic_det(const FieldTower& F, const ProjectivePoint* pts) {
  using E = FieldTower::Elt;
  E m[6][6];
  for (int i = 0; i < 6; ++i) {
    const auto& x = pts[i];
    m[i][0] = F.mul(x[0], x[0]);
    m[i][1] = F.mul(x[1], x[1]);
    m[i][2] = F.mul(x[2], x[2]);
    m[i][3] = F.mul(x[0], x[1]);
    m[i][4] = F.mul(x[0], x[2]);
    m[i][5] = F.mul(x[1], x[2]);
  }
  E det = F.one();
  for (int c = 0; c < 6; ++c) {
    int piv = -1;
    for (int i = c; i < 6; ++i)
      if (m[i][c] != F.zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != c)
      for (int j = 0; j < 6; ++j) std::swap(m[c][j], m[piv][j]);
    det = F.mul(det, m[c][c]);
    E inv = F.inv(m[c][c]);
    for (int i = c + 1; i < 6; ++i) {
      if (m[i][c] == F.zero()) continue;
      E f = F.neg(F.mul(m[i][c], inv));
      for (int j = c; j < 6; ++j) m[i][j] = F.add(m[i][j], F.mul(f, m[c][j]));
    }
  }
  return det;
}

bool general_position(const FieldTower& F, const std::vector<ProjectivePoint>& pts, bool check_conic) {
  int n = int(pts.size());
  if (n > 6) fail("general_position: more than six points");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (normalize(F, pts[a]) == normalize(F, pts[b])) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (det3(F, pts[a], pts[b], pts[c]) == F.zero()) return false;
  if (check_conic && n >= 6) {
    std::vector<int> idx(6);
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
      if (depth == 6) {
        ProjectivePoint sel[6];
        for (int i = 0; i < 6; ++i) sel[i] = pts[idx[i]];
        return conic_det(F, sel) != F.zero();
      }
      for (int i = start; i < n; ++i) {
        idx[depth] = i;
        if (!rec(i + 1, depth + 1)) return false;
      }
      return true;
    };
    if (!rec(0, 0)) return false;
  }
  return true;
}

Int pgl3_order(Int q) {
  if (q < 2) fail("pgl3_order: q must be at least 2");
  return (q * q + q + 1) * (q * q * q - q) * (q * q * q - q * q);
}

}  // namespace weylcoh
