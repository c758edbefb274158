#include "weylcoh/pointcount.hpp"

#include "weylcoh/chartab.hpp"
#include "weylcoh/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace weylcoh {

std::vector<int> cycle_type_of(const std::vector<int>& sigma) {
  int n = int(sigma.size());
  std::vector<char> seen(n, 0);
  std::vector<int> t;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = sigma[x]) {
      if (x < 0 || x >= n) fail("cycle_type_of: not a permutation");
      seen[x] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<int> permutation_of_type(const std::vector<int>& type) {
  int n = std::accumulate(type.begin(), type.end(), 0);
  std::vector<int> s(n);
  int start = 0;
  for (int len : type) {
    for (int j = 0; j < len; ++j) s[start + j] = start + (j + 1) % len;
    start += len;
  }
  return s;
}

std::vector<std::vector<int>> count_table_types(int n) { return partitions(n); }

std::string cycle_notation(const std::vector<int>& type) {
  std::ostringstream os;
  int next = 1;
  for (int len : type) {
    if (len > 1) {
      os << '(';
      for (int j = 0; j < len; ++j) os << next + j;
      os << ')';
    }
    next += len;
  }
  std::string s = os.str();
  return s.empty() ? "id" : s;
}

namespace {

struct Slot {
  int c = 1;
  std::vector<int> positions;  // positions[j] receives F^j of the generator
  std::vector<FieldTower::Elt> sub;  // elements of F_{q^c}
  std::size_t plane_size() const { return sub.size() * sub.size() + sub.size() + 1; }
};

struct Enumerator {
  const FieldTower& F;
  const std::vector<Slot>& slots;
  int n;
  bool conic;
  std::vector<ProjectivePoint> pts;
  std::vector<int> placed;

  ProjectivePoint point(const Slot& s, std::size_t idx) const {
    std::size_t m = s.sub.size();
    if (idx < m * m) return {F.one(), s.sub[idx / m], s.sub[idx % m]};
    idx -= m * m;
    if (idx < m) return {F.zero(), F.one(), s.sub[idx]};
    return {F.zero(), F.zero(), F.one()};
  }

  bool add_point(int pos) {
    const auto& p = pts[pos];
    for (std::size_t a = 0; a < placed.size(); ++a)
      for (std::size_t b = a + 1; b < placed.size(); ++b)
        if (det3(F, pts[placed[a]], pts[placed[b]], p) == F.zero()) return false;
    placed.push_back(pos);
    return true;
  }

  Int run(std::size_t si, int stripe, int nstripes) {
    if (si == slots.size()) {
      if (conic && n == 6) {
        ProjectivePoint six[6];
        for (int i = 0; i < 6; ++i) six[i] = pts[i];
        if (conic_det(F, six) == F.zero()) return 0;
      }
      return 1;
    }
    const Slot& s = slots[si];
    Int total = 0;
    std::size_t size = s.plane_size();
    std::size_t base = placed.size();
    ProjectivePoint img[8];
    for (std::size_t idx = std::size_t(stripe); idx < size; idx += std::size_t(nstripes)) {
      img[0] = point(s, idx);
      bool minimal = true;
      for (int j = 1; j < s.c && minimal; ++j) {
        for (int k = 0; k < 3; ++k) img[j][k] = F.frobenius(img[j - 1][k]);
        if (!(img[0] < img[j])) minimal = false;
      }
      if (!minimal) continue;
      bool ok = true;
      for (int j = 0; j < s.c && ok; ++j) {
        pts[s.positions[j]] = img[j];
        ok = add_point(s.positions[j]);
      }
      if (ok) total += run(si + 1, 0, 1);
      placed.resize(base);
    }
    return total;
  }
};

}  // namespace

CountResult count_fixed(const TwistedCountTask& task, int threads) {
  const auto& sigma = task.sigma;
  int n = int(sigma.size());
  if (n < 4 || n > 6) fail("count_fixed: n must be 4, 5 or 6");
  CountResult res;
  res.cycle_type = cycle_type_of(sigma);
  res.q = task.q;
  Int q = task.q;
  int L = 1;
  for (int c : res.cycle_type) L = std::lcm(L, c);
  FieldTower F(q, L);

  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int x = i; !seen[x]; x = sigma[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    cycles.push_back(cyc);
  }
  std::vector<int> fixed;
  std::vector<Slot> slots;
  for (const auto& cyc : cycles)
    if (cyc.size() == 1) fixed.push_back(cyc[0]);
  for (const auto& cyc : cycles)
    if (cyc.size() > 1) {
      Slot s;
      s.c = int(cyc.size());
      s.positions = cyc;
      s.sub = F.subfield_elements(s.c);
      slots.push_back(s);
    }

  // Move up to four rational points to a standard frame; the weight counts the choices.
  const ProjectivePoint frame[4] = {{F.one(), F.zero(), F.zero()},
                                    {F.zero(), F.one(), F.zero()},
                                    {F.zero(), F.zero(), F.one()},
                                    {F.one(), F.one(), F.one()}};
  int k = std::min<int>(int(fixed.size()), 4);
  Int weight = 1;
  Int plane = q * q + q + 1;
  if (k >= 1) weight *= plane;
  if (k >= 2) weight *= q * q + q;
  if (k >= 3) weight *= q * q;
  if (k >= 4) weight = pgl3_order(q);
  std::vector<Slot> rational;
  for (std::size_t i = k; i < fixed.size(); ++i) {
    Slot s;
    s.c = 1;
    s.positions = {fixed[i]};
    s.sub = F.subfield_elements(1);
    rational.push_back(s);
  }
  rational.insert(rational.end(), slots.begin(), slots.end());
  Int mult = 1;
  for (const auto& s : rational) mult *= s.c;

  auto make = [&]() {
    Enumerator e{F, rational, n, task.check_conic, std::vector<ProjectivePoint>(n), {}};
    for (int i = 0; i < k; ++i) {
      e.pts[fixed[i]] = frame[i];
      if (!e.add_point(fixed[i])) fail("count_fixed: frame is degenerate");
    }
    return e;
  };

  Int completions = 0;
  if (rational.empty()) {
    auto e = make();
    completions = e.run(0, 0, 1);
  } else {
    threads = std::max(1, threads);
    std::vector<Int> partial(threads, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        auto e = make();
        partial[t] = e.run(0, t, threads);
      });
    for (auto& th : pool) th.join();
    completions = std::accumulate(partial.begin(), partial.end(), Int(0));
  }
  res.raw = checked_mul(checked_mul(weight, completions), mult);
  Int g = pgl3_order(q);
  if (res.raw % g != 0) fail("count_fixed: raw count not divisible by |PGL_3(F_q)|");
  res.orbits = res.raw / g;
  return res;
}

double count_cost(const std::vector<int>& sigma, Int q) {
  auto type = cycle_type_of(sigma);
  int fixed = int(std::count(type.begin(), type.end(), 1));
  double cost = 1;
  for (int c : type) {
    if (c == 1) continue;
    double qc = std::pow(double(q), c);
    cost *= (qc * qc + qc + 1) / c;
  }
  for (int i = 4; i < fixed; ++i) cost *= double(q * q + q + 1);
  return cost;
}

Poly interpolate(const std::vector<std::pair<Int, Int>>& samples, int degree, bool monic) {
  int unknowns = monic ? degree : degree + 1;
  if (int(samples.size()) < unknowns) fail("interpolate: not enough samples");
  // Newton divided differences over Q on the first `unknowns` samples.
  std::vector<Rational> xs, ys;
  for (int i = 0; i < unknowns; ++i) {
    Int x = samples[i].first;
    Int y = samples[i].second;
    if (monic) {
      Int xp = 1;
      for (int j = 0; j < degree; ++j) xp = checked_mul(xp, x);
      y -= xp;
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  std::vector<Rational> coef = ys;
  for (int j = 1; j < unknowns; ++j)
    for (int i = unknowns - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  // expand Newton form
  std::vector<Rational> poly(std::max(unknowns, 1), Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (int i = 0; i < unknowns; ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += coef[i] * basis[k];
    std::vector<Rational> nb(basis.size() + 1, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      nb[k + 1] += basis[k];
      nb[k] -= basis[k] * xs[i];
    }
    basis = nb;
  }
  Poly out(degree + 1, 0);
  for (int k = 0; k < unknowns && k <= degree; ++k) {
    if (!poly[k].is_integer()) fail("interpolate: non-integral coefficient");
    out[k] = poly[k].num();
  }
  if (monic) out[degree] += 1;
  out = poly_trim(out);
  for (const auto& [x, y] : samples)
    if (poly_eval(out, x) != y) fail("interpolate: sample at q=" + std::to_string(x) + " disagrees");
  return out;
}

std::vector<Int> counts_to_cohomology(const Poly& count, int dim) {
  std::vector<Int> out;
  for (int i = 0; i <= dim; ++i) out.push_back((i % 2 ? -1 : 1) * poly_coeff(count, dim - i));
  return out;
}

std::vector<CountPolynomial> count_polynomials(int n, const std::vector<Int>& qs, int threads) {
  int degree = 2 * (n - 4);
  std::vector<CountPolynomial> out;
  for (const auto& type : count_table_types(n)) {
    CountPolynomial cp;
    cp.cycle_type = type;
    std::vector<std::pair<Int, Int>> samples;
    for (Int q : qs) {
      auto r = count_fixed({permutation_of_type(type), q, true}, threads);
      cp.samples.push_back(r);
      samples.push_back({q, r.orbits});
    }
    cp.poly = interpolate(samples, degree, true);
    out.push_back(cp);
  }
  return out;
}

}  // namespace weylcoh
