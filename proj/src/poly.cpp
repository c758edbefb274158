#include "weylcoh/poly.hpp"

#include <cstdlib>
#include <sstream>

namespace weylcoh {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, -1)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, Int s) {
  Poly r(a);
  for (auto& x : r) x = checked_mul(x, s);
  return poly_trim(std::move(r));
}

Poly poly_div_exact(const Poly& a, Int d) {
  if (d == 0) fail("poly_div_exact: division by zero");
  Poly r(a);
  for (auto& x : r) {
    if (x % d != 0) fail("poly_div_exact: coefficient not divisible");
    x /= d;
  }
  return poly_trim(std::move(r));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly bb = poly_trim(b);
  if (bb.empty()) fail("poly_div_exact: division by zero polynomial");
  Int lead = bb.back();
  if (lead != 1 && lead != -1) fail("poly_div_exact: divisor must have unit leading coefficient");
  Poly rem = poly_trim(a);
  if (rem.size() < bb.size()) {
    if (!rem.empty()) fail("poly_div_exact: nonzero remainder");
    return {};
  }
  Poly quo(rem.size() - bb.size() + 1, 0);
  for (int k = int(quo.size()) - 1; k >= 0; --k) {
    Int c = rem[k + bb.size() - 1] * lead;
    quo[k] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(c, bb[j]));
  }
  for (Int x : rem)
    if (x) fail("poly_div_exact: nonzero remainder");
  return poly_trim(std::move(quo));
}

Int poly_coeff(const Poly& p, int k) { return (k >= 0 && k < int(p.size())) ? p[k] : 0; }

Int poly_eval(const Poly& p, Int x) {
  Int r = 0;
  for (int i = int(p.size()) - 1; i >= 0; --i) r = checked_add(checked_mul(r, x), p[i]);
  return r;
}

int poly_degree(const Poly& p) { return int(poly_trim(p).size()) - 1; }

std::string poly_to_string(const Poly& p0, const std::string& var) {
  Poly p = poly_trim(p0);
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = int(p.size()) - 1; k >= 0; --k) {
    Int c = p[k];
    if (!c) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = std::abs(c);
    if (a != 1 || k == 0) os << a;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

}  // namespace weylcoh
