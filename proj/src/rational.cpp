#include "weylcoh/rational.hpp"

namespace weylcoh {

namespace {

Int narrow(__int128 x) {
  if (x > __int128(INT64_MAX) || x < __int128(INT64_MIN)) fail("rational overflow");
  return Int(x);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

static Rational make(__int128 n, __int128 d) {
  if (d == 0) fail("rational: zero denominator");
  if (d < 0) n = -n, d = -d;
  __int128 g = gcd128(n, d);
  if (g > 1) n /= g, d /= g;
  return Rational(narrow(n), narrow(d));
}

Rational::Rational(Int n, Int d) {
  if (d == 0) fail("rational: zero denominator");
  if (d < 0) n = -n, d = -d;
  Int g = gcd(n, d);
  if (g > 1) n /= g, d /= g;
  num_ = n;
  den_ = d;
}

Int Rational::to_integer() const {
  if (den_ != 1) fail("rational is not an integer");
  return num_;
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = make(__int128(num_) * o.den_ + __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = make(__int128(num_) * o.num_, __int128(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail("rational: division by zero");
  return *this = make(__int128(num_) * o.den_, __int128(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = __int128(a.num_) * b.den_, r = __int128(b.num_) * a.den_;
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace weylcoh
