#pragma once

#include "weylcoh/intmat.hpp"

#include <string>

namespace weylcoh {

// Integer polynomial, constant term first, no trailing zeros except for the zero polynomial {}.
using Poly = Vec;

Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Int s);
// Exact division by an integer; throws if some coefficient is not divisible.
Poly poly_div_exact(const Poly& a, Int d);
// Exact division by a polynomial with leading coefficient +-1; throws on a nonzero remainder.
Poly poly_div_exact(const Poly& a, const Poly& b);
Int poly_coeff(const Poly& p, int k);
Int poly_eval(const Poly& p, Int x);
int poly_degree(const Poly& p);
// Human-readable form like "q^4 - 15q^3 + 81q^2 - 185q + 150".
std::string poly_to_string(const Poly& p, const std::string& var = "q");

}  // namespace weylcoh
