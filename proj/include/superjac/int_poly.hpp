#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace superjac {

/// Integer polynomial, coefficients low-first, trimmed (zero = empty).
using IntPoly = std::vector<mpz_class>;

namespace ipoly {

void trim(IntPoly& a);
inline int degree(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }
IntPoly from_ints(const std::vector<long>& c);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
/// Quotient by a monic divisor; throws InvariantViolation if there is a remainder.
IntPoly exact_div_monic(const IntPoly& a, const IntPoly& b);
mpz_class eval(const IntPoly& a, const mpz_class& x);
/// "[c_0,c_1,...]"
std::string to_string(const IntPoly& a);

} // namespace ipoly
} // namespace superjac
