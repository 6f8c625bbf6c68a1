#pragma once

#include <vector>

#include "superjac/field_poly.hpp"

namespace superjac {

/// Truncated power series over a finite field: coefficients of t^0 .. t^{n-1}.
using Series = std::vector<Elem>;

namespace series {

Series add(const FiniteField& F, const Series& a, const Series& b);
Series sub(const FiniteField& F, const Series& a, const Series& b);
Series scale(const FiniteField& F, const Series& a, Elem c);
Series mul(const FiniteField& F, const Series& a, const Series& b, std::size_t prec);
/// Inverse of a series with nonzero constant term.
Series inv(const FiniteField& F, const Series& a, std::size_t prec);
Series pow(const FiniteField& F, const Series& a, unsigned e, std::size_t prec);
/// p(s) by Horner.
Series compose(const FiniteField& F, const FPoly& p, const Series& s, std::size_t prec);
/// Index of the first nonzero coefficient, or -1 if the series vanishes to its precision.
int order(const Series& a);
/// Solution V of V^m = U with V(0) = v0, where v0^m = U(0) != 0 and m is a unit in F.
Series mth_root(const FiniteField& F, const Series& U, unsigned m, Elem v0, std::size_t prec);

} // namespace series
} // namespace superjac
