#pragma once

#include <string>
#include <vector>

#include "superjac/divisor.hpp"
#include "superjac/function.hpp"
#include "superjac/series.hpp"

namespace superjac {

/// x = t^{x_shift} X(t), y = t^{y_shift} Y(t) in a local parameter t at a place, with X, Y
/// power series over the residue field `L` truncated to `precision` terms.
///
/// Parameters: x - x(P) at unramified affine places, y at ramified ones, and at the d = 1
/// infinite place the t with x = c t^{-m}, y = w t^{-r} V(t), V(0) = 1.
struct LocalExpansion {
    Place place;
    FieldPtr L;
    std::string parameter;
    int x_shift = 0, y_shift = 0;
    Series X, Y;
    std::size_t precision = 0;
};

inline constexpr std::size_t kMaxPrecision = 1024;

LocalExpansion local_expansion(const CurveSpec& c, const Place& P, std::size_t precision);

/// Checks y^m - F(x) = 0 to the precision of the expansion (after clearing t-powers).
bool expansion_residual_ok(const CurveSpec& c, const LocalExpansion& e);

/// Series of the numerator sum_j num_j(x) y^j at an affine place.
Series numerator_series(const CurveSpec& c, const FunctionRep& f, const LocalExpansion& e);

/// Exact valuation of f at P. Affine places use local expansions with precision doubling
/// from 2g + 4 up to kMaxPrecision (PrecisionExhausted beyond). At infinity the value comes
/// from pole orders of monomials; for d > 1 a unique dominant term is required
/// (UnsupportedCollision otherwise). The value at Infinity is per infinite branch.
int valuation(const CurveSpec& c, const FunctionRep& f, const Place& P);

/// All places over the point x0 of the x-line, x0 in field(p, e * k) for some k.
std::vector<Place> fiber(const CurveSpec& c, const FieldPtr& M, Elem x0);

/// Distinct affine places where the polynomial h(x) vanishes.
std::vector<Place> places_over_zeros(const CurveSpec& c, const FPoly& h);

/// Minimal polynomial over K of x(P) for an affine place.
FPoly x_minimal_polynomial(const CurveSpec& c, const Place& P);

/// div(f); the degree is asserted to be 0. Throws ZeroFunction for f = 0.
Divisor principal_divisor(const CurveSpec& c, const FunctionRep& f);

} // namespace superjac
