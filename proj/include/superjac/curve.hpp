#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/field_poly.hpp"

namespace superjac {

struct GenusData {
    unsigned r = 0, d = 0, g = 0;
};

/// r = deg F, d = gcd(m, r), g = ((m-1)(r-1) - (d-1)) / 2 with the parity asserted.
GenusData genus_data(unsigned m, unsigned r);

/// y^m = F(x) over a finite field.
struct CurveSpec {
    unsigned m = 0;
    FieldPtr field;
    FPoly F;
    unsigned r = 0, d = 0, g = 0;
    /// Roots of F lying in the base field; R_i is the point (roots[i], 0).
    std::vector<Elem> roots;

    bool split() const { return roots.size() == r; }
    const FiniteField& K() const { return *field; }
    /// "m; [c_0,...,c_r]; field", coefficients as packed integers.
    std::string canonical() const;
};

/// Validates m >= 2, deg F >= 2, char not dividing m (BadCharacteristic) and separability
/// (NotSeparable). Roots are listed in increasing packed order.
CurveSpec make_curve(unsigned m, const FPoly& F, FieldPtr K);
CurveSpec make_curve(unsigned m, const std::vector<i64>& coeffs, FieldPtr K);
/// F = prod (x - roots[i]) keeping the given root order.
CurveSpec make_curve_from_roots(unsigned m, const std::vector<Elem>& roots, FieldPtr K);

/// Same curve over the smallest extension of the base field where F splits.
CurveSpec split_base_change(const CurveSpec& c, unsigned max_degree = 12);
/// Same curve over field(p, e * ext).
CurveSpec base_change(const CurveSpec& c, unsigned ext);

/// y^m = F(x) over the rationals.
struct RationalCurve {
    unsigned m = 0;
    std::vector<mpq_class> F;
    unsigned r = 0, d = 0, g = 0;
    std::string canonical() const;
};

RationalCurve make_rational_curve(unsigned m, std::vector<mpq_class> F);
/// Reduction modulo p when it is well defined and smooth (p not dividing m, denominators or
/// the leading coefficient, and F mod p separable).
std::optional<CurveSpec> reduce_mod(const RationalCurve& c, u64 p);

/// Parses "[c_0,c_1,...]" into integers.
std::vector<i64> parse_int_list(const std::string& text);

} // namespace superjac
