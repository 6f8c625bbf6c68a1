#pragma once

#include <string>
#include <vector>

#include "superjac/curve.hpp"

namespace superjac {

/// f = (sum_j num[j](x) y^j) / den(x) in K(C), with num.size() == m and den monic.
struct FunctionRep {
    std::vector<FPoly> num;
    FPoly den;

    bool is_zero() const;
    bool operator==(const FunctionRep& o) const = default;
};

namespace fn {

FunctionRep constant(const CurveSpec& c, Elem value);
/// x^i y^j.
FunctionRep monomial(const CurveSpec& c, unsigned i, unsigned j);
FunctionRep x_minus(const CurveSpec& c, Elem a);
FunctionRep y(const CurveSpec& c);
FunctionRep from_num(const CurveSpec& c, std::vector<FPoly> num);
FunctionRep from_poly(const CurveSpec& c, const FPoly& p);

FunctionRep add(const CurveSpec& c, const FunctionRep& f, const FunctionRep& g);
FunctionRep mul(const CurveSpec& c, const FunctionRep& f, const FunctionRep& g);
FunctionRep scale(const CurveSpec& c, const FunctionRep& f, Elem k);
FunctionRep pow(const CurveSpec& c, const FunctionRep& f, unsigned e);
/// Multiplicative inverse via Cramer's rule on the multiplication matrix; throws ZeroFunction.
FunctionRep inverse(const CurveSpec& c, const FunctionRep& f);
FunctionRep div(const CurveSpec& c, const FunctionRep& f, const FunctionRep& g);
/// Removes common factors of den and all numerator coefficients.
FunctionRep normalize(const CurveSpec& c, FunctionRep f);

/// Res_y(sum_j num[j] y^j, y^m - F): the norm of the numerator to K(x), as a polynomial.
FPoly norm(const CurveSpec& c, const std::vector<FPoly>& num);

/// Value at an affine point (x, y) in L; the point must not be a pole.
Elem evaluate(const CurveSpec& c, const FunctionRep& f, const FieldPtr& L, Elem x, Elem y);
/// Value of the numerator only.
Elem evaluate_num(const CurveSpec& c, const FunctionRep& f, const FieldPtr& L, Elem x, Elem y);

std::string to_string(const FunctionRep& f);

} // namespace fn
} // namespace superjac
