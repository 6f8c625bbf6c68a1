#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "superjac/curve.hpp"

namespace superjac {

/// A place of a curve over its base field K.
///
/// Ramification: R_i = (roots[i], 0) for a root in K.
/// Infinity: the divisor of points over x = infinity; its degree is d (a single rational
/// point when d = 1).
/// Closed: the Frobenius orbit of an affine point with coordinates in F_{|K|^degree},
/// stored by its orbit-minimal representative in field(p, e * degree).
struct Place {
    enum class Kind { Ramification, Infinity, Closed };
    Kind kind = Kind::Closed;
    unsigned index = 0;
    unsigned degree = 1;
    Elem x{}, y{};

    static Place ramification(const CurveSpec& c, unsigned i);
    static Place infinity(const CurveSpec& c);

    bool is_affine() const { return kind != Kind::Infinity; }
    bool is_ramified() const { return kind == Kind::Ramification || (kind == Kind::Closed && y.v == 0); }
    /// Ramification index of x - x(P) at an affine place.
    unsigned x_order(const CurveSpec& c) const { return is_ramified() ? c.m : 1; }
    /// Field holding the coordinates: field(p, e * degree).
    FieldPtr residue_field(const CurveSpec& c) const;
    std::string to_string() const;

    friend auto operator<=>(const Place& a, const Place& b)
    {
        return std::tie(a.kind, a.index, a.degree, a.x, a.y) <=> std::tie(b.kind, b.index, b.degree, b.x, b.y);
    }
    friend bool operator==(const Place& a, const Place& b) = default;
};

/// Place of the point (x, y) given in an extension L of K where the curve coefficients are
/// mapped by embedding(K, L). Computes the exact degree, pulls the point back to the
/// smallest field and normalizes to the orbit-minimal representative. Rational points with
/// y = 0 become Ramification places.
Place make_place(const CurveSpec& c, const FieldPtr& L, Elem x, Elem y);

/// True when (x, y) in L lies on the curve.
bool on_curve(const CurveSpec& c, const FieldPtr& L, Elem x, Elem y);

/// Finitely supported integer combination of places. Zero coefficients are never stored.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(const Place& p, i64 coeff = 1) { add(p, coeff); }

    void add(const Place& p, i64 coeff);
    i64 coeff(const Place& p) const;
    const std::map<Place, i64>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Weighted sum: Infinity counts d per unit, closed points their degree.
    i64 degree(const CurveSpec& c) const;
    bool is_effective() const;
    Divisor positive_part() const;
    Divisor negative_part() const; // returned with positive coefficients
    Divisor affine_part() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor scaled(i64 k) const;
    bool operator==(const Divisor& o) const = default;
    auto operator<=>(const Divisor& o) const = default;

    std::string to_string() const;

private:
    std::map<Place, i64> terms_;
};

/// D_i = R_i - R_{r-1} (i <= r-2), D_{r-1} = d R_{r-1} - inf, with 1-based labels.
std::vector<Divisor> delta_generators(const CurveSpec& c);

} // namespace superjac
