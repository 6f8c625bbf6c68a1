#pragma once

#include <map>
#include <vector>

#include "superjac/local.hpp"

namespace superjac {

/// Riemann-Roch spaces L(N inf - E) for effective affine E on a curve with d = 1.
///
/// Candidates are sum c_ij x^i y^j with j < m and pole order i m + j r <= N; membership
/// imposes ord_P >= E_P through the local expansions at each P in supp E. Conditions over a
/// residue field L are turned into K-linear ones with Tr_{L/K}(t^s . ) for a spanning set t^s.
class RiemannRoch {
public:
    explicit RiemannRoch(const CurveSpec& c);

    const CurveSpec& curve() const { return c_; }

    /// Basis in reduced echelon form with distinct pole orders, sorted ascending.
    std::vector<FunctionRep> space(i64 N, const Divisor& E);
    std::size_t dimension(i64 N, const Divisor& E) { return space(N, E).size(); }
    /// Nonzero element of least pole order in L(N inf - E) for the least such N >= deg E.
    FunctionRep minimal_function(const Divisor& E, i64* pole_order = nullptr);

    /// Pole order at infinity of x^i y^j.
    i64 pole(unsigned i, unsigned j) const { return static_cast<i64>(i) * c_.m + static_cast<i64>(j) * c_.r; }

private:
    struct PlaceData {
        LocalExpansion expansion;
        std::vector<Series> xpow, ypow;
    };
    const PlaceData& data(const Place& P, std::size_t precision, unsigned max_i);

    CurveSpec c_;
    std::map<Place, PlaceData> cache_;
};

} // namespace superjac
