#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/curve.hpp"
#include "superjac/int_poly.hpp"

namespace superjac {

inline constexpr u64 kDefaultCountBudget = u64{1} << 24;

struct PointCount {
    std::string curve_id;
    unsigned n = 1;
    mpz_class affine, infinite, total;
};

/// P(T) = c_0 + ... + c_{2g} T^{2g} over the field with p^e elements.
struct LPolynomial {
    unsigned g = 0;
    u64 p = 0;
    unsigned e = 1;
    IntPoly c;

    mpz_class base_size() const;
    /// "[c_0,...,c_{2g}] over p^e".
    std::string to_string() const;
};

/// Asserts c_0 = 1, the functional equation and P(1) > 0 (InvariantViolation).
void check_lpoly(const LPolynomial& P);

/// y^q = x^p - x + a over F_p.
CurveSpec artin_schreier_curve(u64 p, u64 q, u64 a);

/// Points over the degree-n extension of the curve's base field by exhaustive search.
/// d = 1 only (RequiresD1); BudgetExceeded above `budget` field elements.
PointCount count_affine_naive(const CurveSpec& c, unsigned n, u64 budget = kDefaultCountBudget);

/// N_n for y^q = x^p - x + a over F_{p^n} from Gauss sums; q | p - 1 required.
PointCount count_charsum(u64 p, u64 q, u64 a, unsigned n);

/// prod (1 + G_a(psi, chi) T) over nontrivial characters of F_{p^e} of order dividing q:
/// the zeta numerator of y^q = x^p - x + a over F_{p^e}. Requires q | p^e - 1.
LPolynomial zeta_numerator_charsum(u64 p, unsigned e, u64 q, u64 a);
/// The case e = 1.
LPolynomial zeta_numerator_special(u64 p, u64 q, u64 a);

/// Newton reconstruction from N_1..N_g (extra counts are verified against the result).
LPolynomial lpoly_from_counts(const std::vector<mpz_class>& counts, u64 p, unsigned e, unsigned g);

/// Power sums s_1..s_count of the inverse roots of P.
std::vector<mpz_class> power_sums(const IntPoly& c, unsigned count);
/// Polynomial with constant term 1 and the given power sums of its inverse roots.
IntPoly from_power_sums(const std::vector<mpz_class>& s, unsigned degree);

/// |J(F_{q^n})| = prod (1 - alpha_i^n), over the integers.
mpz_class jacobian_order(const LPolynomial& P, unsigned n = 1);

/// Zeta numerator over F_p from the one over F_{p^k}, assuming P(T) is a polynomial in
/// T^k: then P_k = Q^k and P(T) = Q(T^k). The root extraction is verified exactly.
LPolynomial descend_numerator(const LPolynomial& Pk, unsigned k);

/// P(T) for y^{q^l} = x^p - x + a over F_p by the cheapest exact route that fits the budget.
/// Routes: "charsum" (q^l | p - 1), "naive" (p^g within budget), "charsum-ext" (Gauss sums
/// over F_{p^k}, k = ord_q(p) = ord_{q^l}(p), then descent). BudgetExceeded otherwise.
struct FamilyZeta {
    LPolynomial P;
    std::string route;
    /// ord_q(p).
    unsigned k = 1;
};
FamilyZeta family_zeta(u64 p, u64 q, unsigned l, u64 a, u64 budget = kDefaultCountBudget);

/// c_i = 0 unless k | i.
bool indices_divisible(const LPolynomial& P, unsigned k);

struct TorsionReport {
    u64 p = 0, q = 0, a = 1;
    unsigned l = 1;
    unsigned ord = 0;
    bool has_torsion = false;
    std::string route; // empty when evidence was omitted
    std::optional<mpz_class> jacobian_order;
    std::optional<bool> q_divides;
    std::string note;
    /// Criterion and evidence agree (true when evidence is omitted).
    bool consistent() const { return !q_divides || *q_divides == has_torsion; }
};

/// has_torsion = p | ord_q(p), with |J(F_p)| of y^{q^l} = x^p - x + a as evidence.
TorsionReport torsion_criterion(u64 p, u64 q, unsigned l = 1, u64 a = 1, u64 budget = kDefaultCountBudget);

struct PowerLawRow {
    unsigned k = 1;
    mpz_class order;   // |J(F_{p^k})|
    mpz_class power;   // |J(F_p)|^k
    bool equal = false;
};

struct PowerLawReport {
    u64 p = 0, q = 0, a = 1;
    unsigned k = 1;
    std::string route;
    mpz_class base_order;
    std::vector<PowerLawRow> rows;
    bool holds() const;
};

/// |J(F_{p^k'})| = |J(F_p)|^{k'} for every k' | ord_q(p).
PowerLawReport power_law_check(u64 p, u64 q, u64 a, u64 budget = kDefaultCountBudget);

} // namespace superjac
