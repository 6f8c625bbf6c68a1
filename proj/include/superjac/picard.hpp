#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/riemann_roch.hpp"
#include "superjac/zeta.hpp"

namespace superjac {

inline constexpr u64 kDefaultPicardBudget = 10000;

struct PrincipalityResult {
    bool principal = false;
    /// f with div(f) = D, verified by valuations, when principal.
    std::optional<FunctionRep> witness;
};

/// Decides whether a degree-0 divisor is principal (d = 1). D^- is cleared by a product h
/// of x-minimal polynomials, which turns the question into L(n inf - E) != 0 for the
/// effective E = D^+ + div(h)_aff - D^- of degree n.
PrincipalityResult is_principal(const CurveSpec& c, const Divisor& D);
PrincipalityResult is_principal(RiemannRoch& rr, const Divisor& D);

/// Places of degree <= max_degree: affine ones grouped by degree, then infinity when d = 1.
std::vector<Place> enumerate_places(const CurveSpec& c, unsigned max_degree, u64 budget = kDefaultCountBudget);

/// Finite abelian group by its invariant factors d_1 | d_2 | ... (all > 1).
struct GroupStructure {
    std::vector<mpz_class> invariants;

    mpz_class order() const;
    mpz_class exponent() const;
    /// Prime-power cyclic factors, sorted.
    std::vector<mpz_class> elementary_divisors() const;
    /// "Z/3 x Z/9", or "0" for the trivial group.
    std::string to_string() const;
    bool operator==(const GroupStructure& o) const = default;

    static GroupStructure from_elementary(std::vector<mpz_class> prime_powers);
    /// The k-fold direct power.
    GroupStructure power(unsigned k) const;
};

/// Degree-0 classes as divisors E - deg(E) inf with E effective, affine and reduced:
/// l(E - inf) = 0, tested as l((2g - 1) inf - E) = g - deg E.
class DivisorClassTable {
public:
    DivisorClassTable(const CurveSpec& c, std::vector<Place> places);

    const CurveSpec& curve() const { return c_; }
    Place base_place() const { return Place::infinity(c_); }
    std::size_t size() const { return reps_.size(); }
    /// Effective part of the representative of class i.
    const Divisor& representative(std::size_t i) const { return reps_[i]; }
    /// Degree-0 representative E - deg(E) inf.
    Divisor class_divisor(std::size_t i) const;
    std::size_t zero() const { return 0; }

    std::size_t add(std::size_t i, std::size_t j);
    std::size_t neg(std::size_t i);
    std::size_t multiply(std::size_t i, u64 n);
    /// Class of an arbitrary effective affine divisor E - deg(E) inf.
    std::size_t class_of(const Divisor& E);

private:
    bool is_reduced(const Divisor& E);
    /// Reduced E' with [E' - deg inf] = -[E - deg inf].
    Divisor negate(const Divisor& E);
    std::size_t index(const Divisor& E) const;

    CurveSpec c_;
    RiemannRoch rr_;
    std::vector<Place> affine_;
    std::vector<Divisor> reps_;
    std::map<Divisor, std::size_t> index_;
};

struct PicardResult {
    std::shared_ptr<DivisorClassTable> table;
    GroupStructure structure;
    mpz_class expected_order;
};

/// Enumerates J(K) for a d = 1 curve. BudgetExceeded when |J| > budget;
/// IncompleteEnumeration when the class count disagrees with P(1).
PicardResult picard_group(const CurveSpec& c, u64 budget = kDefaultPicardBudget);

/// Structure from kill counts |J[l^i]| for each prime l dividing |J|.
GroupStructure group_structure(DivisorClassTable& table);

struct ConjectureReport {
    u64 p = 0, q = 0, a = 1;
    unsigned k = 1;
    GroupStructure base, extension, expected;
    bool consistent = false;
};

/// Compares J(F_{p^k}) with J(F_p)^k for y^q = x^p - x + a, k = ord_q(p).
ConjectureReport conjecture_check(u64 p, u64 q, u64 a, u64 budget = kDefaultPicardBudget);

} // namespace superjac
