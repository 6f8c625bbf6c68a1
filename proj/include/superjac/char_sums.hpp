#pragma once

#include <map>
#include <memory>
#include <vector>

#include "superjac/cyclotomic.hpp"
#include "superjac/finite_field.hpp"

namespace superjac {

/// psi(z) = zeta_p^{c Tr(z)} on any extension of F_p (absolute trace).
struct AdditiveCharacter {
    u64 p = 0;
    u64 c = 0;
    bool trivial() const { return c % p == 0; }
};

/// chi(gen^t) = zeta_order^{j t} on the field `base`, extended to finite extensions of
/// base through the relative norm. chi(0) = 0 unless chi is trivial, where chi(0) = 1.
struct MultiplicativeCharacter {
    FieldPtr base;
    u64 order = 1;
    u64 j = 0;
    bool trivial() const { return j % order == 0; }
};

/// Nontrivial additive characters of F_p, c = 1..p-1.
std::vector<AdditiveCharacter> additive_characters(u64 p);
/// Nontrivial characters of `base` with order dividing `order`; CharacterUnavailable
/// unless order divides |base| - 1.
std::vector<MultiplicativeCharacter> multiplicative_characters(const FieldPtr& base, u64 order);

/// Conductor p * order shared by all sums for one character family.
inline u64 gauss_conductor(u64 p, u64 order) { return p * order; }

/// Value psi(z) for z in F_p, as an element of Z[zeta_{p * order}].
CycloInt additive_value(const AdditiveCharacter& psi, u64 z, const CycloPtr& ring);
/// Value chi(w) for w in base.
CycloInt multiplicative_value(const MultiplicativeCharacter& chi, Elem w, const CycloPtr& ring);

struct GaussSumRecord {
    FieldPtr field;
    u64 a = 0;
    AdditiveCharacter psi;
    MultiplicativeCharacter chi;
    CycloInt value;
};

/// Histogram of (Tr(w), log_base N(w) mod order) over the units w of `ext`. Every Gauss
/// sum over ext for characters of that order is a weighted read of this table.
class GaussTable {
public:
    GaussTable(FieldPtr ext, FieldPtr base, u64 order);

    const FieldPtr& ext() const { return ext_; }
    const CycloPtr& ring() const { return ring_; }
    /// sum_{w in ext} psi(w - a) chi(w), with the chi(0) convention.
    CycloInt modified_sum(u64 a, const AdditiveCharacter& psi, const MultiplicativeCharacter& chi) const;

private:
    FieldPtr ext_, base_;
    u64 p_, order_;
    unsigned abs_degree_;
    CycloPtr ring_;
    std::vector<i64> hist_; // hist_[u * order + s]
};

/// Cached table for (ext, base, order). BudgetExceeded if ext has no log tables.
std::shared_ptr<const GaussTable> gauss_table(const FieldPtr& ext, const FieldPtr& base, u64 order);

/// G_a(psi_n, chi_n) over `field` (an extension of chi's base). For nontrivial pairs the
/// value is compared with psi(-a)^n G(psi_n, chi_n); a mismatch raises InvariantViolation.
GaussSumRecord modified_gauss_sum(const FieldPtr& field, u64 a, const AdditiveCharacter& psi,
                                  const MultiplicativeCharacter& chi);

/// The same sum computed element by element through trace() and norm().
CycloInt modified_gauss_sum_direct(const FieldPtr& field, u64 a, const AdditiveCharacter& psi,
                                   const MultiplicativeCharacter& chi);

/// -G_a(psi_n, chi_n) == (-G_a(psi, chi))^n with the left side summed over the degree-n
/// extension of chi's base field.
bool hasse_davenport_check(u64 a, const AdditiveCharacter& psi, const MultiplicativeCharacter& chi, unsigned n);

/// value * conj(value) == |field|.
bool gauss_norm_check(const GaussSumRecord& record);

} // namespace superjac
