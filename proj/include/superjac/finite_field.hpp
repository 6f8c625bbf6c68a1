#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/numtheory.hpp"

namespace superjac {

/// Element of a finite field F_{p^n}, packed as the base-p integer sum c_i p^i of
/// its coefficients over the defining polynomial basis 1, t, ..., t^{n-1}.
struct Elem {
    u64 v = 0;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// F_p[t]/(mu(t)) with a deterministic defining polynomial and generator.
///
/// Instances are immutable once built. Discrete log / exp tables are built lazily
/// (thread-safe) for fields with at most kTableLimit elements; larger fields fall back
/// to schoolbook polynomial arithmetic and have no discrete log.
class FiniteField {
public:
    static constexpr u64 kTableLimit = u64{1} << 24;

    /// Prime field F_p; throws NotPrime.
    static std::shared_ptr<const FiniteField> prime(u64 p);
    /// F_{p^n}: lexicographically first monic irreducible modulus of degree n over F_p,
    /// generator = first nonzero element (in packed order) of order p^n - 1.
    static std::shared_ptr<const FiniteField> extension(u64 p, unsigned n);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    u64 size() const { return q_; }
    mpz_class cardinality() const;
    bool is_prime_field() const { return n_ == 1; }
    /// "p" or "p^n".
    std::string name() const;

    /// Monic defining polynomial, coefficients low-first (length n + 1).
    const std::vector<u64>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    Elem from_int(i64 value) const { return {mod_floor(value, p_)}; }
    Elem from_coeffs(std::span<const u64> coeffs) const;
    std::vector<u64> coeffs(Elem a) const;
    /// True for elements of the prime subfield.
    bool in_prime_field(Elem a) const { return a.v < p_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, u64 e) const;
    Elem pow(Elem a, const mpz_class& e) const;
    /// a^(p^k).
    Elem frobenius(Elem a, unsigned k = 1) const;
    /// Multiplication by an integer.
    Elem scale(Elem a, i64 k) const { return mul(a, from_int(k)); }

    Elem trace(Elem a) const;
    Elem norm(Elem a) const;

    bool has_tables() const { return q_ <= kTableLimit; }
    /// Discrete log with respect to generator(); requires tables and a != 0.
    u64 log(Elem a) const;
    /// generator()^k.
    Elem exp(u64 k) const;

    /// Number of m-th roots of a in this field.
    u64 count_roots_of_power(Elem a, u64 m) const;
    /// All y with y^m = a, in increasing packed order.
    std::vector<Elem> roots_of_power(Elem a, u64 m) const;
    bool is_power(Elem a, u64 m) const { return count_roots_of_power(a, m) > 0; }

private:
    FiniteField(u64 p, unsigned n, std::vector<u64> modulus);
    Elem mul_poly(Elem a, Elem b) const;
    Elem pow_poly(Elem a, u64 e) const;
    void find_generator();
    void ensure_tables() const;

    u64 p_;
    unsigned n_;
    u64 q_;
    std::vector<u64> modulus_;
    std::vector<u64> place_; // p^i
    Elem generator_;
    std::vector<std::pair<u64, unsigned>> unit_factors_;

    mutable std::once_flag tables_once_;
    mutable std::vector<std::uint32_t> exp_;
    mutable std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Shared, cached fields: field(p, n) always returns the same instance.
FieldPtr field(u64 p, unsigned n = 1);

/// Parses "p" or "p^n".
FieldPtr parse_field(const std::string& text);

/// Field homomorphism F_{p^a} -> F_{p^b} determined by the image of the generating
/// root t of the source modulus.
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr from, FieldPtr to, Elem root_image);

    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }
    Elem root_image() const { return root_; }
    Elem operator()(Elem a) const;
    /// Preimage of an element of the image subfield; throws InvalidArgument otherwise.
    Elem preimage(Elem b) const;
    bool in_image(Elem b) const;

private:
    FieldPtr from_, to_;
    Elem root_;
    std::vector<Elem> powers_;
    std::vector<Elem> table_;
    std::vector<std::pair<Elem, Elem>> inverse_; // sorted by image
};

using EmbeddingPtr = std::shared_ptr<const FieldEmbedding>;

/// Canonical embedding of base into ext (degree of base must divide degree of ext). The
/// image of the source root is the first root of its modulus found among the subfield
/// elements, ordered by discrete exponent.
EmbeddingPtr embedding(const FieldPtr& base, const FieldPtr& ext);

/// Embedding of mid into top that agrees with embedding(base, mid) followed by it and
/// embedding(base, top). Needed whenever coordinates from two different extensions of a
/// non-prime base have to be compared.
EmbeddingPtr compatible_embedding(const FieldPtr& base, const FieldPtr& mid, const FieldPtr& top);

} // namespace superjac
