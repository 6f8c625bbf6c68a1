#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/int_poly.hpp"
#include "superjac/numtheory.hpp"

namespace superjac {

/// The ring Z[zeta_N] = Z[x]/(Phi_N).
class CycloCtx {
public:
    explicit CycloCtx(u64 conductor);

    u64 conductor() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(phi_.size() - 1); }
    const IntPoly& phi() const { return phi_; }
    /// x^k mod Phi_N for 0 <= k < N, as small integer vectors of length degree().
    const std::vector<i64>& power_reduction(u64 k) const { return powers_[k]; }

private:
    u64 n_;
    IntPoly phi_;
    std::vector<std::vector<i64>> powers_;
};

using CycloPtr = std::shared_ptr<const CycloCtx>;

/// Phi_N via exact division of x^N - 1 by Phi_d for the proper divisors d of N. Cached.
CycloPtr cyclo_ring(u64 conductor);
IntPoly cyclotomic_polynomial(u64 n);

/// Element of Z[zeta_N] in canonical form: coefficients of 1, zeta, ..., zeta^{phi(N)-1}.
class CycloInt {
public:
    CycloInt(CycloPtr ctx);
    CycloInt(CycloPtr ctx, const mpz_class& integer);

    static CycloInt zeta_power(CycloPtr ctx, i64 k);
    /// Reduces sum_k counts[k] zeta^k (group-ring coefficients, k < N) to canonical form.
    static CycloInt from_group_ring(CycloPtr ctx, const std::vector<i64>& counts);

    const CycloPtr& ctx() const { return ctx_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator-() const;
    CycloInt operator*(const CycloInt& o) const;
    CycloInt& operator+=(const CycloInt& o) { return *this = *this + o; }
    CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }
    CycloInt pow(u64 e) const;
    /// zeta -> zeta^{-1}.
    CycloInt conjugate() const;

    bool operator==(const CycloInt& o) const;
    bool is_zero() const;
    bool is_rational_integer() const;
    /// Value if this is a rational integer.
    std::optional<mpz_class> to_integer() const;

    /// Complex value under zeta -> e^{2 pi i / N}. For sanity assertions only.
    std::complex<double> embed() const;
    std::string to_string() const;

private:
    void check_ctx(const CycloInt& o) const;
    CycloPtr ctx_;
    std::vector<mpz_class> c_;
};

} // namespace superjac
