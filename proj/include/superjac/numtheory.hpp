#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace superjac {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division up to 10^6, then Miller-Rabin / Pollard rho for the cofactor.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

/// Prime factors of an arbitrary integer (absolute value), ascending. Zero has none.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

/// Multiplicative order of a modulo n (gcd(a, n) must be 1).
u64 multiplicative_order(u64 a, u64 n);

u64 euler_phi(u64 n);

/// Inverse of a modulo m, where gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

/// Nonnegative residue of a signed value.
inline u64 mod_floor(i64 a, u64 m)
{
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// p^n as an unsigned 64-bit integer; returns false on overflow.
bool checked_pow(u64 p, unsigned n, u64& out);

} // namespace superjac
