#include "superjac/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "superjac/error.hpp"

namespace superjac {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::UnsupportedCollision: return "UnsupportedCollision";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::RootsUnavailable: return "RootsUnavailable";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::RequiresD1: return "RequiresD1";
    case ErrorKind::ZeroShift: return "ZeroShift";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CharacterUnavailable: return "CharacterUnavailable";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::IncompleteEnumeration: return "IncompleteEnumeration";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::EvidenceFailed: return "EvidenceFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m)
{
    if (m == 1)
        return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0)
            return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic below 3.3 * 10^24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n)
{
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 step = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(step, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += step;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_cofactor(u64 n, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_cofactor(d, out);
    factor_cofactor(n / d, out);
}

} // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
    require(n != 0, ErrorKind::InvalidArgument, "cannot factor 0");
    std::vector<u64> primes;
    for (u64 d = 2; d <= 1000000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    factor_cofactor(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> result;
    for (u64 pr : primes) {
        if (!result.empty() && result.back().first == pr)
            ++result.back().second;
        else
            result.emplace_back(pr, 1);
    }
    return result;
}

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (auto& [pr, e] : factorize(n))
        out.push_back(pr);
    return out;
}

std::vector<u64> divisors(u64 n)
{
    std::vector<u64> out{1};
    for (auto& [pr, e] : factorize(n)) {
        std::size_t sz = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= pr;
            for (std::size_t i = 0; i < sz; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n)
{
    std::vector<mpz_class> out;
    mpz_class v = abs(n);
    if (v == 0)
        return out;
    if (v.fits_ulong_p()) {
        for (u64 pr : prime_divisors(static_cast<u64>(v.get_ui())))
            out.emplace_back(static_cast<unsigned long>(pr));
        return out;
    }
    for (unsigned long d = 2; d <= 1000000 && d * d <= v; ++d) {
        if (v % d == 0) {
            out.emplace_back(d);
            while (v % d == 0)
                v /= d;
        }
    }
    if (v > 1) {
        require(mpz_probab_prime_p(v.get_mpz_t(), 40) > 0, ErrorKind::Unsupported,
                "integer has an unfactored composite cofactor above 10^12");
        out.push_back(v);
    }
    return out;
}

u64 multiplicative_order(u64 a, u64 n)
{
    require(n >= 2 && std::gcd(a % n, n) == 1, ErrorKind::InvalidArgument, "order needs gcd(a, n) = 1");
    u64 phi = euler_phi(n);
    u64 order = phi;
    for (auto& [pr, e] : factorize(phi)) {
        for (unsigned k = 0; k < e; ++k) {
            if (powmod(a, order / pr, n) == 1)
                order /= pr;
            else
                break;
        }
    }
    return order;
}

u64 euler_phi(u64 n)
{
    u64 result = n;
    for (auto& [pr, e] : factorize(n))
        result = result / pr * (pr - 1);
    return result;
}

u64 invmod(u64 a, u64 m)
{
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    require(r == 1, ErrorKind::InvalidArgument, "value is not invertible");
    return mod_floor(t, m);
}

bool checked_pow(u64 p, unsigned n, u64& out)
{
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < n; ++i) {
        acc *= p;
        if (acc > (static_cast<unsigned __int128>(1) << 62))
            return false;
    }
    out = static_cast<u64>(acc);
    return true;
}

} // namespace superjac
