#include "superjac/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "superjac/error.hpp"

namespace superjac {

IntPoly cyclotomic_polynomial(u64 n)
{
    require(n >= 1, ErrorKind::InvalidArgument, "conductor must be positive");
    static std::mutex mu;
    static std::map<u64, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    IntPoly acc(n + 1);
    acc[0] = -1;
    acc[n] = 1;
    for (u64 d : divisors(n))
        if (d < n)
            acc = ipoly::exact_div_monic(acc, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    return cache.emplace(n, acc).first->second;
}

CycloCtx::CycloCtx(u64 conductor) : n_(conductor), phi_(cyclotomic_polynomial(conductor))
{
    const unsigned deg = degree();
    std::vector<i64> phi_small(phi_.size());
    for (std::size_t i = 0; i < phi_.size(); ++i) {
        require(phi_[i].fits_slong_p(), ErrorKind::Unsupported, "cyclotomic coefficients too large");
        phi_small[i] = phi_[i].get_si();
    }
    powers_.assign(n_, std::vector<i64>(deg, 0));
    std::vector<i64> cur(deg, 0);
    if (deg == 0)
        return;
    cur[0] = 1;
    for (u64 k = 0; k < n_; ++k) {
        powers_[k] = cur;
        // cur <- cur * x mod Phi_N
        i64 top = cur[deg - 1];
        for (unsigned i = deg - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < deg; ++i)
                cur[i] -= top * phi_small[i];
    }
}

CycloPtr cyclo_ring(u64 conductor)
{
    static std::mutex mu;
    static std::map<u64, CycloPtr> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(conductor);
    if (it == cache.end())
        it = cache.emplace(conductor, std::make_shared<const CycloCtx>(conductor)).first;
    return it->second;
}

CycloInt::CycloInt(CycloPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->degree()) {}

CycloInt::CycloInt(CycloPtr ctx, const mpz_class& integer) : CycloInt(std::move(ctx))
{
    if (!c_.empty())
        c_[0] = integer;
}

CycloInt CycloInt::zeta_power(CycloPtr ctx, i64 k)
{
    CycloInt out(ctx);
    const auto& red = ctx->power_reduction(mod_floor(k, ctx->conductor()));
    for (std::size_t i = 0; i < red.size(); ++i)
        out.c_[i] = red[i];
    return out;
}

CycloInt CycloInt::from_group_ring(CycloPtr ctx, const std::vector<i64>& counts)
{
    require(counts.size() == ctx->conductor(), ErrorKind::InvalidArgument, "group ring vector has wrong length");
    const unsigned deg = ctx->degree();
    std::vector<i64> acc(deg, 0);
    std::vector<mpz_class> big;
    bool small_ok = true;
    for (u64 k = 0; k < counts.size() && small_ok; ++k) {
        if (counts[k] == 0)
            continue;
        const auto& red = ctx->power_reduction(k);
        for (unsigned i = 0; i < deg; ++i) {
            __int128 v = static_cast<__int128>(acc[i]) + static_cast<__int128>(counts[k]) * red[i];
            if (v > INT64_MAX / 4 || v < INT64_MIN / 4)
                small_ok = false;
            acc[i] = static_cast<i64>(v);
        }
    }
    CycloInt out(ctx);
    if (small_ok) {
        for (unsigned i = 0; i < deg; ++i)
            out.c_[i] = static_cast<long>(acc[i]);
        return out;
    }
    for (u64 k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0)
            continue;
        const auto& red = ctx->power_reduction(k);
        for (unsigned i = 0; i < deg; ++i)
            out.c_[i] += mpz_class(static_cast<long>(counts[k])) * static_cast<long>(red[i]);
    }
    return out;
}

void CycloInt::check_ctx(const CycloInt& o) const
{
    require(ctx_ == o.ctx_ || ctx_->conductor() == o.ctx_->conductor(), ErrorKind::ContextMismatch,
            "cyclotomic operands live in different rings");
}

CycloInt CycloInt::operator+(const CycloInt& o) const
{
    check_ctx(o);
    CycloInt out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] += o.c_[i];
    return out;
}

CycloInt CycloInt::operator-(const CycloInt& o) const
{
    check_ctx(o);
    CycloInt out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] -= o.c_[i];
    return out;
}

CycloInt CycloInt::operator-() const
{
    CycloInt out(*this);
    for (auto& v : out.c_)
        v = -v;
    return out;
}

CycloInt CycloInt::operator*(const CycloInt& o) const
{
    check_ctx(o);
    const u64 n = ctx_->conductor();
    const unsigned deg = ctx_->degree();
    // Product folded into the group ring Z[x]/(x^N - 1), then reduced mod Phi_N.
    std::vector<mpz_class> folded(n);
    for (unsigned i = 0; i < deg; ++i) {
        if (c_[i] == 0)
            continue;
        for (unsigned j = 0; j < deg; ++j) {
            if (o.c_[j] == 0)
                continue;
            folded[(i + j) % n] += c_[i] * o.c_[j];
        }
    }
    CycloInt out(ctx_);
    for (u64 k = 0; k < n; ++k) {
        if (folded[k] == 0)
            continue;
        if (k < deg) {
            out.c_[k] += folded[k];
            continue;
        }
        const auto& red = ctx_->power_reduction(k);
        for (unsigned i = 0; i < deg; ++i)
            if (red[i] != 0)
                out.c_[i] += folded[k] * static_cast<long>(red[i]);
    }
    return out;
}

CycloInt CycloInt::pow(u64 e) const
{
    CycloInt result(ctx_, 1);
    CycloInt base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

CycloInt CycloInt::conjugate() const
{
    const u64 n = ctx_->conductor();
    CycloInt out(ctx_);
    for (unsigned i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        const auto& red = ctx_->power_reduction((n - i) % n);
        for (unsigned k = 0; k < c_.size(); ++k)
            if (red[k] != 0)
                out.c_[k] += c_[i] * static_cast<long>(red[k]);
    }
    return out;
}

bool CycloInt::operator==(const CycloInt& o) const
{
    check_ctx(o);
    return c_ == o.c_;
}

bool CycloInt::is_zero() const
{
    for (const auto& v : c_)
        if (v != 0)
            return false;
    return true;
}

bool CycloInt::is_rational_integer() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

std::optional<mpz_class> CycloInt::to_integer() const
{
    if (!is_rational_integer())
        return std::nullopt;
    return c_.empty() ? mpz_class(0) : c_[0];
}

std::complex<double> CycloInt::embed() const
{
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(ctx_->conductor());
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        acc += c_[i].get_d() * std::polar(1.0, angle * static_cast<double>(i));
    return acc;
}

std::string CycloInt::to_string() const { return ipoly::to_string(IntPoly(c_.begin(), c_.end())); }

} // namespace superjac
