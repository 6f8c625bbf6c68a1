#include "superjac/field_poly.hpp"

#include <algorithm>

#include "superjac/error.hpp"

namespace superjac::fpoly {

void trim(FPoly& a)
{
    while (!a.empty() && a.back().v == 0)
        a.pop_back();
}

FPoly from_ints(const FiniteField& F, const std::vector<i64>& c)
{
    FPoly out;
    for (i64 v : c)
        out.push_back(F.from_int(v));
    trim(out);
    return out;
}

FPoly monomial(const FiniteField& F, Elem c, unsigned k)
{
    if (c.v == 0)
        return {};
    FPoly out(k + 1, F.zero());
    out[k] = c;
    return out;
}

FPoly linear(const FiniteField& F, Elem root) { return {F.neg(root), F.one()}; }

FPoly add(const FiniteField& F, const FPoly& a, const FPoly& b)
{
    FPoly out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Elem x = i < a.size() ? a[i] : F.zero();
        Elem y = i < b.size() ? b[i] : F.zero();
        out[i] = F.add(x, y);
    }
    trim(out);
    return out;
}

FPoly neg(const FiniteField& F, const FPoly& a)
{
    FPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = F.neg(a[i]);
    return out;
}

FPoly sub(const FiniteField& F, const FPoly& a, const FPoly& b) { return add(F, a, neg(F, b)); }

FPoly scale(const FiniteField& F, const FPoly& a, Elem c)
{
    if (c.v == 0)
        return {};
    FPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = F.mul(a[i], c);
    trim(out);
    return out;
}

FPoly mul(const FiniteField& F, const FPoly& a, const FPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    FPoly out(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

FPoly pow(const FiniteField& F, const FPoly& a, unsigned e)
{
    FPoly result{F.one()};
    FPoly base = a;
    while (e) {
        if (e & 1)
            result = mul(F, result, base);
        e >>= 1;
        if (e)
            base = mul(F, base, base);
    }
    return result;
}

void divmod(const FiniteField& F, const FPoly& a, const FPoly& b, FPoly& q, FPoly& r)
{
    require(!b.empty(), ErrorKind::InvalidArgument, "polynomial division by zero");
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size())
        return;
    q.assign(r.size() - b.size() + 1, F.zero());
    const Elem lead_inv = F.inv(b.back());
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Elem c = F.mul(r.back(), lead_inv);
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k)
            r[shift + k] = F.sub(r[shift + k], F.mul(c, b[k]));
        trim(r);
    }
    trim(q);
}

FPoly mod(const FiniteField& F, const FPoly& a, const FPoly& b)
{
    FPoly q, r;
    divmod(F, a, b, q, r);
    return r;
}

FPoly exact_div(const FiniteField& F, const FPoly& a, const FPoly& b)
{
    FPoly q, r;
    divmod(F, a, b, q, r);
    require(r.empty(), ErrorKind::InvariantViolation, "inexact polynomial division");
    return q;
}

FPoly monic(const FiniteField& F, const FPoly& a)
{
    if (a.empty())
        return a;
    return scale(F, a, F.inv(a.back()));
}

FPoly gcd(const FiniteField& F, FPoly a, FPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = mod(F, a, b);
        std::swap(a, b);
    }
    return monic(F, a);
}

FPoly derivative(const FiniteField& F, const FPoly& a)
{
    if (a.size() <= 1)
        return {};
    FPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        out[i - 1] = F.scale(a[i], static_cast<i64>(i % F.characteristic()));
    trim(out);
    return out;
}

Elem eval(const FiniteField& F, const FPoly& a, Elem x)
{
    Elem acc = F.zero();
    for (std::size_t i = a.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

FPoly powmod(const FiniteField& F, const FPoly& base, const mpz_class& e, const FPoly& m)
{
    FPoly result = mod(F, FPoly{F.one()}, m);
    FPoly b = mod(F, base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mod(F, mul(F, result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mod(F, mul(F, result, b), m);
    }
    return result;
}

FPoly taylor_shift(const FiniteField& F, const FPoly& f, Elem a)
{
    // Horner in the shifted variable: result = (...(c_n)(x + a) + c_{n-1})...
    FPoly result;
    const FPoly lin{a, F.one()};
    for (std::size_t i = f.size(); i-- > 0;)
        result = add(F, mul(F, result, lin), FPoly{f[i]});
    return result;
}

FPoly map(const FieldEmbedding& emb, const FPoly& f)
{
    FPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = emb(f[i]);
    return out;
}

unsigned root_multiplicity(const FiniteField& F, FPoly f, Elem root)
{
    require(!f.empty(), ErrorKind::InvalidArgument, "multiplicity in the zero polynomial");
    unsigned k = 0;
    const FPoly lin = linear(F, root);
    while (true) {
        FPoly q, r;
        divmod(F, f, lin, q, r);
        if (!r.empty())
            return k;
        f = std::move(q);
        ++k;
    }
}

namespace {

void split_linear(const FiniteField& F, const FPoly& g, std::vector<Elem>& out)
{
    if (g.size() <= 1)
        return;
    if (g.size() == 2) {
        out.push_back(F.neg(F.div(g[0], g[1])));
        return;
    }
    const u64 q = F.size();
    for (u64 attempt = 0; attempt < 4 * q + 64; ++attempt) {
        FPoly h;
        if (F.characteristic() == 2) {
            // Absolute trace of delta*x splits the roots into two halves.
            Elem delta = F.exp(attempt);
            FPoly term = mod(F, FPoly{F.zero(), delta}, g);
            FPoly tr = term;
            for (unsigned i = 1; i < F.degree(); ++i) {
                term = mod(F, mul(F, term, term), g);
                tr = add(F, tr, term);
            }
            h = gcd(F, g, tr);
        } else {
            Elem delta{attempt % q};
            FPoly lin{delta, F.one()};
            mpz_class e = (F.cardinality() - 1) / 2;
            FPoly pw = powmod(F, lin, e, g);
            h = gcd(F, g, sub(F, pw, FPoly{F.one()}));
        }
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear(F, h, out);
            split_linear(F, exact_div(F, g, h), out);
            return;
        }
    }
    fail(ErrorKind::InvariantViolation, "root splitting did not converge");
}

} // namespace

std::vector<Elem> roots(const FiniteField& F, const FPoly& f_in)
{
    FPoly f = f_in;
    trim(f);
    require(!f.empty(), ErrorKind::InvalidArgument, "roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.size() == 1)
        return out;
    if (F.size() <= (u64{1} << 14) || F.size() <= f.size() * 16) {
        for (u64 v = 0; v < F.size(); ++v)
            if (eval(F, f, Elem{v}).v == 0)
                out.push_back(Elem{v});
        return out;
    }
    const FPoly x{F.zero(), F.one()};
    FPoly xq = powmod(F, x, F.cardinality(), f);
    FPoly g = gcd(F, f, sub(F, xq, x));
    split_linear(F, g, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FPoly> distinct_degree_parts(const FiniteField& F, const FPoly& f_in)
{
    FPoly f = monic(F, f_in);
    std::vector<FPoly> parts{FPoly{F.one()}};
    const FPoly x{F.zero(), F.one()};
    FPoly xpow = x;
    for (unsigned k = 1; degree(f) >= static_cast<int>(k); ++k) {
        xpow = powmod(F, xpow, F.cardinality(), f);
        FPoly g = gcd(F, f, sub(F, xpow, x));
        parts.push_back(g);
        if (g.size() > 1) {
            f = exact_div(F, f, g);
            xpow = mod(F, xpow, f);
        }
    }
    return parts;
}

bool is_squarefree(const FiniteField& F, const FPoly& f)
{
    FPoly d = derivative(F, f);
    if (d.empty())
        return f.size() <= 1;
    return gcd(F, f, d).size() == 1;
}

} // namespace superjac::fpoly
