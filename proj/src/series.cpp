#include "superjac/series.hpp"

#include <algorithm>

#include "superjac/error.hpp"

namespace superjac::series {

Series add(const FiniteField& F, const Series& a, const Series& b)
{
    Series out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = F.add(out[i], b[i]);
    return out;
}

Series sub(const FiniteField& F, const Series& a, const Series& b)
{
    Series out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = F.sub(out[i], b[i]);
    return out;
}

Series scale(const FiniteField& F, const Series& a, Elem c)
{
    Series out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = F.mul(a[i], c);
    return out;
}

Series mul(const FiniteField& F, const Series& a, const Series& b, std::size_t prec)
{
    Series out(prec, F.zero());
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (a[i].v == 0)
            continue;
        const std::size_t lim = std::min(b.size(), prec - i);
        for (std::size_t j = 0; j < lim; ++j)
            if (b[j].v != 0)
                out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

Series inv(const FiniteField& F, const Series& a, std::size_t prec)
{
    require(!a.empty() && a[0].v != 0, ErrorKind::InvalidArgument, "series is not a unit");
    Series out(prec, F.zero());
    const Elem c = F.inv(a[0]);
    out[0] = c;
    for (std::size_t n = 1; n < prec; ++n) {
        Elem s = F.zero();
        for (std::size_t k = 1; k <= n && k < a.size(); ++k)
            s = F.add(s, F.mul(a[k], out[n - k]));
        out[n] = F.neg(F.mul(s, c));
    }
    return out;
}

Series pow(const FiniteField& F, const Series& a, unsigned e, std::size_t prec)
{
    Series result(prec, F.zero());
    if (prec > 0)
        result[0] = F.one();
    Series base = a;
    base.resize(prec, F.zero());
    while (e) {
        if (e & 1)
            result = mul(F, result, base, prec);
        e >>= 1;
        if (e)
            base = mul(F, base, base, prec);
    }
    return result;
}

Series compose(const FiniteField& F, const FPoly& p, const Series& s, std::size_t prec)
{
    Series acc(prec, F.zero());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = mul(F, acc, s, prec);
        if (prec > 0)
            acc[0] = F.add(acc[0], p[i]);
    }
    return acc;
}

int order(const Series& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].v != 0)
            return static_cast<int>(i);
    return -1;
}

Series mth_root(const FiniteField& F, const Series& U, unsigned m, Elem v0, std::size_t prec)
{
    // Newton: V <- V - (V^m - U) / (m V^{m-1}); the precision doubles each step.
    Series V(prec, F.zero());
    V[0] = v0;
    const Elem m_el = F.from_int(m);
    require(m_el.v != 0, ErrorKind::BadCharacteristic, "m is not a unit");
    for (std::size_t have = 1; have < prec;) {
        have = std::min(prec, 2 * have);
        Series Vm1 = pow(F, V, m - 1, have);
        Series resid = sub(F, mul(F, Vm1, V, have), Series(U.begin(), U.begin() + std::min(U.size(), have)));
        resid.resize(have, F.zero());
        Series step = mul(F, resid, inv(F, scale(F, Vm1, m_el), have), have);
        for (std::size_t i = 0; i < have; ++i)
            V[i] = F.sub(V[i], step[i]);
    }
    return V;
}

} // namespace superjac::series
