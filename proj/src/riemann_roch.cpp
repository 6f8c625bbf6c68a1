#include "superjac/riemann_roch.hpp"

#include <algorithm>

#include "superjac/error.hpp"
#include "superjac/linalg.hpp"

namespace superjac {

RiemannRoch::RiemannRoch(const CurveSpec& c) : c_(c)
{
    require(c.d == 1, ErrorKind::RequiresD1, "Riemann-Roch spaces need a single place at infinity");
}

const RiemannRoch::PlaceData& RiemannRoch::data(const Place& P, std::size_t precision, unsigned max_i)
{
    auto it = cache_.find(P);
    if (it != cache_.end() && it->second.expansion.precision >= precision && it->second.xpow.size() > max_i)
        return it->second;
    std::size_t prec = precision;
    unsigned top = max_i;
    if (it != cache_.end()) {
        prec = std::max(prec, it->second.expansion.precision);
        top = std::max<unsigned>(top, static_cast<unsigned>(it->second.xpow.size()) - 1);
    }
    PlaceData pd{local_expansion(c_, P, prec), {}, {}};
    const FiniteField& L = *pd.expansion.L;
    Series one(prec, L.zero());
    one[0] = L.one();
    pd.xpow.push_back(one);
    for (unsigned i = 1; i <= top; ++i)
        pd.xpow.push_back(series::mul(L, pd.xpow.back(), pd.expansion.X, prec));
    pd.ypow.push_back(one);
    for (unsigned j = 1; j < c_.m; ++j)
        pd.ypow.push_back(series::mul(L, pd.ypow.back(), pd.expansion.Y, prec));
    return cache_[P] = std::move(pd);
}

std::vector<FunctionRep> RiemannRoch::space(i64 N, const Divisor& E)
{
    require(E.is_effective(), ErrorKind::InvalidArgument, "E must be effective");
    require(E.affine_part() == E, ErrorKind::InvalidArgument, "E must be supported on affine places");
    if (N < 0)
        return {};
    struct Mono {
        unsigned i, j;
        i64 pole;
    };
    std::vector<Mono> monos;
    for (unsigned j = 0; j < c_.m; ++j)
        for (unsigned i = 0; pole(i, j) <= N; ++i)
            monos.push_back({i, j, pole(i, j)});
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) { return a.pole > b.pole; });
    unsigned max_i = 0;
    for (const auto& mo : monos)
        max_i = std::max(max_i, mo.i);

    const FiniteField& K = c_.K();
    const std::size_t cols = monos.size();
    FMatrix rows;
    for (const auto& [P, k] : E.terms()) {
        const auto prec = static_cast<std::size_t>(k);
        const PlaceData& pd = data(P, prec, max_i);
        const FieldPtr& Lp = pd.expansion.L;
        const FiniteField& L = *Lp;
        std::vector<Series> mono_series;
        for (const auto& mo : monos)
            mono_series.push_back(series::mul(L, pd.xpow[mo.i], pd.ypow[mo.j], prec));
        const bool same = Lp == c_.field;
        auto emb = embedding(c_.field, Lp);
        const unsigned e = K.degree();
        const unsigned rel = L.degree() / e;
        for (std::size_t t = 0; t < prec; ++t) {
            if (same) {
                std::vector<Elem> row(cols);
                for (std::size_t u = 0; u < cols; ++u)
                    row[u] = mono_series[u][t];
                rows.push_back(std::move(row));
                continue;
            }
            u64 theta = 1;
            for (unsigned s = 0; s < L.degree(); ++s, theta *= L.characteristic()) {
                std::vector<Elem> row(cols);
                for (std::size_t u = 0; u < cols; ++u) {
                    const Elem z = L.mul(Elem{theta}, mono_series[u][t]);
                    Elem tr = L.zero();
                    for (unsigned i = 0; i < rel; ++i)
                        tr = L.add(tr, L.frobenius(z, e * i));
                    row[u] = emb->preimage(tr);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    FMatrix kernel = nullspace(K, std::move(rows), cols);
    std::vector<FunctionRep> out;
    for (auto it = kernel.rbegin(); it != kernel.rend(); ++it) {
        std::vector<FPoly> num(c_.m);
        for (std::size_t u = 0; u < cols; ++u) {
            if ((*it)[u].v == 0)
                continue;
            FPoly& poly = num[monos[u].j];
            if (poly.size() <= monos[u].i)
                poly.resize(monos[u].i + 1, K.zero());
            poly[monos[u].i] = (*it)[u];
        }
        for (auto& poly : num)
            fpoly::trim(poly);
        out.push_back(fn::from_num(c_, std::move(num)));
    }
    return out;
}

FunctionRep RiemannRoch::minimal_function(const Divisor& E, i64* pole_order)
{
    const i64 n = E.degree(c_);
    auto basis = space(n + static_cast<i64>(c_.g), E);
    require(!basis.empty(), ErrorKind::InvariantViolation, "Riemann-Roch space below its guaranteed dimension");
    if (pole_order)
        *pole_order = -valuation(c_, basis.front(), Place::infinity(c_));
    return basis.front();
}

} // namespace superjac
