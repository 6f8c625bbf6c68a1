#include "superjac/local.hpp"

#include <algorithm>
#include <set>

#include "superjac/error.hpp"

namespace superjac {

namespace {

// Smallest a >= 0 with 1 + a r = 0 mod m (requires gcd(m, r) = 1).
unsigned infinity_exponent(unsigned m, unsigned r)
{
    for (unsigned a = 0; a < m; ++a)
        if ((1 + static_cast<u64>(a) * r) % m == 0)
            return a;
    fail(ErrorKind::RequiresD1, "no parameter at infinity when gcd(m, r) > 1");
}

LocalExpansion expand_unramified(const CurveSpec& c, const Place& P, const FieldPtr& L, std::size_t prec)
{
    const FPoly F = fpoly::map(*embedding(c.field, L), c.F);
    LocalExpansion e;
    e.place = P;
    e.L = L;
    e.parameter = "x - x0";
    e.precision = prec;
    e.X.assign(prec, L->zero());
    e.X[0] = P.x;
    if (prec > 1)
        e.X[1] = L->one();
    Series U = fpoly::taylor_shift(*L, F, P.x);
    U.resize(prec, L->zero());
    e.Y = series::mth_root(*L, U, c.m, P.y, prec);
    return e;
}

LocalExpansion expand_ramified(const CurveSpec& c, const Place& P, const FieldPtr& L, std::size_t prec)
{
    const FPoly F = fpoly::map(*embedding(c.field, L), c.F);
    // x = x0 + u(T), T = y^m, with G(u(T)) = T for G(u) = F(x0 + u).
    const FPoly G = fpoly::taylor_shift(*L, F, P.x);
    const FPoly dG = fpoly::derivative(*L, G);
    const std::size_t tprec = prec / c.m + 1;
    Series u(tprec, L->zero());
    Series T(tprec, L->zero());
    if (tprec > 1)
        T[1] = L->one();
    for (std::size_t have = 1; have < tprec;) {
        have = std::min(tprec, 2 * have);
        Series Gu = series::compose(*L, G, u, have);
        Series dGu = series::compose(*L, dG, u, have);
        Series resid = series::sub(*L, Gu, Series(T.begin(), T.begin() + have));
        Series step = series::mul(*L, resid, series::inv(*L, dGu, have), have);
        for (std::size_t i = 0; i < have; ++i)
            u[i] = L->sub(u[i], step[i]);
    }
    LocalExpansion e;
    e.place = P;
    e.L = L;
    e.parameter = "y";
    e.precision = prec;
    e.X.assign(prec, L->zero());
    for (std::size_t k = 0; k < tprec && k * c.m < prec; ++k)
        e.X[k * c.m] = u[k];
    e.X[0] = L->add(e.X[0], P.x);
    e.Y.assign(prec, L->zero());
    if (prec > 1)
        e.Y[1] = L->one();
    return e;
}

LocalExpansion expand_infinity(const CurveSpec& c, const Place& P, std::size_t prec)
{
    require(c.d == 1, ErrorKind::RequiresD1, "individual infinite branches need gcd(m, r) = 1");
    const FiniteField& K = c.K();
    const unsigned a = infinity_exponent(c.m, c.r);
    const unsigned b = static_cast<unsigned>((1 + static_cast<u64>(a) * c.r) / c.m);
    const Elem cr = c.F.back();
    const Elem cx = K.pow(cr, a);
    const Elem w = K.pow(cr, b);
    // V^m = U(t) = sum_k (c_k / c_r) cx^{k - r} t^{m (r - k)}.
    Series U(prec, K.zero());
    const Elem cx_inv = K.inv(cx);
    for (unsigned k = 0; k <= c.r; ++k) {
        std::size_t pos = static_cast<std::size_t>(c.m) * (c.r - k);
        if (pos >= prec)
            continue;
        U[pos] = K.mul(K.div(c.F[k], cr), K.pow(cx_inv, c.r - k));
    }
    LocalExpansion e;
    e.place = P;
    e.L = c.field;
    e.parameter = "t";
    e.precision = prec;
    e.x_shift = -static_cast<int>(c.m);
    e.y_shift = -static_cast<int>(c.r);
    e.X.assign(prec, K.zero());
    e.X[0] = cx;
    e.Y = series::scale(K, series::mth_root(K, U, c.m, K.one(), prec), w);
    return e;
}

std::size_t start_precision(const CurveSpec& c) { return 2 * c.g + 4; }

} // namespace

LocalExpansion local_expansion(const CurveSpec& c, const Place& P, std::size_t precision)
{
    require(precision >= 1, ErrorKind::InvalidArgument, "precision must be positive");
    if (P.kind == Place::Kind::Infinity)
        return expand_infinity(c, P, precision);
    FieldPtr L = P.residue_field(c);
    return P.is_ramified() ? expand_ramified(c, P, L, precision) : expand_unramified(c, P, L, precision);
}

bool expansion_residual_ok(const CurveSpec& c, const LocalExpansion& e)
{
    const FiniteField& L = *e.L;
    const std::size_t n = e.precision;
    const FPoly F = fpoly::map(*embedding(c.field, e.L), c.F);
    Series lhs = series::pow(L, e.Y, c.m, n);
    Series rhs(n, L.zero());
    if (e.place.kind == Place::Kind::Infinity) {
        // t^{rm} (y^m - F(x)) = Y^m - sum_k c_k X^k t^{m (r - k)}.
        Series Xk(n, L.zero());
        Xk[0] = L.one();
        for (unsigned k = 0; k <= c.r; ++k) {
            std::size_t pos = static_cast<std::size_t>(c.m) * (c.r - k);
            for (std::size_t i = 0; i + pos < n; ++i)
                rhs[i + pos] = L.add(rhs[i + pos], L.mul(F[k], Xk[i]));
            Xk = series::mul(L, Xk, e.X, n);
        }
    } else {
        rhs = series::compose(L, F, e.X, n);
    }
    return lhs == rhs;
}

Series numerator_series(const CurveSpec& c, const FunctionRep& f, const LocalExpansion& e)
{
    const FiniteField& L = *e.L;
    const auto& emb = *embedding(c.field, e.L);
    const std::size_t n = e.precision;
    Series acc(n, L.zero());
    Series ypow(n, L.zero());
    ypow[0] = L.one();
    for (unsigned j = 0; j < c.m; ++j) {
        if (!f.num[j].empty())
            acc = series::add(L, acc, series::mul(L, series::compose(L, fpoly::map(emb, f.num[j]), e.X, n), ypow, n));
        if (j + 1 < c.m)
            ypow = series::mul(L, ypow, e.Y, n);
    }
    return acc;
}

namespace {

int valuation_at_infinity(const CurveSpec& c, const FunctionRep& f)
{
    // Branch valuation of x^i y^j is -(i m + j r) / d; distinct j never collide when d = 1.
    long best = 0;
    int count = 0;
    for (unsigned j = 0; j < c.m; ++j) {
        if (f.num[j].empty())
            continue;
        long pole = static_cast<long>(fpoly::degree(f.num[j])) * c.m + static_cast<long>(j) * c.r;
        if (count == 0 || pole > best) {
            best = pole;
            count = 1;
        } else if (pole == best) {
            ++count;
        }
    }
    require(count == 1, ErrorKind::UnsupportedCollision, "leading terms collide at infinity");
    long den_pole = static_cast<long>(fpoly::degree(f.den)) * c.m;
    return static_cast<int>((den_pole - best) / static_cast<long>(c.d));
}

} // namespace

int valuation(const CurveSpec& c, const FunctionRep& f, const Place& P)
{
    require(!f.is_zero(), ErrorKind::ZeroFunction, "valuation of the zero function");
    if (P.kind == Place::Kind::Infinity)
        return valuation_at_infinity(c, f);
    FieldPtr L = P.residue_field(c);
    const unsigned ex = P.x_order(c);
    int den_val = static_cast<int>(ex * fpoly::root_multiplicity(*L, fpoly::map(*embedding(c.field, L), f.den), P.x));
    if (fn::evaluate_num(c, f, L, P.x, P.y).v != 0)
        return -den_val;
    for (std::size_t prec = start_precision(c); prec <= kMaxPrecision; prec *= 2) {
        LocalExpansion e = local_expansion(c, P, prec);
        int o = series::order(numerator_series(c, f, e));
        if (o >= 0)
            return o - den_val;
    }
    fail(ErrorKind::PrecisionExhausted, "numerator vanishes to precision " + std::to_string(kMaxPrecision));
}

std::vector<Place> fiber(const CurveSpec& c, const FieldPtr& M, Elem x0)
{
    const FPoly F = fpoly::map(*embedding(c.field, M), c.F);
    const Elem w = fpoly::eval(*M, F, x0);
    std::vector<Place> out;
    if (w.v == 0) {
        out.push_back(make_place(c, M, x0, M->zero()));
        return out;
    }
    // Places over x0 <-> irreducible factors of Y^m - w over M.
    FPoly Ym(c.m + 1, M->zero());
    Ym[0] = M->neg(w);
    Ym[c.m] = M->one();
    auto parts = fpoly::distinct_degree_parts(*M, Ym);
    std::set<Place> seen;
    const unsigned e = M->degree();
    for (unsigned s = 1; s < parts.size(); ++s) {
        if (parts[s].size() <= 1)
            continue;
        u64 size = 0;
        require(checked_pow(M->characteristic(), e * s, size), ErrorKind::Unsupported,
                "place degree exceeds the packed field range");
        FieldPtr T = field(M->characteristic(), e * s);
        auto emb = compatible_embedding(c.field, M, T);
        Elem tx = (*emb)(x0);
        for (Elem yv : fpoly::roots(*T, fpoly::map(*emb, parts[s])))
            seen.insert(make_place(c, T, tx, yv));
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

std::vector<Place> places_over_zeros(const CurveSpec& c, const FPoly& h)
{
    const FiniteField& K = c.K();
    std::set<Place> out;
    if (fpoly::degree(h) < 1)
        return {};
    auto parts = fpoly::distinct_degree_parts(K, h);
    const unsigned e = K.degree();
    for (unsigned k = 1; k < parts.size(); ++k) {
        if (parts[k].size() <= 1)
            continue;
        u64 size = 0;
        require(checked_pow(K.characteristic(), e * k, size), ErrorKind::Unsupported,
                "place degree exceeds the packed field range");
        FieldPtr M = field(K.characteristic(), e * k);
        std::set<Elem> reps;
        for (Elem x0 : fpoly::roots(*M, fpoly::map(*embedding(c.field, M), parts[k]))) {
            // Keep one root per orbit with exact degree k.
            Elem best = x0, cur = x0;
            bool exact = true;
            for (unsigned i = 1; i < k; ++i) {
                cur = M->frobenius(cur, e);
                if (cur == x0) {
                    exact = false;
                    break;
                }
                best = std::min(best, cur);
            }
            if (exact)
                reps.insert(best);
        }
        for (Elem x0 : reps)
            for (const Place& P : fiber(c, M, x0))
                out.insert(P);
    }
    return {out.begin(), out.end()};
}

FPoly x_minimal_polynomial(const CurveSpec& c, const Place& P)
{
    require(P.is_affine(), ErrorKind::InvalidArgument, "minimal polynomial of x at infinity");
    const FiniteField& K = c.K();
    FieldPtr M = P.residue_field(c);
    const unsigned e = K.degree();
    FPoly prod{M->one()};
    Elem cur = P.x;
    std::set<Elem> seen;
    while (seen.insert(cur).second) {
        prod = fpoly::mul(*M, prod, fpoly::linear(*M, cur));
        cur = M->frobenius(cur, e);
    }
    auto emb = embedding(c.field, M);
    FPoly out;
    for (Elem v : prod)
        out.push_back(emb->preimage(v));
    return out;
}

Divisor principal_divisor(const CurveSpec& c, const FunctionRep& f_in)
{
    require(!f_in.is_zero(), ErrorKind::ZeroFunction, "divisor of the zero function");
    FunctionRep f = fn::normalize(c, f_in);
    Divisor D;
    D.add(Place::infinity(c), valuation(c, f, Place::infinity(c)));
    FPoly support = fpoly::mul(c.K(), fn::norm(c, f.num), f.den);
    for (const Place& P : places_over_zeros(c, support))
        D.add(P, valuation(c, f, P));
    require(D.degree(c) == 0, ErrorKind::InvariantViolation, "principal divisor of nonzero degree: " + D.to_string());
    return D;
}

} // namespace superjac
