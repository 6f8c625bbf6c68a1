#include "superjac/function.hpp"

#include <sstream>

#include "superjac/error.hpp"

namespace superjac {

bool FunctionRep::is_zero() const
{
    for (const auto& p : num)
        if (!p.empty())
            return false;
    return true;
}

} // namespace superjac

namespace superjac::fn {

namespace {

using PolyMatrix = std::vector<std::vector<FPoly>>;

// Coefficients of (sum num_j y^j) * y^k reduced by y^m = F.
std::vector<FPoly> times_y_power(const CurveSpec& c, const std::vector<FPoly>& num, unsigned k)
{
    const FiniteField& K = c.K();
    std::vector<FPoly> out(c.m);
    for (unsigned j = 0; j < c.m; ++j) {
        if (num[j].empty())
            continue;
        unsigned e = j + k;
        FPoly term = num[j];
        while (e >= c.m) {
            term = fpoly::mul(K, term, c.F);
            e -= c.m;
        }
        out[e] = fpoly::add(K, out[e], term);
    }
    return out;
}

PolyMatrix mult_matrix(const CurveSpec& c, const std::vector<FPoly>& num)
{
    PolyMatrix M(c.m, std::vector<FPoly>(c.m));
    for (unsigned k = 0; k < c.m; ++k) {
        auto col = times_y_power(c, num, k);
        for (unsigned j = 0; j < c.m; ++j)
            M[j][k] = col[j];
    }
    return M;
}

// Fraction-free (Bareiss) determinant over K[x].
FPoly bareiss_det(const FiniteField& K, PolyMatrix a)
{
    const std::size_t n = a.size();
    FPoly prev{K.one()};
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].empty())
            ++piv;
        if (piv == n)
            return {};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                FPoly t = fpoly::sub(K, fpoly::mul(K, a[i][j], a[k][k]), fpoly::mul(K, a[i][k], a[k][j]));
                a[i][j] = fpoly::exact_div(K, t, prev);
            }
            a[i][k].clear();
        }
        prev = a[k][k];
    }
    FPoly det = a[n - 1][n - 1];
    return negate ? fpoly::neg(K, det) : det;
}

FPoly poly_gcd_all(const FiniteField& K, const FunctionRep& f)
{
    FPoly g = f.den;
    for (const auto& p : f.num)
        if (!p.empty())
            g = fpoly::gcd(K, g, p);
    return g;
}

} // namespace

FunctionRep from_num(const CurveSpec& c, std::vector<FPoly> num)
{
    require(num.size() <= c.m, ErrorKind::InvalidArgument, "y-degree must be below m");
    num.resize(c.m);
    for (auto& p : num)
        fpoly::trim(p);
    return FunctionRep{std::move(num), FPoly{c.K().one()}};
}

FunctionRep from_poly(const CurveSpec& c, const FPoly& p) { return from_num(c, {p}); }

FunctionRep constant(const CurveSpec& c, Elem value) { return from_poly(c, FPoly{value}); }

FunctionRep monomial(const CurveSpec& c, unsigned i, unsigned j)
{
    require(j < c.m, ErrorKind::InvalidArgument, "y-degree must be below m");
    std::vector<FPoly> num(c.m);
    num[j] = fpoly::monomial(c.K(), c.K().one(), i);
    return from_num(c, std::move(num));
}

FunctionRep x_minus(const CurveSpec& c, Elem a) { return from_poly(c, fpoly::linear(c.K(), a)); }

FunctionRep y(const CurveSpec& c) { return monomial(c, 0, 1); }

FunctionRep normalize(const CurveSpec& c, FunctionRep f)
{
    const FiniteField& K = c.K();
    require(!f.den.empty(), ErrorKind::ZeroFunction, "zero denominator");
    if (f.is_zero())
        return from_num(c, {});
    FPoly g = poly_gcd_all(K, f);
    if (g.size() > 1) {
        f.den = fpoly::exact_div(K, f.den, g);
        for (auto& p : f.num)
            if (!p.empty())
                p = fpoly::exact_div(K, p, g);
    }
    Elem lead = f.den.back();
    if (lead != K.one()) {
        Elem inv = K.inv(lead);
        f.den = fpoly::scale(K, f.den, inv);
        for (auto& p : f.num)
            p = fpoly::scale(K, p, inv);
    }
    return f;
}

FunctionRep add(const CurveSpec& c, const FunctionRep& f, const FunctionRep& g)
{
    const FiniteField& K = c.K();
    FunctionRep out;
    out.num.resize(c.m);
    out.den = fpoly::mul(K, f.den, g.den);
    for (unsigned j = 0; j < c.m; ++j)
        out.num[j] = fpoly::add(K, fpoly::mul(K, f.num[j], g.den), fpoly::mul(K, g.num[j], f.den));
    return normalize(c, std::move(out));
}

FunctionRep mul(const CurveSpec& c, const FunctionRep& f, const FunctionRep& g)
{
    const FiniteField& K = c.K();
    FunctionRep out;
    out.num.assign(c.m, {});
    for (unsigned k = 0; k < c.m; ++k) {
        if (g.num[k].empty())
            continue;
        auto shifted = times_y_power(c, f.num, k);
        for (unsigned j = 0; j < c.m; ++j)
            out.num[j] = fpoly::add(K, out.num[j], fpoly::mul(K, shifted[j], g.num[k]));
    }
    out.den = fpoly::mul(K, f.den, g.den);
    return normalize(c, std::move(out));
}

FunctionRep scale(const CurveSpec& c, const FunctionRep& f, Elem k)
{
    FunctionRep out = f;
    for (auto& p : out.num)
        p = fpoly::scale(c.K(), p, k);
    return normalize(c, std::move(out));
}

FunctionRep pow(const CurveSpec& c, const FunctionRep& f, unsigned e)
{
    FunctionRep result = constant(c, c.K().one());
    FunctionRep base = f;
    while (e) {
        if (e & 1)
            result = mul(c, result, base);
        e >>= 1;
        if (e)
            base = mul(c, base, base);
    }
    return result;
}

FPoly norm(const CurveSpec& c, const std::vector<FPoly>& num) { return bareiss_det(c.K(), mult_matrix(c, num)); }

FunctionRep inverse(const CurveSpec& c, const FunctionRep& f)
{
    require(!f.is_zero(), ErrorKind::ZeroFunction, "inverse of the zero function");
    const FiniteField& K = c.K();
    PolyMatrix M = mult_matrix(c, f.num);
    FPoly det = bareiss_det(K, M);
    require(!det.empty(), ErrorKind::InvariantViolation, "nonzero function with zero norm");
    FunctionRep out;
    out.num.resize(c.m);
    for (unsigned j = 0; j < c.m; ++j) {
        PolyMatrix Mj = M;
        for (unsigned i = 0; i < c.m; ++i)
            Mj[i][j] = i == 0 ? FPoly{K.one()} : FPoly{};
        out.num[j] = fpoly::mul(K, bareiss_det(K, Mj), f.den);
    }
    out.den = det;
    return normalize(c, std::move(out));
}

FunctionRep div(const CurveSpec& c, const FunctionRep& f, const FunctionRep& g) { return mul(c, f, inverse(c, g)); }

Elem evaluate_num(const CurveSpec& c, const FunctionRep& f, const FieldPtr& L, Elem x, Elem y)
{
    const auto& emb = *embedding(c.field, L);
    Elem acc = L->zero();
    Elem ypow = L->one();
    for (unsigned j = 0; j < c.m; ++j) {
        if (!f.num[j].empty())
            acc = L->add(acc, L->mul(fpoly::eval(*L, fpoly::map(emb, f.num[j]), x), ypow));
        ypow = L->mul(ypow, y);
    }
    return acc;
}

Elem evaluate(const CurveSpec& c, const FunctionRep& f, const FieldPtr& L, Elem x, Elem y)
{
    Elem d = fpoly::eval(*L, fpoly::map(*embedding(c.field, L), f.den), x);
    require(d.v != 0, ErrorKind::InvalidArgument, "evaluation at a pole of the denominator");
    return L->div(evaluate_num(c, f, L, x, y), d);
}

std::string to_string(const FunctionRep& f)
{
    auto poly = [](const FPoly& p) {
        std::ostringstream s;
        s << "[";
        for (std::size_t i = 0; i < p.size(); ++i)
            s << (i ? "," : "") << p[i].v;
        s << "]";
        return s.str();
    };
    std::ostringstream s;
    s << "(";
    bool first = true;
    for (std::size_t j = 0; j < f.num.size(); ++j) {
        if (f.num[j].empty())
            continue;
        s << (first ? "" : " + ") << poly(f.num[j]) << "*y^" << j;
        first = false;
    }
    if (first)
        s << "0";
    s << ") / " << poly(f.den);
    return s.str();
}

} // namespace superjac::fn
