#include "superjac/curve.hpp"

#include <numeric>
#include <sstream>

#include "superjac/error.hpp"

namespace superjac {

GenusData genus_data(unsigned m, unsigned r)
{
    require(m >= 2, ErrorKind::InvalidArgument, "m must be at least 2");
    require(r >= 1, ErrorKind::InvalidArgument, "deg F must be positive");
    GenusData out;
    out.r = r;
    out.d = std::gcd(m, r);
    const unsigned twice = (m - 1) * (r - 1) - (out.d - 1);
    require(twice % 2 == 0, ErrorKind::InvariantViolation, "genus numerator is odd");
    out.g = twice / 2;
    return out;
}

std::string CurveSpec::canonical() const
{
    std::ostringstream s;
    s << m << "; [";
    for (std::size_t i = 0; i < F.size(); ++i)
        s << (i ? "," : "") << F[i].v;
    s << "]; " << field->name();
    return s.str();
}

CurveSpec make_curve(unsigned m, const FPoly& F_in, FieldPtr K)
{
    FPoly F = F_in;
    fpoly::trim(F);
    require(m >= 2, ErrorKind::InvalidArgument, "m must be at least 2");
    require(fpoly::degree(F) >= 2, ErrorKind::InvalidArgument, "deg F must be at least 2");
    require(m % K->characteristic() != 0, ErrorKind::BadCharacteristic,
            "characteristic " + std::to_string(K->characteristic()) + " divides m");
    require(fpoly::is_squarefree(*K, F), ErrorKind::NotSeparable, "F has a repeated factor");
    CurveSpec c;
    c.m = m;
    c.field = std::move(K);
    c.F = std::move(F);
    auto gd = genus_data(m, static_cast<unsigned>(fpoly::degree(c.F)));
    c.r = gd.r;
    c.d = gd.d;
    c.g = gd.g;
    c.roots = fpoly::roots(*c.field, c.F);
    return c;
}

CurveSpec make_curve(unsigned m, const std::vector<i64>& coeffs, FieldPtr K)
{
    FPoly F = fpoly::from_ints(*K, coeffs);
    return make_curve(m, F, std::move(K));
}

CurveSpec make_curve_from_roots(unsigned m, const std::vector<Elem>& roots, FieldPtr K)
{
    FPoly F{K->one()};
    for (Elem a : roots)
        F = fpoly::mul(*K, F, fpoly::linear(*K, a));
    CurveSpec c = make_curve(m, F, K);
    c.roots = roots;
    return c;
}

CurveSpec base_change(const CurveSpec& c, unsigned ext)
{
    if (ext == 1)
        return c;
    FieldPtr L = field(c.K().characteristic(), c.K().degree() * ext);
    return make_curve(c.m, fpoly::map(*embedding(c.field, L), c.F), L);
}

CurveSpec split_base_change(const CurveSpec& c, unsigned max_degree)
{
    if (c.split())
        return c;
    auto parts = fpoly::distinct_degree_parts(c.K(), c.F);
    unsigned ext = 1;
    for (unsigned k = 1; k < parts.size(); ++k)
        if (parts[k].size() > 1)
            ext = std::lcm(ext, k);
    require(ext <= max_degree, ErrorKind::RootsUnavailable,
            "splitting field of degree " + std::to_string(ext) + " is too large");
    CurveSpec out = base_change(c, ext);
    require(out.split(), ErrorKind::InvariantViolation, "F does not split over its splitting field");
    return out;
}

// ---- rational curves ----

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b)
{
    qtrim(a);
    while (a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= c * b[k];
        qtrim(a);
    }
    return a;
}

} // namespace

std::string RationalCurve::canonical() const
{
    std::ostringstream s;
    s << m << "; [";
    for (std::size_t i = 0; i < F.size(); ++i)
        s << (i ? "," : "") << F[i].get_str();
    s << "]; Q";
    return s.str();
}

RationalCurve make_rational_curve(unsigned m, QPoly F)
{
    qtrim(F);
    require(m >= 2, ErrorKind::InvalidArgument, "m must be at least 2");
    require(F.size() >= 3, ErrorKind::InvalidArgument, "deg F must be at least 2");
    QPoly dF;
    for (std::size_t i = 1; i < F.size(); ++i)
        dF.push_back(F[i] * static_cast<unsigned long>(i));
    QPoly a = F, b = dF;
    while (!b.empty()) {
        a = qmod(a, b);
        std::swap(a, b);
    }
    require(a.size() == 1, ErrorKind::NotSeparable, "F has a repeated factor over Q");
    RationalCurve c;
    c.m = m;
    c.F = std::move(F);
    auto gd = genus_data(m, static_cast<unsigned>(c.F.size() - 1));
    c.r = gd.r;
    c.d = gd.d;
    c.g = gd.g;
    return c;
}

std::optional<CurveSpec> reduce_mod(const RationalCurve& c, u64 p)
{
    if (!is_prime_u64(p) || c.m % p == 0)
        return std::nullopt;
    FieldPtr K = field(p);
    const mpz_class P(static_cast<unsigned long>(p));
    std::vector<i64> coeffs;
    for (const auto& v : c.F) {
        if (mpz_divisible_p(v.get_den_mpz_t(), P.get_mpz_t()))
            return std::nullopt;
        mpz_class inv_den, num = v.get_num() % P;
        mpz_invert(inv_den.get_mpz_t(), mpz_class(v.get_den() % P).get_mpz_t(), P.get_mpz_t());
        mpz_class red = (num * inv_den) % P;
        if (red < 0)
            red += P;
        coeffs.push_back(static_cast<i64>(red.get_ui()));
    }
    if (coeffs.back() == 0)
        return std::nullopt;
    FPoly F = fpoly::from_ints(*K, coeffs);
    if (!fpoly::is_squarefree(*K, F))
        return std::nullopt;
    return make_curve(c.m, F, K);
}

std::vector<i64> parse_int_list(const std::string& text)
{
    std::string body;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ')
            body += ch;
    std::vector<i64> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoll(item));
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidArgument, "cannot parse integer list '" + text + "'");
        }
    return out;
}

} // namespace superjac
