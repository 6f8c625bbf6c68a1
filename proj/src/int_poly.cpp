#include "superjac/int_poly.hpp"

#include <algorithm>

#include "superjac/error.hpp"

namespace superjac::ipoly {

void trim(IntPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

IntPoly from_ints(const std::vector<long>& c)
{
    IntPoly out(c.begin(), c.end());
    trim(out);
    return out;
}

IntPoly add(const IntPoly& a, const IntPoly& b)
{
    IntPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    trim(out);
    return out;
}

IntPoly sub(const IntPoly& a, const IntPoly& b)
{
    IntPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

IntPoly exact_div_monic(const IntPoly& a, const IntPoly& b)
{
    require(!b.empty() && b.back() == 1, ErrorKind::InvalidArgument, "divisor must be monic");
    IntPoly r = a;
    trim(r);
    if (r.size() < b.size()) {
        require(r.empty(), ErrorKind::InvariantViolation, "inexact division");
        return {};
    }
    IntPoly q(r.size() - b.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class c = r[i + b.size() - 1];
        q[i] = c;
        if (c != 0)
            for (std::size_t k = 0; k < b.size(); ++k)
                r[i + k] -= c * b[k];
    }
    trim(r);
    require(r.empty(), ErrorKind::InvariantViolation, "inexact division");
    trim(q);
    return q;
}

mpz_class eval(const IntPoly& a, const mpz_class& x)
{
    mpz_class acc = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        acc = acc * x + a[i];
    return acc;
}

std::string to_string(const IntPoly& a)
{
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ",";
        s += a[i].get_str();
    }
    if (a.empty())
        s += "0";
    return s + "]";
}

} // namespace superjac::ipoly
