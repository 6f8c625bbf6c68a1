#include "superjac/divisor.hpp"

#include <algorithm>
#include <sstream>

#include "superjac/error.hpp"

namespace superjac {

Place Place::ramification(const CurveSpec& c, unsigned i)
{
    require(i < c.roots.size(), ErrorKind::RootsUnavailable, "no base-field root with index " + std::to_string(i + 1));
    Place p;
    p.kind = Kind::Ramification;
    p.index = i;
    p.degree = 1;
    p.x = c.roots[i];
    p.y = Elem{0};
    return p;
}

Place Place::infinity(const CurveSpec& c)
{
    Place p;
    p.kind = Kind::Infinity;
    p.degree = c.d;
    return p;
}

FieldPtr Place::residue_field(const CurveSpec& c) const
{
    return field(c.K().characteristic(), c.K().degree() * (kind == Kind::Infinity ? 1 : degree));
}

std::string Place::to_string() const
{
    switch (kind) {
    case Kind::Ramification:
        return "R" + std::to_string(index + 1);
    case Kind::Infinity:
        return "inf";
    case Kind::Closed:
        break;
    }
    std::ostringstream s;
    s << "P" << degree << "(" << x.v << "," << y.v << ")";
    return s.str();
}

bool on_curve(const CurveSpec& c, const FieldPtr& L, Elem x, Elem y)
{
    FPoly F = fpoly::map(*embedding(c.field, L), c.F);
    return L->pow(y, c.m) == fpoly::eval(*L, F, x);
}

Place make_place(const CurveSpec& c, const FieldPtr& L, Elem x, Elem y)
{
    const unsigned e = c.K().degree();
    require(L->degree() % e == 0, ErrorKind::ContextMismatch, "coordinate field does not contain the base field");
    const unsigned big = L->degree() / e;
    // Exact degree: smallest D | big with both coordinates fixed by the |K|^D-power map.
    unsigned D = big;
    for (unsigned cand = 1; cand <= big; ++cand) {
        if (big % cand)
            continue;
        if (L->frobenius(x, e * cand) == x && L->frobenius(y, e * cand) == y) {
            D = cand;
            break;
        }
    }
    FieldPtr M = field(c.K().characteristic(), e * D);
    Elem mx = x, my = y;
    if (M.get() != L.get()) {
        auto emb = compatible_embedding(c.field, M, L);
        mx = emb->preimage(x);
        my = emb->preimage(y);
    }
    if (D == 1 && my.v == 0) {
        auto it = std::find(c.roots.begin(), c.roots.end(), mx);
        require(it != c.roots.end(), ErrorKind::InvariantViolation, "rational point with y = 0 off the root list");
        return Place::ramification(c, static_cast<unsigned>(it - c.roots.begin()));
    }
    Place p;
    p.kind = Place::Kind::Closed;
    p.degree = D;
    p.x = mx;
    p.y = my;
    Elem cx = mx, cy = my;
    for (unsigned i = 1; i < D; ++i) {
        cx = M->frobenius(cx, e);
        cy = M->frobenius(cy, e);
        if (std::tie(cx, cy) < std::tie(p.x, p.y)) {
            p.x = cx;
            p.y = cy;
        }
    }
    return p;
}

void Divisor::add(const Place& p, i64 coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

i64 Divisor::coeff(const Place& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

i64 Divisor::degree(const CurveSpec& /*c*/) const
{
    i64 s = 0;
    for (const auto& [p, k] : terms_)
        s += k * static_cast<i64>(p.degree);
    return s;
}

bool Divisor::is_effective() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Divisor Divisor::positive_part() const
{
    Divisor out;
    for (const auto& [p, k] : terms_)
        if (k > 0)
            out.terms_.emplace(p, k);
    return out;
}

Divisor Divisor::negative_part() const
{
    Divisor out;
    for (const auto& [p, k] : terms_)
        if (k < 0)
            out.terms_.emplace(p, -k);
    return out;
}

Divisor Divisor::affine_part() const
{
    Divisor out;
    for (const auto& [p, k] : terms_)
        if (p.is_affine())
            out.terms_.emplace(p, k);
    return out;
}

Divisor Divisor::operator+(const Divisor& o) const
{
    Divisor out = *this;
    for (const auto& [p, k] : o.terms_)
        out.add(p, k);
    return out;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator-() const { return scaled(-1); }

Divisor Divisor::scaled(i64 k) const
{
    Divisor out;
    if (k == 0)
        return out;
    for (const auto& [p, c] : terms_)
        out.terms_.emplace(p, c * k);
    return out;
}

std::string Divisor::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& [p, k] : terms_) {
        if (!first)
            s << (k < 0 ? " - " : " + ");
        else if (k < 0)
            s << "-";
        first = false;
        i64 a = k < 0 ? -k : k;
        if (a != 1)
            s << a << "*";
        s << p.to_string();
    }
    return s.str();
}

std::vector<Divisor> delta_generators(const CurveSpec& c)
{
    require(c.split(), ErrorKind::RootsUnavailable, "F does not split over the base field");
    std::vector<Divisor> gens;
    const unsigned last = c.r - 2; // R_{r-1}, 0-based
    for (unsigned i = 0; i + 2 < c.r; ++i)
        gens.push_back(Divisor(Place::ramification(c, i)) - Divisor(Place::ramification(c, last)));
    gens.push_back(Divisor(Place::ramification(c, last), c.d) - Divisor(Place::infinity(c)));
    return gens;
}

} // namespace superjac
