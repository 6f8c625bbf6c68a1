#include "superjac/picard.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "superjac/error.hpp"

namespace superjac {

// ---------------------------------------------------------------------------
// Principality

PrincipalityResult is_principal(const CurveSpec& c, const Divisor& D)
{
    RiemannRoch rr(c);
    return is_principal(rr, D);
}

PrincipalityResult is_principal(RiemannRoch& rr, const Divisor& D)
{
    const CurveSpec& c = rr.curve();
    require(D.degree(c) == 0, ErrorKind::InvalidArgument, "principality needs a degree-0 divisor");
    const Divisor neg = D.negative_part().affine_part();
    const Divisor pos = D.positive_part().affine_part();

    // h = prod pi^{e_pi} has ord_P(h) >= D^-_P at every affine pole of D.
    std::map<FPoly, i64> clearing;
    for (const auto& [P, k] : neg.terms()) {
        const i64 ex = P.x_order(c);
        i64& e = clearing[x_minimal_polynomial(c, P)];
        e = std::max(e, (k + ex - 1) / ex);
    }
    const FiniteField& K = c.K();
    FPoly h{K.one()};
    Divisor div_h;
    for (const auto& [pi, e] : clearing) {
        h = fpoly::mul(K, h, fpoly::pow(K, pi, static_cast<unsigned>(e)));
        for (const Place& P : places_over_zeros(c, pi))
            div_h.add(P, e * P.x_order(c));
    }
    const Divisor E = pos + div_h - neg;
    require(E.is_effective(), ErrorKind::InvariantViolation, "cleared divisor is not effective");
    const i64 n = E.degree(c);
    auto basis = rr.space(n, E);
    if (basis.empty())
        return {};

    // div(G) >= E - n inf and both sides have degree 0, so checking the pole order and the
    // orders on supp E pins div(G) down exactly.
    const FunctionRep& G = basis.front();
    require(valuation(c, G, Place::infinity(c)) == -n, ErrorKind::InvariantViolation, "witness has the wrong pole order");
    for (const auto& [P, k] : E.terms())
        require(valuation(c, G, P) >= k, ErrorKind::InvariantViolation, "witness misses a zero of E");
    FunctionRep f = fn::normalize(c, FunctionRep{G.num, h});
    for (const auto& [P, k] : D.terms())
        require(valuation(c, f, P) == k, ErrorKind::InvariantViolation, "witness divisor differs at " + P.to_string());
    return {true, f};
}

// ---------------------------------------------------------------------------
// Places

std::vector<Place> enumerate_places(const CurveSpec& c, unsigned max_degree, u64 budget)
{
    const u64 p = c.K().characteristic();
    const unsigned e = c.K().degree();
    std::vector<Place> out;
    for (unsigned b = 1; b <= max_degree; ++b) {
        u64 size = 0;
        require(checked_pow(p, e * b, size) && size <= budget && size <= FiniteField::kTableLimit,
                ErrorKind::BudgetExceeded, "place enumeration over degree " + std::to_string(b) + " exceeds the budget");
        FieldPtr Lp = field(p, e * b);
        const FiniteField& L = *Lp;
        const FPoly F = fpoly::map(*embedding(c.field, Lp), c.F);
        std::set<Place> found;
        for (u64 v = 0; v < size; ++v) {
            Elem w = F.back();
            for (std::size_t i = F.size() - 1; i-- > 0;)
                w = L.add(L.mul(w, Elem{v}), F[i]);
            for (Elem y : L.roots_of_power(w, c.m)) {
                Place P = make_place(c, Lp, Elem{v}, y);
                if (P.degree == b)
                    found.insert(P);
            }
        }
        out.insert(out.end(), found.begin(), found.end());
    }
    if (c.d == 1)
        out.push_back(Place::infinity(c));
    return out;
}

// ---------------------------------------------------------------------------
// Group structures

mpz_class GroupStructure::order() const
{
    mpz_class n = 1;
    for (const auto& d : invariants)
        n *= d;
    return n;
}

mpz_class GroupStructure::exponent() const { return invariants.empty() ? mpz_class(1) : invariants.back(); }

std::vector<mpz_class> GroupStructure::elementary_divisors() const
{
    std::vector<mpz_class> out;
    for (const auto& d : invariants) {
        for (const auto& l : prime_divisors(d)) {
            mpz_class pp = 1, rest = d;
            while (rest % l == 0) {
                rest /= l;
                pp *= l;
            }
            out.push_back(pp);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroupStructure GroupStructure::from_elementary(std::vector<mpz_class> prime_powers)
{
    std::map<mpz_class, std::vector<mpz_class>> by_prime;
    for (const auto& pp : prime_powers) {
        if (pp == 1)
            continue;
        by_prime[prime_divisors(pp).front()].push_back(pp);
    }
    std::size_t t = 0;
    for (auto& [l, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        t = std::max(t, v.size());
    }
    GroupStructure g;
    g.invariants.assign(t, 1);
    for (const auto& [l, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i)
            g.invariants[t - 1 - i] *= v[i];
    return g;
}

GroupStructure GroupStructure::power(unsigned k) const
{
    std::vector<mpz_class> all;
    auto el = elementary_divisors();
    for (unsigned i = 0; i < k; ++i)
        all.insert(all.end(), el.begin(), el.end());
    return from_elementary(std::move(all));
}

std::string GroupStructure::to_string() const
{
    if (invariants.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < invariants.size(); ++i)
        s += (i ? " x Z/" : "Z/") + invariants[i].get_str();
    return s;
}

// ---------------------------------------------------------------------------
// Class table

DivisorClassTable::DivisorClassTable(const CurveSpec& c, std::vector<Place> places) : c_(c), rr_(c)
{
    for (const Place& P : places)
        if (P.is_affine() && P.degree <= c.g)
            affine_.push_back(P);
    // All effective affine divisors of degree <= g, by increasing degree.
    std::vector<std::vector<Divisor>> by_degree(c.g + 1);
    std::function<void(std::size_t, unsigned, Divisor&)> walk = [&](std::size_t from, unsigned deg, Divisor& cur) {
        by_degree[deg].push_back(cur);
        for (std::size_t i = from; i < affine_.size(); ++i) {
            if (deg + affine_[i].degree > c.g)
                continue;
            cur.add(affine_[i], 1);
            walk(i, deg + affine_[i].degree, cur);
            cur.add(affine_[i], -1);
        }
    };
    Divisor start;
    walk(0, 0, start);
    for (const auto& level : by_degree)
        for (const Divisor& E : level)
            if (is_reduced(E)) {
                index_.emplace(E, reps_.size());
                reps_.push_back(E);
            }
}

bool DivisorClassTable::is_reduced(const Divisor& E)
{
    const i64 n = E.degree(c_);
    if (n > static_cast<i64>(c_.g))
        return false;
    return static_cast<i64>(rr_.dimension(2 * static_cast<i64>(c_.g) - 1, E)) == static_cast<i64>(c_.g) - n;
}

Divisor DivisorClassTable::class_divisor(std::size_t i) const
{
    Divisor D = reps_[i];
    D.add(Place::infinity(c_), -D.degree(c_));
    return D;
}

Divisor DivisorClassTable::negate(const Divisor& E)
{
    i64 N = 0;
    const FunctionRep f = rr_.minimal_function(E, &N);
    const i64 target = N - E.degree(c_);
    Divisor out;
    i64 found = 0;
    // Numerator mapped once per residue field.
    std::map<unsigned, std::vector<FPoly>> mapped;
    for (const Place& P : affine_) {
        FieldPtr L = P.residue_field(c_);
        auto it = mapped.find(L->degree());
        if (it == mapped.end()) {
            std::vector<FPoly> num;
            auto emb = embedding(c_.field, L);
            for (const auto& poly : f.num)
                num.push_back(fpoly::map(*emb, poly));
            it = mapped.emplace(L->degree(), std::move(num)).first;
        }
        const i64 have = E.coeff(P);
        if (have == 0) {
            Elem acc = L->zero(), ypow = L->one();
            for (const auto& poly : it->second) {
                if (!poly.empty())
                    acc = L->add(acc, L->mul(fpoly::eval(*L, poly, P.x), ypow));
                ypow = L->mul(ypow, P.y);
            }
            if (acc.v != 0)
                continue;
        }
        const i64 v = valuation(c_, f, P) - have;
        require(v >= 0, ErrorKind::InvariantViolation, "Riemann-Roch element misses a zero of E");
        if (v > 0) {
            out.add(P, v);
            found += v * P.degree;
        }
    }
    require(found == target, ErrorKind::InvariantViolation,
            "residual divisor has degree " + std::to_string(found) + ", expected " + std::to_string(target));
    return out;
}

std::size_t DivisorClassTable::index(const Divisor& E) const
{
    auto it = index_.find(E);
    require(it != index_.end(), ErrorKind::InvariantViolation, "reduced divisor missing from the table: " + E.to_string());
    return it->second;
}

std::size_t DivisorClassTable::class_of(const Divisor& E) { return index(negate(negate(E))); }
std::size_t DivisorClassTable::add(std::size_t i, std::size_t j) { return class_of(reps_[i] + reps_[j]); }
std::size_t DivisorClassTable::neg(std::size_t i) { return index(negate(reps_[i])); }

std::size_t DivisorClassTable::multiply(std::size_t i, u64 n)
{
    std::size_t result = zero(), base = i;
    while (n) {
        if (n & 1)
            result = add(result, base);
        n >>= 1;
        if (n)
            base = add(base, base);
    }
    return result;
}

GroupStructure group_structure(DivisorClassTable& table)
{
    const std::size_t n = table.size();
    std::vector<mpz_class> prime_powers;
    for (auto [l, v] : factorize(n)) {
        std::vector<std::size_t> times_l(n);
        for (std::size_t x = 0; x < n; ++x)
            times_l[x] = table.multiply(x, l);
        // ranks[i] = number of cyclic factors of order >= l^{i+1}.
        std::vector<unsigned> ranks;
        std::vector<std::size_t> cur(n);
        for (std::size_t x = 0; x < n; ++x)
            cur[x] = x;
        u64 prev = 1, full = 1;
        for (unsigned i = 0; i < v; ++i)
            full *= l;
        while (prev < full) {
            for (auto& x : cur)
                x = times_l[x];
            u64 killed = 0;
            for (auto x : cur)
                killed += x == table.zero();
            unsigned r = 0;
            for (u64 ratio = killed / prev; ratio > 1; ratio /= l)
                ++r;
            require(r > 0, ErrorKind::InvariantViolation, "l-power torsion stopped growing before the full l-part");
            ranks.push_back(r);
            prev = killed;
        }
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            const unsigned exact = ranks[i] - (i + 1 < ranks.size() ? ranks[i + 1] : 0);
            mpz_class pp = 1;
            for (std::size_t t = 0; t <= i; ++t)
                pp *= static_cast<unsigned long>(l);
            for (unsigned t = 0; t < exact; ++t)
                prime_powers.push_back(pp);
        }
    }
    GroupStructure g = GroupStructure::from_elementary(std::move(prime_powers));
    require(g.order() == n, ErrorKind::InvariantViolation, "structure order differs from the class count");
    return g;
}

PicardResult picard_group(const CurveSpec& c, u64 budget)
{
    require(c.d == 1, ErrorKind::RequiresD1, "class enumeration needs a rational place at infinity");
    std::vector<mpz_class> counts;
    for (unsigned n = 1; n <= c.g; ++n)
        counts.push_back(count_affine_naive(c, n).total);
    const LPolynomial P = lpoly_from_counts(counts, c.K().characteristic(), c.K().degree(), c.g);
    PicardResult out;
    out.expected_order = jacobian_order(P, 1);
    require(out.expected_order <= mpz_class(static_cast<unsigned long>(budget)), ErrorKind::BudgetExceeded,
            "|J| = " + out.expected_order.get_str() + " exceeds the budget " + std::to_string(budget));
    out.table = std::make_shared<DivisorClassTable>(c, enumerate_places(c, c.g));
    require(out.table->size() == out.expected_order, ErrorKind::IncompleteEnumeration,
            "found " + std::to_string(out.table->size()) + " classes, expected " + out.expected_order.get_str());
    out.structure = group_structure(*out.table);
    return out;
}

ConjectureReport conjecture_check(u64 p, u64 q, u64 a, u64 budget)
{
    ConjectureReport r;
    r.p = p;
    r.q = q;
    r.a = a % p;
    r.k = static_cast<unsigned>(multiplicative_order(p % q, q));
    const CurveSpec c = artin_schreier_curve(p, q, a);
    r.base = picard_group(c, budget).structure;
    r.extension = r.k == 1 ? r.base : picard_group(base_change(c, r.k), budget).structure;
    r.expected = r.base.power(r.k);
    r.consistent = r.extension == r.expected;
    return r;
}

} // namespace superjac
