#include "superjac/zeta.hpp"

#include "superjac/char_sums.hpp"
#include "superjac/error.hpp"

namespace superjac {

namespace {

mpz_class power(const mpz_class& base, unsigned e)
{
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

mpz_class upow(u64 p, unsigned e) { return power(mpz_class(static_cast<unsigned long>(p)), e); }

unsigned family_genus(u64 p, u64 M) { return static_cast<unsigned>((p - 1) * (M - 1) / 2); }

u64 ipow(u64 q, unsigned l)
{
    u64 out = 0;
    require(checked_pow(q, l, out), ErrorKind::InvalidArgument, "q^l overflows");
    return out;
}

} // namespace

mpz_class LPolynomial::base_size() const { return upow(p, e); }

std::string LPolynomial::to_string() const
{
    return ipoly::to_string(c) + " over " + std::to_string(p) + (e == 1 ? "" : "^" + std::to_string(e));
}

void check_lpoly(const LPolynomial& P)
{
    require(P.c.size() == 2 * P.g + 1, ErrorKind::InvariantViolation, "L-polynomial has degree != 2g");
    require(P.c[0] == 1, ErrorKind::InvariantViolation, "L-polynomial constant term != 1");
    const mpz_class Q = P.base_size();
    for (unsigned i = 0; i <= P.g; ++i)
        require(P.c[2 * P.g - i] == power(Q, P.g - i) * P.c[i], ErrorKind::InvariantViolation,
                "functional equation fails at index " + std::to_string(i));
    mpz_class at_one = 0;
    for (const auto& v : P.c)
        at_one += v;
    require(at_one > 0, ErrorKind::InvariantViolation, "P(1) <= 0");
}

CurveSpec artin_schreier_curve(u64 p, u64 q, u64 a)
{
    require(q >= 2 && q <= 0xffffffffu, ErrorKind::InvalidArgument, "exponent q out of range");
    std::vector<i64> coeffs(p + 1, 0);
    coeffs[0] = static_cast<i64>(a % p);
    coeffs[1] = -1;
    coeffs[p] = 1;
    return make_curve(static_cast<unsigned>(q), coeffs, field(p));
}

PointCount count_affine_naive(const CurveSpec& c, unsigned n, u64 budget)
{
    require(n >= 1, ErrorKind::InvalidArgument, "extension degree must be positive");
    require(c.d == 1, ErrorKind::RequiresD1, "point counts at infinity are implemented for gcd(m, r) = 1");
    const u64 p = c.K().characteristic();
    const unsigned deg = c.K().degree() * n;
    u64 size = 0;
    require(checked_pow(p, deg, size) && size <= budget && size <= FiniteField::kTableLimit, ErrorKind::BudgetExceeded,
            "counting over F_" + std::to_string(p) + "^" + std::to_string(deg) + " exceeds the budget");
    FieldPtr E = field(p, deg);
    const FiniteField& L = *E;
    const FPoly F = fpoly::map(*embedding(c.field, E), c.F);
    u64 affine = 0;
    for (u64 v = 0; v < size; ++v) {
        Elem acc = F.back();
        for (std::size_t i = F.size() - 1; i-- > 0;)
            acc = L.add(L.mul(acc, Elem{v}), F[i]);
        affine += L.count_roots_of_power(acc, c.m);
    }
    PointCount out;
    out.curve_id = c.canonical();
    out.n = n;
    out.affine = mpz_class(static_cast<unsigned long>(affine));
    out.infinite = 1;
    out.total = out.affine + 1;
    return out;
}

PointCount count_charsum(u64 p, u64 q, u64 a, unsigned n)
{
    require(is_prime_u64(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    require(a % p != 0, ErrorKind::ZeroShift, "the shift a must be nonzero");
    require(n >= 1, ErrorKind::InvalidArgument, "extension degree must be positive");
    FieldPtr B = field(p);
    auto chis = multiplicative_characters(B, q);
    auto table = gauss_table(B, B, q);
    CycloInt acc(table->ring());
    for (const auto& psi : additive_characters(p))
        for (const auto& chi : chis)
            acc += (-table->modified_sum(a, psi, chi)).pow(n);
    auto s = acc.to_integer();
    require(s.has_value(), ErrorKind::NonIntegerResult, "character sum is not a rational integer: " + acc.to_string());
    PointCount out;
    out.curve_id = artin_schreier_curve(p, q, a).canonical();
    out.n = n;
    out.infinite = 1;
    out.total = upow(p, n) + 1 - *s;
    out.affine = out.total - 1;
    return out;
}

LPolynomial zeta_numerator_charsum(u64 p, unsigned e, u64 q, u64 a)
{
    require(is_prime_u64(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    require(a % p != 0, ErrorKind::ZeroShift, "the shift a must be nonzero");
    FieldPtr B = field(p, e);
    auto chis = multiplicative_characters(B, q);
    auto table = gauss_table(B, B, q);
    const CycloPtr& ring = table->ring();
    std::vector<CycloInt> poly{CycloInt(ring, 1)};
    for (const auto& psi : additive_characters(p)) {
        for (const auto& chi : chis) {
            const CycloInt G = table->modified_sum(a, psi, chi);
            poly.push_back(CycloInt(ring));
            for (std::size_t i = poly.size() - 1; i > 0; --i)
                poly[i] += G * poly[i - 1];
        }
    }
    LPolynomial P;
    P.g = family_genus(p, q);
    P.p = p;
    P.e = e;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto v = poly[i].to_integer();
        require(v.has_value(), ErrorKind::NonIntegerResult,
                "coefficient " + std::to_string(i) + " is not a rational integer");
        P.c.push_back(*v);
    }
    check_lpoly(P);
    return P;
}

LPolynomial zeta_numerator_special(u64 p, u64 q, u64 a) { return zeta_numerator_charsum(p, 1, q, a); }

std::vector<mpz_class> power_sums(const IntPoly& c, unsigned count)
{
    std::vector<mpz_class> s(count + 1);
    for (unsigned k = 1; k <= count; ++k) {
        mpz_class v = k < c.size() ? mpz_class(-static_cast<long>(k)) * c[k] : mpz_class(0);
        for (unsigned i = 1; i < k && i < c.size(); ++i)
            v -= c[i] * s[k - i];
        s[k] = v;
    }
    return s;
}

IntPoly from_power_sums(const std::vector<mpz_class>& s, unsigned degree)
{
    require(s.size() > degree, ErrorKind::InvalidArgument, "not enough power sums");
    IntPoly e(degree + 1);
    e[0] = 1;
    for (unsigned k = 1; k <= degree; ++k) {
        mpz_class acc = 0;
        for (unsigned i = 1; i <= k; ++i)
            acc -= s[i] * e[k - i];
        require(mpz_divisible_ui_p(acc.get_mpz_t(), k), ErrorKind::InvariantViolation,
                "Newton identity gives a non-integral coefficient at degree " + std::to_string(k));
        mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), k);
    }
    return e;
}

LPolynomial lpoly_from_counts(const std::vector<mpz_class>& counts, u64 p, unsigned e, unsigned g)
{
    require(counts.size() >= g, ErrorKind::InvalidArgument, "need at least g point counts");
    LPolynomial P;
    P.g = g;
    P.p = p;
    P.e = e;
    const mpz_class Q = P.base_size();
    std::vector<mpz_class> s(g + 1);
    for (unsigned n = 1; n <= g; ++n)
        s[n] = power(Q, n) + 1 - counts[n - 1];
    IntPoly low = from_power_sums(s, g);
    P.c.assign(2 * g + 1, 0);
    for (unsigned i = 0; i <= g; ++i) {
        P.c[i] = low[i];
        P.c[2 * g - i] = power(Q, g - i) * low[i];
    }
    check_lpoly(P);
    if (counts.size() > g) {
        auto full = power_sums(P.c, static_cast<unsigned>(counts.size()));
        for (unsigned n = g + 1; n <= counts.size(); ++n)
            require(power(Q, n) + 1 - full[n] == counts[n - 1], ErrorKind::InvariantViolation,
                    "count N_" + std::to_string(n) + " disagrees with the reconstructed L-polynomial");
    }
    return P;
}

mpz_class jacobian_order(const LPolynomial& P, unsigned n)
{
    require(n >= 1, ErrorKind::InvalidArgument, "extension degree must be positive");
    const unsigned two_g = 2 * P.g;
    auto s = power_sums(P.c, two_g * n);
    std::vector<mpz_class> sigma(two_g + 1);
    for (unsigned j = 1; j <= two_g; ++j)
        sigma[j] = s[j * n];
    IntPoly e = from_power_sums(sigma, two_g);
    mpz_class out = 0;
    for (const auto& v : e)
        out += v;
    require(out > 0, ErrorKind::InvariantViolation, "Jacobian order must be positive");
    return out;
}

LPolynomial descend_numerator(const LPolynomial& Pk, unsigned k)
{
    const unsigned two_g = 2 * Pk.g;
    require(k >= 1 && two_g % k == 0 && Pk.e % k == 0, ErrorKind::InvalidArgument, "cannot descend by this degree");
    const unsigned dq = two_g / k;
    auto sigma = power_sums(Pk.c, dq);
    std::vector<mpz_class> tau(dq + 1);
    for (unsigned j = 1; j <= dq; ++j) {
        require(mpz_divisible_ui_p(sigma[j].get_mpz_t(), k), ErrorKind::InvariantViolation,
                "power sums are not divisible by the descent degree");
        mpz_divexact_ui(tau[j].get_mpz_t(), sigma[j].get_mpz_t(), k);
    }
    IntPoly Q = from_power_sums(tau, dq);
    IntPoly check{1};
    for (unsigned i = 0; i < k; ++i)
        check = ipoly::mul(check, Q);
    IntPoly target = Pk.c;
    ipoly::trim(target);
    require(check == target, ErrorKind::InvariantViolation, "numerator is not a k-th power");
    LPolynomial P;
    P.g = Pk.g;
    P.p = Pk.p;
    P.e = Pk.e / k;
    P.c.assign(two_g + 1, 0);
    for (unsigned i = 0; i <= dq; ++i)
        P.c[i * k] = Q[i];
    check_lpoly(P);
    return P;
}

bool indices_divisible(const LPolynomial& P, unsigned k)
{
    for (std::size_t i = 0; i < P.c.size(); ++i)
        if (i % k != 0 && P.c[i] != 0)
            return false;
    return true;
}

FamilyZeta family_zeta(u64 p, u64 q, unsigned l, u64 a, u64 budget)
{
    require(is_prime_u64(p) && is_prime_u64(q) && p != q, ErrorKind::InvalidArgument, "p and q must be distinct primes");
    require(l >= 1, ErrorKind::InvalidArgument, "l must be positive");
    require(a % p != 0, ErrorKind::ZeroShift, "the shift a must be nonzero");
    const u64 M = ipow(q, l);
    FamilyZeta out;
    out.k = static_cast<unsigned>(multiplicative_order(p % q, q));
    const unsigned g = family_genus(p, M);
    u64 naive_size = 0;
    u64 ext_size = 0;
    if ((p - 1) % M == 0) {
        out.P = zeta_numerator_special(p, M, a);
        out.route = "charsum";
    } else if (checked_pow(p, g, naive_size) && naive_size <= budget && naive_size <= FiniteField::kTableLimit) {
        const CurveSpec c = artin_schreier_curve(p, M, a);
        std::vector<mpz_class> counts;
        for (unsigned n = 1; n <= g; ++n) {
            counts.push_back(count_affine_naive(c, n, budget).total);
            if (n % out.k != 0)
                require(counts.back() == upow(p, n) + 1, ErrorKind::InvariantViolation,
                        "N_" + std::to_string(n) + " != p^n + 1 although k does not divide n");
        }
        out.P = lpoly_from_counts(counts, p, 1, g);
        out.route = "naive";
    } else if (multiplicative_order(p % M, M) == out.k && checked_pow(p, out.k, ext_size) && ext_size <= budget &&
               ext_size <= FiniteField::kTableLimit) {
        out.P = descend_numerator(zeta_numerator_charsum(p, out.k, M, a), out.k);
        const mpz_class n1 = count_affine_naive(artin_schreier_curve(p, M, a), 1, budget).total;
        require(n1 == upow(p, 1) + 1 - power_sums(out.P.c, 1)[1], ErrorKind::InvariantViolation,
                "descended numerator disagrees with N_1");
        out.route = "charsum-ext";
    } else {
        fail(ErrorKind::BudgetExceeded, "no exact route for p=" + std::to_string(p) + ", q^l=" + std::to_string(M) +
                                            " within budget " + std::to_string(budget));
    }
    require(indices_divisible(out.P, out.k), ErrorKind::InvariantViolation,
            "coefficients outside multiples of k = ord_q(p) are nonzero");
    return out;
}

TorsionReport torsion_criterion(u64 p, u64 q, unsigned l, u64 a, u64 budget)
{
    require(is_prime_u64(p) && is_prime_u64(q) && p != q, ErrorKind::InvalidArgument, "p and q must be distinct primes");
    TorsionReport r;
    r.p = p;
    r.q = q;
    r.l = l;
    r.a = a % p;
    r.ord = static_cast<unsigned>(multiplicative_order(p % q, q));
    r.has_torsion = r.ord % p == 0;
    try {
        FamilyZeta z = family_zeta(p, q, l, a, budget);
        r.route = z.route;
        r.jacobian_order = jacobian_order(z.P, 1);
        r.q_divides = mpz_divisible_ui_p(r.jacobian_order->get_mpz_t(), q) != 0;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded)
            throw;
        r.note = e.what();
    }
    return r;
}

bool PowerLawReport::holds() const
{
    for (const auto& row : rows)
        if (!row.equal)
            return false;
    return !rows.empty();
}

PowerLawReport power_law_check(u64 p, u64 q, u64 a, u64 budget)
{
    FamilyZeta z = family_zeta(p, q, 1, a, budget);
    PowerLawReport r;
    r.p = p;
    r.q = q;
    r.a = a % p;
    r.k = z.k;
    r.route = z.route;
    r.base_order = jacobian_order(z.P, 1);
    for (u64 kp : divisors(z.k)) {
        PowerLawRow row;
        row.k = static_cast<unsigned>(kp);
        row.order = jacobian_order(z.P, row.k);
        row.power = power(r.base_order, row.k);
        row.equal = row.order == row.power;
        r.rows.push_back(row);
    }
    return r;
}

} // namespace superjac
