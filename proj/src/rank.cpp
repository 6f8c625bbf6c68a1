#include "superjac/rank.hpp"

#include "superjac/error.hpp"
#include "superjac/local.hpp"
#include "superjac/zeta.hpp"

namespace superjac {

bool HypothesisReport::all_pass() const
{
    for (const auto& h : items)
        if (!h.pass)
            return false;
    return true;
}

const Hypothesis* HypothesisReport::find(const std::string& id) const
{
    for (const auto& h : items)
        if (h.id == id)
            return &h;
    return nullptr;
}

namespace {

u64 residue(const mpz_class& v, u64 p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

std::optional<std::pair<std::size_t, std::size_t>> collision(const std::vector<mpz_class>& roots, u64 p)
{
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (residue(roots[i], p) == residue(roots[j], p))
                return std::make_pair(i, j);
    return std::nullopt;
}

} // namespace

HypothesisReport check_prop4_hypotheses(u64 m, const std::vector<mpz_class>& roots, const mpz_class& k, u64 p)
{
    require(is_prime_u64(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    HypothesisReport rep;
    rep.items.push_back({"H1", "p does not divide m", "m mod p = " + std::to_string(m % p), m % p != 0});
    const u64 kr = residue(k, p);
    rep.items.push_back({"H2", "p divides k", "k mod p = " + std::to_string(kr), kr == 0});
    auto hit = collision(roots, p);
    rep.items.push_back({"H3", "roots pairwise incongruent mod p",
                         hit ? "(" + roots[hit->first].get_str() + "," + roots[hit->second].get_str() + ")"
                             : "all " + std::to_string(roots.size()) + " residues distinct",
                         !hit});
    const u64 d = gcd_u64(m, roots.size());
    rep.items.push_back({"H4", "gcd(m, r) = 1", "gcd = " + std::to_string(d), d == 1});
    return rep;
}

std::optional<u64> find_witness_prime(u64 m, const std::vector<mpz_class>& roots, const mpz_class& k)
{
    for (const auto& l : prime_divisors(k)) {
        if (!l.fits_ulong_p())
            break;
        const u64 p = l.get_ui();
        if (m % p != 0 && !collision(roots, p))
            return p;
    }
    return std::nullopt;
}

namespace {

// div(y - k) = sum P_i - r inf on a reduction at a prime l not dividing q k.
bool verify_relation(u64 p, u64 q, const mpz_class& k, std::string& where)
{
    for (u64 l = p + 1; l < 100000; ++l) {
        if (!is_prime_u64(l) || l == q || residue(k, l) == 0)
            continue;
        FieldPtr F = field(l);
        std::vector<i64> coeffs{1};
        FPoly poly{F->one()};
        for (u64 i = 0; i < p; ++i)
            poly = fpoly::mul(*F, poly, fpoly::linear(*F, F->from_int(static_cast<i64>(i))));
        const Elem kk{residue(k, l)};
        poly[0] = F->add(poly[0], F->pow(kk, q));
        if (!fpoly::is_squarefree(*F, poly) || fpoly::degree(poly) != static_cast<int>(p))
            continue;
        const CurveSpec c = make_curve(static_cast<unsigned>(q), poly, F);
        FunctionRep f = fn::add(c, fn::y(c), fn::constant(c, F->neg(kk)));
        Divisor want(Place::infinity(c), -static_cast<i64>(p));
        for (u64 i = 0; i < p; ++i)
            want.add(make_place(c, F, F->from_int(static_cast<i64>(i)), kk), 1);
        where = "F_" + std::to_string(l);
        return principal_divisor(c, f) == want;
    }
    where = "no good prime found";
    return false;
}

} // namespace

RankCertificate evaluate_theorem2(u64 p, u64 q, const mpz_class& k)
{
    RankCertificate cert;
    cert.m = q;
    cert.k = k;
    cert.prime = p;
    for (u64 i = 0; i < p; ++i)
        cert.roots.emplace_back(static_cast<unsigned long>(i));
    auto& H = cert.hypotheses.items;
    const bool p_prime = is_prime_u64(p);
    H.push_back({"T1", "p odd prime", p_prime ? (p == 2 ? "p = 2" : "p prime, odd") : "p composite", p_prime && p != 2});
    const bool q_prime = is_prime_u64(q);
    H.push_back({"T2", "q prime, q | p - 1",
                 "q " + std::string(q_prime ? "prime" : "composite") + ", (p - 1) mod q = " +
                     std::to_string(q ? (p - 1) % q : 0),
                 q_prime && (p - 1) % q == 0});
    u64 big = 0;
    for (const auto& l : prime_divisors(k)) {
        if (l > static_cast<unsigned long>(p)) {
            if (l.fits_ulong_p())
                big = l.get_ui();
            break;
        }
    }
    H.push_back({"T3", "some prime > p divides k", big ? std::to_string(big) : "none", big != 0});
    const u64 kp = p ? residue(k, p) : 0;
    H.push_back({"T4", "p does not divide k", "k mod p = " + std::to_string(kp), kp != 0});

    if (big) {
        // Independence at the large prime; the roots 0..p-1 stay distinct because big > p.
        cert.independence_prime = big;
        for (auto h : check_prop4_hypotheses(q, cert.roots, k, big).items) {
            h.statement += " (l = " + std::to_string(big) + ")";
            H.push_back(h);
        }
    }
    // D_p is determined by the relation, so Gamma is generated by D_1..D_{p-1}.
    for (u64 i = 0; i + 1 < p; ++i)
        cert.generators.push_back("D" + std::to_string(i + 1) + " = (" + std::to_string(i) + ", " + k.get_str() + ") - inf");
    cert.relation = "D1 + ... + D" + std::to_string(p) + " = div(y - " + k.get_str() + ")";
    if (!cert.hypotheses.all_pass())
        return cert;

    cert.a = static_cast<u64>(powmod(kp, q, p));
    FieldPtr Fp = field(p);
    const CurveSpec reduced = artin_schreier_curve(p, q, cert.a);
    cert.separable = fpoly::is_squarefree(*Fp, reduced.F) && fpoly::degree(fpoly::derivative(*Fp, reduced.F)) == 0;
    const LPolynomial P = zeta_numerator_special(p, q, cert.a);
    cert.jacobian_order = jacobian_order(P, 1);
    cert.q_divides = mpz_divisible_ui_p(cert.jacobian_order.get_mpz_t(), q) != 0;
    std::string where;
    cert.relation_verified = verify_relation(p, q, k, where);
    cert.relation += " (checked over " + where + ")";
    cert.note = "torsion injectivity of reduction at p (formal group, p odd, good reduction) is taken from the "
                "classical theory, not recomputed";
    if (cert.separable && !cert.q_divides && cert.relation_verified)
        cert.rank_lower_bound = static_cast<unsigned>(p - 1);
    return cert;
}

RankCertificate certify_theorem2(u64 p, u64 q, const mpz_class& k)
{
    RankCertificate cert = evaluate_theorem2(p, q, k);
    for (const auto& h : cert.hypotheses.items)
        require(h.pass, ErrorKind::HypothesisFailed, h.id + ": " + h.statement + " (" + h.witness + ")");
    require(cert.separable, ErrorKind::EvidenceFailed, "reduction is not separable");
    require(!cert.q_divides, ErrorKind::EvidenceFailed, "q divides |J(F_p)| = " + cert.jacobian_order.get_str());
    require(cert.relation_verified, ErrorKind::EvidenceFailed, "relation sum D_i = div(y - k) not verified");
    return cert;
}

} // namespace superjac
