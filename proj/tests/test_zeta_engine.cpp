#include <doctest.h>

#include "superjac/error.hpp"
#include "superjac/zeta.hpp"

using namespace superjac;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Projective point count of y^q = F(x) over F_p by plain modular arithmetic (d = 1).
long oracle_count_prime(u64 p, u64 q, const std::vector<long>& F)
{
    long n = 1;
    for (u64 x = 0; x < p; ++x) {
        long fx = 0;
        for (std::size_t i = F.size(); i-- > 0;)
            fx = ((fx * static_cast<long>(x) + F[i]) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p);
        for (u64 y = 0; y < p; ++y) {
            long v = 1;
            for (u64 i = 0; i < q; ++i)
                v = v * static_cast<long>(y) % static_cast<long>(p);
            n += v == fx;
        }
    }
    return n;
}

// GF(2^k) with a fixed irreducible modulus, carry-less multiplication.
struct Gf2 {
    unsigned k;
    unsigned modulus;
    unsigned mul(unsigned a, unsigned b) const
    {
        unsigned r = 0;
        while (b) {
            if (b & 1)
                r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> k)
                a ^= modulus;
        }
        return r;
    }
};

// y^q = x^2 + x + 1 over GF(2^k), projective count.
long oracle_count_binary(const Gf2& F, unsigned q)
{
    const unsigned size = 1u << F.k;
    std::vector<long> root_count(size, 0);
    for (unsigned y = 0; y < size; ++y) {
        unsigned v = 1;
        for (unsigned i = 0; i < q; ++i)
            v = F.mul(v, y);
        ++root_count[v];
    }
    long n = 1;
    for (unsigned x = 0; x < size; ++x)
        n += root_count[F.mul(x, x) ^ x ^ 1];
    return n;
}

const Gf2 kGf4{2, 0b111}, kGf16{4, 0b10011};

} // namespace

TEST_CASE("naive counts")
{
    auto c = make_curve(2, std::vector<i64>{1, -1, 0, 1}, field(3));
    CHECK(count_affine_naive(c, 1).total == 7);
    CHECK(oracle_count_prime(3, 2, {1, -1, 0, 1}) == 7);

    auto c3 = make_curve(3, std::vector<i64>{1, 1, 1}, field(2));
    CHECK(count_affine_naive(c3, 1).total == 3);
    CHECK(count_affine_naive(c3, 2).total == 9);
    CHECK(oracle_count_binary(kGf4, 3) == 9);
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(count_affine_naive(c3, n).total == oracle_count_binary(Gf2{n, n == 1 ? 0b11u : n == 2 ? 0b111u : n == 3 ? 0b1011u : 0b10011u}, 3));
    auto c5 = make_curve(5, std::vector<i64>{1, 1, 1}, field(2));
    CHECK(count_affine_naive(c5, 4).total == oracle_count_binary(kGf16, 5));

    // x^p - x vanishes on F_p.
    for (u64 p : {3u, 5u, 7u})
        for (u64 q : {2u, 3u})
            if (p != q)
                for (u64 a = 1; a < p; ++a) {
                    long roots = 0;
                    for (u64 y = 0; y < p; ++y) {
                        u64 v = 1;
                        for (u64 i = 0; i < q; ++i)
                            v = v * y % p;
                        roots += v == a;
                    }
                    CHECK(count_affine_naive(artin_schreier_curve(p, q, a), 1).total == 1 + static_cast<long>(p) * roots);
                }

    try {
        count_affine_naive(c, 20, 1000);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("character-sum counts")
{
    CHECK(count_charsum(3, 2, 1, 1).total == 7);
    CHECK(count_charsum(5, 2, 1, 1).total == 11);
    CHECK(count_charsum(3, 2, 1, 2).total == count_affine_naive(artin_schreier_curve(3, 2, 1), 2).total);
    try {
        count_charsum(5, 3, 1, 1);
        FAIL("expected CharacterUnavailable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CharacterUnavailable);
    }
}

TEST_CASE("route equivalence on the grid")
{
    const std::vector<std::pair<u64, u64>> grid = {{3, 2}, {5, 2}, {7, 2}, {7, 3}, {11, 2}, {11, 5}, {13, 2}, {13, 3}};
    for (auto [p, q] : grid)
        for (u64 a = 1; a < p; ++a) {
            const auto c = artin_schreier_curve(p, q, a);
            const unsigned top = p <= 7 ? 3 : 2;
            for (unsigned n = 1; n <= top; ++n)
                CHECK(count_charsum(p, q, a, n).total == count_affine_naive(c, n).total);
            std::vector<long> F(p + 1, 0);
            F[0] = static_cast<long>(a);
            F[1] = -1;
            F[p] = 1;
            CHECK(count_charsum(p, q, a, 1).total == oracle_count_prime(p, q, F));
        }
}

TEST_CASE("zeta numerators")
{
    auto P = zeta_numerator_special(3, 2, 1);
    CHECK(P.c == ints({1, 3, 3}));
    CHECK(P.to_string() == "[1,3,3] over 3");
    CHECK(jacobian_order(P) == 7);
    auto P7 = zeta_numerator_special(7, 3, 2);
    CHECK(P7.g == 6);
    CHECK(P7.c.size() == 13);

    // Character route equals Newton reconstruction from naive counts.
    const std::vector<std::pair<u64, u64>> grid = {{3, 2}, {5, 2}, {7, 2}, {7, 3}, {11, 2}};
    for (auto [p, q] : grid)
        for (u64 a = 1; a < p; ++a) {
            if (p == 11 && a > 2)
                break;
            const auto c = artin_schreier_curve(p, q, a);
            std::vector<mpz_class> counts;
            for (unsigned n = 1; n <= c.g; ++n)
                counts.push_back(count_affine_naive(c, n).total);
            CHECK(lpoly_from_counts(counts, p, 1, c.g).c == zeta_numerator_special(p, q, a).c);
        }
}

TEST_CASE("L-polynomials from counts")
{
    CHECK(lpoly_from_counts(ints({7}), 3, 1, 1).c == ints({1, 3, 3}));
    CHECK(lpoly_from_counts(ints({3}), 2, 1, 1).c == ints({1, 0, 2}));
    CHECK(lpoly_from_counts(ints({3, 5}), 2, 1, 2).c == ints({1, 0, 0, 0, 4}));
    // A redundant third count is verified.
    CHECK(lpoly_from_counts(ints({3, 5, 9}), 2, 1, 2).c == ints({1, 0, 0, 0, 4}));
    CHECK_THROWS_AS(lpoly_from_counts(ints({3, 5, 10}), 2, 1, 2), Error);
    // Odd power sums make Newton's identity non-integral.
    try {
        lpoly_from_counts(ints({3, 6}), 2, 1, 2);
        FAIL("expected InvariantViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
    }
}

TEST_CASE("Jacobian orders over extensions")
{
    LPolynomial a{1, 3, 1, ints({1, 3, 3})};
    CHECK(jacobian_order(a, 1) == 7);
    LPolynomial b{1, 2, 1, ints({1, 0, 2})};
    CHECK(jacobian_order(b, 2) == 9);
    LPolynomial c{2, 2, 1, ints({1, 0, 0, 0, 4})};
    CHECK(jacobian_order(c, 4) == 625);
    CHECK(jacobian_order(c, 2) == 25);

    // Against counts: |J(F_{q^n})| from the L-polynomial over F_{q^n} itself.
    auto cv = make_curve(3, std::vector<i64>{1, 1, 1}, field(2));
    for (unsigned n = 1; n <= 3; ++n) {
        auto over = base_change(cv, n);
        std::vector<mpz_class> counts{count_affine_naive(over, 1).total};
        CHECK(jacobian_order(lpoly_from_counts(counts, 2, n, 1)) == jacobian_order(b, n));
    }
}

TEST_CASE("descent from the field of characters")
{
    // q does not divide p - 1: Gauss sums over F_{p^k} and descent agree with naive counts.
    struct Case {
        u64 p, q;
    };
    for (Case cs : {Case{2, 3}, Case{2, 5}, Case{2, 7}, Case{3, 5}, Case{5, 3}, Case{3, 7}}) {
        const unsigned k = static_cast<unsigned>(multiplicative_order(cs.p % cs.q, cs.q));
        auto c = artin_schreier_curve(cs.p, cs.q, 1);
        std::vector<mpz_class> counts;
        for (unsigned n = 1; n <= c.g; ++n)
            counts.push_back(count_affine_naive(c, n).total);
        auto naive = lpoly_from_counts(counts, cs.p, 1, c.g);
        auto descended = descend_numerator(zeta_numerator_charsum(cs.p, k, cs.q, 1), k);
        CHECK(naive.c == descended.c);
        CHECK(indices_divisible(naive, k));
    }
}

TEST_CASE("torsion criterion")
{
    auto r = torsion_criterion(3, 2);
    CHECK(r.ord == 1);
    CHECK_FALSE(r.has_torsion);
    CHECK(r.jacobian_order == mpz_class(7));
    CHECK(r.route == "charsum");
    CHECK(r.consistent());

    auto s = torsion_criterion(2, 5);
    CHECK(s.ord == 4);
    CHECK(s.has_torsion);
    CHECK(s.jacobian_order == mpz_class(5));
    CHECK(s.consistent());

    auto t = torsion_criterion(2, 7);
    CHECK(t.ord == 3);
    CHECK_FALSE(t.has_torsion);
    CHECK(t.q_divides == false);

    // Evidence omitted when nothing fits.
    auto u = torsion_criterion(13, 11, 1, 1, 1000);
    CHECK_FALSE(u.jacobian_order.has_value());
    CHECK(u.consistent());
    CHECK_FALSE(u.note.empty());

    // y^{q^l}: q = 2, l = 2 over F_5 (4 | 5 - 1).
    auto v = torsion_criterion(5, 2, 2);
    CHECK(v.route == "charsum");
    CHECK(v.consistent());
    auto w = torsion_criterion(3, 2, 2);
    CHECK(w.route == "naive");
    CHECK(w.consistent());
}

TEST_CASE("power law")
{
    auto r = power_law_check(2, 5, 1);
    CHECK(r.k == 4);
    CHECK(r.holds());
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[1].k == 2);
    CHECK(r.rows[1].order == 25);
    CHECK(r.rows[2].order == 625);
    auto s = power_law_check(2, 3, 1);
    CHECK(s.holds());
    CHECK(s.rows.back().order == 9);
}
