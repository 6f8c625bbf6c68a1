#include <doctest.h>

#include "gen.hpp"
#include "superjac/delta.hpp"
#include "superjac/error.hpp"
#include "superjac/picard.hpp"

using namespace superjac;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<mpz_class> expected_factors(unsigned m, unsigned r)
{
    const unsigned d = genus_data(m, r).d;
    std::vector<mpz_class> out;
    if (m / d > 1)
        out.emplace_back(m / d);
    for (unsigned k = 0; k + 2 < r; ++k)
        out.emplace_back(m);
    return out;
}

CurveSpec consecutive_roots(unsigned m, unsigned r, u64 p)
{
    std::vector<Elem> roots;
    for (unsigned k = 0; k < r; ++k)
        roots.push_back(Elem{k});
    return make_curve_from_roots(m, roots, field(p));
}

} // namespace

TEST_CASE("delta structure examples")
{
    CHECK(delta_structure(2, 6) == ints({2, 2, 2, 2}));
    CHECK(delta_structure(3, 4) == ints({3, 3, 3}));
    CHECK(delta_structure(4, 6) == ints({2, 4, 4, 4, 4}));
}

TEST_CASE("delta structure grid")
{
    for (unsigned m = 2; m <= 6; ++m)
        for (unsigned r = 3; r <= 8; ++r) {
            auto f = delta_structure(m, r);
            CHECK(f == expected_factors(m, r));
            mpz_class prod = 1;
            for (const auto& v : f)
                prod *= v;
            mpz_class want = m / genus_data(m, r).d;
            for (unsigned k = 0; k + 2 < r; ++k)
                want *= m;
            CHECK(prod == want);
        }
}

TEST_CASE("ambient lattice membership")
{
    auto P = delta_presentation(4, 6);
    CHECK(P.d == 2);
    CHECK_FALSE(P.coordinates({1, 0, 0, 0, 0, 0}, 0).has_value());
    CHECK_FALSE(P.coordinates({1, 1, 0, 0, 0, 0}, 0).has_value());
    CHECK(P.coordinates({1, 1, 0, 0, 0, 0}, -1).has_value());
    // D_{r-1} = d R_{r-1} - inf is the unit vector of the sum coordinate.
    CHECK(*P.coordinates({0, 0, 0, 0, 2, 0}, -1) == ints({0, 0, 0, 0, 1, 0}));
}

TEST_CASE("index sets")
{
    using V = std::vector<std::pair<unsigned, unsigned>>;
    CHECK(basis_index_set(3, 4) == V{{2, 1}, {3, 1}, {3, 2}});
    CHECK(basis_index_set(2, 5) == V{{3, 1}, {4, 1}});
    for (unsigned m = 2; m <= 6; ++m)
        for (unsigned r = 2; r <= 8; ++r) {
            const unsigned g = genus_data(m, r).g;
            CHECK(basis_index_set(m, r).size() == g);
            CHECK(complement_index_set(m, r).size() == g);
        }
}

TEST_CASE("basis functions")
{
    auto c = consecutive_roots(3, 4, 7);
    const Divisor want = Divisor(Place::ramification(c, 0), -2) + Divisor(Place::ramification(c, 1), -2) +
                         Divisor(Place::ramification(c, 2), 1) + Divisor(Place::ramification(c, 3), 1) +
                         Divisor(Place::infinity(c), 2);
    CHECK(basis_function_divisor(c, 2, 1) == want);
    auto basis = rr_basis(c);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].divisor == want);
    for (const auto& b : basis)
        CHECK(b.divisor.degree(c) == 0);
    // d = 2 curve: m = 4, r = 6 over F_7.
    auto c2 = consecutive_roots(4, 6, 7);
    CHECK(c2.d == 2);
    CHECK(rr_basis(c2).size() == c2.g);

    auto ns = make_curve(3, std::vector<i64>{1, 0, 0, 0, 1}, field(5));
    try {
        rr_basis(ns);
        FAIL("expected RootsUnavailable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RootsUnavailable);
    }
}

TEST_CASE("proof replay")
{
    auto picard = consecutive_roots(3, 4, 7);
    auto cert = replay_proof(picard, 0);
    CHECK(cert.verdict);
    CHECK(cert.A.size() == 3);
    CHECK(cert.checks.size() == 6);
    CHECK_NOTHROW(require_pass(cert));

    auto hyper = consecutive_roots(2, 5, 11);
    CHECK(replay_proof(hyper).verdict);
    CHECK(replay_proof(hyper).A.size() == 2);

    auto quartic = split_base_change(make_curve(3, std::vector<i64>{1, 0, 0, 0, 1}, field(5)));
    CHECK(quartic.K().size() == 25);
    CHECK(replay_proof(quartic).verdict);

    for (auto [m, r, p] : std::vector<std::tuple<unsigned, unsigned, u64>>{
             {2, 5, 11}, {2, 7, 11}, {3, 4, 7}, {3, 5, 7}, {4, 5, 7}, {5, 6, 7}, {4, 6, 7}, {6, 4, 7}}) {
        auto cc = consecutive_roots(m, r, p);
        auto ct = replay_proof(cc, 42);
        CHECK(ct.verdict);
        CHECK(ct.A.size() == cc.g);
        for (const auto& f : ct.functions)
            CHECK(f.order_at_last == static_cast<int>(f.j));
    }

    // Same seed, same certificate.
    CHECK(replay_proof(picard, 5).rank_attempts == replay_proof(picard, 5).rank_attempts);

    // Over Q through a good reduction: y^3 = x^4 + 2.
    auto rc = make_rational_curve(3, {mpq_class(2), 0, 0, 0, 1});
    auto rq = replay_proof(rc, 0);
    CHECK(rq.verdict);
    CHECK_FALSE(rq.reduction.empty());
}

TEST_CASE("principality on the delta lattice")
{
    auto c = make_curve_from_roots(3, {Elem{0}, Elem{1}, Elem{2}, Elem{3}}, field(7));
    auto a = decide_principal_delta(c, {3, 0, 0});
    CHECK(a.principal);
    CHECK(a.oracle_checked);
    REQUIRE(a.witness.has_value());
    CHECK(*a.witness == fn::x_minus(c, Elem{0}));
    CHECK_FALSE(decide_principal_delta(c, {1, 2, 0}).principal);
    CHECK(decide_principal_delta(c, {0, 0, 0}).principal);

    auto d2 = consecutive_roots(2, 6, 7);
    try {
        decide_principal_delta(d2, {0, 0, 0, 0, 0});
        FAIL("expected RequiresD1");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RequiresD1);
    }
    // Non-split base: decided over the splitting field.
    auto ns = make_curve(3, std::vector<i64>{1, 0, 0, 0, 1}, field(5));
    CHECK(decide_principal_delta(ns, {3, 3, -3}).principal);
}

TEST_CASE("decision agrees with the Riemann-Roch oracle")
{
    // Every vector with |a_i| <= m for small (m, r); a seeded sample on the larger cases.
    struct Case {
        unsigned m;
        std::vector<u64> roots;
        u64 p;
        unsigned e;
    };
    const std::vector<Case> cases = {{2, {0, 1, 2}, 5, 1}, {3, {0, 1, 2, 3}, 7, 1}, {2, {0, 1, 2, 3, 4}, 11, 1},
                                     {3, {0, 1, 2, 3, 4}, 7, 1}, {4, {0, 1, 2}, 5, 1}, {4, {0, 1, 2, 3, 4}, 5, 1},
                                     {3, {0, 1, 2, 3}, 2, 4}};
    TestRng rng(19);
    for (const auto& cs : cases) {
        std::vector<Elem> roots;
        for (u64 v : cs.roots)
            roots.push_back(Elem{v});
        auto c = make_curve_from_roots(cs.m, roots, field(cs.p, cs.e));
        REQUIRE(c.K().size() <= 16);
        const unsigned n = c.r - 1;
        const long span = 2 * cs.m + 1;
        long total = 1;
        for (unsigned k = 0; k < n; ++k)
            total *= span;
        const bool exhaustive = total <= 400;
        const long runs = exhaustive ? total : 150;
        for (long idx = 0; idx < runs; ++idx) {
            std::vector<long> a(n);
            long t = exhaustive ? idx : static_cast<long>(rng.below(static_cast<u64>(total)));
            for (unsigned k = 0; k < n; ++k, t /= span)
                a[k] = t % span - static_cast<long>(cs.m);
            CHECK_NOTHROW(decide_principal_delta(c, a));
        }
    }
}
