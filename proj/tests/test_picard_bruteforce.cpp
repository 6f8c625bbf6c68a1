#include <doctest.h>

#include "gen.hpp"
#include "superjac/error.hpp"
#include "superjac/picard.hpp"

using namespace superjac;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

GroupStructure group(std::initializer_list<long> v) { return {ints(v)}; }

std::size_t count_degree(const std::vector<Place>& places, unsigned b)
{
    std::size_t n = 0;
    for (const auto& P : places)
        n += P.is_affine() && P.degree == b;
    return n;
}

} // namespace

TEST_CASE("place enumeration")
{
    auto c = make_curve(3, std::vector<i64>{1, 1, 1}, field(2));
    CHECK(enumerate_places(c, 1).size() == 3);
    CHECK(count_degree(enumerate_places(c, 2), 2) == 3);
    auto e = make_curve(2, std::vector<i64>{1, -1, 0, 1}, field(3));
    CHECK(enumerate_places(e, 1).size() == 7);
    CHECK_THROWS_AS(enumerate_places(e, 30, 1000), Error);
}

TEST_CASE("place counts reproduce point counts")
{
    const std::vector<CurveSpec> curves = {make_curve(3, std::vector<i64>{1, 1, 1}, field(2)),
                                           make_curve(2, std::vector<i64>{1, -1, 0, 1}, field(3)),
                                           make_curve(2, std::vector<i64>{1, -1, 0, 0, 0, 1}, field(5)),
                                           make_curve(3, std::vector<i64>{1, 1, 0, 0, 1}, field(2, 2))};
    for (const auto& c : curves) {
        const unsigned top = std::min(2 * c.g, 4u);
        auto places = enumerate_places(c, top);
        for (unsigned n = 1; n <= top; ++n) {
            mpz_class total = 1; // the rational point at infinity
            for (unsigned b = 1; b <= n; ++b)
                if (n % b == 0)
                    total += static_cast<unsigned long>(b * count_degree(places, b));
            CHECK(total == count_affine_naive(c, n).total);
        }
    }
}

TEST_CASE("principality examples")
{
    auto c = make_curve_from_roots(3, {Elem{0}, Elem{1}, Elem{2}, Elem{3}}, field(7));
    const Place R1 = Place::ramification(c, 0), R2 = Place::ramification(c, 1), inf = Place::infinity(c);
    Divisor D = Divisor(R1, 3) + Divisor(inf, -3);
    auto res = is_principal(c, D);
    CHECK(res.principal);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == fn::x_minus(c, Elem{0}));
    CHECK_FALSE(is_principal(c, Divisor(R1) - Divisor(R2)).principal);
    CHECK_FALSE(is_principal(c, Divisor(R1) - Divisor(inf)).principal);
    CHECK(is_principal(c, Divisor()).principal);

    auto h = make_curve_from_roots(2, {Elem{0}, Elem{1}, Elem{2}}, field(5));
    const Place S1 = Place::ramification(h, 0), S2 = Place::ramification(h, 1);
    auto r2 = is_principal(h, Divisor(S1, 2) - Divisor(S2, 2));
    CHECK(r2.principal);
    REQUIRE(r2.witness.has_value());
    CHECK(*r2.witness == fn::div(h, fn::x_minus(h, Elem{0}), fn::x_minus(h, Elem{1})));

    try {
        is_principal(c, Divisor(R1));
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
    auto d2 = make_curve(2, std::vector<i64>{1, 0, 0, 1}, field(5));
    CHECK(d2.d == 1);
    auto d2b = make_curve(2, std::vector<i64>{1, 0, 0, 0, 1}, field(5));
    try {
        is_principal(d2b, Divisor());
        FAIL("expected RequiresD1");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RequiresD1);
    }
}

TEST_CASE("principal divisors of random functions are recognized")
{
    TestRng rng(7);
    auto c = make_curve(3, std::vector<i64>{3, 1, 0, 4, 1}, field(7));
    RiemannRoch rr(c);
    const FiniteField& K = c.K();
    for (int it = 0; it < 100; ++it) {
        FunctionRep f = fn::constant(c, K.one());
        for (int k = 0; k < 3; ++k) {
            FunctionRep g = rng.below(3) == 0 ? fn::y(c) : fn::x_minus(c, K.from_int(static_cast<i64>(rng.below(7))));
            f = rng.below(2) ? fn::mul(c, f, g) : fn::div(c, f, g);
        }
        const Divisor D = principal_divisor(c, f);
        auto res = is_principal(rr, D);
        CHECK(res.principal);
        auto inv = is_principal(rr, -D);
        CHECK(inv.principal);
        if (res.witness)
            CHECK(principal_divisor(c, *res.witness) == D);
    }
}

TEST_CASE("principality is symmetric under negation")
{
    TestRng rng(11);
    auto c = make_curve(2, std::vector<i64>{1, -1, 0, 0, 0, 1}, field(5));
    RiemannRoch rr(c);
    auto places = enumerate_places(c, 2);
    const Place inf = Place::infinity(c);
    for (int it = 0; it < 60; ++it) {
        Divisor D;
        for (int k = 0; k < 3; ++k)
            D.add(places[rng.below(places.size() - 1)], rng.range(-2, 2));
        D.add(inf, -D.degree(c));
        CHECK(is_principal(rr, D).principal == is_principal(rr, -D).principal);
    }
}

TEST_CASE("group structures")
{
    CHECK(GroupStructure::from_elementary(ints({3, 9, 2, 4})) == group({6, 36}));
    CHECK(group({6, 36}).elementary_divisors() == ints({2, 3, 4, 9}));
    CHECK(group({5}).power(4) == group({5, 5, 5, 5}));
    CHECK(group({2, 6}).power(2).order() == 144);
    CHECK(group({3, 3}).to_string() == "Z/3 x Z/3");
    CHECK(GroupStructure{}.to_string() == "0");
}

TEST_CASE("Picard groups of small curves")
{
    auto a = picard_group(make_curve(3, std::vector<i64>{1, 1, 1}, field(2)));
    CHECK(a.structure == group({3}));
    CHECK(a.expected_order == 3);
    auto b = picard_group(make_curve(2, std::vector<i64>{1, -1, 0, 1}, field(3)));
    CHECK(b.structure == group({7}));
    auto c = picard_group(make_curve(3, std::vector<i64>{1, 1, 1}, field(2, 2)));
    CHECK(c.structure == group({3, 3}));
    CHECK_THROWS_AS(picard_group(make_curve(2, std::vector<i64>{1, -1, 0, 0, 0, 1}, field(5)), 5), Error);
}

TEST_CASE("class group law")
{
    TestRng rng(3);
    auto c = make_curve(2, std::vector<i64>{1, -1, 0, 0, 0, 1}, field(5));
    auto res = picard_group(c);
    CHECK(res.table->size() == res.expected_order);
    auto& T = *res.table;
    RiemannRoch rr(c);
    for (int it = 0; it < 25; ++it) {
        const std::size_t i = rng.below(T.size()), j = rng.below(T.size()), k = rng.below(T.size());
        const std::size_t ij = T.add(i, j);
        CHECK(ij == T.add(j, i));
        CHECK(T.add(ij, k) == T.add(i, T.add(j, k)));
        CHECK(T.add(i, T.neg(i)) == T.zero());
        // The sum is linearly equivalent to the two summands.
        CHECK(is_principal(rr, T.class_divisor(ij) - T.class_divisor(i) - T.class_divisor(j)).principal);
    }
    CHECK(res.structure.order() == res.expected_order);
}

TEST_CASE("conjecture checks")
{
    auto r = conjecture_check(2, 3, 1);
    CHECK(r.k == 2);
    CHECK(r.base == group({3}));
    CHECK(r.extension == group({3, 3}));
    CHECK(r.consistent);
    auto s = conjecture_check(3, 2, 1);
    CHECK(s.k == 1);
    CHECK(s.consistent);
}
