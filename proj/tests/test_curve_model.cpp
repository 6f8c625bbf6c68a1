#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "superjac/error.hpp"
#include "superjac/local.hpp"

using namespace superjac;

namespace {

CurveSpec picard_f7()
{
    auto K = field(7);
    return make_curve_from_roots(3, {Elem{0}, Elem{1}, Elem{2}, Elem{3}}, K);
}

ErrorKind kind_of(auto&& fnc)
{
    try {
        fnc();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Unsupported;
}

} // namespace

TEST_CASE("genus and gcd")
{
    CHECK(genus_data(2, 5).g == 2);
    CHECK(genus_data(2, 5).d == 1);
    CHECK(genus_data(3, 4).g == 3);
    CHECK(genus_data(2, 6).g == 2);
    CHECK(genus_data(2, 6).d == 2);
    for (unsigned m = 2; m <= 12; ++m)
        for (unsigned r = 1; r <= 20; ++r)
            CHECK_NOTHROW(genus_data(m, r));
}

TEST_CASE("curve validation")
{
    auto F3 = field(3);
    CHECK(kind_of([&] { make_curve(3, std::vector<i64>{1, 0, 1}, F3); }) == ErrorKind::BadCharacteristic);
    CHECK(kind_of([&] { make_curve(2, std::vector<i64>{1, 2, 1}, F3); }) == ErrorKind::NotSeparable);
    auto c = make_curve(2, std::vector<i64>{1, -1, 0, 1}, F3);
    CHECK(c.g == 1);
    CHECK(c.canonical() == "2; [1,2,0,1]; 3");
    auto Q = make_rational_curve(2, {0, 1, 0, 1});
    CHECK(Q.g == 1);
    CHECK_FALSE(reduce_mod(Q, 2).has_value());
    CHECK(reduce_mod(Q, 5).has_value());
}

TEST_CASE("delta monomial valuations")
{
    CurveSpec c = picard_f7();
    auto R1 = Place::ramification(c, 0);
    CHECK(valuation(c, fn::x_minus(c, c.roots[0]), R1) == 3);
    CHECK(valuation(c, fn::y(c), R1) == 1);
    auto inf = Place::infinity(c);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 3; ++j)
            CHECK(valuation(c, fn::monomial(c, i, j), inf) == -static_cast<int>(i * 3 + j * 4));
}

TEST_CASE("principal divisors of the displayed identities")
{
    CurveSpec c = picard_f7();
    Divisor dx = principal_divisor(c, fn::x_minus(c, c.roots[0]));
    Divisor expect = Divisor(Place::ramification(c, 0), 3) - Divisor(Place::infinity(c), 3);
    CHECK(dx == expect);
    Divisor dy = principal_divisor(c, fn::y(c));
    Divisor ey = Divisor(Place::infinity(c), -4);
    for (unsigned i = 0; i < 4; ++i)
        ey.add(Place::ramification(c, i), 1);
    CHECK(dy == ey);

    auto K11 = field(11);
    CurveSpec h = make_curve_from_roots(2, {Elem{0}, Elem{1}, Elem{2}, Elem{3}, Elem{4}}, K11);
    auto ratio = fn::div(h, fn::x_minus(h, h.roots[0]), fn::x_minus(h, h.roots[1]));
    CHECK(principal_divisor(h, ratio) ==
          Divisor(Place::ramification(h, 0), 2) - Divisor(Place::ramification(h, 1), 2));

    // d > 1: m = 2, r = 6.
    CurveSpec e = make_curve_from_roots(2, {Elem{0}, Elem{1}, Elem{2}, Elem{3}, Elem{4}, Elem{5}}, field(13));
    CHECK(e.d == 2);
    CHECK(principal_divisor(e, fn::x_minus(e, e.roots[2])) ==
          Divisor(Place::ramification(e, 2), 2) - Divisor(Place::infinity(e), 1));
    CHECK(kind_of([&] { principal_divisor(e, fn::from_num(e, {FPoly{}, FPoly{}})); }) == ErrorKind::ZeroFunction);
}

TEST_CASE("local expansions")
{
    auto F3 = field(3);
    CurveSpec c = make_curve(2, std::vector<i64>{1, -1, 0, 1}, F3);
    Place P = make_place(c, F3, Elem{0}, Elem{1});
    auto e = local_expansion(c, P, 12);
    CHECK(e.Y[0] == Elem{1});
    CHECK(expansion_residual_ok(c, e));
    // Substitution oracle: y(t)^2 equals F(t) coefficientwise.
    Series y2 = series::mul(*F3, e.Y, e.Y, 12);
    Series Ft(12, F3->zero());
    Ft[0] = Elem{1};
    Ft[1] = F3->from_int(-1);
    Ft[3] = Elem{1};
    CHECK(y2 == Ft);

    CurveSpec pc = picard_f7();
    for (unsigned i = 0; i < 4; ++i) {
        auto ex = local_expansion(pc, Place::ramification(pc, i), 20);
        CHECK(expansion_residual_ok(pc, ex));
        // x = alpha + y^m / F'(alpha) + O(y^{2m})
        Elem dF = fpoly::eval(pc.K(), fpoly::derivative(pc.K(), pc.F), pc.roots[i]);
        CHECK(ex.X[3] == pc.K().inv(dF));
        CHECK(ex.X[1] == Elem{0});
        CHECK(ex.X[2] == Elem{0});
    }
    auto inf = local_expansion(pc, Place::infinity(pc), 20);
    CHECK(inf.x_shift == -3);
    CHECK(inf.y_shift == -4);
    CHECK(expansion_residual_ok(pc, inf));

    // Non-monic F over an extension, checked at every rational point and at infinity.
    auto F9 = field(3, 2);
    CurveSpec q = make_curve(2, std::vector<i64>{1, 1, 0, 0, 0, 2}, F9);
    for (u64 xv = 0; xv < 9; ++xv)
        for (Elem yv : F9->roots_of_power(fpoly::eval(*F9, q.F, Elem{xv}), 2)) {
            Place R = make_place(q, F9, Elem{xv}, yv);
            CHECK(expansion_residual_ok(q, local_expansion(q, R, 16)));
        }
    CHECK(expansion_residual_ok(q, local_expansion(q, Place::infinity(q), 16)));
}

TEST_CASE("valuations are additive")
{
    CurveSpec c = picard_f7();
    TestRng rng(5);
    auto places = places_over_zeros(c, fpoly::from_ints(c.K(), {1, 0, 1, 1}));
    places.push_back(Place::ramification(c, 1));
    places.push_back(Place::infinity(c));
    auto element = [&](unsigned i, unsigned j) {
        auto f = fn::monomial(c, i, j);
        return fn::scale(c, f, Elem{1 + rng.below(6)});
    };
    for (int it = 0; it < 40; ++it) {
        auto f = fn::add(c, element(rng.below(2), rng.below(3)), fn::constant(c, Elem{rng.below(7)}));
        auto g = fn::add(c, element(rng.below(2), rng.below(3)), fn::x_minus(c, Elem{rng.below(7)}));
        if (f.is_zero() || g.is_zero())
            continue;
        auto fg = fn::mul(c, f, g);
        for (const Place& P : places)
            CHECK(valuation(c, fg, P) == valuation(c, f, P) + valuation(c, g, P));
        CHECK(principal_divisor(c, fg) == principal_divisor(c, f) + principal_divisor(c, g));
        if (it % 4 == 0)
            CHECK(principal_divisor(c, fn::inverse(c, f)) == -principal_divisor(c, f));
    }
}

TEST_CASE("places and degrees")
{
    auto F2 = field(2);
    CurveSpec c = make_curve(3, std::vector<i64>{1, 1, 1}, F2);
    // Points over F_4 with x in F_2 collapse onto rational points.
    auto F4 = field(2, 2);
    Place P = make_place(c, F4, Elem{0}, Elem{1});
    CHECK(P.degree == 1);
    CHECK(P.x == Elem{0});
    int count2 = 0;
    std::set<Place> seen;
    for (u64 xv = 0; xv < 4; ++xv)
        for (Elem yv : F4->roots_of_power(fpoly::eval(*F4, fpoly::map(*embedding(F2, F4), c.F), Elem{xv}), 3))
            seen.insert(make_place(c, F4, Elem{xv}, yv));
    for (const auto& Q : seen)
        count2 += Q.degree == 2;
    CHECK(count2 == 3);
    // Over the roots of F there is one ramified place of degree 2.
    auto over = places_over_zeros(c, fpoly::from_ints(*F2, {1, 1, 1}));
    REQUIRE(over.size() == 1);
    CHECK(over[0].degree == 2);
    CHECK(over[0].is_ramified());
    // Fibers over x = 0 and x = 1 have total degree m each.
    unsigned deg = 0;
    for (const auto& Q : places_over_zeros(c, fpoly::from_ints(*F2, {0, 1, 1})))
        deg += Q.degree;
    CHECK(deg == 2 * 3);
}
