#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "superjac/cyclotomic.hpp"
#include "superjac/error.hpp"
#include "superjac/field_poly.hpp"
#include "superjac/finite_field.hpp"
#include "superjac/int_matrix.hpp"

using namespace superjac;

namespace {

// Order of an element by repeated multiplication.
u64 brute_order(const FiniteField& F, Elem a)
{
    Elem x = a;
    u64 k = 1;
    while (x != F.one()) {
        x = F.mul(x, a);
        ++k;
    }
    return k;
}

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("prime fields")
{
    CHECK(FiniteField::prime(3)->generator() == Elem{2});
    CHECK(FiniteField::prime(2)->generator() == Elem{1});
    CHECK_THROWS_AS(FiniteField::prime(4), Error);
    try {
        FiniteField::prime(4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrime);
    }
    for (u64 p : {3, 5, 7, 11, 13, 101}) {
        auto F = FiniteField::prime(p);
        u64 best = 0;
        for (u64 g = 2; g < p; ++g)
            if (brute_order(*F, Elem{g}) == p - 1) {
                best = g;
                break;
            }
        CHECK(F->generator().v == best);
    }
}

TEST_CASE("extension fields")
{
    auto F4 = field(2, 2);
    CHECK(F4->modulus() == std::vector<u64>{1, 1, 1});
    auto F9 = field(3, 2);
    CHECK(brute_order(*F9, F9->generator()) == 8);
    auto F16 = field(2, 4);
    CHECK(F16->size() == 16);
    CHECK(brute_order(*F16, F16->generator()) == 15);

    for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 5}, {3, 3}, {5, 2}, {7, 2}, {2, 8}}) {
        auto F = field(p, n);
        CHECK(brute_order(*F, F->generator()) == F->size() - 1);
        // No irreducible monic of degree n comes earlier: every earlier candidate has a root
        // or a proper factor, so the minimal polynomial of the generator is not earlier.
        CHECK(F->modulus().size() == n + 1);
        CHECK(F->modulus().back() == 1);
    }
}

TEST_CASE("generator order property")
{
    for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 6}, {3, 4}, {5, 3}, {13, 2}, {2, 10}}) {
        auto F = field(p, n);
        const u64 order = F->size() - 1;
        CHECK(F->pow(F->generator(), order) == F->one());
        for (u64 l : prime_divisors(order))
            CHECK(F->pow(F->generator(), order / l) != F->one());
    }
}

TEST_CASE("trace and norm")
{
    auto F4 = field(2, 2);
    Elem w{2}; // t, root of t^2 + t + 1
    CHECK(F4->trace(w) == F4->one());
    CHECK(F4->norm(w) == F4->one());
    auto F27 = field(3, 3);
    for (u64 v = 0; v < 3; ++v)
        CHECK(F27->trace(Elem{v}) == F27->scale(Elem{v}, 3));

    // Tower compatibility through a brute relative trace F_{p^{2n}} -> F_{p^n}.
    for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
        auto small = field(p, n);
        auto big = field(p, 2 * n);
        auto emb = embedding(small, big);
        TestRng rng(p * 100 + n);
        for (int it = 0; it < 20; ++it) {
            Elem x{rng.below(big->size())};
            Elem rel = big->add(x, big->frobenius(x, n));
            Elem rel_small = emb->preimage(rel);
            CHECK(big->trace(x) == small->trace(rel_small));
            Elem reln = big->mul(x, big->frobenius(x, n));
            CHECK(big->norm(x) == small->norm(emb->preimage(reln)));
        }
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclo_ring(6)->phi() == ints({1, -1, 1}));
    CHECK(cyclo_ring(3)->phi() == ints({1, 1, 1}));
    CHECK(cyclo_ring(15)->degree() == 8);
    for (u64 n : {1, 2, 4, 9, 12, 21, 35, 105}) {
        IntPoly prod{1};
        for (u64 d : divisors(n))
            prod = ipoly::mul(prod, cyclotomic_polynomial(d));
        IntPoly target(n + 1);
        target[0] = -1;
        target[n] = 1;
        CHECK(prod == target);
        CHECK(cyclo_ring(n)->degree() == euler_phi(n));
    }
}

TEST_CASE("cyclotomic arithmetic")
{
    auto R3 = cyclo_ring(3);
    CycloInt one(R3, 1);
    CycloInt z = CycloInt::zeta_power(R3, 1);
    CycloInt a = one - z;
    CycloInt b = one - CycloInt::zeta_power(R3, 2);
    CHECK((a * b).to_integer() == mpz_class(3));
    // (1 - zeta)^2 = -3 zeta, by brute expansion 1 - 2z + z^2 with z^2 = -1 - z.
    CHECK(a.pow(2) == CycloInt(R3, -3) * z);
    CHECK(a.pow(2).coeffs() == ints({0, -3}));

    auto R6 = cyclo_ring(6);
    CHECK(CycloInt::zeta_power(R6, 1).conjugate() == CycloInt::zeta_power(R6, 5));

    CycloInt other(cyclo_ring(5), 1);
    CHECK_THROWS_AS(other + one, Error);
}

TEST_CASE("cyclotomic multiplication agrees with the complex embedding")
{
    TestRng rng(7);
    for (u64 n : {5, 12, 15, 21, 39}) {
        auto R = cyclo_ring(n);
        for (int it = 0; it < 20; ++it) {
            CycloInt x(R), y(R);
            std::vector<i64> cx(n), cy(n);
            for (u64 k = 0; k < n; ++k) {
                cx[k] = rng.range(-1000, 1000);
                cy[k] = rng.range(-1000, 1000);
            }
            x = CycloInt::from_group_ring(R, cx);
            y = CycloInt::from_group_ring(R, cy);
            auto lhs = (x * y).embed();
            auto rhs = x.embed() * y.embed();
            double scale = std::max(1.0, std::abs(rhs));
            CHECK(std::abs(lhs - rhs) / scale < 1e-9);
            CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        }
    }
}

TEST_CASE("smith normal form")
{
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})) == ints({1, 6}));
    CHECK(smith_normal_form(IntMatrix::from_rows({{1, 0}, {0, 0}})) == ints({1, 0}));
    CHECK(smith_normal_form(IntMatrix::from_rows({{0, 0, 0}})) == ints({0, 0, 0}));

    TestRng rng(11);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + rng.below(5);
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = static_cast<long>(rng.range(-20, 20));
        // Determinant by cofactor-free fraction elimination over Q as an oracle.
        std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                q[i][j] = m.at(i, j);
        mpq_class det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && q[piv][c] == 0)
                ++piv;
            if (piv == n) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(q[piv], q[c]);
                det = -det;
            }
            det *= q[c][c];
            for (std::size_t i = c + 1; i < n; ++i) {
                mpq_class f = q[i][c] / q[c][c];
                for (std::size_t j = c; j < n; ++j)
                    q[i][j] -= f * q[c][j];
            }
        }
        auto d = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()) != 0);
        mpz_class prod = 1;
        for (auto& v : d)
            prod *= v;
        CHECK(prod == abs(det.get_num()));
    }
}

TEST_CASE("polynomial roots over extensions")
{
    auto F25 = field(5, 2);
    FPoly f = fpoly::from_ints(*F25, {1, 0, 0, 0, 1});
    auto rs = fpoly::roots(*F25, f);
    CHECK(rs.size() == 4);
    for (Elem r : rs)
        CHECK(fpoly::eval(*F25, f, r) == F25->zero());
    auto big = field(2, 20);
    FPoly g = fpoly::mul(*big, fpoly::linear(*big, Elem{12345}), fpoly::linear(*big, Elem{999}));
    g = fpoly::mul(*big, g, fpoly::from_ints(*big, {1, 1, 1}));
    auto gr = fpoly::roots(*big, g);
    // x^2 + x + 1 splits in F_{2^20} as well.
    CHECK(gr.size() == 4);
}
