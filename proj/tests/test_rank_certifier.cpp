#include <doctest.h>

#include "superjac/error.hpp"
#include "superjac/rank.hpp"
#include "superjac/zeta.hpp"

using namespace superjac;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

ErrorKind kind_of(u64 p, u64 q, long k)
{
    try {
        certify_theorem2(p, q, mpz_class(k));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("hypothesis checks")
{
    auto r = check_prop4_hypotheses(2, ints({0, 1, 2}), 10, 3);
    CHECK_FALSE(r.find("H2")->pass);
    CHECK(r.find("H2")->witness == "k mod p = 1");
    CHECK(r.find("H1")->pass);
    CHECK(r.find("H3")->pass);
    CHECK(r.find("H4")->pass);

    CHECK(check_prop4_hypotheses(2, ints({0, 1, 2}), 15, 3).all_pass());

    r = check_prop4_hypotheses(2, ints({0, 1, 3}), 15, 3);
    CHECK_FALSE(r.find("H3")->pass);
    CHECK(r.find("H3")->witness == "(0,3)");

    CHECK_FALSE(check_prop4_hypotheses(2, ints({0, 1, 2, 5}), 15, 3).find("H4")->pass);
    CHECK_FALSE(check_prop4_hypotheses(3, ints({0, 1}), 15, 3).find("H1")->pass);
    CHECK(check_prop4_hypotheses(2, ints({0, 1, 2}), 15, 3).items.size() == 4);
    CHECK_THROWS_AS(check_prop4_hypotheses(2, ints({0, 1, 2}), 15, 4), Error);
}

TEST_CASE("witness prime search")
{
    CHECK(find_witness_prime(2, ints({0, 1, 2}), 10) == 5u);
    CHECK_FALSE(find_witness_prime(2, ints({0, 1, 2}), 4).has_value());
    CHECK(find_witness_prime(2, ints({0, 1, 2, 3, 4}), 15) == 5u);
    CHECK_FALSE(find_witness_prime(2, ints({0, 1}), 0).has_value());
    CHECK_FALSE(find_witness_prime(2, ints({0, 1}), 1).has_value());

    // Brute oracle: every prime up to |k|, checked by hand.
    for (long k = 2; k < 200; ++k) {
        for (u64 m : {2, 3, 7}) {
            auto roots = ints({0, 1, 4, 9, 16});
            std::optional<u64> want;
            for (u64 p = 2; p <= static_cast<u64>(k) && !want; ++p) {
                bool prime = true;
                for (u64 d = 2; d * d <= p; ++d)
                    prime = prime && p % d != 0;
                if (!prime || k % static_cast<long>(p) != 0 || m % p == 0)
                    continue;
                bool distinct = true;
                for (std::size_t i = 0; i < roots.size(); ++i)
                    for (std::size_t j = i + 1; j < roots.size(); ++j)
                        distinct = distinct && (roots[j].get_si() - roots[i].get_si()) % static_cast<long>(p) != 0;
                if (distinct)
                    want = p;
            }
            CHECK(find_witness_prime(m, roots, k) == want);
            if (want)
                CHECK(check_prop4_hypotheses(m, roots, k, *want).all_pass());
        }
    }
}

TEST_CASE("certificates")
{
    auto c = certify_theorem2(3, 2, 10);
    REQUIRE(c.rank_lower_bound.has_value());
    CHECK(*c.rank_lower_bound == 2);
    CHECK(c.independence_prime == 5);
    CHECK(c.a == 1);
    CHECK(c.separable);
    CHECK_FALSE(c.q_divides);
    CHECK(c.relation_verified);
    CHECK(c.generators.size() == 2);
    CHECK(c.hypotheses.all_pass());

    c = certify_theorem2(5, 2, 14);
    REQUIRE(c.rank_lower_bound.has_value());
    CHECK(*c.rank_lower_bound == 4);
    CHECK(c.independence_prime == 7);
    CHECK(c.generators.size() == 4);

    c = certify_theorem2(7, 3, 22);
    REQUIRE(c.rank_lower_bound.has_value());
    CHECK(*c.rank_lower_bound == 6);
    CHECK(c.independence_prime == 11);

    CHECK(kind_of(5, 2, 10) == ErrorKind::HypothesisFailed);
    CHECK(kind_of(3, 2, 9) == ErrorKind::HypothesisFailed);
    CHECK(kind_of(3, 2, 4) == ErrorKind::HypothesisFailed);  // no prime > 3 divides 4
    CHECK(kind_of(7, 5, 11) == ErrorKind::HypothesisFailed); // 5 does not divide 6
    CHECK(kind_of(2, 1, 3) == ErrorKind::HypothesisFailed);

    auto e = evaluate_theorem2(5, 2, 10);
    CHECK_FALSE(e.rank_lower_bound.has_value());
    CHECK_FALSE(e.hypotheses.find("T4")->pass);
    CHECK(e.hypotheses.find("T4")->witness == "k mod p = 0");
    e = evaluate_theorem2(3, 2, 9);
    CHECK_FALSE(e.hypotheses.find("T4")->pass);
    CHECK_FALSE(e.rank_lower_bound.has_value());
}

TEST_CASE("no q-torsion on the reduction across the grid")
{
    for (u64 p : {3, 5, 7, 11, 13}) {
        for (u64 q = 2; q < p; ++q) {
            if ((p - 1) % q != 0 || !is_prime_u64(q))
                continue;
            // Smallest k with a prime factor above p and coprime to p.
            long k = static_cast<long>(p) + 1;
            while (true) {
                bool ok = k % static_cast<long>(p) != 0;
                bool big = false;
                for (const auto& l : prime_divisors(mpz_class(k)))
                    big = big || l > static_cast<unsigned long>(p);
                if (ok && big)
                    break;
                ++k;
            }
            CAPTURE(p);
            CAPTURE(q);
            auto c = evaluate_theorem2(p, q, k);
            CHECK(c.hypotheses.all_pass());
            CHECK_FALSE(c.q_divides);
            REQUIRE(c.rank_lower_bound.has_value());
            CHECK(*c.rank_lower_bound == p - 1);

            // Independent order from naive point counts where affordable.
            const unsigned g = static_cast<unsigned>((q - 1) * (p - 1) / 2);
            mpz_class size = 1;
            for (unsigned i = 0; i < g; ++i)
                size *= static_cast<unsigned long>(p);
            if (size <= 200000) {
                CurveSpec curve = artin_schreier_curve(p, q, c.a);
                std::vector<mpz_class> counts;
                for (unsigned n = 1; n <= g; ++n)
                    counts.push_back(count_affine_naive(curve, n).total);
                auto P = lpoly_from_counts(counts, p, 1, g);
                CHECK(jacobian_order(P, 1) == c.jacobian_order);
            }
        }
    }
}
