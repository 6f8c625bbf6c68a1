#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superjac/numtheory.hpp"

namespace superjac {

struct Hypothesis {
    std::string id;
    std::string statement;
    std::string witness;
    bool pass = false;
};

struct HypothesisReport {
    std::vector<Hypothesis> items;
    bool all_pass() const;
    const Hypothesis* find(const std::string& id) const;
};

/// H1 p does not divide m, H2 p | k, H3 roots pairwise incongruent mod p, H4 gcd(m, r) = 1.
HypothesisReport check_prop4_hypotheses(u64 m, const std::vector<mpz_class>& roots, const mpz_class& k, u64 p);

/// First prime divisor of k (ascending) that satisfies H1 and H3.
std::optional<u64> find_witness_prime(u64 m, const std::vector<mpz_class>& roots, const mpz_class& k);

struct RankCertificate {
    u64 m = 0;
    std::vector<mpz_class> roots;
    mpz_class k;
    /// Prime where the reduced curve carries the torsion evidence.
    u64 prime = 0;
    /// Prime divisor of k used for the independence of Gamma.
    u64 independence_prime = 0;
    HypothesisReport hypotheses;
    u64 a = 0;
    bool separable = false;
    mpz_class jacobian_order;
    bool q_divides = true;
    /// D_i = (a_i, k) - inf, i = 1..r-1.
    std::vector<std::string> generators;
    /// sum D_i = div(y - k), verified on a good reduction.
    std::string relation;
    bool relation_verified = false;
    std::optional<unsigned> rank_lower_bound;
    std::string note;
};

/// y^q = x(x-1)...(x-(p-1)) + k^q over Q. HypothesisFailed(id) when T1-T4 or the induced
/// independence hypotheses fail; EvidenceFailed if q divides |J(F_p)| of the reduction.
RankCertificate certify_theorem2(u64 p, u64 q, const mpz_class& k);

/// Non-throwing variant: the certificate carries the failed hypotheses and no conclusion.
RankCertificate evaluate_theorem2(u64 p, u64 q, const mpz_class& k);

} // namespace superjac
