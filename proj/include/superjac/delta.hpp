#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "superjac/int_matrix.hpp"
#include "superjac/local.hpp"

namespace superjac {

/// The lattice A = {sum a_i R_i - (sum a_i / d) inf : d | sum a_i} with coordinates
/// (a_1, ..., a_{r-2}, sum a_i / d, a_r), and the known principal divisors in it.
///
/// Coordinate unit vectors are D_1, ..., D_{r-1} (D_i = R_i - R_{r-1}, D_{r-1} = d R_{r-1}
/// - inf) followed by R_r - R_{r-1}.
struct DeltaPresentation {
    unsigned m = 0, r = 0, d = 0;
    /// Rows: div(x - alpha_1), ..., div(x - alpha_r), div(y).
    IntMatrix relations;

    /// Coordinates of sum a_i R_i + b inf (a has r entries), if it lies in A.
    std::optional<std::vector<mpz_class>> coordinates(const std::vector<long>& a, long b) const;
};

DeltaPresentation delta_presentation(unsigned m, unsigned r);

/// Nontrivial invariant factors of A / relations.
std::vector<mpz_class> delta_structure(unsigned m, unsigned r);

/// Index pairs 0 < i < r, 0 < j < m with i m - j r > 0 (A) or < 0 (B).
std::vector<std::pair<unsigned, unsigned>> basis_index_set(unsigned m, unsigned r);
std::vector<std::pair<unsigned, unsigned>> complement_index_set(unsigned m, unsigned r);

/// f_ij = y^j / prod_{k <= i} (x - alpha_k).
FunctionRep basis_function(const CurveSpec& c, unsigned i, unsigned j);
/// sum_{k <= i} (j - m) R_k + sum_{k > i} j R_k + ((i m - j r) / d) inf.
Divisor basis_function_divisor(const CurveSpec& c, unsigned i, unsigned j);

struct BasisElement {
    unsigned i = 0, j = 0;
    FunctionRep f;
    Divisor divisor; // from the valuation engine, equal to the closed formula
};

/// The f_ij for (i, j) in A with their divisors computed two ways; RootsUnavailable unless
/// F splits, CheckFailed("divisor-formula") on disagreement.
std::vector<BasisElement> rr_basis(const CurveSpec& c);

struct CheckRecord {
    std::string tag;
    bool pass = false;
    std::string detail;
};

struct FunctionRecord {
    unsigned i = 0, j = 0;
    Divisor divisor;
    bool in_space = false; // E + div(f_ij) >= 0
    int order_at_last = 0; // ord at R_r
};

struct ProofCertificate {
    std::string curve_id;
    std::string reduction; // empty, or the prime used for a curve over Q
    unsigned g = 0;
    Divisor E;
    std::vector<std::pair<unsigned, unsigned>> A, B;
    std::vector<FunctionRecord> functions;
    std::vector<std::string> triangular_witness;
    u64 seed = 0;
    std::string rank_field;
    unsigned rank_attempts = 0;
    std::size_t rank = 0;
    std::vector<CheckRecord> checks;
    bool verdict = false;
};

/// Re-runs the argument that the f_ij span an independent g-dimensional subspace of
/// L(K_C), per curve. Checks are recorded in order: degree-E, cardinality, membership,
/// vanishing, triangular, random-rank; verdict is their conjunction.
ProofCertificate replay_proof(const CurveSpec& c, u64 seed = 0);
/// Over Q: runs over the first good prime whose splitting field has at most 2^20 elements.
ProofCertificate replay_proof(const RationalCurve& c, u64 seed = 0);
/// Throws CheckFailed naming the first failed check.
void require_pass(const ProofCertificate& cert);

struct DeltaDecision {
    bool principal = false;
    /// sum_{i < r} a_i R_i - (sum a_i) inf.
    Divisor divisor;
    bool oracle_checked = false;
    std::optional<FunctionRep> witness;
};

/// Principality of sum a_i (R_i - inf) for d = 1: all a_i divisible by m. Cross-checked
/// against the Riemann-Roch oracle (over the splitting field if needed); OracleMismatch on
/// disagreement.
DeltaDecision decide_principal_delta(const CurveSpec& c, const std::vector<long>& coeffs, bool cross_check = true);

} // namespace superjac
