#pragma once

#include <vector>

#include "superjac/finite_field.hpp"

namespace superjac {

/// Dense univariate polynomial over a finite field, coefficients low-first.
/// The zero polynomial is the empty vector; every helper returns trimmed results.
using FPoly = std::vector<Elem>;

namespace fpoly {

void trim(FPoly& a);
inline int degree(const FPoly& a) { return static_cast<int>(a.size()) - 1; }

FPoly from_ints(const FiniteField& F, const std::vector<i64>& c);
FPoly monomial(const FiniteField& F, Elem c, unsigned k);
FPoly linear(const FiniteField& F, Elem root); // x - root

FPoly add(const FiniteField& F, const FPoly& a, const FPoly& b);
FPoly sub(const FiniteField& F, const FPoly& a, const FPoly& b);
FPoly neg(const FiniteField& F, const FPoly& a);
FPoly scale(const FiniteField& F, const FPoly& a, Elem c);
FPoly mul(const FiniteField& F, const FPoly& a, const FPoly& b);
FPoly pow(const FiniteField& F, const FPoly& a, unsigned e);
void divmod(const FiniteField& F, const FPoly& a, const FPoly& b, FPoly& q, FPoly& r);
FPoly mod(const FiniteField& F, const FPoly& a, const FPoly& b);
FPoly exact_div(const FiniteField& F, const FPoly& a, const FPoly& b);
FPoly monic(const FiniteField& F, const FPoly& a);
FPoly gcd(const FiniteField& F, FPoly a, FPoly b);
FPoly derivative(const FiniteField& F, const FPoly& a);
Elem eval(const FiniteField& F, const FPoly& a, Elem x);
FPoly powmod(const FiniteField& F, const FPoly& base, const mpz_class& e, const FPoly& m);
/// f(x + a).
FPoly taylor_shift(const FiniteField& F, const FPoly& f, Elem a);
/// Coefficientwise image under a field embedding.
FPoly map(const FieldEmbedding& emb, const FPoly& f);
/// Multiplicity of root as a zero of f (f != 0).
unsigned root_multiplicity(const FiniteField& F, FPoly f, Elem root);

/// Distinct roots of f lying in F, sorted by packed value.
std::vector<Elem> roots(const FiniteField& F, const FPoly& f);

/// Monic irreducible factors of degree exactly k multiplied together, via
/// gcd(f, x^{|F|^k} - x) with lower degrees removed (distinct-degree split).
std::vector<FPoly> distinct_degree_parts(const FiniteField& F, const FPoly& f);

bool is_squarefree(const FiniteField& F, const FPoly& f);

} // namespace fpoly
} // namespace superjac
