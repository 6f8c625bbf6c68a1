#pragma once

#include <vector>

#include "superjac/finite_field.hpp"

namespace superjac {

using FMatrix = std::vector<std::vector<Elem>>;

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> rref(const FiniteField& F, FMatrix& a, std::size_t cols);
std::size_t rank(const FiniteField& F, FMatrix a, std::size_t cols);
/// Basis of {v : a v = 0} in reduced echelon form (rows).
FMatrix nullspace(const FiniteField& F, FMatrix a, std::size_t cols);

} // namespace superjac
