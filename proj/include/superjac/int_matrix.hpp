#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace superjac {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

/// Invariant factors d_1 | d_2 | ... of Z^cols / rowspace(M), one per column. Zero entries
/// denote free summands; leading ones are kept.
std::vector<mpz_class> smith_normal_form(IntMatrix m);

/// Same list with the unit factors removed.
std::vector<mpz_class> nontrivial_factors(const std::vector<mpz_class>& factors);

} // namespace superjac
