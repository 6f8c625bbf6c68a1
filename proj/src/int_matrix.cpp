#include "superjac/int_matrix.hpp"

#include <algorithm>

#include "superjac/error.hpp"

namespace superjac {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == c, ErrorKind::InvalidArgument, "ragged matrix");
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

std::vector<mpz_class> smith_normal_form(IntMatrix a)
{
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t steps = std::min(rows, cols);
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a.at(i, j) != 0 && (!found || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility fix-up: fold any row whose entries the pivot does not divide.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < cols; ++k)
                            a.at(t, k) += a.at(i, k);
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a.at(t, t)));
    }
    diag.resize(cols, 0);
    return diag;
}

std::vector<mpz_class> nontrivial_factors(const std::vector<mpz_class>& factors)
{
    std::vector<mpz_class> out;
    for (const auto& f : factors)
        if (f != 1)
            out.push_back(f);
    return out;
}

} // namespace superjac
