#include "superjac/linalg.hpp"

namespace superjac {

std::vector<std::size_t> rref(const FiniteField& F, FMatrix& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col].v == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[row]);
        const Elem inv = F.inv(a[row][col]);
        for (std::size_t j = col; j < cols; ++j)
            a[row][j] = F.mul(a[row][j], inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].v == 0)
                continue;
            const Elem f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                if (a[row][j].v != 0)
                    a[i][j] = F.sub(a[i][j], F.mul(f, a[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    return pivots;
}

std::size_t rank(const FiniteField& F, FMatrix a, std::size_t cols) { return rref(F, a, cols).size(); }

FMatrix nullspace(const FiniteField& F, FMatrix a, std::size_t cols)
{
    auto pivots = rref(F, a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    FMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(cols, F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(a[r][free]);
        basis.push_back(std::move(v));
    }
    rref(F, basis, cols);
    return basis;
}

} // namespace superjac
