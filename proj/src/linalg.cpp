#include "vpcremona/linalg.hpp"

#include "vpcremona/error.hpp"

#include <utility>

namespace vpcremona {

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    return static_cast<int>(echelon(m, cols).size());
}

std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs) {
    if (m.size() != rhs.size()) throw DimensionMismatch("right-hand side length differs from row count");
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
    const auto pivots = echelon(m, cols);
    for (std::size_t r = pivots.size(); r < m.size(); ++r)
        if (m[r][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

}  // namespace vpcremona
