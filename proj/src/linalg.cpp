#include "linfty/linalg.hpp"

#include <utility>

namespace linf {

std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators row by row so elimination runs over the integers.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                a[r][k] = a[rk][c] * a[r][k] - a[r][c] * a[rk][k];
                mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

Matrix rref(Matrix m, std::vector<std::size_t>& pivots) {
    pivots.clear();
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, c)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
        const Rational inv = 1 / m(row, c);
        for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, c)) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    return m;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    std::vector<std::size_t> pivots;
    const Matrix red = rref(aug, pivots);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
    return x;
}

Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

}  // namespace linf
