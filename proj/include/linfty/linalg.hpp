#pragma once

#include <optional>
#include <vector>

#include "linfty/rational.hpp"

namespace linf {

/// Dense rational matrix; desk-scale only.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination on denominator-cleared rows.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form; pivot columns are written to `pivots`.
Matrix rref(Matrix m, std::vector<std::size_t>& pivots);

/// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// Matrix whose columns are the given vectors (all of length `rows`).
Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

}  // namespace linf
