#pragma once

#include "ohmnet/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <set>
#include <vector>

namespace ohmnet {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // 0-based element access
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix operator*(const RatMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact determinant. Rows are scaled to integers by their common
// denominator, then eliminated fraction-free (Bareiss), so intermediate
// values stay integral. Throws DimensionError on non-square input.
Rational det(const RatMatrix& m);

// Minor with the listed rows/columns removed, order preserved.
// Indices are 1-based. Throws IndexError when out of range.
RatMatrix delete_rows_cols(const RatMatrix& m,
                           const std::set<std::size_t>& rows,
                           const std::set<std::size_t>& cols);

// Exact solution of m x = b. Throws SingularMatrixError on a singular
// matrix (detected by an exactly zero pivot, never by epsilon).
std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& b);

// Exact inverse via Gauss-Jordan; one factorization serving many
// right-hand sides. Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& m);

} // namespace ohmnet
