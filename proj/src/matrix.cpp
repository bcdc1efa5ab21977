#include "ohmnet/matrix.hpp"

#include "ohmnet/errors.hpp"

#include <utility>

namespace ohmnet {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged row list");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix product shape mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += a * other(k, j);
            }
        }
    }
    return out;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant of non-square matrix");
    }
    std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear one common denominator per row; det(A) = det(B) / prod(scales).
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = m(i, j) * l;
            a[i][j] = scaled.get_num(); // denominator is 1 after scaling
        }
        scale_product *= l;
    }

    // Bareiss fraction-free elimination with row pivoting.
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    BigInt d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return make_rational(d, scale_product);
}

RatMatrix delete_rows_cols(const RatMatrix& m,
                           const std::set<std::size_t>& rows,
                           const std::set<std::size_t>& cols) {
    for (std::size_t r : rows) {
        if (r < 1 || r > m.rows()) throw IndexError("row index out of range");
    }
    for (std::size_t c : cols) {
        if (c < 1 || c > m.cols()) throw IndexError("column index out of range");
    }
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t r = 1; r <= m.rows(); ++r) {
        if (!rows.count(r)) keep_r.push_back(r);
    }
    for (std::size_t c = 1; c <= m.cols(); ++c) {
        if (!cols.count(c)) keep_c.push_back(c);
    }
    RatMatrix out(keep_r.size(), keep_c.size());
    for (std::size_t i = 0; i < keep_r.size(); ++i) {
        for (std::size_t j = 0; j < keep_c.size(); ++j) {
            out(i, j) = m(keep_r[i] - 1, keep_c[j] - 1);
        }
    }
    return out;
}

namespace {

// Gauss-Jordan on [m | rhs]; rhs is mutated into the solution block.
void gauss_jordan(RatMatrix a, RatMatrix& rhs) {
    std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularMatrixError("singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(k, j), rhs(p, j));
        }
        Rational inv_pivot = Rational(1) / a(k, k);
        for (std::size_t j = k; j < n; ++j) a(k, j) *= inv_pivot;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(k, j) *= inv_pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = a(i, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(k, j);
        }
    }
}

} // namespace

std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    if (m.rows() != m.cols()) throw DimensionError("solve with non-square matrix");
    if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
    RatMatrix rhs(m.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    gauss_jordan(m, rhs);
    std::vector<Rational> x(m.rows());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    RatMatrix rhs = RatMatrix::identity(m.rows());
    gauss_jordan(m, rhs);
    return rhs;
}

} // namespace ohmnet
