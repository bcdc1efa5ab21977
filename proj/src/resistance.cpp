#include "ohmnet/resistance.hpp"

#include "ohmnet/errors.hpp"

namespace ohmnet {

namespace {

void check_pair(const Graph& g, int i, int j) {
    int n = g.vertex_count();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw IndexError("vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range 1.." + std::to_string(n));
    }
    if (!is_connected(g)) {
        throw ConnectivityError("graph is not connected");
    }
}

} // namespace

Rational resistance_det(const Graph& g, int i, int j) {
    check_pair(g, i, j);
    if (i == j) return Rational(0);
    RatMatrix l = laplacian(g);
    std::set<std::size_t> both{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    std::set<std::size_t> ground{static_cast<std::size_t>(j)};
    Rational numerator = det(delete_rows_cols(l, both, both));
    Rational denominator = det(delete_rows_cols(l, ground, ground));
    return numerator / denominator;
}

Rational resistance_solve(const Graph& g, int i, int j) {
    check_pair(g, i, j);
    if (i == j) return Rational(0);
    RatMatrix l = laplacian(g);
    std::set<std::size_t> ground{static_cast<std::size_t>(j)};
    RatMatrix grounded = delete_rows_cols(l, ground, ground);
    // position of i after the ground row/col is removed
    std::size_t pos = static_cast<std::size_t>(i > j ? i - 2 : i - 1);
    std::vector<Rational> injection(grounded.rows(), Rational(0));
    injection[pos] = 1;
    return solve(grounded, injection)[pos];
}

RatMatrix resistance_matrix(const Graph& g) {
    int n = g.vertex_count();
    check_pair(g, 1, n);
    RatMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (n == 1) return out;

    // Ground the last vertex once; r(i,j) = X_ii + X_jj - 2 X_ij with X
    // the inverse of the grounded Laplacian, and r(i,n) = X_ii.
    std::set<std::size_t> ground{static_cast<std::size_t>(n)};
    RatMatrix x = inverse(delete_rows_cols(laplacian(g), ground, ground));
    for (int i = 1; i < n; ++i) {
        std::size_t a = static_cast<std::size_t>(i) - 1;
        out(a, static_cast<std::size_t>(n) - 1) = x(a, a);
        out(static_cast<std::size_t>(n) - 1, a) = x(a, a);
        for (int j = i + 1; j < n; ++j) {
            std::size_t b = static_cast<std::size_t>(j) - 1;
            Rational r = x(a, a) + x(b, b) - 2 * x(a, b);
            out(a, b) = r;
            out(b, a) = r;
        }
    }
    return out;
}

MetricVerdict metric_check(const Graph& g) {
    if (!is_connected(g)) throw ConnectivityError("graph is not connected");
    return metric_check(resistance_matrix(g));
}

MetricVerdict metric_check(const RatMatrix& r) {
    std::size_t n = r.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (r(i, i) != 0) {
            return {false, static_cast<int>(i) + 1, static_cast<int>(i) + 1,
                    static_cast<int>(i) + 1, "nonzero diagonal"};
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && r(i, j) <= 0) {
                return {false, static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                        static_cast<int>(j) + 1, "nonpositive off-diagonal"};
            }
            if (r(i, j) != r(j, i)) {
                return {false, static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                        static_cast<int>(j) + 1, "asymmetric"};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (r(i, k) > r(i, j) + r(j, k)) {
                    return {false, static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                            static_cast<int>(k) + 1, "triangle inequality violated"};
                }
            }
        }
    }
    return {};
}

} // namespace ohmnet
