#include "plk/linalg.hpp"

#include "plk/errors.hpp"

#include <utility>

namespace plk {

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m.front().size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Rational determinant(Matrix m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    std::size_t n = m.size();
    Matrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    std::size_t cols = a.empty() ? 0 : a.front().size();
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto piv = row_reduce(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

int affine_rank(const std::vector<Point>& pts) {
    if (pts.empty()) return -1;
    Matrix m;
    for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(pts[i] - pts[0]);
    return static_cast<int>(rank(std::move(m)));
}

bool affinely_independent(const std::vector<Point>& pts) {
    return affine_rank(pts) == static_cast<int>(pts.size()) - 1;
}

std::optional<std::vector<Rational>> affine_coordinates(const std::vector<Point>& pts,
                                                        const Point& x) {
    std::size_t n = x.size(), k = pts.size();
    Matrix a(n + 1, std::vector<Rational>(k));
    std::vector<Rational> b(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < k; ++j) a[r][j] = pts[j][r];
        b[r] = x[r];
    }
    for (std::size_t j = 0; j < k; ++j) a[n][j] = 1;
    b[n] = 1;
    return solve(a, b);
}

Rational simplex_volume(const std::vector<Point>& pts) {
    std::size_t k = pts.size() - 1;
    if (pts.front().size() != k)
        throw GeometryError("volume needs a full-dimensional chart");
    Matrix m;
    for (std::size_t i = 1; i <= k; ++i) m.push_back(pts[i] - pts[0]);
    Rational d = k == 0 ? Rational(1) : determinant(std::move(m));
    return abs(d) / factorial(k);
}

}  // namespace plk
