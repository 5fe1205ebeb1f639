#pragma once

// Brute-force reference computations, written independently of the library
// algorithms they check.

#include "plk/complex.hpp"
#include "plk/delta_set.hpp"
#include "plk/pl_geometry.hpp"
#include "plk/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using plk::Rational;

// f-vector of sd K by counting chains in the face poset with a DP over
// subset inclusion.
inline std::vector<std::size_t> sd_f_vector(const plk::OrderedComplex& k) {
    auto all = k.all_simplices();
    std::size_t n = all.size();
    auto subset = [](const plk::Simplex& a, const plk::Simplex& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    // chains[q][i] = number of chains of length q+1 ending at simplex i
    std::vector<std::vector<std::size_t>> chains(1, std::vector<std::size_t>(n, 1));
    for (;;) {
        std::vector<std::size_t> next(n, 0);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (subset(all[j], all[i]) && chains.back()[j]) {
                    next[i] += chains.back()[j];
                    any = true;
                }
        if (!any) break;
        chains.push_back(next);
    }
    std::vector<std::size_t> f;
    for (const auto& c : chains) {
        std::size_t s = 0;
        for (auto x : c) s += x;
        f.push_back(s);
    }
    return f;
}

// Rank over Q by fraction-free elimination on a dense integer matrix.
inline std::size_t rank_q(std::vector<std::vector<long long>> m) {
    std::vector<std::vector<Rational>> a;
    for (auto& row : m) {
        std::vector<Rational> r;
        for (auto v : row) r.emplace_back(v);
        a.push_back(r);
    }
    std::size_t rank = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Rank over GF(p).
inline std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
    for (auto& row : a)
        for (auto& v : row) v = ((v % p) + p) % p;
    auto inv = [p](long long x) {
        long long r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        long long iv = inv(a[rank][c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            long long f = a[i][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Dense boundary matrix of degree k (rows: (k-1)-generators).
inline std::vector<std::vector<long long>> boundary(const plk::DeltaSet& x, std::size_t k) {
    std::vector<std::vector<long long>> m(x.count(k - 1), std::vector<long long>(x.count(k), 0));
    for (std::size_t g = 0; g < x.count(k); ++g)
        for (std::size_t i = 0; i <= k; ++i) m[x.face(k, g, i)][g] += (i % 2) ? -1 : 1;
    return m;
}

// Betti numbers over a field: p = 0 means Q.
inline std::vector<std::size_t> betti(const plk::DeltaSet& x, long long p = 0) {
    std::size_t top = x.table().size();
    std::vector<std::size_t> r(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) r[k] = p ? rank_mod(boundary(x, k), p) : rank_q(boundary(x, k));
    std::vector<std::size_t> b;
    for (std::size_t k = 0; k < top; ++k) b.push_back(x.count(k) - r[k] - r[k + 1]);
    return b;
}

// Area of the intersection of two triangles in the plane (convex clipping).
inline Rational triangle_overlap_area(std::vector<plk::Point> a, const std::vector<plk::Point>& b) {
    auto cross = [](const plk::Point& o, const plk::Point& p, const plk::Point& q) {
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
    };
    Rational orient = cross(b[0], b[1], b[2]);
    std::vector<plk::Point> poly = a;
    for (std::size_t e = 0; e < 3 && !poly.empty(); ++e) {
        const auto& p = b[e];
        const auto& q = b[(e + 1) % 3];
        auto inside = [&](const plk::Point& x) { return cross(p, q, x) * orient >= 0; };
        std::vector<plk::Point> out;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& cur = poly[i];
            const auto& prev = poly[(i + poly.size() - 1) % poly.size()];
            bool ci = inside(cur), pi = inside(prev);
            if (ci != pi) {
                Rational dp = cross(p, q, prev), dc = cross(p, q, cur);
                Rational t = dp / (dp - dc);
                out.push_back({prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])});
            }
            if (ci) out.push_back(cur);
        }
        poly = out;
    }
    Rational area = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        area += p[0] * q[1] - p[1] * q[0];
    }
    return abs(area) / 2;
}

// Strictly increasing chains of length n+1 in the product poset [a] x [b]:
// the nondegenerate n-simplices of Δ^a × Δ^b.
inline std::size_t product_chains(std::size_t a, std::size_t b, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pts;
    for (std::size_t i = 0; i <= a; ++i)
        for (std::size_t j = 0; j <= b; ++j) pts.emplace_back(i, j);
    auto less = [](auto x, auto y) { return x != y && x.first <= y.first && x.second <= y.second; };
    std::vector<std::size_t> cnt(pts.size(), 1);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::size_t> next(pts.size(), 0);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (less(pts[j], pts[i])) next[i] += cnt[j];
        cnt = next;
    }
    std::size_t s = 0;
    for (auto c : cnt) s += c;
    return s;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Barycentric coordinates of x in hull(pts) by plain elimination on the
// system sum c_i pts_i = x, sum c_i = 1; nullopt when x is off the affine hull.
inline std::optional<std::vector<Rational>> barycentric(const std::vector<plk::Point>& pts,
                                                        const plk::Point& x) {
    std::size_t k = pts.size(), n = x.size();
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = pts[c][r];
        a[r][k] = x[r];
    }
    for (std::size_t c = 0; c <= k; ++c) a[n][c] = 1;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row <= n; ++c) {
        std::size_t r = row;
        while (r <= n && a[r][c] == 0) ++r;
        if (r > n) continue;
        std::swap(a[r], a[row]);
        for (std::size_t i = 0; i <= n; ++i)
            if (i != row && a[i][c] != 0) {
                Rational f = a[i][c] / a[row][c];
                for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
            }
        pivots.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r <= n; ++r)
        if (a[r][k] != 0) return std::nullopt;
    if (pivots.size() != k) return std::nullopt;  // dependent points
    std::vector<Rational> c(k);
    for (std::size_t i = 0; i < k; ++i) c[pivots[i]] = a[i][k] / a[i][pivots[i]];
    return c;
}

inline bool in_hull(const std::vector<plk::Point>& pts, const plk::Point& x) {
    auto c = barycentric(pts, x);
    return c && std::all_of(c->begin(), c->end(), [](const Rational& v) { return v >= 0; });
}

inline bool in_complex(const plk::EuclideanComplex& k, const plk::Point& x) {
    for (const auto& s : k.base().maximal_simplices())
        if (in_hull(k.points(s), x)) return true;
    return false;
}

// Lattice of points with `steps` subdivisions per axis of the box [lo, hi].
inline std::vector<plk::Point> grid(const plk::Point& lo, const plk::Point& hi, int steps) {
    std::vector<plk::Point> out{plk::Point{}};
    for (std::size_t d = 0; d < lo.size(); ++d) {
        std::vector<plk::Point> next;
        for (const auto& p : out)
            for (int i = 0; i <= steps; ++i) {
                auto q = p;
                q.push_back(lo[d] + (hi[d] - lo[d]) * Rational(i, steps));
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

inline std::pair<plk::Point, plk::Point> bounding_box(const std::vector<plk::Point>& pts, std::size_t n) {
    plk::Point lo(n, Rational(0)), hi(n, Rational(0));
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == 0 || pts[i][d] < lo[d]) lo[d] = pts[i][d];
            if (i == 0 || pts[i][d] > hi[d]) hi[d] = pts[i][d];
        }
    for (std::size_t d = 0; d < n; ++d) {
        lo[d] -= Rational(1, 2);
        hi[d] += Rational(1, 2);
    }
    return {lo, hi};
}

// (p, x) ∈ f*W iff (f(p), x) ∈ W, with f evaluated by the oracle.
inline bool pullback_membership(const plk::AffineSimplicialMap& f, const plk::PolyhedralFamily& w,
                                const plk::PolyhedralFamily& pulled, int steps) {
    using plk::operator+;
    using plk::operator*;
    std::size_t n = f.source.ambient(), N = w.fiber_ambient;
    std::vector<plk::Point> fiber_pts;
    for (const auto& x : w.total.coords()) fiber_pts.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(w.base.ambient()), x.end());
    if (fiber_pts.empty()) fiber_pts.push_back(plk::Point(N, Rational(0)));
    auto [flo, fhi] = bounding_box(fiber_pts, N);
    auto [plo, phi] = bounding_box(f.source.coords(), n);
    plk::Point lo = plo, hi = phi;
    lo.insert(lo.end(), flo.begin(), flo.end());
    hi.insert(hi.end(), fhi.begin(), fhi.end());
    auto tops = f.source.base().maximal_simplices();
    for (const auto& z : grid(lo, hi, steps)) {
        plk::Point p(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n)), x(z.begin() + static_cast<std::ptrdiff_t>(n), z.end());
        bool expect = false;
        for (const auto& s : tops) {
            auto c = barycentric(f.source.points(s), p);
            if (!c || std::any_of(c->begin(), c->end(), [](const Rational& v) { return v < 0; })) continue;
            plk::Point y(w.base.ambient(), Rational(0));
            for (std::size_t i = 0; i < s.size(); ++i) y = y + (*c)[i] * f.image(s[i]);
            y.insert(y.end(), x.begin(), x.end());
            expect = in_complex(w.total, y);
            break;
        }
        if (in_complex(pulled.total, z) != expect) return false;
    }
    return true;
}

}  // namespace oracle
