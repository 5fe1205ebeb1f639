#include "plk/polytope.hpp"

#include "plk/errors.hpp"
#include "plk/linalg.hpp"
#include "plk/lp.hpp"

#include <algorithm>
#include <set>

namespace plk {

namespace {

// Solves the square system m x = rhs; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> rhs) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) rhs[r] /= m[r][r];
    return rhs;
}

// Sign of det[q_1 - q_0, ..., q_{d-1} - q_0, x - q_0].
int orientation(const std::vector<Point>& facet, const Point& x) {
    Matrix m;
    for (std::size_t i = 1; i < facet.size(); ++i) m.push_back(facet[i] - facet[0]);
    m.push_back(x - facet[0]);
    auto d = determinant(std::move(m));
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

}  // namespace

std::vector<Coupling> coupling_vertices(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::size_t na = a.size(), nb = b.size();
    if (na == 0 || nb == 0) return {};
    std::size_t n = a.front().size(), cols = na + nb;
    Matrix aug;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rational> row(cols + 1, Rational(0));
        for (std::size_t i = 0; i < na; ++i) row[i] = a[i][r];
        for (std::size_t j = 0; j < nb; ++j) row[na + j] = -b[j][r];
        aug.push_back(std::move(row));
    }
    std::vector<Rational> sa(cols + 1, Rational(0)), sb(cols + 1, Rational(0));
    for (std::size_t i = 0; i < na; ++i) sa[i] = 1;
    for (std::size_t j = 0; j < nb; ++j) sb[na + j] = 1;
    sa[cols] = sb[cols] = 1;
    aug.push_back(std::move(sa));
    aug.push_back(std::move(sb));
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == cols) return {};  // inconsistent
    std::size_t r = pivots.size();
    aug.resize(r);

    std::set<std::vector<Rational>> seen;
    std::vector<Coupling> out;
    std::vector<bool> pick(cols, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
        std::vector<std::size_t> basis;
        for (std::size_t c = 0; c < cols; ++c)
            if (pick[c]) basis.push_back(c);
        Matrix m(r, std::vector<Rational>(r));
        std::vector<Rational> rhs(r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < r; ++k) m[i][k] = aug[i][basis[k]];
            rhs[i] = aug[i][cols];
        }
        auto x = solve_square(std::move(m), std::move(rhs));
        if (!x || std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; })) continue;
        std::vector<Rational> z(cols, Rational(0));
        for (std::size_t k = 0; k < r; ++k) z[basis[k]] = (*x)[k];
        if (!seen.insert(z).second) continue;
        out.push_back({std::vector<Rational>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(na)),
                       std::vector<Rational>(z.begin() + static_cast<std::ptrdiff_t>(na), z.end())});
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::vector<Point> extreme_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> out;
    std::size_t n = pts.front().size();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        std::vector<lp::Constraint> cons;
        std::size_t m = pts.size() - 1;
        lp::Constraint sum{std::vector<Rational>(m, Rational(1)), lp::Sense::eq, 1};
        cons.push_back(std::move(sum));
        for (std::size_t r = 0; r < n; ++r) {
            lp::Constraint c{std::vector<Rational>(m), lp::Sense::eq, pts[k][r]};
            for (std::size_t q = 0, col = 0; q < pts.size(); ++q)
                if (q != k) c.coeffs[col++] = pts[q][r];
            cons.push_back(std::move(c));
        }
        auto res = lp::maximize(std::vector<Rational>(m, Rational(0)), cons);
        if (res.status == lp::Status::infeasible) out.push_back(pts[k]);
    }
    return out;
}

Triangulation placing_triangulation(std::vector<Point> pts) {
    Triangulation t;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    t.points = pts;
    if (pts.empty()) return t;

    Matrix directions;                 // spans the current affine hull
    std::vector<std::size_t> chart;    // coordinates giving an injective projection
    auto project = [&](const Point& p) {
        Point q;
        for (auto c : chart) q.push_back(p[c]);
        return q;
    };
    t.simplices = {{0}};
    t.dimension = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        Matrix grown = directions;
        grown.push_back(pts[k] - pts[0]);
        Matrix reduced = grown;
        auto piv = row_reduce(reduced);
        if (piv.size() > directions.size()) {
            directions = std::move(grown);
            chart = piv;
            for (auto& s : t.simplices) s.push_back(k);
            ++t.dimension;
            continue;
        }
        // Boundary facets with their opposite vertex.
        std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facets;
        for (const auto& s : t.simplices)
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<std::size_t> f;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) f.push_back(s[j]);
                auto& e = facets[f];
                ++e.first;
                e.second = s[i];
            }
        std::vector<std::vector<std::size_t>> added;
        Point pk = project(pts[k]);
        for (const auto& [f, e] : facets) {
            if (e.first != 1) continue;
            std::vector<Point> fp;
            for (auto i : f) fp.push_back(project(pts[i]));
            if (fp.empty()) continue;
            int side_new = orientation(fp, pk);
            int side_opp = orientation(fp, project(pts[e.second]));
            if (side_new * side_opp < 0) {
                auto s = f;
                s.push_back(k);
                added.push_back(std::move(s));
            }
        }
        for (auto& s : added) t.simplices.push_back(std::move(s));
    }
    for (auto& s : t.simplices) std::sort(s.begin(), s.end());
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

void ComplexBuilder::add_point(const Point& p) {
    if (p.size() != ambient_) throw GeometryError("point of wrong dimension in complex builder");
    index_.emplace(p, 0);
    simplices_.push_back({p});
}

void ComplexBuilder::add_simplex(const std::vector<Point>& pts) {
    for (const auto& p : pts) {
        if (p.size() != ambient_) throw GeometryError("point of wrong dimension in complex builder");
        index_.emplace(p, 0);
    }
    simplices_.push_back(pts);
}

EuclideanComplex ComplexBuilder::build() const {
    std::map<Point, VertexId> ids;
    std::vector<VertexId> verts;
    std::vector<Point> coords;
    for (const auto& [p, unused] : index_) {
        ids.emplace(p, static_cast<VertexId>(verts.size()));
        verts.push_back(static_cast<VertexId>(verts.size()));
        coords.push_back(p);
    }
    std::vector<Simplex> simplices;
    for (const auto& s : simplices_) {
        Simplex t;
        for (const auto& p : s) t.push_back(ids.at(p));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        simplices.push_back(std::move(t));
    }
    return EuclideanComplex(OrderedComplex::from_maximal(std::move(verts), std::move(simplices)), ambient_,
                            std::move(coords));
}

Rational relative_volume(const std::vector<std::vector<Rational>>& weights) {
    if (weights.empty()) return 0;
    std::size_t s = weights.front().size() - 1;
    std::vector<Point> chart;
    for (const auto& w : weights) chart.emplace_back(w.begin() + 1, w.end());
    if (s == 0) return 1;
    auto t = placing_triangulation(chart);
    if (t.dimension < static_cast<int>(s)) return 0;
    Rational vol = 0;
    for (const auto& simplex : t.simplices) {
        std::vector<Point> p;
        for (auto i : simplex) p.push_back(t.points[i]);
        vol += simplex_volume(p);
    }
    return vol * factorial(s);
}

bool boxes_overlap(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) return false;
    for (std::size_t c = 0; c < a.front().size(); ++c) {
        auto [alo, ahi] = std::minmax_element(a.begin(), a.end(),
                                              [c](const Point& x, const Point& y) { return x[c] < y[c]; });
        auto [blo, bhi] = std::minmax_element(b.begin(), b.end(),
                                              [c](const Point& x, const Point& y) { return x[c] < y[c]; });
        if ((*ahi)[c] < (*blo)[c] || (*bhi)[c] < (*alo)[c]) return false;
    }
    return true;
}

bool covered(const std::vector<Point>& simplex, const EuclideanComplex& k) {
    if (simplex.empty()) return true;
    if (k.base().empty()) return false;
    std::size_t s = simplex.size() - 1;
    std::set<Simplex> seen;
    Rational total = 0;
    for (const auto& beta : k.base().maximal_simplices()) {
        auto bp = k.points(beta);
        if (!boxes_overlap(simplex, bp)) continue;
        auto cv = coupling_vertices(simplex, bp);
        if (cv.empty()) continue;
        if (s == 0) return true;
        std::vector<std::vector<Rational>> lam;
        Simplex support;
        for (const auto& c : cv) {
            lam.push_back(c.lambda);
            for (std::size_t j = 0; j < beta.size(); ++j)
                if (c.mu[j] > 0) support.push_back(beta[j]);
        }
        std::vector<Point> chart;
        for (const auto& l : lam) chart.emplace_back(l.begin() + 1, l.end());
        if (affine_rank(chart) < static_cast<int>(s)) continue;
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (!seen.insert(support).second) continue;
        total += relative_volume(lam);
        if (total >= 1) break;
    }
    return total == 1;
}

bool same_point_set(const EuclideanComplex& a, const EuclideanComplex& b) {
    if (a.base().empty() || b.base().empty()) return a.base().empty() && b.base().empty();
    if (a.ambient() != b.ambient()) return false;
    for (const auto& s : a.base().maximal_simplices())
        if (!covered(a.points(s), b)) return false;
    for (const auto& s : b.base().maximal_simplices())
        if (!covered(b.points(s), a)) return false;
    return true;
}

}  // namespace plk
