#include "plk/lift.hpp"

#include "plk/errors.hpp"
#include "plk/linalg.hpp"
#include "plk/polytope.hpp"

#include <algorithm>

namespace plk {

namespace {

Point chart_vertex(std::size_t k, std::size_t i) {
    Point x(k, Rational(0));
    if (i > 0) x[i - 1] = 1;
    return x;
}

// Chart Δ^{|pos|-1} -> chart Δ^k, e_i -> barycenter of the vertex groups in pos[i].
AffineSimplicialMap chart_map(std::size_t k, const std::vector<std::vector<std::size_t>>& pos) {
    std::vector<Point> imgs;
    for (const auto& group : pos) {
        std::vector<Point> pts;
        for (auto g : group) pts.push_back(chart_vertex(k, g));
        imgs.push_back(barycenter(pts));
    }
    return affine_map(chart_simplex(pos.size() - 1), chart_simplex(k), imgs);
}

std::size_t index_in(const OrderedComplex& k, const Simplex& s) {
    auto i = k.index_of(s);
    if (!i) throw StructuralError("simplex " + to_string(s) + " is not in the complex");
    return *i;
}

std::string where(const Simplex& s) { return "simplex " + to_string(s); }

}  // namespace

AffineSimplicialMap characteristic_map(const EuclideanComplex& k, const Simplex& s,
                                       const EuclideanComplex& target) {
    return affine_map(chart_simplex(s.size() - 1), target, k.points(s));
}

Classification classify(const PolyhedralFamily& w) {
    Classification c{w.base, {}};
    auto dim = w.base.base().dimension();
    for (int k = 0; k <= dim; ++k) {
        c.values.emplace_back();
        for (const auto& s : w.base.base().simplices(static_cast<std::size_t>(k)))
            c.values.back().push_back(pullback(characteristic_map(w.base, s, w.base), w));
    }
    return c;
}

Classification subdivision_lift(const Classification& f, const PolyhedralFamily& w, std::size_t r) {
    if (!(f.geometry == w.base)) throw StructuralError("classification and family have different bases");
    if (r == 0) return f;
    auto sd = w.base;
    for (std::size_t i = 0; i < r; ++i) sd = barycentric_subdivide(sd);
    Classification g{sd, {}};
    auto dim = sd.base().dimension();
    for (int k = 0; k <= dim; ++k) {
        g.values.emplace_back();
        for (const auto& s : sd.base().simplices(static_cast<std::size_t>(k)))
            g.values.back().push_back(pullback(characteristic_map(sd, s, w.base), w));
    }
    return g;
}

LiftReport check_classification(const Classification& c) {
    const auto& k = c.geometry.base();
    for (std::size_t d = 1; d < c.values.size(); ++d)
        for (std::size_t s = 0; s < c.values[d].size(); ++s) {
            const auto& simplex = k.simplices(d)[s];
            for (std::size_t i = 0; i <= d; ++i) {
                std::vector<std::vector<std::size_t>> pos;
                Simplex face;
                for (std::size_t m = 0; m <= d; ++m)
                    if (m != i) {
                        pos.push_back({m});
                        face.push_back(simplex[m]);
                    }
                auto restricted = pullback(chart_map(d, pos), c.values[d][s]);
                if (!same_family(restricted, c.values[d - 1][index_in(k, face)]))
                    return {false, "d_" + std::to_string(i) + " of the value on " + where(simplex) +
                                       " differs from the value on its face"};
            }
        }
    return {};
}

LiftReport check_forced_by_top(const Classification& c) {
    const auto& k = c.geometry.base();
    for (const auto& top : k.maximal_simplices()) {
        std::size_t d = top.size() - 1;
        const auto& value = c.values[d][index_in(k, top)];
        for (unsigned mask = 1; mask + 1 < (1u << top.size()); ++mask) {
            std::vector<std::vector<std::size_t>> pos;
            Simplex face;
            for (std::size_t m = 0; m <= d; ++m)
                if (mask >> m & 1u) {
                    pos.push_back({m});
                    face.push_back(top[m]);
                }
            auto restricted = pullback(chart_map(d, pos), value);
            if (!same_family(restricted, c.values[face.size() - 1][index_in(k, face)]))
                return {false, "value on " + where(face) + " is not the restriction from " + where(top)};
        }
    }
    return {};
}

LiftReport check_lift_compatibility(const Classification& f, const Classification& g) {
    const auto& k = f.geometry.base();
    auto carriers = subdivision_carriers(k);
    if (!(g.geometry == barycentric_subdivide(f.geometry)))
        throw StructuralError("lift is not over the barycentric subdivision");
    const auto& sd = g.geometry.base();
    for (std::size_t d = 0; d < g.values.size(); ++d)
        for (std::size_t s = 0; s < g.values[d].size(); ++s) {
            const auto& flag = sd.simplices(d)[s];
            const auto& top = carriers[static_cast<std::size_t>(flag.back())];
            std::vector<std::vector<std::size_t>> pos;
            for (auto v : flag) {
                pos.emplace_back();
                for (auto x : carriers[static_cast<std::size_t>(v)])
                    pos.back().push_back(static_cast<std::size_t>(
                        std::find(top.begin(), top.end(), x) - top.begin()));
            }
            auto expected = pullback(chart_map(top.size() - 1, pos), f.values[top.size() - 1][index_in(k, top)]);
            if (!same_family(expected, g.values[d][s]))
                return {false, "lift on flag " + to_string(flag) + " is not the pullback of the value on " +
                                   to_string(top)};
        }
    return {};
}

LiftReport check_reassembly(const Classification& c, const PolyhedralFamily& w) {
    std::size_t m = w.base.ambient(), N = w.fiber_ambient;
    const auto& k = c.geometry.base();
    auto tops = k.maximal_simplices();
    std::vector<EuclideanComplex> pieces;
    for (const auto& top : tops) {
        auto corners = c.geometry.points(top);
        const auto& value = c.values[top.size() - 1][index_in(k, top)];
        ComplexBuilder b(m + N);
        for (const auto& s : value.total.base().maximal_simplices()) {
            std::vector<Point> pts;
            for (const auto& p : value.total.points(s)) {
                Point x = corners[0];
                for (std::size_t i = 1; i < corners.size(); ++i) x = x + p[i - 1] * (corners[i] - corners[0]);
                x.insert(x.end(), p.begin() + static_cast<std::ptrdiff_t>(top.size() - 1), p.end());
                pts.push_back(std::move(x));
            }
            b.add_simplex(pts);
        }
        pieces.push_back(b.build());
        for (const auto& s : pieces.back().base().maximal_simplices())
            if (!covered(pieces.back().points(s), w.total))
                return {false, "piece over " + to_string(top) + " leaves the family"};
    }
    for (const auto& s : w.total.base().maximal_simplices()) {
        auto pts = w.total.points(s);
        std::vector<Point> below;
        for (const auto& p : pts) below.emplace_back(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m));
        int dim = affine_rank(pts);
        bool any = false;
        for (std::size_t t = 0; t < tops.size(); ++t) {
            std::vector<Point> cell;
            for (const auto& cp : coupling_vertices(below, c.geometry.points(tops[t]))) {
                Point x(m + N, Rational(0));
                for (std::size_t i = 0; i < pts.size(); ++i) x = x + cp.lambda[i] * pts[i];
                cell.push_back(std::move(x));
            }
            auto ext = extreme_points(cell);
            if (ext.empty() || affine_rank(ext) < dim) continue;
            any = true;
            auto tri = placing_triangulation(ext);
            for (const auto& simplex : tri.simplices) {
                std::vector<Point> q;
                for (auto i : simplex) q.push_back(tri.points[i]);
                if (!covered(q, pieces[t]))
                    return {false, "part of " + to_string(s) + " over " + to_string(tops[t]) + " is missing"};
            }
        }
        if (!any) return {false, "simplex " + to_string(s) + " is not over the subdivision"};
    }
    return {};
}

}  // namespace plk
