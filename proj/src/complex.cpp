#include "plk/complex.hpp"

#include "plk/errors.hpp"
#include "plk/linalg.hpp"
#include "plk/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plk {

std::string to_string(const Simplex& s) {
    std::string r = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) r += " ";
        r += std::to_string(s[i]);
    }
    return r + "]";
}

namespace {

const std::vector<Simplex> no_simplices;

std::vector<VertexId> sorted_unique_vertices(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw StructuralError("repeated vertex id in vertex list");
    return v;
}

Simplex normalized(Simplex s, const std::vector<VertexId>& vertices) {
    if (s.empty()) throw StructuralError("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw StructuralError("simplex " + to_string(s) + " repeats a vertex");
    for (auto v : s)
        if (!std::binary_search(vertices.begin(), vertices.end(), v))
            throw StructuralError("simplex " + to_string(s) + " references unknown vertex " +
                                  std::to_string(v));
    return s;
}

Simplex without(const Simplex& s, std::size_t i) {
    Simplex r;
    r.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) r.push_back(s[j]);
    return r;
}

}  // namespace

OrderedComplex OrderedComplex::from_maximal(std::vector<VertexId> vertices,
                                            std::vector<Simplex> simplices) {
    OrderedComplex k;
    k.vertices_ = sorted_unique_vertices(std::move(vertices));
    std::vector<std::vector<Simplex>> by_dim(k.vertices_.empty() ? 0 : 1);
    for (auto v : k.vertices_) by_dim[0].push_back({v});
    for (auto& raw : simplices) {
        Simplex s = normalized(std::move(raw), k.vertices_);
        std::size_t n = s.size();
        if (by_dim.size() < n) by_dim.resize(n);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            by_dim[f.size() - 1].push_back(std::move(f));
        }
    }
    for (auto& d : by_dim) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
    }
    k.by_dim_ = std::move(by_dim);
    return k;
}

OrderedComplex OrderedComplex::from_simplices(std::vector<VertexId> vertices,
                                              std::vector<Simplex> simplices) {
    OrderedComplex k;
    k.vertices_ = sorted_unique_vertices(std::move(vertices));
    for (auto& raw : simplices) {
        Simplex s = normalized(std::move(raw), k.vertices_);
        if (k.by_dim_.size() < s.size()) k.by_dim_.resize(s.size());
        k.by_dim_[s.size() - 1].push_back(std::move(s));
    }
    for (auto& d : k.by_dim_) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
    }
    return k;
}

bool OrderedComplex::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const std::vector<Simplex>& OrderedComplex::simplices(std::size_t k) const {
    return k < by_dim_.size() ? by_dim_[k] : no_simplices;
}

std::vector<Simplex> OrderedComplex::all_simplices() const {
    std::vector<Simplex> r;
    for (const auto& d : by_dim_) r.insert(r.end(), d.begin(), d.end());
    return r;
}

std::optional<std::size_t> OrderedComplex::index_of(const Simplex& s) const {
    if (s.empty()) return std::nullopt;
    const auto& d = simplices(s.size() - 1);
    auto it = std::lower_bound(d.begin(), d.end(), s);
    if (it == d.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - d.begin());
}

bool OrderedComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::vector<Simplex> OrderedComplex::maximal_simplices() const {
    std::vector<Simplex> r;
    for (std::size_t k = 0; k < by_dim_.size(); ++k) {
        std::vector<bool> covered(by_dim_[k].size(), false);
        if (k + 1 < by_dim_.size())
            for (const auto& t : by_dim_[k + 1])
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (auto idx = index_of(without(t, i))) covered[*idx] = true;
        for (std::size_t i = 0; i < by_dim_[k].size(); ++i)
            if (!covered[i]) r.push_back(by_dim_[k][i]);
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<std::size_t> OrderedComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& d : by_dim_) f.push_back(d.size());
    return f;
}

long OrderedComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < by_dim_.size(); ++k)
        chi += (k % 2 ? -1L : 1L) * static_cast<long>(by_dim_[k].size());
    return chi;
}

bool OrderedComplex::is_pure() const {
    for (const auto& s : maximal_simplices())
        if (static_cast<int>(s.size()) - 1 != dimension()) return false;
    return true;
}

EuclideanComplex::EuclideanComplex(OrderedComplex base, std::size_t ambient,
                                   std::vector<Point> coords)
    : base_(std::move(base)), ambient_(ambient), coords_(std::move(coords)) {
    if (coords_.size() != base_.vertices().size())
        throw StructuralError("coordinate count does not match vertex count");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i].size() != ambient_)
            throw StructuralError("vertex " + std::to_string(base_.vertices()[i]) +
                                  " has wrong coordinate length");
}

const Point& EuclideanComplex::point(VertexId v) const {
    const auto& vs = base_.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v)
        throw StructuralError("unknown vertex " + std::to_string(v));
    return coords_[static_cast<std::size_t>(it - vs.begin())];
}

std::vector<Point> EuclideanComplex::points(const Simplex& s) const {
    std::vector<Point> r;
    r.reserve(s.size());
    for (auto v : s) r.push_back(point(v));
    return r;
}

ValidityReport validate(const OrderedComplex& k) {
    ValidityReport rep;
    for (auto v : k.vertices())
        if (!k.contains({v})) {
            rep.ok = false;
            rep.reason = "face closure violated";
            rep.witness = "vertex " + std::to_string(v) + " is not a 0-simplex";
            return rep;
        }
    for (int d = 1; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(static_cast<std::size_t>(d)))
            for (std::size_t i = 0; i < s.size(); ++i)
                if (!k.contains(without(s, i))) {
                    rep.ok = false;
                    rep.reason = "face closure violated";
                    rep.witness = "face " + to_string(without(s, i)) + " of " + to_string(s) +
                                  " missing";
                    return rep;
                }
    return rep;
}

std::optional<Point> improper_intersection(const std::vector<Point>& a, const Simplex& sa,
                                           const std::vector<Point>& b, const Simplex& sb) {
    std::size_t na = a.size(), nb = b.size(), n = a.front().size();
    std::vector<lp::Constraint> cons;
    lp::Constraint sum_a{std::vector<Rational>(na + nb, Rational(0)), lp::Sense::eq, 1};
    lp::Constraint sum_b = sum_a;
    for (std::size_t i = 0; i < na; ++i) sum_a.coeffs[i] = 1;
    for (std::size_t j = 0; j < nb; ++j) sum_b.coeffs[na + j] = 1;
    cons.push_back(std::move(sum_a));
    cons.push_back(std::move(sum_b));
    for (std::size_t r = 0; r < n; ++r) {
        lp::Constraint c{std::vector<Rational>(na + nb), lp::Sense::eq, 0};
        for (std::size_t i = 0; i < na; ++i) c.coeffs[i] = a[i][r];
        for (std::size_t j = 0; j < nb; ++j) c.coeffs[na + j] = -b[j][r];
        cons.push_back(std::move(c));
    }
    std::vector<Rational> obj(na + nb, Rational(0));
    for (std::size_t i = 0; i < na; ++i)
        if (!std::binary_search(sb.begin(), sb.end(), sa[i])) obj[i] = 1;
    auto res = lp::maximize(obj, cons);
    if (res.status != lp::Status::optimal || res.value <= 0) return std::nullopt;
    Point x(n, Rational(0));
    for (std::size_t i = 0; i < na; ++i) x = x + res.x[i] * a[i];
    return x;
}

namespace {

struct TopSimplex {
    Simplex verts;
    Matrix bary;  // λ = bary * [x; 1]
};

std::vector<Rational> bary_coords(const TopSimplex& t, const Point& x) {
    std::size_t d = x.size();
    std::vector<Rational> lam(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        Rational s = t.bary[i][d];
        for (std::size_t r = 0; r < d; ++r) s += t.bary[i][r] * x[r];
        lam[i] = std::move(s);
    }
    return lam;
}

// Degree argument for a pure full-dimensional complex: facets in at most two top
// simplices with opposite sides, boundary facets supporting the hull of all
// vertices, and one generic point covered exactly once. Returns false when the
// certificate does not apply; the caller then falls back to pairwise tests.
bool pseudomanifold_certificate(const EuclideanComplex& k) {
    const auto& base = k.base();
    std::size_t d = k.ambient();
    if (d == 0 || base.dimension() != static_cast<int>(d) || !base.is_pure()) return false;

    std::map<Point, VertexId> seen;
    for (auto v : base.vertices())
        if (!seen.emplace(k.point(v), v).second) return false;

    std::vector<TopSimplex> tops;
    for (const auto& s : base.simplices(d)) {
        Matrix m(d + 1, std::vector<Rational>(d + 1));
        for (std::size_t j = 0; j <= d; ++j) {
            const auto& p = k.point(s[j]);
            for (std::size_t r = 0; r < d; ++r) m[r][j] = p[r];
            m[d][j] = 1;
        }
        auto inv = inverse(m);
        if (!inv) return false;
        tops.push_back({s, std::move(*inv)});
    }

    std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> facets;
    for (std::size_t t = 0; t < tops.size(); ++t)
        for (std::size_t i = 0; i <= d; ++i) facets[without(tops[t].verts, i)].emplace_back(t, i);

    for (const auto& [facet, inc] : facets) {
        if (inc.size() > 2) return false;
        auto [t, i] = inc.front();
        if (inc.size() == 2) {
            auto [u, j] = inc.back();
            auto lam = bary_coords(tops[t], k.point(tops[u].verts[j]));
            if (lam[i] >= 0) return false;
        } else {
            for (auto v : base.vertices())
                if (bary_coords(tops[t], k.point(v))[i] < 0) return false;
        }
    }

    const auto pts0 = k.points(tops.front().verts);
    for (long attempt = 1; attempt <= 8; ++attempt) {
        Point x(d, Rational(0));
        Rational total = 0;
        for (std::size_t j = 0; j <= d; ++j) {
            Rational w = 1 + attempt * static_cast<long>(j * j + 1) + static_cast<long>(j);
            x = x + w * pts0[j];
            total += w;
        }
        x = (1 / total) * x;
        std::size_t inside = 0;
        bool generic = true;
        for (const auto& t : tops) {
            auto lam = bary_coords(t, x);
            bool any_neg = false, any_zero = false;
            for (const auto& l : lam) {
                any_neg = any_neg || l < 0;
                any_zero = any_zero || l == 0;
            }
            if (any_neg) continue;
            if (any_zero) {
                generic = false;
                break;
            }
            ++inside;
        }
        if (generic) return inside == 1;
    }
    return false;
}

struct Box {
    Point lo, hi;
};

Box box_of(const std::vector<Point>& pts) {
    Box b{pts.front(), pts.front()};
    for (const auto& p : pts)
        for (std::size_t r = 0; r < p.size(); ++r) {
            if (p[r] < b.lo[r]) b.lo[r] = p[r];
            if (p[r] > b.hi[r]) b.hi[r] = p[r];
        }
    return b;
}

bool boxes_meet(const Box& a, const Box& b) {
    for (std::size_t r = 0; r < a.lo.size(); ++r)
        if (a.hi[r] < b.lo[r] || b.hi[r] < a.lo[r]) return false;
    return true;
}

}  // namespace

ValidityReport validate(const EuclideanComplex& k, ValidateOptions opts) {
    ValidityReport rep = validate(k.base());
    if (!rep.ok) return rep;
    auto maximal = k.base().maximal_simplices();
    for (const auto& s : maximal)
        if (!affinely_independent(k.points(s))) {
            rep.ok = false;
            rep.reason = "affinely dependent simplex";
            rep.witness = to_string(s);
            return rep;
        }
    if (opts.allow_fast_path && pseudomanifold_certificate(k)) {
        rep.certified_fast = true;
        return rep;
    }
    if (k.ambient() == 0) {
        if (k.base().vertices().size() > 1) {
            rep.ok = false;
            rep.reason = "intersection not a common face";
            rep.witness = "vertices " + std::to_string(k.base().vertices()[0]) + " and " +
                          std::to_string(k.base().vertices()[1]) + " coincide";
        }
        return rep;
    }

    std::vector<std::vector<Point>> pts;
    std::vector<Box> boxes;
    for (const auto& s : maximal) {
        pts.push_back(k.points(s));
        boxes.push_back(box_of(pts.back()));
    }
    std::vector<std::size_t> order(maximal.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (boxes[a].lo[0] != boxes[b].lo[0]) return boxes[a].lo[0] < boxes[b].lo[0];
        return a < b;
    });
    for (std::size_t ii = 0; ii < order.size(); ++ii) {
        std::size_t a = order[ii];
        for (std::size_t jj = ii + 1; jj < order.size(); ++jj) {
            std::size_t b = order[jj];
            if (boxes[b].lo[0] > boxes[a].hi[0]) break;
            if (!boxes_meet(boxes[a], boxes[b])) continue;
            std::size_t x = std::min(a, b), y = std::max(a, b);
            auto w = improper_intersection(pts[x], maximal[x], pts[y], maximal[y]);
            if (!w) w = improper_intersection(pts[y], maximal[y], pts[x], maximal[x]);
            if (w) {
                rep.ok = false;
                rep.reason = "intersection not a common face";
                rep.witness = to_string(maximal[x]) + " and " + to_string(maximal[y]) +
                              " meet at " + to_string(*w);
                return rep;
            }
        }
    }
    return rep;
}

std::vector<Simplex> subdivision_carriers(const OrderedComplex& k) { return k.all_simplices(); }

namespace {

void flags_of(const Simplex& s, std::vector<std::size_t>& chain,
              const std::vector<std::size_t>& offsets, const OrderedComplex& k,
              std::vector<Simplex>& out) {
    chain.push_back(offsets[s.size() - 1] + *k.index_of(s));
    if (s.size() == 1) {
        Simplex f(chain.rbegin(), chain.rend());
        out.emplace_back(f.begin(), f.end());
    } else {
        for (std::size_t i = 0; i < s.size(); ++i) flags_of(without(s, i), chain, offsets, k, out);
    }
    chain.pop_back();
}

}  // namespace

OrderedComplex barycentric_subdivide(const OrderedComplex& k) {
    std::vector<std::size_t> offsets;
    std::size_t n = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        offsets.push_back(n);
        n += k.count(static_cast<std::size_t>(d));
    }
    std::vector<VertexId> verts(n);
    for (std::size_t i = 0; i < n; ++i) verts[i] = static_cast<VertexId>(i);
    std::vector<Simplex> flags;
    std::vector<std::size_t> chain;
    for (const auto& s : k.maximal_simplices()) flags_of(s, chain, offsets, k, flags);
    return OrderedComplex::from_maximal(std::move(verts), std::move(flags));
}

EuclideanComplex barycentric_subdivide(const EuclideanComplex& k) {
    auto sd = barycentric_subdivide(k.base());
    std::vector<Point> coords;
    for (const auto& s : k.base().all_simplices()) coords.push_back(barycenter(k.points(s)));
    return EuclideanComplex(std::move(sd), k.ambient(), std::move(coords));
}

namespace {

std::vector<VertexId> vertices_in(const std::vector<Simplex>& ss) {
    std::set<VertexId> vs;
    for (const auto& s : ss) vs.insert(s.begin(), s.end());
    return {vs.begin(), vs.end()};
}

EuclideanComplex with_coords(OrderedComplex sub, const EuclideanComplex& k) {
    std::vector<Point> coords;
    for (auto v : sub.vertices()) coords.push_back(k.point(v));
    return EuclideanComplex(std::move(sub), k.ambient(), std::move(coords));
}

}  // namespace

OrderedComplex star(VertexId v, const OrderedComplex& k) {
    if (!k.has_vertex(v)) throw StructuralError("star of unknown vertex " + std::to_string(v));
    std::vector<Simplex> ss;
    for (const auto& s : k.maximal_simplices())
        if (std::binary_search(s.begin(), s.end(), v)) ss.push_back(s);
    auto verts = vertices_in(ss);
    return OrderedComplex::from_maximal(std::move(verts), std::move(ss));
}

OrderedComplex link(VertexId v, const OrderedComplex& k) {
    if (!k.has_vertex(v)) throw StructuralError("link of unknown vertex " + std::to_string(v));
    std::vector<Simplex> ss;
    for (const auto& s : k.maximal_simplices()) {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || *it != v || s.size() == 1) continue;
        Simplex rest = s;
        rest.erase(rest.begin() + (it - s.begin()));
        ss.push_back(std::move(rest));
    }
    auto verts = vertices_in(ss);
    return OrderedComplex::from_maximal(std::move(verts), std::move(ss));
}

EuclideanComplex star(VertexId v, const EuclideanComplex& k) {
    return with_coords(star(v, k.base()), k);
}

EuclideanComplex link(VertexId v, const EuclideanComplex& k) {
    return with_coords(link(v, k.base()), k);
}

OrderedComplex cone(VertexId apex, const OrderedComplex& l) {
    if (l.has_vertex(apex)) throw StructuralError("cone apex already a vertex of the base");
    auto verts = l.vertices();
    verts.push_back(apex);
    std::vector<Simplex> ss{{apex}};
    for (auto s : l.maximal_simplices()) {
        s.insert(std::lower_bound(s.begin(), s.end(), apex), apex);
        ss.push_back(std::move(s));
    }
    return OrderedComplex::from_maximal(std::move(verts), std::move(ss));
}

EuclideanComplex join(const Point& a0, const EuclideanComplex& l, std::optional<VertexId> apex) {
    if (a0.size() != l.ambient() && !l.base().empty())
        throw StructuralError("join apex has wrong dimension");
    VertexId id = apex ? *apex : (l.base().empty() ? 0 : l.base().vertices().back() + 1);
    for (const auto& s : l.base().maximal_simplices()) {
        auto pts = l.points(s);
        pts.push_back(a0);
        if (!affinely_independent(pts))
            throw GeometryError("simplex " + to_string(s) + " not in general position w.r.t. " +
                                to_string(a0));
    }
    auto c = cone(id, l.base());
    std::vector<Point> coords;
    for (auto v : c.vertices()) coords.push_back(v == id ? a0 : l.point(v));
    return EuclideanComplex(std::move(c), a0.size(), std::move(coords));
}

OrderedComplex full_subcomplex(const OrderedComplex& k, const std::vector<VertexId>& verts) {
    std::vector<VertexId> vs(verts);
    std::sort(vs.begin(), vs.end());
    std::vector<Simplex> ss;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(static_cast<std::size_t>(d)))
            if (std::all_of(s.begin(), s.end(), [&](VertexId v) {
                    return std::binary_search(vs.begin(), vs.end(), v);
                }))
                ss.push_back(s);
    std::vector<VertexId> kept;
    for (auto v : vs)
        if (k.has_vertex(v)) kept.push_back(v);
    return OrderedComplex::from_maximal(std::move(kept), std::move(ss));
}

DeltaSet delta_set_of(const OrderedComplex& k) {
    FaceTable t(static_cast<std::size_t>(k.dimension() + 1));
    for (std::size_t d = 0; d < t.size(); ++d)
        for (const auto& s : k.simplices(d)) {
            FaceList f;
            if (d > 0)
                for (std::size_t i = 0; i <= d; ++i) f.push_back(*k.index_of(without(s, i)));
            t[d].push_back(std::move(f));
        }
    return DeltaSet(std::move(t), "K");
}

Rational total_volume(const EuclideanComplex& k) {
    if (k.base().dimension() != static_cast<int>(k.ambient()))
        throw GeometryError("volume needs a full-dimensional chart");
    Rational v = 0;
    for (const auto& s : k.base().simplices(k.ambient())) v += simplex_volume(k.points(s));
    return v;
}

OrderedComplex standard_simplex(std::size_t p) {
    Simplex s;
    for (std::size_t i = 0; i <= p; ++i) s.push_back(static_cast<VertexId>(i));
    return OrderedComplex::from_maximal(s, {s});
}

EuclideanComplex chart_simplex(std::size_t p) {
    std::vector<Point> coords;
    for (std::size_t i = 0; i <= p; ++i) {
        Point x(p, Rational(0));
        if (i > 0) x[i - 1] = 1;
        coords.push_back(std::move(x));
    }
    return EuclideanComplex(standard_simplex(p), p, std::move(coords));
}

OrderedComplex simplex_boundary(std::size_t p) {
    Simplex s;
    for (std::size_t i = 0; i <= p; ++i) s.push_back(static_cast<VertexId>(i));
    std::vector<Simplex> facets;
    for (std::size_t i = 0; i <= p; ++i) facets.push_back(without(s, i));
    return OrderedComplex::from_maximal(s, facets);
}

}  // namespace plk
