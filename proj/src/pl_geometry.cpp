#include "plk/pl_geometry.hpp"

#include "plk/errors.hpp"
#include "plk/homology.hpp"
#include "plk/io.hpp"
#include "plk/linalg.hpp"
#include "plk/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plk {

namespace {

std::size_t vertex_slot(const EuclideanComplex& k, VertexId v) {
    const auto& vs = k.base().vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) throw StructuralError("unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vs.begin());
}

bool in_simplex(const std::vector<Point>& simplex, const Point& x) {
    auto c = affine_coordinates(simplex, x);
    return c && std::all_of(c->begin(), c->end(), [](const Rational& v) { return v >= 0; });
}

Point head(const Point& p, std::size_t n) { return Point(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)); }
Point tail(const Point& p, std::size_t n) { return Point(p.begin() + static_cast<std::ptrdiff_t>(n), p.end()); }

Point concat(const Point& a, const Point& b) {
    Point out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

EuclideanComplex empty_complex(std::size_t ambient) {
    return EuclideanComplex(OrderedComplex::from_maximal({}, {}), ambient, {});
}

// Triangulates conv(pts) and records it.
void add_cell(ComplexBuilder& out, const std::vector<Point>& pts) {
    auto ext = extreme_points(pts);
    if (ext.empty()) return;
    auto t = placing_triangulation(ext);
    for (const auto& s : t.simplices) {
        std::vector<Point> p;
        for (auto i : s) p.push_back(t.points[i]);
        out.add_simplex(p);
    }
}

bool point_in(const EuclideanComplex& k, const Point& q) {
    for (const auto& s : k.base().maximal_simplices())
        if (in_simplex(k.points(s), q)) return true;
    return false;
}

}  // namespace

const Point& AffineSimplicialMap::image(VertexId v) const { return images.at(vertex_slot(source, v)); }

Point AffineSimplicialMap::operator()(const Point& x) const {
    for (const auto& s : source.base().maximal_simplices()) {
        auto c = affine_coordinates(source.points(s), x);
        if (!c || std::any_of(c->begin(), c->end(), [](const Rational& v) { return v < 0; })) continue;
        Point y(target.ambient(), Rational(0));
        for (std::size_t i = 0; i < s.size(); ++i) y = y + (*c)[i] * image(s[i]);
        return y;
    }
    throw GeometryError("point " + to_string(x) + " is outside the source of the map");
}

void check_map(const AffineSimplicialMap& f) {
    if (f.images.size() != f.source.base().vertices().size())
        throw StructuralError("map needs one image per source vertex");
    for (const auto& y : f.images)
        if (y.size() != f.target.ambient()) throw StructuralError("image of wrong dimension");
    auto targets = f.target.base().maximal_simplices();
    for (const auto& s : f.source.base().maximal_simplices()) {
        std::vector<Point> img;
        for (auto v : s) img.push_back(f.image(v));
        bool ok = std::any_of(targets.begin(), targets.end(), [&](const Simplex& t) {
            auto tp = f.target.points(t);
            return std::all_of(img.begin(), img.end(), [&](const Point& y) { return in_simplex(tp, y); });
        });
        if (!ok) throw GeometryError("simplex " + to_string(s) + " is not mapped into a single target simplex");
    }
}

AffineSimplicialMap affine_map(const EuclideanComplex& source, const EuclideanComplex& target,
                               const std::vector<Point>& images) {
    AffineSimplicialMap f{source, target, images};
    check_map(f);
    return f;
}

AffineSimplicialMap identity_affine(const EuclideanComplex& k) { return affine_map(k, k, k.coords()); }

AffineSimplicialMap constant_map(const EuclideanComplex& source, const EuclideanComplex& target,
                                 const Point& q) {
    return affine_map(source, target, std::vector<Point>(source.base().vertices().size(), q));
}

AffineSimplicialMap compose(const AffineSimplicialMap& f, const AffineSimplicialMap& g) {
    if (g.target.ambient() != f.source.ambient()) throw StructuralError("maps are not composable");
    AffineSimplicialMap into{g.source, f.source, g.images};
    check_map(into);
    std::vector<Point> images;
    for (const auto& y : g.images) images.push_back(f(y));
    return affine_map(g.source, f.target, images);
}

EuclideanComplex graph_of(const AffineSimplicialMap& f) {
    std::vector<Point> coords;
    for (std::size_t i = 0; i < f.images.size(); ++i) coords.push_back(concat(f.source.coords()[i], f.images[i]));
    return EuclideanComplex(f.source.base(), f.source.ambient() + f.target.ambient(), std::move(coords));
}

std::vector<VertexId> PolyhedralFamily::projection() const {
    std::map<Point, VertexId> below;
    for (auto v : refinement.base().vertices()) below.emplace(refinement.point(v), v);
    std::vector<VertexId> out;
    for (auto v : total.base().vertices()) {
        auto it = below.find(head(total.point(v), base.ambient()));
        if (it == below.end())
            throw ValidityError("total vertex " + std::to_string(v) + " does not lie over a refinement vertex");
        out.push_back(it->second);
    }
    return out;
}

void check_family(const PolyhedralFamily& w) {
    if (w.refinement.ambient() != w.base.ambient() || w.total.ambient() != w.base.ambient() + w.fiber_ambient)
        throw StructuralError("family ambient dimensions do not match");
    auto proj = w.projection();
    for (const auto& s : w.total.base().maximal_simplices()) {
        Simplex t;
        for (auto v : s) t.push_back(proj[vertex_slot(w.total, v)]);
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        if (!w.refinement.base().contains(t))
            throw ValidityError("total simplex " + to_string(s) + " does not project onto a refinement simplex");
    }
    if (w.refinement == w.base) return;
    auto base_max = w.base.base().maximal_simplices();
    for (const auto& s : w.refinement.base().maximal_simplices()) {
        auto pts = w.refinement.points(s);
        bool inside = std::any_of(base_max.begin(), base_max.end(), [&](const Simplex& b) {
            auto bp = w.base.points(b);
            return std::all_of(pts.begin(), pts.end(), [&](const Point& x) { return in_simplex(bp, x); });
        });
        if (!inside) throw ValidityError("refinement simplex " + to_string(s) + " is not inside a base simplex");
    }
    if (!same_point_set(w.refinement, w.base)) throw ValidityError("refinement does not cover the base");
}

PolyhedralFamily empty_family(const EuclideanComplex& base, std::size_t fiber_ambient) {
    return {base, base, fiber_ambient, empty_complex(base.ambient() + fiber_ambient)};
}

PolyhedralFamily product_family(const EuclideanComplex& base, const EuclideanComplex& fiber) {
    ComplexBuilder out(base.ambient() + fiber.ambient());
    for (const auto& s : base.base().maximal_simplices())
        for (const auto& t : fiber.base().maximal_simplices()) {
            std::size_t a = s.size() - 1, b = t.size() - 1;
            // Staircase: lattice paths from (0,0) to (a,b).
            std::vector<bool> steps(a + b, false);
            std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(b), true);
            std::sort(steps.begin(), steps.end());
            do {
                std::size_t i = 0, j = 0;
                std::vector<Point> pts{concat(base.point(s[0]), fiber.point(t[0]))};
                for (bool up : steps) {
                    (up ? j : i) += 1;
                    pts.push_back(concat(base.point(s[i]), fiber.point(t[j])));
                }
                out.add_simplex(pts);
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    if (fiber.base().empty()) return empty_family(base, fiber.ambient());
    return {base, base, fiber.ambient(), out.build()};
}

PolyhedralFamily graph_family(const AffineSimplicialMap& f) {
    return {f.source, f.source, f.target.ambient(), graph_of(f)};
}

PolyhedralFamily graph_family(const EuclideanComplex& base, const EuclideanComplex& refinement,
                              const std::vector<Point>& values) {
    if (values.size() != refinement.coords().size()) throw StructuralError("graph needs one value per vertex");
    std::size_t n = values.empty() ? 0 : values.front().size();
    std::vector<Point> coords;
    for (std::size_t i = 0; i < values.size(); ++i) coords.push_back(concat(refinement.coords()[i], values[i]));
    PolyhedralFamily w{base, refinement, n,
                       EuclideanComplex(refinement.base(), refinement.ambient() + n, std::move(coords))};
    check_family(w);
    return w;
}

PolyhedralFamily pullback(const AffineSimplicialMap& f, const PolyhedralFamily& w) {
    if (f.target.ambient() != w.base.ambient()) throw StructuralError("map target and family base differ in dimension");
    check_map(f);
    for (const auto& y : f.images)
        if (!point_in(w.refinement, y)) throw GeometryError("map image " + to_string(y) + " leaves the base of the family");
    std::size_t n = f.source.ambient(), m = w.base.ambient(), N = w.fiber_ambient;

    // Common refinement of the source by preimages of refinement simplices.
    ComplexBuilder refined(n);
    auto rho_max = w.refinement.base().maximal_simplices();
    for (const auto& s : f.source.base().maximal_simplices()) {
        auto sp = f.source.points(s);
        std::vector<Point> img;
        for (auto v : s) img.push_back(f.image(v));
        for (const auto& rho : rho_max) {
            auto rp = w.refinement.points(rho);
            if (!boxes_overlap(img, rp)) continue;
            std::vector<Point> cell;
            for (const auto& c : coupling_vertices(img, rp)) {
                Point x(n, Rational(0));
                for (std::size_t i = 0; i < s.size(); ++i) x = x + c.lambda[i] * sp[i];
                cell.push_back(std::move(x));
            }
            add_cell(refined, cell);
        }
    }
    auto p_ref = refined.build();

    ComplexBuilder total(n + N);
    auto tau_max = w.total.base().maximal_simplices();
    std::vector<std::vector<Point>> tau_base, tau_fiber;
    for (const auto& t : tau_max) {
        tau_base.emplace_back();
        tau_fiber.emplace_back();
        for (const auto& p : w.total.points(t)) {
            tau_base.back().push_back(head(p, m));
            tau_fiber.back().push_back(tail(p, m));
        }
    }
    for (const auto& a : p_ref.base().maximal_simplices()) {
        auto ap = p_ref.points(a);
        std::vector<Point> img;
        for (const auto& x : ap) img.push_back(f(x));
        for (std::size_t k = 0; k < tau_max.size(); ++k) {
            if (!boxes_overlap(img, tau_base[k])) continue;
            std::vector<Point> cell;
            for (const auto& c : coupling_vertices(img, tau_base[k])) {
                Point x(n, Rational(0)), y(N, Rational(0));
                for (std::size_t i = 0; i < ap.size(); ++i) x = x + c.lambda[i] * ap[i];
                for (std::size_t j = 0; j < tau_fiber[k].size(); ++j) y = y + c.mu[j] * tau_fiber[k][j];
                cell.push_back(concat(x, y));
            }
            add_cell(total, cell);
        }
    }
    PolyhedralFamily out{f.source, p_ref, N, total.build()};
    if (out.total.base().empty()) out.total = empty_complex(n + N);
    return out;
}

EuclideanComplex slice(const PolyhedralFamily& w, const Point& q) {
    if (q.size() != w.base.ambient() || !point_in(w.base, q))
        throw GeometryError("slice point " + to_string(q) + " is outside the base");
    std::size_t m = w.base.ambient(), N = w.fiber_ambient;
    ComplexBuilder out(N);
    for (const auto& t : w.total.base().maximal_simplices()) {
        std::vector<Point> b, y;
        for (const auto& p : w.total.points(t)) {
            b.push_back(head(p, m));
            y.push_back(tail(p, m));
        }
        if (!boxes_overlap({q}, b)) continue;
        std::vector<Point> cell;
        for (const auto& c : coupling_vertices({q}, b)) {
            Point z(N, Rational(0));
            for (std::size_t j = 0; j < y.size(); ++j) z = z + c.mu[j] * y[j];
            cell.push_back(std::move(z));
        }
        add_cell(out, cell);
    }
    return out.build();
}

bool same_family(const PolyhedralFamily& a, const PolyhedralFamily& b) {
    if (a.fiber_ambient != b.fiber_ambient) return false;
    if (!(a.base == b.base) && !same_point_set(a.base, b.base)) return false;
    return same_point_set(a.total, b.total);
}

RegularFiber regular_fiber(const AffineSimplicialMap& f, const Point& lambda) {
    auto tops = f.target.base().maximal_simplices();
    std::size_t p = f.target.ambient();
    if (tops.size() != 1 || tops[0].size() != p + 1)
        throw GeometryError("target of a regular-fiber map must be a single full simplex");
    auto corners = f.target.points(tops[0]);
    std::set<Point> corner_set(corners.begin(), corners.end());
    for (auto v : f.source.base().vertices())
        if (!corner_set.count(f.image(v)))
            throw GeometryError("map is not simplicial: vertex " + std::to_string(v) + " goes to " +
                                to_string(f.image(v)));
    auto bc = affine_coordinates(corners, lambda);
    if (!bc || std::any_of(bc->begin(), bc->end(), [](const Rational& v) { return v <= 0; }))
        throw GeometryError("point " + to_string(lambda) + " is not interior to the target simplex");

    // The graph as a family over the target.
    std::vector<Point> coords;
    for (std::size_t i = 0; i < f.images.size(); ++i) coords.push_back(concat(f.images[i], f.source.coords()[i]));
    PolyhedralFamily w{f.target, f.target, f.source.ambient(),
                       EuclideanComplex(f.source.base(), p + f.source.ambient(), std::move(coords))};

    RegularFiber out;
    out.fiber = slice(w, lambda);
    Rational eps(1, 2);
    std::vector<Point> small;
    for (const auto& c : corners) small.push_back((Rational(1) - eps) * lambda + eps * c);
    for (unsigned mask = 1; mask < (1u << (p + 1)); ++mask) {
        std::vector<Point> face;
        for (std::size_t i = 0; i <= p; ++i)
            if (mask >> i & 1u) face.push_back(small[i]);
        out.probes.push_back(barycenter(face));
    }
    out.probes.push_back(lambda);

    auto all = f.source.base().all_simplices();
    auto type = [&](const Point& mu) {
        std::vector<int> dims;
        for (const auto& s : all) {
            std::vector<Point> img;
            for (auto v : s) img.push_back(f.image(v));
            auto cv = coupling_vertices(img, {mu});
            std::vector<Point> pts;
            for (const auto& c : cv) pts.push_back(c.lambda);
            dims.push_back(affine_rank(pts));
            if (!cv.empty() && std::set<Point>(img.begin(), img.end()).size() != p + 1)
                throw std::logic_error("fiber piece over a proper face at an interior point");
        }
        auto fv = slice(w, mu).base().f_vector();
        for (auto c : fv) dims.push_back(static_cast<int>(c));
        return dims;
    };
    auto reference = type(lambda);
    out.certified = true;
    for (const auto& mu : out.probes)
        if (type(mu) != reference) {
            out.certified = false;
            out.message = "cell structure changes at probe " + to_string(mu);
            break;
        }
    if (out.certified) out.message = "cell structure constant over " + std::to_string(out.probes.size()) + " probes";
    return out;
}

EuclideanComplex horn(std::size_t p, std::size_t j) {
    if (p == 0 || j > p) throw StructuralError("horn needs p >= 1 and j <= p");
    auto d = chart_simplex(p);
    std::vector<Simplex> faces;
    std::set<VertexId> used;
    for (std::size_t i = 0; i <= p; ++i) {
        if (i == j) continue;
        Simplex s;
        for (std::size_t k = 0; k <= p; ++k)
            if (k != i) s.push_back(static_cast<VertexId>(k));
        used.insert(s.begin(), s.end());
        faces.push_back(std::move(s));
    }
    std::vector<VertexId> verts(used.begin(), used.end());
    std::vector<Point> coords;
    for (auto v : verts) coords.push_back(d.point(v));
    return EuclideanComplex(OrderedComplex::from_maximal(verts, faces), p, std::move(coords));
}

AffineSimplicialMap horn_retraction(std::size_t p, std::size_t j) {
    auto d = chart_simplex(p);
    auto sd = barycentric_subdivide(d);
    auto carriers = subdivision_carriers(d.base());
    auto h = horn(p, j);
    std::vector<Point> images;
    for (std::size_t v = 0; v < carriers.size(); ++v) {
        const auto& face = carriers[v];
        if (h.base().contains(face))
            images.push_back(sd.point(static_cast<VertexId>(v)));
        else
            images.push_back(d.point(static_cast<VertexId>(j)));
    }
    auto r = affine_map(sd, h, images);
    // r restricted to the horn is the identity.
    for (const auto& s : h.base().maximal_simplices()) {
        auto pieces = barycentric_subdivide(EuclideanComplex(OrderedComplex::from_maximal(s, {s}), p, h.points(s)));
        for (const auto& x : pieces.coords())
            if (r(x) != x) throw std::logic_error("horn retraction moves a horn point");
    }
    // Each simplex of sd Δ^p lands in one face of the horn.
    for (const auto& s : sd.base().maximal_simplices()) {
        std::set<VertexId> support;
        for (auto v : s) {
            const auto& y = images[static_cast<std::size_t>(v)];
            Rational rest = 1;
            for (std::size_t i = 0; i < p; ++i) {
                if (y[i] > 0) support.insert(static_cast<VertexId>(i + 1));
                rest -= y[i];
            }
            if (rest > 0) support.insert(0);
        }
        if (!h.base().contains(Simplex(support.begin(), support.end())))
            throw std::logic_error("horn retraction leaves the horn");
    }
    return r;
}

PolyhedralFamily horn_fill_family(const PolyhedralFamily& w, std::size_t p, std::size_t j) {
    auto h = horn(p, j);
    if (w.base.ambient() != p || !same_point_set(w.base, h))
        throw GeometryError("family is not over the horn");
    auto out = pullback(horn_retraction(p, j), w);
    out.base = chart_simplex(p);
    return out;
}

PolyhedralFamily restrict_to_horn(const PolyhedralFamily& w, std::size_t p, std::size_t j) {
    auto h = horn(p, j);
    return pullback(affine_map(h, w.base, h.coords()), w);
}

ManifoldReport manifold_check(const OrderedComplex& k, std::size_t d) {
    if (k.empty()) return {};
    if (k.dimension() != static_cast<int>(d) || !k.is_pure())
        throw GeometryError("manifold check needs a pure complex of dimension " + std::to_string(d));
    ManifoldReport rep;
    rep.exact = d <= 2;
    if (d == 0) return rep;
    std::map<Simplex, int> degree;
    for (const auto& s : k.simplices(d))
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            ++degree[f];
        }
    std::set<VertexId> boundary;
    for (const auto& [f, n] : degree) {
        if (n > 2) {
            rep.ok = false;
            rep.witness = f.front();
            rep.message = "facet " + to_string(f) + " lies in " + std::to_string(n) + " top simplices";
            return rep;
        }
        if (n == 1) boundary.insert(f.begin(), f.end());
    }
    HomologyProfile sphere = d == 1 ? betti_profile({2}) : betti_profile({1});
    if (d >= 2) {
        sphere.degrees.resize(d);
        sphere.degrees[d - 1].betti = 1;
    }
    auto disk = betti_profile({1});
    for (auto v : k.vertices()) {
        auto h = homology(delta_set_of(link(v, k)));
        bool on_boundary = boundary.count(v) > 0;
        if (h == (on_boundary ? disk : sphere)) continue;
        rep.ok = false;
        rep.witness = v;
        rep.message = "link of vertex " + std::to_string(v) + " has";
        for (const auto& l : h.lines()) rep.message += " " + l + ";";
        rep.message.pop_back();
        rep.message += on_boundary ? ", expected a disk" : ", expected a sphere";
        return rep;
    }
    return rep;
}

ManifoldReport manifold_check(const EuclideanComplex& k, std::size_t d) { return manifold_check(k.base(), d); }

NamedFamily read_family(std::istream& in) {
    LineReader r(in);
    auto head = r.next();
    if (head.size() != 3 || head[0] != "family" || head[2].rfind("fiber=", 0) != 0)
        r.fail("expected 'family <name> fiber=<N>'");
    NamedFamily out;
    out.name = head[1];
    out.family.fiber_ambient = parse_index(head[2].substr(6), r);
    auto base = read_complex(r);
    auto second = read_complex(r);
    if (second.name == "total") {
        out.family.base = out.family.refinement = base.complex;
        out.family.total = second.complex;
    } else {
        out.family.base = base.complex;
        out.family.refinement = second.complex;
        out.family.total = read_complex(r).complex;
    }
    auto& w = out.family;
    if (w.total.ambient() != w.base.ambient() + w.fiber_ambient)
        r.fail("total ambient must be base ambient plus fiber");
    auto proj = w.projection();
    std::set<Simplex> listed;
    if (r.peek()) {
        auto p = r.next();
        if (p.size() != 1 || p[0] != "proj") r.fail("expected 'proj'");
        while (const auto* t = r.peek()) {
            if ((*t)[0] != "p") r.fail("expected a 'p' line");
            auto toks = r.next();
            auto colon = std::find(toks.begin(), toks.end(), ":");
            if (colon == toks.end()) r.fail("proj line needs ':'");
            Simplex s, b;
            for (auto it = toks.begin() + 1; it != colon; ++it) s.push_back(parse_vertex_id(*it, r));
            for (auto it = colon + 1; it != toks.end(); ++it) b.push_back(parse_vertex_id(*it, r));
            std::sort(s.begin(), s.end());
            std::sort(b.begin(), b.end());
            if (!w.total.base().contains(s)) r.fail("proj names unknown simplex " + to_string(s));
            Simplex img;
            for (auto v : s) img.push_back(proj[vertex_slot(w.total, v)]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (img != b)
                throw ValidityError("proj of " + to_string(s) + " is " + to_string(img) + ", file says " +
                                    to_string(b));
            listed.insert(s);
        }
        for (const auto& s : w.total.base().maximal_simplices())
            if (!listed.count(s)) r.fail("proj section misses maximal simplex " + to_string(s));
    }
    check_family(w);
    return out;
}

void write_family(std::ostream& out, const std::string& name, const PolyhedralFamily& w) {
    out << "family " << name << " fiber=" << w.fiber_ambient << "\n";
    write_complex(out, "base", w.base);
    write_complex(out, "refinement", w.refinement);
    write_complex(out, "total", w.total);
    out << "proj\n";
    auto proj = w.projection();
    for (const auto& s : w.total.base().maximal_simplices()) {
        Simplex img;
        for (auto v : s) img.push_back(proj[vertex_slot(w.total, v)]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        out << "p";
        for (auto v : s) out << " " << v;
        out << " :";
        for (auto v : img) out << " " << v;
        out << "\n";
    }
}

NamedMap read_map(std::istream& in) {
    LineReader r(in);
    auto head = r.next();
    if (head.size() != 2 || head[0] != "map") r.fail("expected 'map <name>'");
    NamedMap out;
    out.name = head[1];
    auto src = read_complex(r).complex;
    auto dst = read_complex(r).complex;
    std::map<VertexId, Point> images;
    while (r.peek()) {
        auto toks = r.next();
        if (toks[0] != "f") r.fail("expected an 'f' line");
        if (toks.size() != dst.ambient() + 2) r.fail("image needs " + std::to_string(dst.ambient()) + " coordinates");
        auto v = parse_vertex_id(toks[1], r);
        if (!src.base().has_vertex(v)) r.fail("image for unknown vertex " + toks[1]);
        Point y;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            try {
                y.push_back(parse_rational(toks[i]));
            } catch (const StructuralError& e) {
                r.fail(e.what());
            }
        }
        if (!images.emplace(v, std::move(y)).second) r.fail("vertex " + toks[1] + " mapped twice");
    }
    std::vector<Point> img;
    for (auto v : src.base().vertices()) {
        auto it = images.find(v);
        if (it == images.end()) r.fail("no image for vertex " + std::to_string(v));
        img.push_back(it->second);
    }
    out.map = affine_map(src, dst, img);
    return out;
}

void write_map(std::ostream& out, const std::string& name, const AffineSimplicialMap& f) {
    out << "map " << name << "\n";
    write_complex(out, "source", f.source);
    write_complex(out, "target", f.target);
    for (auto v : f.source.base().vertices()) {
        out << "f " << v;
        for (const auto& c : f.image(v)) out << " " << to_string(c);
        out << "\n";
    }
}

}  // namespace plk
