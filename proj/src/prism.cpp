#include "plk/prism.hpp"

#include "plk/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace plk {

std::size_t prism_cap() {
    const char* env = std::getenv("PLKERNEL_CAP");
    if (!env || !*env) return 6;
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 2)
        throw StructuralError("PLKERNEL_CAP must be a small nonnegative integer, got '" + s + "'");
    return static_cast<std::size_t>(std::stoul(s));
}

std::vector<std::size_t> mask_elements(unsigned mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask >> i; ++i)
        if (mask >> i & 1u) out.push_back(i);
    return out;
}

const std::vector<unsigned>& faces_of_simplex(std::size_t p) {
    static const auto table = [] {
        std::vector<std::vector<unsigned>> t;
        for (std::size_t q = 0; q <= 15; ++q) {
            std::vector<unsigned> masks((1u << (q + 1)) - 1);
            std::iota(masks.begin(), masks.end(), 1u);
            std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
                if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
                return mask_elements(a) < mask_elements(b);
            });
            t.push_back(std::move(masks));
        }
        return t;
    }();
    if (p >= table.size()) throw StructuralError("simplex dimension " + std::to_string(p) + " too large");
    return table[p];
}

namespace {

std::size_t face_position(std::size_t p, unsigned mask) {
    const auto& f = faces_of_simplex(p);
    auto it = std::find(f.begin(), f.end(), mask);
    return static_cast<std::size_t>(it - f.begin());
}

unsigned image_mask(const MonotoneMap& eta, unsigned mask) {
    unsigned out = 0;
    for (auto i : mask_elements(mask)) out |= 1u << eta[i];
    return out;
}

Point chart_point(std::size_t p, std::size_t i) {
    Point x(p, Rational(0));
    if (i > 0) x[i - 1] = 1;
    return x;
}

Point chart_barycenter(std::size_t p, unsigned mask) {
    std::vector<Point> pts;
    for (auto i : mask_elements(mask)) pts.push_back(chart_point(p, i));
    return barycenter(pts);
}

void check_cap(std::size_t p) {
    if (p > prism_cap())
        throw StructuralError("p = " + std::to_string(p) + " exceeds the prism cap " +
                              std::to_string(prism_cap()));
}

PrismR make_R(std::size_t p) {
    PrismR r;
    r.p = p;
    const auto& faces = faces_of_simplex(p);
    std::vector<VertexId> ids;
    std::vector<Point> coords;
    for (std::size_t i = 0; i <= p; ++i) {
        ids.push_back(static_cast<VertexId>(i));
        auto x = chart_point(p, i);
        x.emplace_back(0);
        coords.push_back(std::move(x));
        r.labels.push_back({false, i, 0});
    }
    for (std::size_t j = 0; j < faces.size(); ++j) {
        ids.push_back(static_cast<VertexId>(p + 1 + j));
        auto x = chart_barycenter(p, faces[j]);
        x.emplace_back(1);
        coords.push_back(std::move(x));
        r.labels.push_back({true, 0, faces[j]});
    }
    const unsigned full = (1u << (p + 1)) - 1;
    std::vector<Simplex> maximal;
    for (unsigned f0 : faces) {
        auto rest = mask_elements(full & ~f0);
        do {
            Simplex s;
            for (auto i : mask_elements(f0)) s.push_back(static_cast<VertexId>(i));
            unsigned cur = f0;
            s.push_back(static_cast<VertexId>(p + 1 + face_position(p, cur)));
            for (auto e : rest) {
                cur |= 1u << e;
                s.push_back(static_cast<VertexId>(p + 1 + face_position(p, cur)));
            }
            std::sort(s.begin(), s.end());
            maximal.push_back(std::move(s));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    r.complex = EuclideanComplex(OrderedComplex::from_maximal(ids, maximal), p + 1, std::move(coords));
    return r;
}

PrismK make_K(std::size_t p) {
    PrismK k;
    k.p = p;
    std::vector<VertexId> ids;
    std::vector<Point> coords;
    for (int level = 0; level < 2; ++level)
        for (std::size_t i = 0; i <= p; ++i) {
            ids.push_back(static_cast<VertexId>(level * (p + 1) + i));
            Point x{Rational(level)};
            auto c = chart_point(p, i);
            x.insert(x.end(), c.begin(), c.end());
            coords.push_back(std::move(x));
        }
    std::vector<Simplex> maximal;
    for (std::size_t m = 0; m <= p; ++m) {
        Simplex s;
        for (std::size_t i = 0; i <= m; ++i) s.push_back(k.bottom(i));
        for (std::size_t i = m; i <= p; ++i) s.push_back(k.top(i));
        maximal.push_back(std::move(s));
    }
    k.complex = EuclideanComplex(OrderedComplex::from_maximal(ids, maximal), p + 1, std::move(coords));
    return k;
}

template <class T, class Make>
const T& memoized(std::map<std::size_t, std::unique_ptr<T>>& cache, std::mutex& mu, std::size_t p,
                  Make make) {
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_unique<T>(make(p));
    return *slot;
}

}  // namespace

VertexId PrismR::top(unsigned face) const {
    return static_cast<VertexId>(p + 1 + face_position(p, face));
}

std::string PrismR::label(VertexId v) const {
    const auto& l = labels.at(static_cast<std::size_t>(v));
    if (!l.top) return "(e" + std::to_string(l.index) + ",0)";
    std::string s = "(b{";
    auto el = mask_elements(l.face);
    for (std::size_t i = 0; i < el.size(); ++i) s += (i ? "," : "") + std::to_string(el[i]);
    return s + "},1)";
}

const PrismR& build_R(std::size_t p) {
    check_cap(p);
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<PrismR>> cache;
    return memoized(cache, mu, p, make_R);
}

std::string PrismK::label(VertexId v) const {
    auto i = static_cast<std::size_t>(v);
    if (i > 2 * p + 1) throw StructuralError("no vertex " + std::to_string(v) + " in K^" + std::to_string(p));
    return i <= p ? "(0," + std::to_string(i) + ")" : "(1," + std::to_string(i - p - 1) + ")";
}

const PrismK& build_K(std::size_t p) {
    check_cap(p);
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<PrismK>> cache;
    return memoized(cache, mu, p, make_K);
}

bool prism_order(const RVertex& a, const RVertex& b) {
    if (!a.top && !b.top) return a.index <= b.index;
    if (a.top && b.top) return (a.face & ~b.face) == 0;
    if (!a.top) return b.face >> a.index & 1u;
    return false;
}

OrderingReport verify_R_ordering(std::size_t p, const VertexRelation& rel) {
    const auto& r = build_R(p);
    const auto& k = r.complex.base();
    OrderingReport rep;
    for (auto v : k.vertices()) {
        const auto& a = r.labels[static_cast<std::size_t>(v)];
        if (!rel(a, a)) {
            rep.ok = false;
            rep.witness = {v};
            rep.message = r.label(v) + " is not related to itself";
            return rep;
        }
    }
    // Agreement with the id order on every edge makes the restriction to each
    // simplex the id order, hence linear.
    if (k.dimension() >= 1)
        for (const auto& e : k.simplices(1)) {
            const auto& a = r.labels[static_cast<std::size_t>(e[0])];
            const auto& b = r.labels[static_cast<std::size_t>(e[1])];
            bool ab = rel(a, b), ba = rel(b, a);
            if (ab && !ba) continue;
            rep.ok = false;
            rep.witness = e;
            rep.message = !ab && !ba ? r.label(e[0]) + " and " + r.label(e[1]) + " are incomparable"
                                     : r.label(e[1]) + " precedes " + r.label(e[0]);
            return rep;
        }
    return rep;
}

std::vector<VertexId> RMap::operator()(const std::vector<VertexId>& s) const {
    std::vector<VertexId> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(vertex_image.at(static_cast<std::size_t>(v)));
    return out;
}

DeltaMorphism RMap::delta() const {
    for (std::size_t i = 1; i < eta.size(); ++i)
        if (eta[i] == eta[i - 1])
            throw StructuralError("R(eta) is a Δ-morphism only for injective eta");
    const auto& src = build_R(p).complex.base();
    const auto& dst = build_R(q).complex.base();
    std::vector<std::vector<std::size_t>> maps(static_cast<std::size_t>(src.dimension() + 1));
    for (std::size_t d = 0; d < maps.size(); ++d)
        for (const auto& s : src.simplices(d)) {
            auto t = (*this)(s);
            std::sort(t.begin(), t.end());
            auto idx = dst.index_of(t);
            if (!idx) throw ValidityError("R(eta) sends " + to_string(s) + " outside R(q)");
            maps[d].push_back(*idx);
        }
    return DeltaMorphism(std::move(maps), "R(eta)");
}

RMap build_R_map(const MonotoneMap& eta, std::size_t q) {
    if (eta.empty()) throw StructuralError("eta needs a nonempty domain");
    if (!is_monotone(eta)) throw StructuralError("eta is not monotone");
    if (eta.back() > q) throw StructuralError("eta leaves [" + std::to_string(q) + "]");
    RMap f;
    f.p = eta.size() - 1;
    f.q = q;
    f.eta = eta;
    const auto& r = build_R(f.p);
    const auto& target = build_R(q);
    for (const auto& l : r.labels)
        f.vertex_image.push_back(l.top ? target.top(image_mask(eta, l.face))
                                       : target.bottom(eta[l.index]));
    return f;
}

MorphismReport check_R_map(const RMap& f) {
    const auto& src = build_R(f.p).complex.base();
    const auto& dst = build_R(f.q).complex.base();
    for (const auto& s : src.all_simplices()) {
        auto t = f(s);
        if (!std::is_sorted(t.begin(), t.end()))
            return {false, "R(eta) reverses the order on " + to_string(s)};
        t.erase(std::unique(t.begin(), t.end()), t.end());
        if (!dst.contains(t)) return {false, "R(eta) sends " + to_string(s) + " to a non-simplex"};
    }
    return {};
}

std::vector<VertexId> bottom_inclusion(std::size_t p) {
    std::vector<VertexId> out(p + 1);
    std::iota(out.begin(), out.end(), VertexId{0});
    return out;
}

std::vector<VertexId> top_inclusion(std::size_t p) {
    std::vector<VertexId> out(faces_of_simplex(p).size());
    std::iota(out.begin(), out.end(), static_cast<VertexId>(p + 1));
    return out;
}

std::vector<VertexId> F_on_strings(std::size_t p, const std::vector<std::size_t>& x,
                                   const std::vector<std::size_t>& y) {
    if (x.size() != y.size()) throw StructuralError("F^p needs strings of equal length");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        out.push_back(static_cast<VertexId>(x[i] ? p + 1 + y[i] : y[i]));
    return out;
}

FMap build_F(std::size_t p) {
    const auto& k = build_K(p);
    auto d1 = standard_simplex(1), dp = standard_simplex(p);
    FMap f{product(simplicial_set_of(d1), simplicial_set_of(dp)), simplicial_set_of(k.complex.base()),
           {}};
    std::vector<std::vector<NormalForm>> images(f.source.components.size());
    auto as_index = [](const std::vector<VertexId>& s) {
        return std::vector<std::size_t>(s.begin(), s.end());
    };
    for (std::size_t n = 0; n < images.size(); ++n)
        for (const auto& [x, y] : f.source.components[n]) {
            auto s = F_on_strings(p, as_index(string_of_nf(d1, x)), as_index(string_of_nf(dp, y)));
            images[n].push_back(nf_of_string(k.complex.base(), s));
        }
    f.map = SimplicialMorphism(std::move(images));
    return f;
}

FReport check_F(const FMap& f, std::size_t degree) {
    auto rep = check_morphism(f.source.set, f.target, f.map);
    if (!rep.ok) return {false, rep.message};
    for (std::size_t n = 0; n <= degree; ++n) {
        auto src = f.source.set.simplices(n);
        auto dst = f.target.simplices(n);
        std::set<NormalForm> seen;
        for (const auto& s : src) {
            auto t = f.map(f.target, s);
            if (!seen.insert(t).second)
                return {false, "F is not injective in degree " + std::to_string(n) + " at " + to_string(s)};
            for (std::size_t i = 0; n > 0 && i <= n; ++i)
                if (f.map(f.target, f.source.set.face(s, i)) != f.target.face(t, i))
                    return {false, "F d_" + std::to_string(i) + " != d_" + std::to_string(i) + " F at " +
                                       to_string(s)};
            for (std::size_t j = 0; j <= n; ++j)
                if (f.map(f.target, f.source.set.degeneracy(s, j)) != f.target.degeneracy(t, j))
                    return {false, "F s_" + std::to_string(j) + " != s_" + std::to_string(j) + " F at " +
                                       to_string(s)};
        }
        if (seen.size() != dst.size() || !std::equal(seen.begin(), seen.end(), dst.begin()))
            return {false, "F is not surjective in degree " + std::to_string(n)};
    }
    return {};
}

FReport check_F_naturality(const MonotoneMap& eta, std::size_t p, std::size_t degree) {
    if (eta.empty() || !is_monotone(eta) || eta.back() > p)
        throw StructuralError("eta must be a monotone map into [" + std::to_string(p) + "]");
    std::size_t q = eta.size() - 1;
    const auto& kq = build_K(q).complex.base();
    const auto& kp = build_K(p).complex.base();
    auto tilde = [&](VertexId v) {
        auto i = static_cast<std::size_t>(v);
        return static_cast<VertexId>(i <= q ? eta[i] : p + 1 + eta[i - q - 1]);
    };
    for (std::size_t n = 0; n <= degree; ++n)
        for (const auto& x : monotone_maps(n, 1))
            for (const auto& y : monotone_maps(n, q)) {
                auto fq = F_on_strings(q, x, y);
                auto left = F_on_strings(p, x, compose(eta, y));
                std::vector<VertexId> right;
                for (auto v : fq) right.push_back(tilde(v));
                auto support = [](std::vector<VertexId> s) {
                    s.erase(std::unique(s.begin(), s.end()), s.end());
                    return s;
                };
                if (!kq.contains(support(fq)) || !kp.contains(support(left)) || left != right)
                    return {false, "naturality fails in degree " + std::to_string(n)};
            }
    return {};
}

Subdivision sd_delta(const DeltaSet& x) {
    std::size_t top = x.table().size();
    std::vector<DeltaSet> sd;
    std::vector<OrderedComplex> sdk;
    for (std::size_t k = 0; k < top; ++k) {
        sdk.push_back(barycentric_subdivide(standard_simplex(k)));
        sd.push_back(delta_set_of(sdk.back()));
    }
    // sd(δ_i) : sd Δ^{k-1} -> sd Δ^k.
    auto sd_coface = [&](std::size_t k, std::size_t i) {
        const auto& src = sdk[k - 1];
        const auto& dst = sdk[k];
        auto delta = coface(k, i);
        std::vector<std::vector<std::size_t>> maps(static_cast<std::size_t>(src.dimension() + 1));
        const auto& fsrc = faces_of_simplex(k - 1);
        for (std::size_t d = 0; d < maps.size(); ++d)
            for (const auto& s : src.simplices(d)) {
                Simplex t;
                for (auto v : s)
                    t.push_back(static_cast<VertexId>(
                        face_position(k, image_mask(delta, fsrc[static_cast<std::size_t>(v)]))));
                maps[d].push_back(*dst.index_of(t));
            }
        return DeltaMorphism(std::move(maps), "sd d" + std::to_string(i));
    };
    std::vector<std::vector<DeltaMorphism>> cofaces(top);
    for (std::size_t k = 1; k < top; ++k)
        for (std::size_t i = 0; i <= k; ++i) cofaces[k].push_back(sd_coface(k, i));

    Diagram d;
    std::vector<std::vector<std::size_t>> obj(top);
    std::vector<std::pair<std::size_t, std::size_t>> which;
    for (std::size_t k = 0; k < top; ++k)
        for (std::size_t g = 0; g < x.count(k); ++g) {
            obj[k].push_back(d.objects.size());
            which.emplace_back(k, g);
            d.objects.push_back(sd[k]);
        }
    for (std::size_t k = 1; k < top; ++k)
        for (std::size_t g = 0; g < x.count(k); ++g)
            for (std::size_t i = 0; i <= k; ++i)
                d.arrows.push_back({obj[k - 1][x.face(k, g, i)], obj[k][g], cofaces[k][i]});

    auto c = colimit(d);
    Subdivision out{c.apex, {}};
    out.carriers.resize(c.members.size());
    for (std::size_t q = 0; q < c.members.size(); ++q)
        for (const auto& cls : c.members[q]) {
            std::optional<Carrier> found;
            for (const auto& [o, gen] : cls) {
                auto [k, g] = which[o];
                const auto& s = sdk[k].simplices(q)[gen];
                const auto& fk = faces_of_simplex(k);
                if (fk[static_cast<std::size_t>(s.back())] != (1u << (k + 1)) - 1) continue;
                if (found) throw std::logic_error("sd generator with two carriers");
                Carrier cr{k, g, {}};
                for (auto v : s) cr.flag.push_back(fk[static_cast<std::size_t>(v)]);
                found = std::move(cr);
            }
            if (!found) throw std::logic_error("sd generator without a carrier");
            out.carriers[q].push_back(std::move(*found));
        }
    return out;
}

DeltaSet sd_delta_power(const DeltaSet& x, std::size_t r) {
    DeltaSet cur = x;
    for (std::size_t i = 0; i < r; ++i) cur = sd_delta(cur).set;
    return cur;
}

DeltaMorphism sd_comparison(const OrderedComplex& k, const Subdivision& s) {
    auto sdk = barycentric_subdivide(k);
    std::vector<std::size_t> offset{0};
    for (int d = 0; d <= k.dimension(); ++d) offset.push_back(offset.back() + k.count(static_cast<std::size_t>(d)));
    std::vector<std::vector<std::size_t>> maps(s.carriers.size());
    for (std::size_t q = 0; q < s.carriers.size(); ++q)
        for (const auto& c : s.carriers[q]) {
            const auto& sigma = k.simplices(c.degree)[c.generator];
            Simplex t;
            for (auto mask : c.flag) {
                Simplex face;
                for (auto i : mask_elements(mask)) face.push_back(sigma[i]);
                t.push_back(static_cast<VertexId>(offset[face.size() - 1] + *k.index_of(face)));
            }
            auto idx = sdk.index_of(t);
            if (!idx) throw std::logic_error("carrier flag is not a simplex of sd K");
            maps[q].push_back(*idx);
        }
    return DeltaMorphism(std::move(maps), "sd comparison");
}

}  // namespace plk
