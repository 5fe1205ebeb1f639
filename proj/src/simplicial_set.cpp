#include "plk/simplicial_set.hpp"

#include "plk/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace plk {

std::vector<std::size_t> NormalForm::degeneracy_indices() const {
    std::vector<std::size_t> js;
    for (std::size_t t = eta.size() - 1; t > 0; --t)
        if (eta[t] == eta[t - 1]) js.push_back(t - 1);
    return js;
}

std::string to_string(const NormalForm& x) {
    std::string s = "(" + std::to_string(x.base_degree()) + ":" + std::to_string(x.generator);
    for (auto j : x.degeneracy_indices()) s += " s" + std::to_string(j);
    return s + ")";
}

MonotoneMap identity_map(std::size_t n) {
    MonotoneMap m(n + 1);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

MonotoneMap coface(std::size_t n, std::size_t i) {
    MonotoneMap m;
    for (std::size_t k = 0; k < n; ++k) m.push_back(k < i ? k : k + 1);
    return m;
}

MonotoneMap codegeneracy(std::size_t n, std::size_t j) {
    MonotoneMap m;
    for (std::size_t k = 0; k <= n + 1; ++k) m.push_back(k <= j ? k : k - 1);
    return m;
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
    MonotoneMap r;
    r.reserve(g.size());
    for (auto x : g) r.push_back(f.at(x));
    return r;
}

bool is_monotone(const MonotoneMap& f) { return std::is_sorted(f.begin(), f.end()); }

namespace {

void enumerate_monotone(std::size_t n, std::size_t m, bool surjective, MonotoneMap& cur,
                        std::vector<MonotoneMap>& out) {
    if (cur.size() == n + 1) {
        if (!surjective || cur.back() == m) out.push_back(cur);
        return;
    }
    std::size_t lo = cur.empty() ? 0 : cur.back();
    std::size_t hi = m;
    if (surjective) hi = cur.empty() ? 0 : std::min(m, cur.back() + 1);
    for (std::size_t v = lo; v <= hi; ++v) {
        cur.push_back(v);
        enumerate_monotone(n, m, surjective, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MonotoneMap> surjections(std::size_t n, std::size_t m) {
    std::vector<MonotoneMap> out;
    if (m > n) return out;
    MonotoneMap cur;
    enumerate_monotone(n, m, true, cur, out);
    return out;
}

std::vector<MonotoneMap> monotone_maps(std::size_t n, std::size_t m) {
    std::vector<MonotoneMap> out;
    MonotoneMap cur;
    enumerate_monotone(n, m, false, cur, out);
    return out;
}

namespace {

bool is_surjection(const MonotoneMap& eta) {
    if (eta.empty() || eta.front() != 0) return false;
    for (std::size_t t = 1; t < eta.size(); ++t)
        if (eta[t] != eta[t - 1] && eta[t] != eta[t - 1] + 1) return false;
    return true;
}

}  // namespace

SimplicialSetFP::SimplicialSetFP(std::vector<std::vector<std::vector<NormalForm>>> faces,
                                 std::string name)
    : faces_(std::move(faces)), name_(std::move(name)) {
    while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
    for (std::size_t m = 0; m < faces_.size(); ++m)
        for (std::size_t g = 0; g < faces_[m].size(); ++g) {
            const auto& f = faces_[m][g];
            if (f.size() != (m == 0 ? 0 : m + 1))
                throw StructuralError("generator " + std::to_string(g) + " of degree " +
                                      std::to_string(m) + " has the wrong number of faces");
            for (const auto& x : f)
                if (x.eta.size() != m || !is_surjection(x.eta) ||
                    x.generator >= count(x.base_degree()))
                    throw StructuralError("malformed face of generator " + std::to_string(g) +
                                          " in degree " + std::to_string(m));
        }
    auto rep = check_identities(*this);
    if (!rep.ok) throw ValidityError(rep.message);
}

NormalForm SimplicialSetFP::apply(const MonotoneMap& theta, const NormalForm& x) const {
    MonotoneMap c = compose(x.eta, theta);
    MonotoneMap image = c;
    image.erase(std::unique(image.begin(), image.end()), image.end());
    MonotoneMap eps;
    eps.reserve(c.size());
    for (std::size_t t = 0, s = 0; t < c.size(); ++t) {
        if (t > 0 && c[t] != c[t - 1]) ++s;
        eps.push_back(s);
    }
    std::size_t m = x.base_degree();
    NormalForm y{x.generator, identity_map(m)};
    if (image.size() != m + 1) {
        std::size_t i = m;
        while (std::binary_search(image.begin(), image.end(), i)) --i;
        MonotoneMap iota;
        for (auto v : image) iota.push_back(v < i ? v : v - 1);
        y = apply(iota, faces_[m][x.generator][i]);
    }
    return {y.generator, compose(y.eta, eps)};
}

NormalForm SimplicialSetFP::face(const NormalForm& x, std::size_t i) const {
    return apply(coface(x.degree(), i), x);
}

NormalForm SimplicialSetFP::degeneracy(const NormalForm& x, std::size_t j) const {
    return apply(codegeneracy(x.degree(), j), x);
}

std::vector<NormalForm> SimplicialSetFP::simplices(std::size_t n) const {
    std::vector<NormalForm> out;
    for (std::size_t m = 0; m <= n && m < faces_.size(); ++m)
        for (const auto& eta : surjections(n, m))
            for (std::size_t g = 0; g < count(m); ++g) out.push_back({g, eta});
    std::sort(out.begin(), out.end());
    return out;
}

long SimplicialSetFP::euler_characteristic() const {
    long chi = 0;
    for (std::size_t m = 0; m < faces_.size(); ++m)
        chi += (m % 2 ? -1L : 1L) * static_cast<long>(faces_[m].size());
    return chi;
}

IdentityReport check_identities(const SimplicialSetFP& x) {
    IdentityReport rep;
    auto fail = [&](std::size_t m, std::size_t g, std::size_t i, std::size_t j, std::string what) {
        rep.ok = false;
        rep.degree = m;
        rep.generator = g;
        rep.i = i;
        rep.j = j;
        rep.message = what + " fails on generator " + std::to_string(g) + " of degree " +
                      std::to_string(m);
        return rep;
    };
    for (std::size_t m = 0; m <= static_cast<std::size_t>(std::max(x.dimension(), 0)); ++m)
        for (std::size_t g = 0; g < x.count(m); ++g) {
            NormalForm y = x.generator(m, g);
            if (m >= 2)
                for (std::size_t j = 1; j <= m; ++j)
                    for (std::size_t i = 0; i < j; ++i)
                        if (x.face(x.face(y, j), i) != x.face(x.face(y, i), j - 1))
                            return fail(m, g, i, j,
                                        "d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                            " = d_" + std::to_string(j - 1) + " d_" +
                                            std::to_string(i));
            for (std::size_t j = 0; j <= m; ++j) {
                NormalForm s = x.degeneracy(y, j);
                for (std::size_t i = 0; i <= m + 1; ++i) {
                    NormalForm lhs = x.face(s, i), rhs;
                    if (i < j)
                        rhs = x.degeneracy(x.face(y, i), j - 1);
                    else if (i == j || i == j + 1)
                        rhs = y;
                    else
                        rhs = x.degeneracy(x.face(y, i - 1), j);
                    if (lhs != rhs)
                        return fail(m, g, i, j,
                                    "d_" + std::to_string(i) + " s_" + std::to_string(j) +
                                        " relation");
                }
            }
        }
    return rep;
}

NormalForm SimplicialMorphism::operator()(const SimplicialSetFP& target, const NormalForm& x) const {
    return target.apply(x.eta, images_[x.base_degree()][x.generator]);
}

MorphismReport check_morphism(const SimplicialSetFP& src, const SimplicialSetFP& dst,
                              const SimplicialMorphism& f) {
    MorphismReport rep;
    for (std::size_t m = 0; m <= static_cast<std::size_t>(std::max(src.dimension(), 0)); ++m) {
        if (src.count(m) == 0) continue;
        if (m >= f.images().size() || f.images()[m].size() != src.count(m)) {
            rep.ok = false;
            rep.message = "morphism has wrong size in degree " + std::to_string(m);
            return rep;
        }
        for (std::size_t g = 0; g < src.count(m); ++g) {
            const auto& img = f.image(m, g);
            if (img.degree() != m || img.generator >= dst.count(img.base_degree())) {
                rep.ok = false;
                rep.message = "image of generator " + std::to_string(g) + " in degree " +
                              std::to_string(m) + " is malformed";
                return rep;
            }
            if (m == 0) continue;
            for (std::size_t i = 0; i <= m; ++i)
                if (f(dst, src.generator_face(m, g, i)) != dst.face(img, i)) {
                    rep.ok = false;
                    rep.message = "f d_" + std::to_string(i) + " != d_" + std::to_string(i) +
                                  " f on generator " + std::to_string(g) + " of degree " +
                                  std::to_string(m);
                    return rep;
                }
        }
    }
    return rep;
}

namespace {

// Joint collapse of a pair of equal-degree simplices.
MonotoneMap joint_collapse(const NormalForm& x, const NormalForm& y) {
    MonotoneMap eps{0};
    for (std::size_t t = 1; t < x.eta.size(); ++t)
        eps.push_back(eps.back() +
                      ((x.eta[t] != x.eta[t - 1] || y.eta[t] != y.eta[t - 1]) ? 1 : 0));
    return eps;
}

NormalForm restrict_to(const NormalForm& x, const MonotoneMap& eps) {
    NormalForm r{x.generator, {}};
    for (std::size_t t = 0; t < eps.size(); ++t)
        if (t == 0 || eps[t] != eps[t - 1]) r.eta.push_back(x.eta[t]);
    return r;
}

}  // namespace

NormalForm ProductSet::pair(const NormalForm& x, const NormalForm& y) const {
    if (x.degree() != y.degree()) throw StructuralError("product pair of unequal degrees");
    MonotoneMap eps = joint_collapse(x, y);
    auto it = lookup.find({restrict_to(x, eps), restrict_to(y, eps)});
    if (it == lookup.end()) throw StructuralError("pair outside the product presentation");
    return {it->second, eps};
}

ProductSet product(const SimplicialSetFP& x, const SimplicialSetFP& y) {
    ProductSet out;
    if (x.dimension() < 0 || y.dimension() < 0) return out;
    std::size_t dx = static_cast<std::size_t>(x.dimension());
    std::size_t dy = static_cast<std::size_t>(y.dimension());
    out.components.resize(dx + dy + 1);
    for (std::size_t n = 0; n <= dx + dy; ++n) {
        auto& comp = out.components[n];
        for (std::size_t p = 0; p <= std::min(n, dx); ++p)
            for (std::size_t q = n - std::min(n, p); q <= std::min(n, dy); ++q) {
                if (p + q < n) continue;
                auto etas = surjections(n, p);
                auto zetas = surjections(n, q);
                for (std::size_t a = 0; a < x.count(p); ++a)
                    for (std::size_t b = 0; b < y.count(q); ++b)
                        for (const auto& eta : etas)
                            for (const auto& zeta : zetas) {
                                bool injective = true;
                                for (std::size_t t = 1; t <= n && injective; ++t)
                                    injective = eta[t] != eta[t - 1] || zeta[t] != zeta[t - 1];
                                if (injective) comp.push_back({{a, eta}, {b, zeta}});
                            }
            }
        std::sort(comp.begin(), comp.end());
        for (std::size_t g = 0; g < comp.size(); ++g) out.lookup[comp[g]] = g;
    }
    std::vector<std::vector<std::vector<NormalForm>>> faces(out.components.size());
    for (std::size_t n = 0; n < faces.size(); ++n)
        for (const auto& [a, b] : out.components[n]) {
            std::vector<NormalForm> f;
            if (n > 0)
                for (std::size_t i = 0; i <= n; ++i) f.push_back(out.pair(x.face(a, i), y.face(b, i)));
            faces[n].push_back(std::move(f));
        }
    out.set = SimplicialSetFP(std::move(faces), x.name() + "x" + y.name());
    return out;
}

DeltaSet forget(const SimplicialSetFP& x, std::optional<std::size_t> cap) {
    if (x.dimension() < 0) return DeltaSet(FaceTable{}, "forget");
    std::size_t top = cap ? *cap : static_cast<std::size_t>(x.dimension()) + 1;
    std::vector<std::vector<NormalForm>> simp(top + 1);
    std::vector<std::map<NormalForm, std::size_t>> index(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        simp[n] = x.simplices(n);
        for (std::size_t i = 0; i < simp[n].size(); ++i) index[n][simp[n][i]] = i;
    }
    FaceTable t(top + 1);
    for (std::size_t n = 0; n <= top; ++n)
        for (const auto& s : simp[n]) {
            FaceList f;
            if (n > 0)
                for (std::size_t i = 0; i <= n; ++i) f.push_back(index[n - 1].at(x.face(s, i)));
            t[n].push_back(std::move(f));
        }
    return DeltaSet(std::move(t), "forget(" + x.name() + ")");
}

ChainComplex normalized_chains(const SimplicialSetFP& x) {
    std::size_t top = static_cast<std::size_t>(x.dimension() + 1);
    std::vector<std::size_t> ranks(top);
    std::vector<SparseMatrix> bd(top);
    for (std::size_t m = 0; m < top; ++m) ranks[m] = x.count(m);
    for (std::size_t m = 1; m < top; ++m) {
        auto& b = bd[m];
        b.rows = ranks[m - 1];
        b.cols = ranks[m];
        b.columns.resize(b.cols);
        for (std::size_t g = 0; g < b.cols; ++g) {
            std::map<std::size_t, long long> col;
            for (std::size_t i = 0; i <= m; ++i) {
                const auto& f = x.generator_face(m, g, i);
                if (f.nondegenerate()) col[f.generator] += i % 2 ? -1 : 1;
            }
            for (auto [r, v] : col)
                if (v != 0) b.columns[g].emplace_back(r, v);
        }
    }
    ChainComplex c(std::move(ranks), std::move(bd));
    if (auto k = c.first_nonzero_square())
        throw ValidityError("normalized boundary squared nonzero in degree " + std::to_string(k));
    return c;
}

HomologyProfile homology(const SimplicialSetFP& x) { return homology(normalized_chains(x)); }

SimplicialSetFP simplicial_set_of(const OrderedComplex& k) {
    std::vector<std::vector<std::vector<NormalForm>>> faces(
        static_cast<std::size_t>(k.dimension() + 1));
    for (std::size_t m = 0; m < faces.size(); ++m)
        for (const auto& s : k.simplices(m)) {
            std::vector<NormalForm> f;
            if (m > 0)
                for (std::size_t i = 0; i <= m; ++i) {
                    Simplex face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                    f.push_back({*k.index_of(face), identity_map(m - 1)});
                }
            faces[m].push_back(std::move(f));
        }
    return SimplicialSetFP(std::move(faces), "K");
}

NormalForm nf_of_string(const OrderedComplex& k, const std::vector<VertexId>& s) {
    if (s.empty() || !std::is_sorted(s.begin(), s.end()))
        throw StructuralError("vertex string must be nonempty and weakly increasing");
    Simplex distinct = s;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto idx = k.index_of(distinct);
    if (!idx) throw StructuralError("vertex string " + to_string(Simplex(s)) + " spans no simplex");
    MonotoneMap eta;
    for (auto v : s)
        eta.push_back(static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
    return {*idx, eta};
}

std::vector<VertexId> string_of_nf(const OrderedComplex& k, const NormalForm& x) {
    const auto& s = k.simplices(x.base_degree()).at(x.generator);
    std::vector<VertexId> out;
    for (auto e : x.eta) out.push_back(s[e]);
    return out;
}

SimplicialSetFP group_nerve(const std::vector<std::vector<std::size_t>>& mult, std::size_t top) {
    std::size_t order = mult.size();
    std::vector<std::vector<std::vector<std::size_t>>> tuples(top + 1);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
    tuples[0].push_back({});
    index[0][{}] = 0;
    for (std::size_t n = 1; n <= top; ++n)
        for (const auto& t : tuples[n - 1])
            for (std::size_t g = 1; g < order; ++g) {
                auto u = t;
                u.push_back(g);
                index[n][u] = tuples[n].size();
                tuples[n].push_back(std::move(u));
            }
    auto normal = [&](const std::vector<std::size_t>& t) {
        std::vector<std::size_t> core;
        MonotoneMap eta{0};
        for (auto g : t) {
            if (g != 0) core.push_back(g);
            eta.push_back(eta.back() + (g != 0 ? 1 : 0));
        }
        return NormalForm{index[core.size()].at(core), eta};
    };
    std::vector<std::vector<std::vector<NormalForm>>> faces(top + 1);
    for (std::size_t n = 0; n <= top; ++n)
        for (const auto& t : tuples[n]) {
            std::vector<NormalForm> f;
            for (std::size_t i = 0; n > 0 && i <= n; ++i) {
                std::vector<std::size_t> u;
                if (i == 0) {
                    u.assign(t.begin() + 1, t.end());
                } else if (i == n) {
                    u.assign(t.begin(), t.end() - 1);
                } else {
                    u.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i) - 1);
                    u.push_back(mult[t[i - 1]][t[i]]);
                    u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
                }
                f.push_back(normal(u));
            }
            faces[n].push_back(std::move(f));
        }
    return SimplicialSetFP(std::move(faces), "BG");
}

std::optional<NormalForm> kan_fill(const SimplicialSetFP& x, std::size_t p, std::size_t j,
                                   const std::vector<NormalForm>& faces) {
    if (p == 0 || j > p || faces.size() != p + 1)
        throw StructuralError("horn needs p >= 1, j <= p and p+1 face slots");
    for (std::size_t i = 0; i <= p; ++i)
        if (i != j && (faces[i].degree() != p - 1 ||
                       faces[i].generator >= x.count(faces[i].base_degree())))
            throw StructuralError("horn face " + std::to_string(i) + " is malformed");
    for (std::size_t k = 1; k <= p; ++k)
        for (std::size_t i = 0; i < k; ++i) {
            if (i == j || k == j || p < 2) continue;
            if (x.face(faces[k], i) != x.face(faces[i], k - 1))
                throw ValidityError("incompatible horn: d_" + std::to_string(i) + " a_" +
                                    std::to_string(k) + " != d_" + std::to_string(k - 1) + " a_" +
                                    std::to_string(i));
        }
    for (const auto& s : x.simplices(p)) {
        bool match = true;
        for (std::size_t i = 0; i <= p && match; ++i)
            if (i != j && x.face(s, i) != faces[i]) match = false;
        if (match) return s;
    }
    return std::nullopt;
}

}  // namespace plk
