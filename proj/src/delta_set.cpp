#include "plk/delta_set.hpp"

#include "plk/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace plk {

namespace {

FaceTable trimmed(FaceTable t) {
    while (!t.empty() && t.back().empty()) t.pop_back();
    return t;
}

}  // namespace

DeltaSet::DeltaSet(FaceTable faces, std::string name)
    : faces_(trimmed(std::move(faces))), name_(std::move(name)) {
    check_ranges();
    auto rep = check_identities(*this);
    if (!rep.ok) throw ValidityError(rep.message);
}

DeltaSet::DeltaSet(Unchecked, FaceTable faces, std::string name)
    : faces_(trimmed(std::move(faces))), name_(std::move(name)) {
    check_ranges();
}

void DeltaSet::check_ranges() const {
    for (std::size_t k = 0; k < faces_.size(); ++k)
        for (std::size_t g = 0; g < faces_[k].size(); ++g) {
            const auto& f = faces_[k][g];
            std::size_t want = k == 0 ? 0 : k + 1;
            if (f.size() != want)
                throw StructuralError("generator " + std::to_string(g) + " in degree " +
                                      std::to_string(k) + " has " + std::to_string(f.size()) +
                                      " faces, expected " + std::to_string(want));
            for (auto t : f)
                if (t >= faces_[k - 1].size())
                    throw StructuralError("face of generator " + std::to_string(g) +
                                          " in degree " + std::to_string(k) +
                                          " names unknown generator " + std::to_string(t));
        }
}

long DeltaSet::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < faces_.size(); ++k)
        chi += (k % 2 ? -1L : 1L) * static_cast<long>(faces_[k].size());
    return chi;
}

std::size_t DeltaSet::total_count() const {
    std::size_t n = 0;
    for (const auto& d : faces_) n += d.size();
    return n;
}

std::size_t DeltaSet::sub_face(std::size_t k, std::size_t g,
                               const std::vector<std::size_t>& keep) const {
    std::size_t deg = k;
    for (std::size_t i = k + 1; i-- > 0;) {
        if (std::binary_search(keep.begin(), keep.end(), i)) continue;
        g = faces_[deg][g][i];
        --deg;
    }
    return g;
}

std::vector<std::size_t> DeltaSet::vertices_of(std::size_t k, std::size_t g) const {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j <= k; ++j) v.push_back(sub_face(k, g, {j}));
    return v;
}

IdentityReport check_identities(const DeltaSet& x) {
    IdentityReport rep;
    for (std::size_t k = 2; k <= static_cast<std::size_t>(std::max(x.dimension(), 0)); ++k)
        for (std::size_t g = 0; g < x.count(k); ++g)
            for (std::size_t j = 1; j <= k; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    std::size_t lhs = x.face(k - 1, x.face(k, g, j), i);
                    std::size_t rhs = x.face(k - 1, x.face(k, g, i), j - 1);
                    if (lhs != rhs) {
                        rep.ok = false;
                        rep.degree = k;
                        rep.generator = g;
                        rep.i = i;
                        rep.j = j;
                        rep.message = "d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                      " != d_" + std::to_string(j - 1) + " d_" +
                                      std::to_string(i) + " on generator " + std::to_string(g) +
                                      " of degree " + std::to_string(k);
                        return rep;
                    }
                }
    return rep;
}

DeltaMorphism DeltaMorphism::identity(const DeltaSet& x) {
    std::vector<std::vector<std::size_t>> m(x.table().size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        m[k].resize(x.count(k));
        std::iota(m[k].begin(), m[k].end(), 0);
    }
    return DeltaMorphism(std::move(m), "id");
}

MorphismReport check_morphism(const DeltaSet& src, const DeltaSet& dst, const DeltaMorphism& f) {
    MorphismReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.message = std::move(msg);
        return rep;
    };
    const auto& m = f.maps();
    for (std::size_t k = 0; k < src.table().size(); ++k) {
        if (src.count(k) == 0) continue;
        if (k >= m.size() || m[k].size() != src.count(k))
            return fail("map has wrong size in degree " + std::to_string(k));
        for (std::size_t g = 0; g < src.count(k); ++g) {
            if (m[k][g] >= dst.count(k))
                return fail("image of generator " + std::to_string(g) + " in degree " +
                            std::to_string(k) + " out of range");
            if (k == 0) continue;
            for (std::size_t i = 0; i <= k; ++i)
                if (m[k - 1][src.face(k, g, i)] != dst.face(k, m[k][g], i))
                    return fail("f d_" + std::to_string(i) + " != d_" + std::to_string(i) +
                                " f on generator " + std::to_string(g) + " of degree " +
                                std::to_string(k));
        }
    }
    return rep;
}

DeltaMorphism compose(const DeltaMorphism& g, const DeltaMorphism& f) {
    std::vector<std::vector<std::size_t>> m(f.maps().size());
    for (std::size_t k = 0; k < m.size(); ++k)
        for (auto x : f.maps()[k]) m[k].push_back(g(k, x));
    return DeltaMorphism(std::move(m), g.name() + "." + f.name());
}

bool is_isomorphism(const DeltaSet& src, const DeltaSet& dst, const DeltaMorphism& f) {
    if (!check_morphism(src, dst, f).ok) return false;
    std::size_t top = std::max(src.table().size(), dst.table().size());
    for (std::size_t k = 0; k < top; ++k) {
        if (src.count(k) != dst.count(k)) return false;
        if (src.count(k) == 0) continue;
        std::vector<bool> hit(dst.count(k), false);
        for (auto y : f.maps()[k]) {
            if (hit[y]) return false;
            hit[y] = true;
        }
    }
    return true;
}

std::optional<std::string> horn_incompatibility(const DeltaSet& x, std::size_t p, std::size_t j,
                                                const std::vector<std::size_t>& faces) {
    if (p == 0 || j > p || faces.size() != p + 1)
        throw StructuralError("horn needs p >= 1, j <= p and p+1 face slots");
    for (std::size_t i = 0; i <= p; ++i)
        if (i != j && faces[i] >= x.count(p - 1))
            throw StructuralError("horn face " + std::to_string(i) + " names unknown generator");
    if (p < 2) return std::nullopt;
    for (std::size_t k = 1; k <= p; ++k)
        for (std::size_t i = 0; i < k; ++i) {
            if (i == j || k == j) continue;
            if (x.face(p - 1, faces[k], i) != x.face(p - 1, faces[i], k - 1))
                return "d_" + std::to_string(i) + " a_" + std::to_string(k) + " != d_" +
                       std::to_string(k - 1) + " a_" + std::to_string(i);
        }
    return std::nullopt;
}

std::optional<std::size_t> kan_fill(const DeltaSet& x, std::size_t p, std::size_t j,
                                    const std::vector<std::size_t>& faces) {
    if (auto bad = horn_incompatibility(x, p, j, faces)) throw ValidityError("incompatible horn: " + *bad);
    for (std::size_t g = 0; g < x.count(p); ++g) {
        bool match = true;
        for (std::size_t i = 0; i <= p && match; ++i)
            if (i != j && x.face(p, g, i) != faces[i]) match = false;
        if (match) return g;
    }
    return std::nullopt;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;  // root is the smallest member
    }
};

}  // namespace

Colimit colimit(const Diagram& d) {
    for (std::size_t a = 0; a < d.arrows.size(); ++a) {
        const auto& arr = d.arrows[a];
        if (arr.from >= d.objects.size() || arr.to >= d.objects.size())
            throw StructuralError("diagram arrow " + std::to_string(a) + " names unknown object");
        auto rep = check_morphism(d.objects[arr.from], d.objects[arr.to], arr.map);
        if (!rep.ok)
            throw DiagramError("diagram arrow " + std::to_string(a) +
                               " is not a Δ-morphism: " + rep.message);
    }
    std::size_t top = 0;
    for (const auto& o : d.objects) top = std::max(top, o.table().size());

    Colimit out;
    out.members.resize(top);
    FaceTable table(top);
    std::vector<std::vector<std::size_t>> cls_of(top);  // global index -> class
    std::vector<std::vector<std::size_t>> offset(top, std::vector<std::size_t>(d.objects.size()));

    for (std::size_t k = 0; k < top; ++k) {
        std::size_t n = 0;
        for (std::size_t o = 0; o < d.objects.size(); ++o) {
            offset[k][o] = n;
            n += d.objects[o].count(k);
        }
        UnionFind uf(n);
        for (const auto& arr : d.arrows)
            for (std::size_t g = 0; g < d.objects[arr.from].count(k); ++g)
                uf.unite(offset[k][arr.from] + g, offset[k][arr.to] + arr.map(k, g));

        std::vector<std::size_t> root_class(n, SIZE_MAX);
        cls_of[k].resize(n);
        std::size_t classes = 0;
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t r = uf.find(x);
            if (root_class[r] == SIZE_MAX) root_class[r] = classes++;
            cls_of[k][x] = root_class[r];
        }
        out.members[k].resize(classes);
        for (std::size_t o = 0; o < d.objects.size(); ++o)
            for (std::size_t g = 0; g < d.objects[o].count(k); ++g)
                out.members[k][cls_of[k][offset[k][o] + g]].emplace_back(o, g);

        table[k].resize(classes);
        for (std::size_t c = 0; c < classes; ++c) {
            const auto& mem = out.members[k][c];
            auto [o0, g0] = mem.front();
            FaceList f;
            if (k > 0)
                for (std::size_t i = 0; i <= k; ++i)
                    f.push_back(cls_of[k - 1][offset[k - 1][o0] + d.objects[o0].face(k, g0, i)]);
            for (const auto& [o, g] : mem) {
                if (k == 0) break;
                for (std::size_t i = 0; i <= k; ++i) {
                    std::size_t fc = cls_of[k - 1][offset[k - 1][o] + d.objects[o].face(k, g, i)];
                    if (fc != f[i])
                        throw DiagramError(
                            "identified generators (" + std::to_string(o0) + "," +
                            std::to_string(g0) + ") and (" + std::to_string(o) + "," +
                            std::to_string(g) + ") in degree " + std::to_string(k) +
                            " have different d_" + std::to_string(i));
                }
            }
            table[k][c] = std::move(f);
        }
    }
    out.apex = DeltaSet(std::move(table), "colim");
    for (std::size_t o = 0; o < d.objects.size(); ++o) {
        std::vector<std::vector<std::size_t>> m(d.objects[o].table().size());
        for (std::size_t k = 0; k < m.size(); ++k)
            for (std::size_t g = 0; g < d.objects[o].count(k); ++g)
                m[k].push_back(cls_of[k][offset[k][o] + g]);
        out.cocone.emplace_back(std::move(m), "c" + std::to_string(o));
    }
    return out;
}

std::optional<DeltaMorphism> factor_through(const Diagram& d, const Colimit& c,
                                            const DeltaSet& target,
                                            const std::vector<DeltaMorphism>& competing) {
    if (competing.size() != d.objects.size()) return std::nullopt;
    std::vector<std::vector<std::size_t>> u(c.apex.table().size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        u[k].assign(c.apex.count(k), SIZE_MAX);
        for (std::size_t cl = 0; cl < c.apex.count(k); ++cl)
            for (const auto& [o, g] : c.members[k][cl]) {
                const auto& m = competing[o].maps();
                if (k >= m.size() || g >= m[k].size()) return std::nullopt;
                std::size_t img = m[k][g];
                if (u[k][cl] == SIZE_MAX)
                    u[k][cl] = img;
                else if (u[k][cl] != img)
                    return std::nullopt;
            }
    }
    DeltaMorphism um(std::move(u), "u");
    if (!check_morphism(c.apex, target, um).ok) return std::nullopt;
    return um;
}

}  // namespace plk
