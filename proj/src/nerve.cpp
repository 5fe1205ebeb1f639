#include "plk/nerve.hpp"

#include "plk/errors.hpp"
#include "plk/io.hpp"

#include <algorithm>
#include <set>

namespace plk {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

struct StringNerve {
    std::vector<std::vector<std::vector<std::size_t>>> strings;  // [k] for k >= 1
    FaceTable table;
};

std::size_t composite(const Category& c, std::size_t f, std::size_t g) {
    auto it = c.comp.find({f, g});
    if (it == c.comp.end())
        throw StructuralError("composition undefined on composable pair (" + c.morphisms[f].name + ", " +
                              c.morphisms[g].name + ")");
    return it->second;
}

void check_ranges(const Category& c) {
    for (const auto& m : c.morphisms)
        if (m.src >= c.objects.size() || m.tgt >= c.objects.size())
            throw StructuralError("morphism " + m.name + " names an unknown object");
    for (const auto& [fg, h] : c.comp)
        if (fg.first >= c.morphisms.size() || fg.second >= c.morphisms.size() || h >= c.morphisms.size())
            throw StructuralError("composition entry names an unknown morphism");
}

StringNerve string_nerve(const Category& c, std::optional<std::size_t> max_degree) {
    check_ranges(c);
    StringNerve out;
    out.strings.emplace_back();  // degree 0 is the objects
    out.table.emplace_back(c.objects.size());
    std::size_t top = max_degree.value_or(SIZE_MAX);
    if (c.objects.empty() || top == 0) {
        if (c.objects.empty()) out.table.clear();
        return out;
    }
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(1);
    for (std::size_t k = 1; k <= top; ++k) {
        std::vector<std::vector<std::size_t>> level;
        if (k == 1) {
            for (std::size_t f = 0; f < c.morphisms.size(); ++f) level.push_back({f});
        } else {
            for (const auto& s : out.strings[k - 1])
                for (std::size_t g = 0; g < c.morphisms.size(); ++g)
                    if (c.composable(s.back(), g)) {
                        auto t = s;
                        t.push_back(g);
                        level.push_back(std::move(t));
                    }
        }
        if (level.empty()) break;
        index.emplace_back();
        std::vector<FaceList> faces;
        for (std::size_t i = 0; i < level.size(); ++i) {
            index[k][level[i]] = i;
            const auto& s = level[i];
            FaceList fl;
            if (k == 1) {
                fl = {c.morphisms[s[0]].tgt, c.morphisms[s[0]].src};
            } else {
                for (std::size_t d = 0; d <= k; ++d) {
                    std::vector<std::size_t> t;
                    if (d == 0) {
                        t.assign(s.begin() + 1, s.end());
                    } else if (d == k) {
                        t.assign(s.begin(), s.end() - 1);
                    } else {
                        t.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d - 1));
                        t.push_back(composite(c, s[d - 1], s[d]));
                        t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(d + 1), s.end());
                    }
                    auto it = index[k - 1].find(t);
                    if (it == index[k - 1].end())
                        throw ValidityError("face of a composable string is not composable; source or target of a "
                                            "composite is wrong");
                    fl.push_back(it->second);
                }
            }
            faces.push_back(std::move(fl));
        }
        out.strings.push_back(std::move(level));
        out.table.push_back(std::move(faces));
    }
    return out;
}

}  // namespace

std::size_t Category::morphism(const std::string& name) const {
    for (std::size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].name == name) return i;
    throw StructuralError("no morphism named '" + name + "'");
}

CategoryReport check_category(const Category& c) {
    check_ranges(c);
    CategoryReport rep;
    auto fail = [&](std::string msg, std::vector<std::size_t> w) {
        rep.ok = false;
        rep.message = std::move(msg);
        rep.witness = std::move(w);
        return rep;
    };
    const auto& m = c.morphisms;
    for (const auto& [fg, h] : c.comp)
        if (!c.composable(fg.first, fg.second))
            return fail("composite given for non-composable pair (" + m[fg.first].name + ", " + m[fg.second].name + ")",
                        {fg.first, fg.second});
    for (std::size_t f = 0; f < m.size(); ++f)
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (!c.composable(f, g)) continue;
            auto h = composite(c, f, g);
            if (m[h].src != m[f].src || m[h].tgt != m[g].tgt)
                return fail("composite " + m[h].name + " of (" + m[f].name + ", " + m[g].name +
                                ") has the wrong source or target",
                            {f, g, h});
        }
    for (std::size_t f = 0; f < m.size(); ++f)
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (!c.composable(f, g)) continue;
            auto fg = composite(c, f, g);
            for (std::size_t h = 0; h < m.size(); ++h) {
                if (!c.composable(g, h)) continue;
                if (composite(c, fg, h) != composite(c, f, composite(c, g, h)))
                    return fail("(" + m[f].name + " " + m[g].name + ") " + m[h].name + " != " + m[f].name + " (" +
                                    m[g].name + " " + m[h].name + ")",
                                {f, g, h});
            }
        }
    return rep;
}

DeltaSet nerve(const Category& c, std::optional<std::size_t> max_degree) {
    return DeltaSet(DeltaSet::Unchecked{}, string_nerve(c, max_degree).table, "N");
}

std::vector<std::vector<std::size_t>> composable_strings(const Category& c, std::size_t k) {
    if (k == 0) throw StructuralError("strings start in degree 1");
    auto n = string_nerve(c, k);
    return k < n.strings.size() ? n.strings[k] : std::vector<std::vector<std::size_t>>{};
}

Category read_category(std::istream& in) {
    LineReader r(in);
    Category c;
    std::map<std::string, std::size_t> objs, mors;
    while (!r.done()) {
        auto t = r.next();
        if (t[0] == "obj") {
            if (t.size() != 2) r.fail("expected 'obj <id>'");
            if (!objs.emplace(t[1], c.objects.size()).second) r.fail("duplicate object " + t[1]);
            c.objects.push_back(t[1]);
        } else if (t[0] == "mor") {
            if (t.size() != 4) r.fail("expected 'mor <id> <src> <tgt>'");
            if (!objs.count(t[2]) || !objs.count(t[3])) r.fail("morphism " + t[1] + " names an unknown object");
            if (!mors.emplace(t[1], c.morphisms.size()).second) r.fail("duplicate morphism " + t[1]);
            c.morphisms.push_back({t[1], objs[t[2]], objs[t[3]]});
        } else if (t[0] == "cmp") {
            if (t.size() != 4) r.fail("expected 'cmp <f> <g> <fg>'");
            for (std::size_t i = 1; i < 4; ++i)
                if (!mors.count(t[i])) r.fail("unknown morphism " + t[i]);
            if (!c.comp.emplace(std::pair{mors[t[1]], mors[t[2]]}, mors[t[3]]).second)
                r.fail("duplicate composite for (" + t[1] + ", " + t[2] + ")");
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }
    return c;
}

void write_category(std::ostream& out, const Category& c) {
    for (const auto& o : c.objects) out << "obj " << o << "\n";
    for (const auto& m : c.morphisms) out << "mor " << m.name << " " << c.objects[m.src] << " " << c.objects[m.tgt] << "\n";
    for (const auto& [fg, h] : c.comp)
        out << "cmp " << c.morphisms[fg.first].name << " " << c.morphisms[fg.second].name << " " << c.morphisms[h].name
            << "\n";
}

std::string Cobordism::name() const {
    std::string s = "c" + str(source) + str(target);
    for (std::size_t a = 0; a < partner.size(); ++a)
        if (a < partner[a]) s += "_" + str(a) + str(partner[a]);
    return s + "_L" + str(loops);
}

Cobordism glue(const Cobordism& a, const Cobordism& b, unsigned cap) {
    if (a.target != b.source) throw StructuralError("cobordisms do not share the middle points");
    std::size_t n = a.source, m = a.target, k = b.target;
    // Glued ids: a-source i, middle n+i, b-target n+m+i.
    auto from_b = [&](std::size_t x) { return n + x; };
    std::vector<std::size_t> via_a(n + m + k, SIZE_MAX), via_b(n + m + k, SIZE_MAX);
    for (std::size_t x = 0; x < n + m; ++x) via_a[x] = a.partner[x];
    for (std::size_t x = 0; x < m + k; ++x) via_b[from_b(x)] = from_b(b.partner[x]);
    auto middle = [&](std::size_t x) { return x >= n && x < n + m; };

    Cobordism out{n, k, std::vector<std::size_t>(n + k), 0};
    std::vector<bool> seen(n + m + k, false);
    auto outer = [&](std::size_t x) { return x < n ? x : x - m; };
    for (std::size_t start = 0; start < n + m + k; ++start) {
        if (middle(start) || seen[start]) continue;
        bool use_a = start < n;
        std::size_t x = start;
        seen[x] = true;
        for (;;) {
            x = use_a ? via_a[x] : via_b[x];
            seen[x] = true;
            if (!middle(x)) break;
            use_a = !use_a;
        }
        out.partner[outer(start)] = outer(x);
        out.partner[outer(x)] = outer(start);
    }
    unsigned cycles = 0;
    for (std::size_t start = n; start < n + m; ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::size_t x = start;
        bool use_a = true;
        do {
            seen[x] = true;
            x = use_a ? via_a[x] : via_b[x];
            use_a = !use_a;
        } while (x != start || !use_a);
    }
    out.loops = std::min(a.loops + b.loops + cycles, cap);
    return out;
}

namespace {

void matchings(std::vector<std::size_t>& partner, std::vector<std::vector<std::size_t>>& out) {
    auto it = std::find(partner.begin(), partner.end(), SIZE_MAX);
    if (it == partner.end()) {
        out.push_back(partner);
        return;
    }
    std::size_t a = static_cast<std::size_t>(it - partner.begin());
    for (std::size_t b = a + 1; b < partner.size(); ++b) {
        if (partner[b] != SIZE_MAX) continue;
        partner[a] = b;
        partner[b] = a;
        matchings(partner, out);
        partner[a] = partner[b] = SIZE_MAX;
    }
}

}  // namespace

CobordismCategory demo_cobordism_category() {
    constexpr unsigned cap = 3;
    CobordismCategory d;
    for (std::size_t n : {0, 2}) d.category.objects.push_back("P" + str(n));
    std::map<std::string, std::size_t> by_name;
    for (std::size_t n : {0, 2})
        for (std::size_t m : {0, 2}) {
            std::vector<std::size_t> partner(n + m, SIZE_MAX);
            std::vector<std::vector<std::size_t>> all;
            matchings(partner, all);
            for (const auto& p : all)
                for (unsigned l = 0; l <= cap; ++l) {
                    Cobordism c{n, m, p, l};
                    by_name[c.name()] = d.cobordisms.size();
                    d.category.morphisms.push_back({c.name(), n / 2, m / 2});
                    d.cobordisms.push_back(std::move(c));
                }
        }
    for (std::size_t f = 0; f < d.cobordisms.size(); ++f)
        for (std::size_t g = 0; g < d.cobordisms.size(); ++g)
            if (d.category.composable(f, g))
                d.category.comp[{f, g}] = by_name.at(glue(d.cobordisms[f], d.cobordisms[g], cap).name());
    return d;
}

std::size_t BiDeltaSet::count(std::size_t p, std::size_t q) const {
    return p < horizontal.size() && q < horizontal[p].size() ? horizontal[p][q].size() : 0;
}

long BiDeltaSet::euler_characteristic() const {
    long chi = 0;
    for (std::size_t p = 0; p < p_extent(); ++p)
        for (std::size_t q = 0; q < q_extent(p); ++q)
            chi += ((p + q) % 2 ? -1L : 1L) * static_cast<long>(count(p, q));
    return chi;
}

IdentityReport check_bi_delta(const BiDeltaSet& b) {
    IdentityReport rep;
    auto fail = [&](std::size_t p, std::size_t q, std::size_t g, std::size_t i, std::size_t j, std::string what) {
        rep.ok = false;
        rep.degree = p + q;
        rep.generator = g;
        rep.i = i;
        rep.j = j;
        rep.message = what + " fails on generator " + str(g) + " in bidegree (" + str(p) + "," + str(q) + ")";
        return rep;
    };
    auto h = [&](std::size_t p, std::size_t q, std::size_t g, std::size_t i) { return b.horizontal[p][q][g][i]; };
    auto v = [&](std::size_t p, std::size_t q, std::size_t g, std::size_t j) { return b.vertical[p][q][g][j]; };
    for (std::size_t p = 0; p < b.p_extent(); ++p)
        for (std::size_t q = 0; q < b.q_extent(p); ++q)
            for (std::size_t g = 0; g < b.count(p, q); ++g) {
                if (b.horizontal[p][q][g].size() != (p ? p + 1 : 0) || b.vertical[p][q][g].size() != (q ? q + 1 : 0))
                    throw StructuralError("bi-Δ-set generator has the wrong number of faces");
                for (std::size_t i = 0; i < b.horizontal[p][q][g].size(); ++i)
                    if (h(p, q, g, i) >= b.count(p - 1, q)) throw StructuralError("horizontal face out of range");
                for (std::size_t j = 0; j < b.vertical[p][q][g].size(); ++j)
                    if (v(p, q, g, j) >= b.count(p, q - 1)) throw StructuralError("vertical face out of range");
            }
    for (std::size_t p = 0; p < b.p_extent(); ++p)
        for (std::size_t q = 0; q < b.q_extent(p); ++q)
            for (std::size_t g = 0; g < b.count(p, q); ++g) {
                for (std::size_t j = 1; p >= 2 && j <= p; ++j)
                    for (std::size_t i = 0; i < j; ++i)
                        if (h(p - 1, q, h(p, q, g, j), i) != h(p - 1, q, h(p, q, g, i), j - 1))
                            return fail(p, q, g, i, j, "horizontal d_i d_j = d_{j-1} d_i");
                for (std::size_t j = 1; q >= 2 && j <= q; ++j)
                    for (std::size_t i = 0; i < j; ++i)
                        if (v(p, q - 1, v(p, q, g, j), i) != v(p, q - 1, v(p, q, g, i), j - 1))
                            return fail(p, q, g, i, j, "vertical d_i d_j = d_{j-1} d_i");
                for (std::size_t i = 0; p >= 1 && q >= 1 && i <= p; ++i)
                    for (std::size_t j = 0; j <= q; ++j)
                        if (v(p - 1, q, h(p, q, g, i), j) != h(p, q - 1, v(p, q, g, j), i))
                            return fail(p, q, g, i, j, "horizontal and vertical faces commute");
            }
    return rep;
}

BiDeltaSet bi_delta_of(const DeltaSet& x) {
    BiDeltaSet b;
    for (std::size_t p = 0; p < x.table().size(); ++p) {
        b.horizontal.push_back({x.table()[p]});
        b.vertical.push_back({std::vector<FaceList>(x.count(p))});
    }
    return b;
}

ChainComplex total_complex(const BiDeltaSet& b) {
    auto rep = check_bi_delta(b);
    if (!rep.ok) throw ValidityError("cannot form the total complex: " + rep.message);
    std::size_t top = 0;
    for (std::size_t p = 0; p < b.p_extent(); ++p)
        for (std::size_t q = 0; q < b.q_extent(p); ++q)
            if (b.count(p, q)) top = std::max(top, p + q + 1);
    // offset[p][q] within total degree p+q
    std::vector<std::size_t> ranks(top, 0);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> offset;
    for (std::size_t n = 0; n < top; ++n)
        for (std::size_t p = 0; p <= n; ++p) {
            offset[{p, n - p}] = ranks[n];
            ranks[n] += b.count(p, n - p);
        }
    std::vector<SparseMatrix> bd(top);
    for (std::size_t n = 1; n < top; ++n) {
        auto& m = bd[n];
        m.rows = ranks[n - 1];
        m.cols = ranks[n];
        m.columns.resize(m.cols);
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            for (std::size_t g = 0; g < b.count(p, q); ++g) {
                std::map<std::size_t, long long> col;
                for (std::size_t i = 0; p > 0 && i <= p; ++i)
                    col[offset[{p - 1, q}] + b.horizontal[p][q][g][i]] += i % 2 ? -1 : 1;
                long long sign = p % 2 ? -1 : 1;
                for (std::size_t j = 0; q > 0 && j <= q; ++j)
                    col[offset[{p, q - 1}] + b.vertical[p][q][g][j]] += sign * (j % 2 ? -1 : 1);
                auto& out = m.columns[offset[{p, q}] + g];
                for (auto [r, v] : col)
                    if (v != 0) out.emplace_back(r, v);
            }
        }
    }
    ChainComplex c(std::move(ranks), std::move(bd));
    if (auto k = c.first_nonzero_square()) throw ValidityError("total differential squares to nonzero in degree " + str(k));
    return c;
}

HomologyProfile total_homology(const BiDeltaSet& b) {
    auto h = homology(total_complex(b));
    if (b.truncated_q && h.degrees.size() > *b.truncated_q) h.degrees.resize(*b.truncated_q);
    return h;
}

Category SimplicialCategory::level(std::size_t p) const {
    Category c;
    for (std::size_t o = 0; o < objects.count(p); ++o) c.objects.push_back("o" + str(o));
    for (std::size_t f = 0; f < morphisms.count(p); ++f) c.morphisms.push_back({"m" + str(f), source(p, f), target(p, f)});
    if (p < comp.size()) c.comp = comp[p];
    return c;
}

void check_simplicial_category(const SimplicialCategory& c) {
    for (const auto* f : {&c.source, &c.target}) {
        auto rep = check_morphism(c.morphisms, c.objects, *f);
        if (!rep.ok) throw ValidityError((f == &c.source ? "source: " : "target: ") + rep.message);
    }
    auto top = static_cast<std::size_t>(std::max(c.morphisms.dimension(), 0));
    for (std::size_t p = 0; p <= top; ++p) {
        auto rep = check_category(c.level(p));
        if (!rep.ok) throw ValidityError("degree " + str(p) + ": " + rep.message);
        if (p == 0 || p >= c.comp.size()) continue;
        for (const auto& [fg, h] : c.comp[p])
            for (std::size_t i = 0; i <= p; ++i) {
                auto df = c.morphisms.face(p, fg.first, i), dg = c.morphisms.face(p, fg.second, i);
                auto it = p - 1 < c.comp.size() ? c.comp[p - 1].find({df, dg}) : c.comp[p - 1].end();
                if (it == c.comp[p - 1].end() || it->second != c.morphisms.face(p, h, i))
                    throw ValidityError("degree " + str(p) + ": d_" + str(i) + " does not commute with composing m" +
                                        str(fg.first) + " and m" + str(fg.second));
            }
    }
}

SimplicialCategory discrete_simplicial(const Category& c) {
    check_ranges(c);
    SimplicialCategory s;
    s.objects = DeltaSet(FaceTable{std::vector<FaceList>(c.objects.size())}, "Ob");
    s.morphisms = DeltaSet(FaceTable{std::vector<FaceList>(c.morphisms.size())}, "Mor");
    std::vector<std::size_t> src, tgt;
    for (const auto& m : c.morphisms) {
        src.push_back(m.src);
        tgt.push_back(m.tgt);
    }
    s.source = DeltaMorphism({src}, "s");
    s.target = DeltaMorphism({tgt}, "t");
    s.comp = {c.comp};
    return s;
}

BiDeltaSet nerve_simplicial(const SimplicialCategory& c, std::optional<std::size_t> max_q) {
    check_simplicial_category(c);
    BiDeltaSet b;
    b.truncated_q = max_q;
    std::size_t top = static_cast<std::size_t>(std::max({c.objects.dimension(), c.morphisms.dimension(), -1}) + 1);
    std::vector<StringNerve> columns;
    for (std::size_t p = 0; p < top; ++p) columns.push_back(string_nerve(c.level(p), max_q));
    b.horizontal.resize(top);
    b.vertical.resize(top);
    for (std::size_t p = 0; p < top; ++p) {
        const auto& col = columns[p];
        for (std::size_t q = 0; q < col.table.size(); ++q) {
            b.vertical[p].push_back(col.table[q]);
            b.horizontal[p].emplace_back();
            if (p == 0) {
                b.horizontal[p][q].assign(col.table[q].size(), {});
                continue;
            }
            std::map<std::vector<std::size_t>, std::size_t> below;
            if (q > 0) {
                if (q >= columns[p - 1].strings.size())
                    throw ValidityError("faces of degree " + str(p) + " strings are missing in degree " + str(p - 1));
                for (std::size_t g = 0; g < columns[p - 1].strings[q].size(); ++g) below[columns[p - 1].strings[q][g]] = g;
            }
            for (std::size_t g = 0; g < col.table[q].size(); ++g) {
                FaceList fl;
                for (std::size_t i = 0; i <= p; ++i) {
                    if (q == 0) {
                        fl.push_back(c.objects.face(p, g, i));
                        continue;
                    }
                    std::vector<std::size_t> s;
                    for (auto f : col.strings[q][g]) s.push_back(c.morphisms.face(p, f, i));
                    fl.push_back(below.at(s));
                }
                b.horizontal[p][q].push_back(std::move(fl));
            }
        }
    }
    return b;
}

}  // namespace plk
