#include "doctest.h"
#include "oracles.hpp"

#include "plk/complex.hpp"
#include "plk/corpus.hpp"
#include "plk/delta_set.hpp"
#include "plk/errors.hpp"
#include "plk/homology.hpp"
#include "plk/simplicial_set.hpp"

using namespace plk;

namespace {

using Maps = std::vector<std::vector<std::size_t>>;

DeltaSet point() { return delta_set_of(standard_simplex(0)); }
DeltaSet edge() { return delta_set_of(standard_simplex(1)); }
DeltaMorphism vertex_map(std::size_t v) { return DeltaMorphism(Maps{{v}}); }

SimplicialSetFP simplex_ss(std::size_t n) { return simplicial_set_of(standard_simplex(n)); }

// Two edges glued at both ends (circle) or head to tail (path).
Diagram two_edges(bool circle) {
    Diagram d;
    d.objects = {point(), point(), edge(), edge()};
    d.arrows.push_back({0, 2, vertex_map(0)});
    d.arrows.push_back({0, 3, vertex_map(0)});
    if (circle) {
        d.arrows.push_back({1, 2, vertex_map(1)});
        d.arrows.push_back({1, 3, vertex_map(1)});
    } else {
        d.objects.erase(d.objects.begin() + 1);
        d.arrows = {{0, 1, vertex_map(1)}, {0, 2, vertex_map(0)}};
    }
    return d;
}

std::vector<std::size_t> counts(const DeltaSet& x) {
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < x.table().size(); ++k) c.push_back(x.count(k));
    return c;
}

std::vector<std::size_t> counts(const SimplicialSetFP& x) {
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(x.dimension()); ++k) c.push_back(x.count(k));
    return c;
}

}  // namespace

TEST_CASE("Δ-set identities") {
    CHECK(check_identities(delta_set_of(standard_simplex(2))).ok);
    auto t = delta_set_of(standard_simplex(2)).table();
    std::swap(t[2][0][0], t[2][0][1]);
    DeltaSet bad(DeltaSet::Unchecked{}, t);
    auto rep = check_identities(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.degree == 2);
    CHECK(rep.generator == 0);
    CHECK(rep.i < rep.j);
    CHECK_THROWS_AS(DeltaSet{t}, ValidityError);
    CHECK_THROWS_AS(DeltaSet(FaceTable{{{}}, {{0, 3}}}), StructuralError);
    CHECK_THROWS_AS(DeltaSet(FaceTable{{{}}, {{0}}}), StructuralError);
}

TEST_CASE("Δ-set helpers") {
    auto x = delta_set_of(standard_simplex(3));
    CHECK(x.vertices_of(3, 0) == std::vector<std::size_t>{0, 1, 2, 3});
    auto tri = x.sub_face(3, 0, {0, 2, 3});
    CHECK(x.vertices_of(2, tri) == std::vector<std::size_t>{0, 2, 3});
    CHECK(x.euler_characteristic() == 1);
    CHECK(x.total_count() == 15);
    auto id = DeltaMorphism::identity(x);
    CHECK(check_morphism(x, x, id).ok);
    CHECK(is_isomorphism(x, x, id));
    CHECK(compose(id, id) == id);
}

TEST_CASE("colimits glue edges") {
    auto circle = colimit(two_edges(true));
    CHECK(counts(circle.apex) == std::vector<std::size_t>{2, 2});
    CHECK(homology(circle.apex) == betti_profile({1, 1}));
    auto path = colimit(two_edges(false));
    CHECK(counts(path.apex) == std::vector<std::size_t>{3, 2});
    CHECK(homology(path.apex) == betti_profile({1}));

    for (const auto* c : {&circle, &path}) {
        auto d = c == &circle ? two_edges(true) : two_edges(false);
        for (std::size_t o = 0; o < d.objects.size(); ++o)
            CHECK(check_morphism(d.objects[o], c->apex, c->cocone[o]).ok);
        for (const auto& a : d.arrows)
            CHECK(compose(c->cocone[a.to], a.map) == c->cocone[a.from]);
    }
}

TEST_CASE("colimit of a single object and a coequalizer") {
    Diagram single;
    single.objects = {delta_set_of(corpus::torus7())};
    auto c = colimit(single);
    CHECK(c.apex == single.objects[0]);
    CHECK(is_isomorphism(single.objects[0], c.apex, c.cocone[0]));

    Diagram coeq;
    coeq.objects = {point(), edge()};
    coeq.arrows = {{0, 1, vertex_map(0)}, {0, 1, vertex_map(1)}};
    auto loop = colimit(coeq).apex;
    CHECK(loop.euler_characteristic() == 0);
    CHECK(homology(loop) == betti_profile({1, 1}));
    CHECK(loop == corpus::circle_one_vertex());
}

TEST_CASE("inconsistent diagrams are rejected with a witness") {
    // Identify the two edges of Δ^2's boundary path 01 and 12 reversing the
    // vertex identification: the edges merge but their faces do not.
    Diagram d;
    d.objects = {edge(), edge(), edge()};
    d.arrows = {{0, 1, DeltaMorphism(Maps{{0, 1}, {0}})}, {0, 2, DeltaMorphism(Maps{{1, 0}, {0}})}};
    CHECK_THROWS_AS(colimit(d), DiagramError);

    Diagram e;
    e.objects = {edge(), point()};
    e.arrows = {{1, 0, DeltaMorphism(Maps{{5}})}};
    CHECK_THROWS_AS(colimit(e), DiagramError);
}

TEST_CASE("competing cocones factor uniquely") {
    auto d = two_edges(true);
    auto c = colimit(d);
    // Collapse onto the one-vertex circle.
    auto target = corpus::circle_one_vertex();
    std::vector<DeltaMorphism> comp{vertex_map(0), vertex_map(0), DeltaMorphism(Maps{{0, 0}, {0}}),
                                    DeltaMorphism(Maps{{0, 0}, {0}})};
    auto u = factor_through(d, c, target, comp);
    REQUIRE(u);
    for (std::size_t o = 0; o < d.objects.size(); ++o) CHECK(compose(*u, c.cocone[o]) == comp[o]);
    // Onto a single edge: both edges fold onto it.
    auto e = edge();
    std::vector<DeltaMorphism> fold{vertex_map(0), vertex_map(1), DeltaMorphism::identity(e),
                                    DeltaMorphism::identity(e)};
    auto v = factor_through(d, c, e, fold);
    REQUIRE(v);
    CHECK(check_morphism(c.apex, e, *v).ok);
    // Not a cocone: the shared vertex goes to different places.
    fold[0] = vertex_map(1);
    CHECK_FALSE(factor_through(d, c, e, fold));
}

TEST_CASE("Kan search on Δ-sets") {
    // Directed path 0 -> 1 -> 2 has no 2-generators, so no horn fills.
    DeltaSet path(FaceTable{{{}, {}, {}}, {{1, 0}, {2, 1}}});
    CHECK_FALSE(kan_fill(path, 2, 0, {0, 0, 0}));
    CHECK_FALSE(kan_fill(path, 2, 1, {1, 0, 0}));
    auto tri = delta_set_of(standard_simplex(2));
    // Edges: 01 = 0, 02 = 1, 12 = 2.
    CHECK(kan_fill(tri, 2, 1, {2, 0, 0}) == std::optional<std::size_t>(0));
    CHECK(kan_fill(tri, 2, 0, {0, 1, 0}) == std::optional<std::size_t>(0));
    CHECK_THROWS_AS(kan_fill(tri, 2, 0, {0, 1, 2}), ValidityError);
    // a_1 = 02 and a_2 = 12 disagree on their initial vertex.
    CHECK_THROWS_AS(kan_fill(tri, 2, 1, {2, 0, 2}), ValidityError);
}

TEST_CASE("monotone maps") {
    CHECK(surjections(2, 1).size() == 2);
    CHECK(monotone_maps(1, 2).size() == 6);
    CHECK(compose(codegeneracy(1, 0), coface(2, 0)) == identity_map(1));
    CHECK(compose(codegeneracy(1, 0), coface(2, 1)) == identity_map(1));
    CHECK(coface(2, 1) == MonotoneMap{0, 2});
    for (std::size_t n = 0; n <= 4; ++n)
        for (std::size_t m = 0; m <= 4; ++m)
            CHECK(monotone_maps(n, m).size() == oracle::binomial(n + m + 1, n + 1));
}

TEST_CASE("simplicial sets of complexes") {
    auto d2 = simplex_ss(2);
    CHECK(check_identities(d2).ok);
    CHECK(counts(d2) == std::vector<std::size_t>{3, 3, 1});
    CHECK(homology(d2) == betti_profile({1}));
    // Degree-3 simplices of Δ^2 are the weakly increasing strings of length 4.
    CHECK(d2.simplices(3).size() == oracle::binomial(6, 4));
    auto k = standard_simplex(2);
    for (const auto& s : d2.simplices(3)) CHECK(nf_of_string(k, string_of_nf(k, s)) == s);
    auto s = nf_of_string(k, {0, 0, 1, 2});
    CHECK(string_of_nf(k, d2.face(s, 0)) == std::vector<VertexId>{0, 1, 2});
    CHECK(string_of_nf(k, d2.degeneracy(s, 3)) == std::vector<VertexId>{0, 0, 1, 2, 2});

    for (const auto& [name, c] : corpus::abstract_corpus()) {
        CAPTURE(name);
        auto x = simplicial_set_of(c);
        CHECK(check_identities(x).ok);
        CHECK(homology(x) == homology(delta_set_of(c)));
        CHECK(x.euler_characteristic() == c.euler_characteristic());
    }
}

TEST_CASE("simplicial identity violations are reported") {
    // Face of the wrong degree.
    std::vector<std::vector<std::vector<NormalForm>>> f{{{}}, {{NormalForm{0, {0}}, NormalForm{0, {0, 0}}}}};
    CHECK_THROWS_AS(SimplicialSetFP{f}, Error);
    // Face naming an unknown generator.
    std::vector<std::vector<std::vector<NormalForm>>> g{{{}}, {{NormalForm{0, {0}}, NormalForm{1, {0}}}}};
    CHECK_THROWS_AS(SimplicialSetFP{g}, StructuralError);
}

TEST_CASE("products of simplices") {
    auto sq = product(simplex_ss(1), simplex_ss(1));
    CHECK(counts(sq.set) == std::vector<std::size_t>{4, 5, 2});
    CHECK(sq.set.euler_characteristic() == 1);
    CHECK(check_identities(sq.set).ok);
    CHECK(homology(sq.set) == betti_profile({1}));

    auto prism = product(simplex_ss(1), simplex_ss(2));
    CHECK(prism.set.count(3) == 3);
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b) {
            if (a + b > 5) continue;
            auto p = product(simplex_ss(a), simplex_ss(b));
            for (std::size_t n = 0; n <= a + b; ++n) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(n);
                CHECK(p.set.count(n) == oracle::product_chains(a, b, n));
            }
        }

    auto unit = product(simplex_ss(0), simplicial_set_of(corpus::torus7()));
    CHECK(counts(unit.set) == counts(simplicial_set_of(corpus::torus7())));
    CHECK(homology(unit.set) == betti_profile({1, 2, 1}));
}

TEST_CASE("product pairing and Euler characteristic") {
    auto circle = simplicial_set_of(simplex_boundary(2));
    auto t = product(circle, circle);
    CHECK(check_identities(t.set).ok);
    CHECK(homology(t.set) == betti_profile({1, 2, 1}));
    CHECK(t.set.euler_characteristic() == 0);

    auto a = simplex_ss(1), b = simplicial_set_of(corpus::rp2_6());
    auto ab = product(a, b);
    CHECK(ab.set.euler_characteristic() == a.euler_characteristic() * b.euler_characteristic());

    // Components really are the factor simplices.
    for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t g = 0; g < t.set.count(n); ++g) {
            const auto& [x, y] = t.components[n][g];
            CHECK(t.pair(x, y) == t.set.generator(n, g));
            for (std::size_t i = 0; n > 0 && i <= n; ++i)
                CHECK(t.set.face(t.set.generator(n, g), i) == t.pair(circle.face(x, i), circle.face(y, i)));
        }
}

TEST_CASE("product associativity on counts and homology") {
    auto i = simplex_ss(1);
    auto left = product(product(i, i).set, i);
    auto right = product(i, product(i, i).set);
    CHECK(counts(left.set) == counts(right.set));
    CHECK(left.set.count(3) == 6);
    CHECK(homology(left.set) == homology(right.set));
}

TEST_CASE("forgetting degeneracies") {
    auto pt = forget(simplex_ss(0), 1);
    CHECK(counts(pt) == std::vector<std::size_t>{1, 1});
    CHECK(check_identities(pt).ok);

    for (const auto& [name, c] : corpus::abstract_corpus()) {
        CAPTURE(name);
        auto x = simplicial_set_of(c);
        auto f = forget(x);
        auto h = homology(f), hn = homology(x);
        // Degrees below the cap see the same groups.
        std::size_t cap = static_cast<std::size_t>(x.dimension()) + 1;
        for (std::size_t k = 0; k < cap; ++k) {
            DegreeHomology trivial;
            CHECK((k < h.degrees.size() ? h.degrees[k] : trivial) ==
                  (k < hn.degrees.size() ? hn.degrees[k] : trivial));
        }
    }
}

TEST_CASE("simplicial Kan search") {
    auto d2 = simplex_ss(2);
    auto k = standard_simplex(2);
    // Every inner horn of Δ^2 in degrees up to 3 fills.
    for (std::size_t p = 2; p <= 3; ++p)
        for (std::size_t j = 1; j < p; ++j) {
            auto lower = d2.simplices(p - 1);
            std::vector<std::size_t> pick(p + 1, 0);
            std::size_t tried = 0;
            for (;;) {
                std::vector<NormalForm> faces;
                for (std::size_t i = 0; i <= p; ++i) faces.push_back(lower[pick[i]]);
                try {
                    auto fill = kan_fill(d2, p, j, faces);
                    ++tried;
                    CHECK(fill.has_value());
                    if (fill)
                        for (std::size_t i = 0; i <= p; ++i)
                            if (i != j) CHECK(d2.face(*fill, i) == faces[i]);
                } catch (const ValidityError&) {
                }
                std::size_t i = 0;
                while (i <= p) {
                    if (i == j) {
                        ++i;
                        continue;
                    }
                    if (++pick[i] < lower.size()) break;
                    pick[i++] = 0;
                }
                if (i > p) break;
            }
            CHECK(tried > 0);
        }
    // Outer horns fill too when the faces come from one triangle.
    auto e01 = nf_of_string(k, {0, 1}), e02 = nf_of_string(k, {0, 2});
    CHECK_FALSE(kan_fill(d2, 2, 0, {NormalForm{}, e02, e01}) == std::nullopt);
    auto e12 = nf_of_string(k, {1, 2});
    CHECK(kan_fill(d2, 2, 1, {e12, NormalForm{}, e01}) == nf_of_string(k, {0, 1, 2}));
}

TEST_CASE("nerve of Z/2 is Kan through degree 3") {
    auto bg = group_nerve({{0, 1}, {1, 0}}, 4);
    CHECK(check_identities(bg).ok);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(bg.count(n) == 1);
    std::size_t horns = 0;
    for (std::size_t p = 1; p <= 3; ++p) {
        auto lower = bg.simplices(p - 1);
        for (std::size_t j = 0; j <= p; ++j) {
            std::vector<std::size_t> pick(p + 1, 0);
            for (;;) {
                std::vector<NormalForm> faces;
                for (std::size_t i = 0; i <= p; ++i) faces.push_back(lower[pick[i]]);
                try {
                    auto fill = kan_fill(bg, p, j, faces);
                    ++horns;
                    CHECK(fill.has_value());
                } catch (const ValidityError&) {
                }
                std::size_t i = 0;
                while (i <= p) {
                    if (i == j) {
                        ++i;
                        continue;
                    }
                    if (++pick[i] < lower.size()) break;
                    pick[i++] = 0;
                }
                if (i > p) break;
            }
        }
    }
    CHECK(horns > 20);
    // H_1(BZ/2) = Z/2 already visible in the truncation.
    auto h = homology(bg);
    CHECK(h.degrees[1].torsion == std::vector<Integer>{2});
}
