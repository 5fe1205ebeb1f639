#include "doctest.h"
#include "oracles.hpp"

#include "plk/complex.hpp"
#include "plk/corpus.hpp"
#include "plk/errors.hpp"
#include "plk/homology.hpp"
#include "plk/prism.hpp"

#include <bit>
#include <set>

using namespace plk;

namespace {

// R(p) straight from the three collections, as sets of labelled vertices.
std::set<std::set<std::string>> three_collections(std::size_t p) {
    const auto& r = build_R(p);
    unsigned full = (1u << (p + 1)) - 1;
    std::set<std::set<std::string>> out;
    // Every flag (possibly empty) and every face F of its bottom (possibly empty).
    std::vector<std::vector<unsigned>> flags{{}};
    for (std::size_t i = 0; i < flags.size(); ++i) {
        unsigned last = flags[i].empty() ? 0 : flags[i].back();
        for (unsigned g = 1; g <= full; ++g)
            if ((last & ~g) == 0 && g != last) {
                auto f = flags[i];
                f.push_back(g);
                flags.push_back(f);
            }
    }
    for (const auto& flag : flags) {
        unsigned bottom = flag.empty() ? full : flag.front();
        for (unsigned f = 0; f <= full; ++f) {
            if ((f & ~bottom) != 0) continue;
            if (f == 0 && flag.empty()) continue;
            std::set<std::string> s;
            for (std::size_t i = 0; i <= p; ++i)
                if (f >> i & 1u) s.insert(r.label(r.bottom(i)));
            for (auto g : flag) s.insert(r.label(r.top(g)));
            out.insert(s);
        }
    }
    return out;
}

Rational factorial_inverse(std::size_t p) { return Rational(1) / Rational(factorial(p)); }

}  // namespace

TEST_CASE("R(0) and R(1)") {
    auto r0 = build_R(0).complex;
    CHECK(r0.base().f_vector() == std::vector<std::size_t>{2, 1});

    const auto& r1 = build_R(1);
    CHECK(r1.complex.base().f_vector() == std::vector<std::size_t>{5, 7, 3});
    CHECK(r1.complex.base().euler_characteristic() == 1);
    std::set<std::set<std::string>> tris;
    for (const auto& t : r1.complex.base().simplices(2)) {
        std::set<std::string> s;
        for (auto v : t) s.insert(r1.label(v));
        tris.insert(s);
    }
    std::set<std::set<std::string>> expected{{"(e0,0)", "(e1,0)", "(b{0,1},1)"},
                                             {"(e0,0)", "(b{0},1)", "(b{0,1},1)"},
                                             {"(e1,0)", "(b{1},1)", "(b{0,1},1)"}};
    CHECK(tris == expected);
}

TEST_CASE("R(p) is exactly the three collections") {
    for (std::size_t p = 0; p <= 3; ++p) {
        const auto& r = build_R(p);
        std::set<std::set<std::string>> got;
        for (const auto& s : r.complex.base().all_simplices()) {
            std::set<std::string> l;
            for (auto v : s) l.insert(r.label(v));
            got.insert(l);
        }
        CHECK(got == three_collections(p));
    }
}

TEST_CASE("R(p) triangulates the prism") {
    for (std::size_t p = 0; p <= 4; ++p) {
        CAPTURE(p);
        const auto& r = build_R(p);
        CHECK(validate(r.complex).ok);
        CHECK(total_volume(r.complex) == factorial_inverse(p));
        CHECK(r.complex.base().euler_characteristic() == 1);
        CHECK(homology(delta_set_of(r.complex.base())) == betti_profile({1}));
    }
    CHECK(total_volume(build_R(2).complex) == Rational(1, 2));
    CHECK(validate(build_R(2).complex, {.allow_fast_path = false}).ok);
}

TEST_CASE("level inclusions") {
    for (std::size_t p = 0; p <= 3; ++p) {
        const auto& r = build_R(p);
        const auto& k = r.complex.base();
        auto bottom = bottom_inclusion(p), top = top_inclusion(p);
        CHECK(full_subcomplex(k, bottom) == standard_simplex(p));
        auto sd = barycentric_subdivide(chart_simplex(p));
        auto image = full_subcomplex(k, top);
        std::vector<Simplex> shifted;
        for (const auto& s : sd.base().all_simplices()) {
            Simplex t;
            for (auto v : s) t.push_back(top[static_cast<std::size_t>(v)]);
            shifted.push_back(t);
            CHECK(k.contains(t));
        }
        CHECK(shifted == image.all_simplices());
        for (auto v : sd.base().vertices()) {
            auto x = sd.point(v);
            x.emplace_back(1);
            CHECK(r.complex.point(top[static_cast<std::size_t>(v)]) == x);
        }
        for (std::size_t i = 0; i <= p; ++i) {
            auto x = chart_simplex(p).point(static_cast<VertexId>(i));
            x.emplace_back(0);
            CHECK(r.complex.point(bottom[i]) == x);
        }
    }
}

TEST_CASE("R ordering") {
    for (std::size_t p = 0; p <= 4; ++p) CHECK(verify_R_ordering(p).ok);
    auto dropped = [](const RVertex& a, const RVertex& b) {
        if (!a.top && b.top) return false;
        return prism_order(a, b);
    };
    auto rep = verify_R_ordering(2, dropped);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.witness.size() == 2);
    CHECK(rep.witness[0] <= 2);
    CHECK(rep.witness[1] > 2);
    auto reversed = [](const RVertex& a, const RVertex& b) { return prism_order(b, a); };
    CHECK_FALSE(verify_R_ordering(1, reversed).ok);
}

TEST_CASE("R maps form a cosimplicial object") {
    for (std::size_t p = 0; p <= 3; ++p) {
        auto id = build_R_map(identity_map(p), p);
        CHECK(id.delta() == DeltaMorphism::identity(delta_set_of(build_R(p).complex.base())));
        for (auto v : build_R(p).complex.base().vertices())
            CHECK(id.vertex_image[static_cast<std::size_t>(v)] == v);
    }
    std::size_t checked = 0;
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            for (const auto& eta : monotone_maps(p, q)) {
                auto fe = build_R_map(eta, q);
                REQUIRE(check_R_map(fe).ok);
                for (std::size_t r = 0; r <= 3; ++r)
                    for (const auto& delta : monotone_maps(q, r)) {
                        auto fd = build_R_map(delta, r);
                        auto fde = build_R_map(compose(delta, eta), r);
                        for (const auto& s : build_R(p).complex.base().all_simplices())
                            CHECK(fde(s) == fd(fe(s)));
                        ++checked;
                    }
            }
    CHECK(checked > 1000);

    // Injective composites as Δ-morphisms.
    auto d0 = build_R_map(coface(1, 0), 1), d1 = build_R_map(coface(2, 1), 2);
    auto both = build_R_map(compose(coface(2, 1), coface(1, 0)), 2);
    CHECK(compose(d1.delta(), d0.delta()) == both.delta());
    CHECK(check_morphism(delta_set_of(build_R(0).complex.base()), delta_set_of(build_R(1).complex.base()),
                         d0.delta()).ok);
    CHECK_THROWS_AS(build_R_map(codegeneracy(0, 0), 0).delta(), StructuralError);
    CHECK_THROWS_AS(build_R_map({1, 0}, 1), StructuralError);
}

TEST_CASE("R of the face [0] -> [1] at 0") {
    auto f = build_R_map({0}, 1);
    const auto& r0 = build_R(0);
    const auto& r1 = build_R(1);
    CHECK(f.vertex_image[static_cast<std::size_t>(r0.top(1u))] == r1.top(1u));
    for (auto v : f.vertex_image) CHECK(v != r1.top(3u));
}

TEST_CASE("K^p and F^p") {
    for (std::size_t p = 0; p <= 4; ++p) {
        CAPTURE(p);
        const auto& k = build_K(p);
        CHECK(k.complex.base().count(p + 1) == p + 1);
        CHECK(validate(k.complex).ok);
        CHECK(total_volume(k.complex) == factorial_inverse(p));
        auto f = build_F(p);
        CHECK(f.source.set.count(p + 1) == k.complex.base().count(p + 1));
        auto rep = check_F(f, p + 2);
        CHECK_MESSAGE(rep.ok, rep.message);
    }
    CHECK(build_K(0).complex.base() == standard_simplex(1));
    CHECK(build_K(3).complex.base().count(4) == oracle::product_chains(1, 3, 4));
    std::size_t squares = 0;
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            for (const auto& eta : monotone_maps(q, p)) {
                auto rep = check_F_naturality(eta, p, q + 2);
                CHECK_MESSAGE(rep.ok, rep.message);
                ++squares;
            }
    CHECK(squares == 121);
}

TEST_CASE("F^p detects a broken map") {
    auto f = build_F(1);
    auto images = f.map.images();
    std::swap(images[2][0], images[2][1]);
    f.map = SimplicialMorphism(images);
    CHECK_FALSE(check_F(f, 2).ok);
}

TEST_CASE("subdivision of Δ-sets") {
    auto pt = sd_delta(delta_set_of(standard_simplex(0)));
    CHECK(pt.set.total_count() == 1);

    auto tri = sd_delta(delta_set_of(simplex_boundary(2)));
    CHECK(tri.set.count(0) == 6);
    CHECK(tri.set.count(1) == 6);

    auto loop = sd_delta(corpus::circle_one_vertex());
    CHECK(loop.set.count(0) == 2);
    CHECK(loop.set.count(1) == 2);
    CHECK(homology(loop.set) == betti_profile({1, 1}));

    for (const auto& [name, k] : corpus::abstract_corpus()) {
        CAPTURE(name);
        auto s = sd_delta(delta_set_of(k));
        auto direct = delta_set_of(barycentric_subdivide(k));
        auto phi = sd_comparison(k, s);
        CHECK(is_isomorphism(s.set, direct, phi));
        for (std::size_t q = 0; q < s.carriers.size(); ++q)
            for (const auto& c : s.carriers[q]) {
                CHECK(c.flag.size() == q + 1);
                CHECK(c.flag.back() == (1u << (c.degree + 1)) - 1);
            }
    }
}

TEST_CASE("subdivision keeps homology") {
    for (const auto& [name, x] : corpus::homology_corpus()) {
        CAPTURE(name);
        auto h = homology(x);
        CHECK(homology(sd_delta_power(x, 1)) == h);
        CHECK(homology(sd_delta_power(x, 2)) == h);
    }
    CHECK(sd_delta_power(corpus::delta_torus(), 0) == corpus::delta_torus());
    CHECK(homology(sd_delta_power(corpus::delta_rp2(), 2)) == homology(corpus::delta_rp2()));
}

TEST_CASE("prism cap") {
    CHECK(prism_cap() >= 5);
    CHECK_THROWS_AS(build_R(prism_cap() + 1), StructuralError);
}
