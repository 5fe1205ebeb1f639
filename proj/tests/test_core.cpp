#include "doctest.h"
#include "oracles.hpp"

#include "plk/complex.hpp"
#include "plk/corpus.hpp"
#include "plk/errors.hpp"
#include "plk/io.hpp"
#include "plk/linalg.hpp"
#include "plk/lp.hpp"

#include <sstream>

using namespace plk;

namespace {

Point P(std::initializer_list<long> xs) {
    Point p;
    for (auto x : xs) p.emplace_back(x);
    return p;
}

EuclideanComplex planar(std::vector<Point> pts, std::vector<Simplex> simplices) {
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < pts.size(); ++i) ids.push_back(static_cast<VertexId>(i));
    return EuclideanComplex(OrderedComplex::from_maximal(ids, std::move(simplices)), 2,
                            std::move(pts));
}

}  // namespace

TEST_CASE("rationals parse exactly and reject floats") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK_THROWS_AS(parse_rational("0.5"), StructuralError);
    CHECK_THROWS_AS(parse_rational("1e3"), StructuralError);
    CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
    CHECK_THROWS_AS(parse_rational("1/-2"), StructuralError);
    CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(to_decimal(Rational(2, 3), 2) == "0.67");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal(Rational(5), 0) == "5");
}

TEST_CASE("exact linear algebra") {
    Matrix m{{2, 1}, {4, 2}};
    CHECK(rank(m) == 1);
    CHECK(determinant({{2, 1}, {1, 1}}) == 1);
    auto inv = inverse({{2, 1}, {1, 1}});
    REQUIRE(inv);
    CHECK((*inv)[0][0] == 1);
    CHECK((*inv)[0][1] == -1);
    CHECK_FALSE(inverse(m));
    CHECK(affinely_independent({P({0, 0}), P({1, 0}), P({0, 1})}));
    CHECK_FALSE(affinely_independent({P({0, 0}), P({1, 1}), P({2, 2})}));
    auto bc = affine_coordinates({P({0, 0}), P({2, 0}), P({0, 2})}, P({1, 1}));
    REQUIRE(bc);
    CHECK((*bc)[0] == 0);
    CHECK((*bc)[1] == Rational(1, 2));
    CHECK(simplex_volume({P({0, 0}), P({1, 0}), P({0, 1})}) == Rational(1, 2));
}

TEST_CASE("exact LP") {
    // maximize x + y with x + 2y <= 4, 3x + y <= 6: optimum at (8/5, 6/5).
    std::vector<lp::Constraint> cons{{{1, 2}, lp::Sense::le, 4}, {{3, 1}, lp::Sense::le, 6}};
    auto r = lp::maximize({1, 1}, cons);
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    auto inf = lp::maximize({1}, {{{1}, lp::Sense::ge, 2}, {{1}, lp::Sense::le, 1}});
    CHECK(inf.status == lp::Status::infeasible);
    auto unb = lp::maximize({1}, {{{1}, lp::Sense::ge, 2}});
    CHECK(unb.status == lp::Status::unbounded);
    auto eq = lp::maximize({-1, -1}, {{{1, 1}, lp::Sense::eq, 3}, {{1, -1}, lp::Sense::eq, -1}});
    REQUIRE(eq.status == lp::Status::optimal);
    CHECK(eq.x[1] == 2);
}

TEST_CASE("ordered complex construction") {
    auto d2 = standard_simplex(2);
    CHECK(d2.f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(d2.euler_characteristic() == 1);
    CHECK(validate(d2).ok);
    CHECK_THROWS_AS(OrderedComplex::from_maximal({0, 1}, {{0, 2}}), StructuralError);
    CHECK_THROWS_AS(OrderedComplex::from_maximal({0, 1}, {{0, 0}}), StructuralError);
    auto gap = OrderedComplex::from_simplices({0, 1, 2}, {{0}, {1}, {2}, {0, 1, 2}});
    auto rep = validate(gap);
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason == "face closure violated");
    CHECK(d2.maximal_simplices() == std::vector<Simplex>{{0, 1, 2}});
}

TEST_CASE("validate Euclidean complexes") {
    CHECK(validate(chart_simplex(2)).ok);
    auto shared = planar({P({0, 0}), P({1, 0}), P({0, 1}), P({1, 1})}, {{0, 1, 2}, {1, 2, 3}});
    CHECK(validate(shared).ok);

    std::vector<Point> a{P({0, 0}), P({4, 0}), P({0, 4})}, b{P({1, 1}), P({5, 1}), P({1, 5})};
    REQUIRE(oracle::triangle_overlap_area(a, b) > 0);
    auto bad = planar({a[0], a[1], a[2], b[0], b[1], b[2]}, {{0, 1, 2}, {3, 4, 5}});
    auto rep = validate(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason == "intersection not a common face");
    CHECK_FALSE(rep.witness.empty());

    // Triangles touching along part of an edge only.
    auto partial = planar({P({0, 0}), P({2, 0}), P({0, 2}), P({1, 0}), P({3, 0}), P({1, -2})},
                          {{0, 1, 2}, {3, 4, 5}});
    CHECK(oracle::triangle_overlap_area({P({0, 0}), P({2, 0}), P({0, 2})},
                                        {P({1, 0}), P({3, 0}), P({1, -2})}) == 0);
    CHECK_FALSE(validate(partial).ok);

    auto dependent = planar({P({0, 0}), P({1, 1}), P({2, 2})}, {{0, 1, 2}});
    CHECK(validate(dependent).reason == "affinely dependent simplex");

    auto coincident = planar({P({0, 0}), P({1, 0}), P({1, 0})}, {{0, 1}, {2}});
    CHECK_FALSE(validate(coincident).ok);
}

TEST_CASE("fast certificate agrees with the pairwise test") {
    for (const auto& [name, k] : corpus::euclidean_corpus()) {
        CAPTURE(name);
        auto fast = validate(k);
        auto slow = validate(k, {.allow_fast_path = false});
        CHECK(fast.ok);
        CHECK(slow.ok);
        CHECK_FALSE(slow.certified_fast);
    }
    auto sd2 = barycentric_subdivide(barycentric_subdivide(chart_simplex(2)));
    auto fast = validate(sd2);
    CHECK(fast.ok);
    CHECK(fast.certified_fast);
    CHECK(validate(sd2, {.allow_fast_path = false}).ok);

    // Two overlapping full-dimensional triangles with a convex union: the
    // certificate must not accept them.
    auto overlap = planar({P({0, 0}), P({2, 0}), P({0, 2}), P({2, 2})}, {{0, 1, 2}, {0, 1, 3}});
    auto rep = validate(overlap);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.certified_fast);
}

TEST_CASE("barycentric subdivision counts match flag enumeration") {
    auto sd_vertex = barycentric_subdivide(standard_simplex(0));
    CHECK(sd_vertex.f_vector() == std::vector<std::size_t>{1});

    auto sd2 = barycentric_subdivide(standard_simplex(2));
    CHECK(sd2.f_vector() == std::vector<std::size_t>{7, 12, 6});
    CHECK(sd2.euler_characteristic() == 1);
    CHECK(sd2.f_vector() == oracle::sd_f_vector(standard_simplex(2)));

    auto sdb = barycentric_subdivide(simplex_boundary(2));
    CHECK(sdb.f_vector() == std::vector<std::size_t>{6, 6});
    CHECK(sdb.euler_characteristic() == 0);

    for (const auto& [name, k] : corpus::abstract_corpus()) {
        CAPTURE(name);
        auto sd = barycentric_subdivide(k);
        CHECK(sd.f_vector() == oracle::sd_f_vector(k));
        CHECK(validate(sd).ok);
        CHECK(sd.euler_characteristic() == k.euler_characteristic());
    }
}

TEST_CASE("subdivision order and carriers") {
    auto k = standard_simplex(2);
    auto carriers = subdivision_carriers(k);
    auto sd = barycentric_subdivide(k);
    for (const auto& s : sd.simplices(1)) {
        const auto& f = carriers[static_cast<std::size_t>(s[0])];
        const auto& g = carriers[static_cast<std::size_t>(s[1])];
        CHECK(std::includes(g.begin(), g.end(), f.begin(), f.end()));
        CHECK(f.size() < g.size());
    }
}

TEST_CASE("Euclidean subdivision stays valid and keeps volume") {
    for (const auto& [name, k] : corpus::euclidean_corpus()) {
        CAPTURE(name);
        auto sd = barycentric_subdivide(k);
        CHECK(validate(sd).ok);
        if (k.base().dimension() == static_cast<int>(k.ambient()) && k.base().is_pure())
            CHECK(total_volume(sd) == total_volume(k));
    }
    auto sd = barycentric_subdivide(chart_simplex(2));
    CHECK(sd.point(6) == Point{Rational(1, 3), Rational(1, 3)});
}

TEST_CASE("star, link and join") {
    EuclideanComplex edge(OrderedComplex::from_maximal({1, 2}, {{1, 2}}), 2,
                          {P({2, 0}), P({0, 2})});
    auto joined = join(P({0, 0}), edge);
    CHECK(joined.base().f_vector() == std::vector<std::size_t>{3, 3, 1});

    auto torus = corpus::torus7();
    auto lk = link(0, torus);
    CHECK(lk.f_vector() == std::vector<std::size_t>{6, 6});
    CHECK(lk.euler_characteristic() == 0);
    for (auto v : lk.vertices()) {
        std::size_t deg = 0;
        for (const auto& e : lk.simplices(1)) deg += std::count(e.begin(), e.end(), v);
        CHECK(deg == 2);
    }

    for (const auto& [name, c] : corpus::abstract_corpus())
        for (auto v : c.vertices()) {
            CAPTURE(name);
            CAPTURE(v);
            CHECK(star(v, c) == cone(v, link(v, c)));
        }
    for (const auto& [name, c] : corpus::euclidean_corpus())
        for (auto v : c.base().vertices()) {
            CAPTURE(name);
            CHECK(star(v, c) == join(c.point(v), link(v, c), v));
        }
}

TEST_CASE("join rejects degenerate position") {
    EuclideanComplex edge(OrderedComplex::from_maximal({0, 1}, {{0, 1}}), 2, {P({0, 0}), P({2, 0})});
    CHECK_THROWS_AS(join(P({1, 0}), edge), GeometryError);
    try {
        join(P({5, 0}), edge);
    } catch (const GeometryError& e) {
        CHECK(std::string(e.what()).find("[0 1]") != std::string::npos);
    }
}

TEST_CASE("Δ-set of an ordered complex") {
    for (std::size_t p = 0; p <= 4; ++p) {
        auto x = delta_set_of(standard_simplex(p));
        for (std::size_t k = 0; k <= p; ++k) CHECK(x.count(k) == oracle::binomial(p + 1, k + 1));
        CHECK(check_identities(x).ok);
    }
    auto edge = delta_set_of(standard_simplex(1));
    CHECK(edge.count(0) == 2);
    CHECK(edge.count(1) == 1);
    CHECK(edge.face(1, 0, 0) == 1);
    CHECK(edge.face(1, 0, 1) == 0);
    CHECK(check_identities(delta_set_of(corpus::torus7())).ok);
}

TEST_CASE("complex file round trip") {
    auto k = barycentric_subdivide(chart_simplex(2));
    std::ostringstream out;
    write_complex(out, "sd", k);
    std::istringstream in(out.str());
    auto back = read_complex(in);
    CHECK(back.name == "sd");
    CHECK(back.complex == k);
    std::ostringstream again;
    write_complex(again, "sd", back.complex);
    CHECK(again.str() == out.str());

    std::istringstream bad("complex x ambient=1\nv 0 0.5\n");
    CHECK_THROWS_AS(read_complex(bad), StructuralError);
    std::istringstream unknown("complex x ambient=1\nv 0 0\ns 0 7\n");
    CHECK_THROWS_AS(read_complex(unknown), StructuralError);
}
