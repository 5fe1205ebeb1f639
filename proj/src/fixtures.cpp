#include "plk/fixtures.hpp"

#include "plk/corpus.hpp"
#include "plk/prism.hpp"

#include <random>

namespace plk::fixtures {

namespace {

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

EuclideanComplex interval(Rational a, Rational b) {
    return EuclideanComplex(OrderedComplex::from_maximal({0, 1}, {{0, 1}}), 1, {pt({a}), pt({b})});
}

EuclideanComplex point_complex(std::size_t ambient) {
    return EuclideanComplex(OrderedComplex::from_maximal({0}, {{0}}), ambient, {Point(ambient, Rational(0))});
}

// Last coordinate (t) of R(1) onto Δ^1.
AffineSimplicialMap prism_height(const EuclideanComplex& k, std::size_t coord) {
    std::vector<Point> imgs;
    for (const auto& x : k.coords()) imgs.push_back(pt({x[coord]}));
    return affine_map(k, chart_simplex(1), imgs);
}

Point random_point(std::mt19937& rng, std::size_t q) {
    std::uniform_int_distribution<int> w(0, 4);
    std::vector<int> weights;
    int sum = 0;
    while (sum == 0) {
        weights.clear();
        for (std::size_t i = 0; i <= q; ++i) weights.push_back(w(rng));
        for (auto x : weights) sum += x;
    }
    Point x;
    for (std::size_t i = 1; i <= q; ++i) x.push_back(Rational(weights[i], sum));
    return x;
}

}  // namespace

AffineSimplicialMap hexagon_height() {
    auto h = corpus::hexagon();
    std::vector<Point> imgs;
    for (const auto& x : h.coords()) imgs.push_back(pt({x[1]}));
    return affine_map(h, chart_simplex(1), imgs);
}

std::vector<FiberFixture> fiber_fixtures() {
    std::vector<FiberFixture> out;
    out.push_back({"hexagon height", hexagon_height(), pt({Rational(1, 2)}), 1, 0});
    out.push_back({"R(1) height", prism_height(build_R(1).complex, 1), pt({Rational(1, 3)}), 2, 1});
    out.push_back({"R(2) height", prism_height(build_R(2).complex, 2), pt({Rational(1, 2)}), 3, 2});
    out.push_back({"K^2 height", prism_height(build_K(2).complex, 0), pt({Rational(2, 5)}), 3, 2});
    {
        const auto& k = build_K(2).complex;
        std::vector<Point> imgs;
        for (const auto& x : k.coords()) imgs.push_back(Point(x.begin() + 1, x.end()));
        out.push_back({"K^2 onto Δ^2", affine_map(k, chart_simplex(2), imgs),
                       pt({Rational(1, 4), Rational(1, 3)}), 3, 1});
    }
    {
        auto tri = chart_simplex(2);
        std::vector<Point> imgs;
        for (const auto& x : tri.coords()) imgs.push_back(pt({x[0]}));
        out.push_back({"Δ^2 forgetting y", affine_map(tri, chart_simplex(1), imgs), pt({Rational(1, 2)}), 2, 1});
    }
    return out;
}

std::vector<FamilyFixture> lift_fixtures() {
    auto d1 = chart_simplex(1);
    auto d2 = chart_simplex(2);
    std::vector<FamilyFixture> out;
    out.push_back({"Δ^1 x point", product_family(d1, point_complex(1))});
    out.push_back({"Δ^1 x [0,1]", product_family(d1, interval(0, 1))});
    {
        EuclideanComplex halves(OrderedComplex::from_maximal({0, 1, 2}, {{0, 1}, {1, 2}}), 1,
                                {pt({0}), pt({Rational(1, 2)}), pt({1})});
        out.push_back({"V graph", graph_family(d1, halves, {pt({0}), pt({1}), pt({0})})});
    }
    out.push_back({"affine graph over Δ^1", graph_family(d1, d1, {pt({1}), pt({3})})});
    {
        EuclideanComplex wedge(OrderedComplex::from_maximal({0, 1, 2}, {{0, 1, 2}}), 2,
                               {pt({0, 0}), pt({1, 0}), pt({1, 1})});
        out.push_back({"region under a graph", PolyhedralFamily{d1, d1, 1, wedge}});
    }
    out.push_back({"empty over Δ^1", empty_family(d1, 1)});
    out.push_back({"Δ^2 x point", product_family(d2, point_complex(1))});
    out.push_back({"affine graph over Δ^2", graph_family(d2, d2, {pt({0}), pt({1}), pt({2})})});
    out.push_back({"Δ^2 x [0,1]", product_family(d2, interval(0, 1))});
    {
        EuclideanComplex cone(OrderedComplex::from_maximal({0, 1, 2, 3}, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}), 2,
                              {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({Rational(1, 3), Rational(1, 3)})});
        out.push_back({"tent over Δ^2", graph_family(d2, cone, {pt({0}), pt({0}), pt({0}), pt({1})})});
    }
    for (auto& f : out) check_family(f.family);
    return out;
}

std::vector<PullbackInstance> pullback_instances(std::uint32_t seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim(1, 2), kind(0, 2), value(-3, 3);
    std::vector<PullbackInstance> out;
    for (std::size_t n = 0; n < count; ++n) {
        auto q = static_cast<std::size_t>(dim(rng));
        auto Q = chart_simplex(q);
        PolyhedralFamily w;
        switch (kind(rng)) {
        case 0: {
            auto sd = barycentric_subdivide(Q);
            std::vector<Point> vals;
            for (std::size_t i = 0; i < sd.coords().size(); ++i) vals.push_back(pt({Rational(value(rng), 2)}));
            w = graph_family(Q, sd, vals);
            break;
        }
        case 1: {
            int a = value(rng), b = value(rng);
            if (a == b) ++b;
            w = product_family(Q, interval(std::min(a, b), std::max(a, b)));
            break;
        }
        default: {
            std::vector<Point> vals;
            for (std::size_t i = 0; i <= q; ++i) vals.push_back(pt({value(rng), value(rng)}));
            w = graph_family(Q, Q, vals);
        }
        }
        auto p = static_cast<std::size_t>(dim(rng));
        auto r = static_cast<std::size_t>(dim(rng));
        std::vector<Point> fi, gi;
        for (std::size_t i = 0; i <= p; ++i) fi.push_back(random_point(rng, q));
        for (std::size_t i = 0; i <= r; ++i) gi.push_back(random_point(rng, p));
        out.push_back({w, affine_map(chart_simplex(p), Q, fi), affine_map(chart_simplex(r), chart_simplex(p), gi)});
    }
    return out;
}

std::vector<HornFixture> horn_fixtures() {
    std::vector<HornFixture> out;
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t j = 0; j <= p; ++j) {
            auto h = horn(p, j);
            auto tag = "Λ^" + std::to_string(p) + "_" + std::to_string(j);
            out.push_back({tag + " x [0,1]", p, j, product_family(h, interval(0, 1))});
            out.push_back({"empty over " + tag, p, j, empty_family(h, 1)});
            std::vector<Point> vals;
            for (auto v : h.base().vertices()) vals.push_back(pt({Rational(v * v + 1), Rational(v)}));
            out.push_back({"point fibers over " + tag, p, j, graph_family(h, h, vals)});
        }
    return out;
}

Category chain_category() {
    return {{"0", "1", "2"}, {{"f", 0, 1}, {"g", 1, 2}, {"h", 0, 2}}, {{{0, 1}, 2}}};
}

Category wrong_target_category() {
    auto c = chain_category();
    c.morphisms.push_back({"k", 0, 1});
    c.comp[{0, 1}] = 3;
    c.comp[{3, 1}] = 2;
    return c;
}

Category non_associative_category() {
    return {{"A", "B", "C", "D"},
            {{"f", 0, 1}, {"g", 1, 2}, {"h", 2, 3}, {"fg", 0, 2}, {"gh", 1, 3}, {"x", 0, 3}, {"y", 0, 3}},
            {{{0, 1}, 3}, {{1, 2}, 4}, {{3, 2}, 5}, {{0, 4}, 6}}};
}

DeltaSet directed_path() { return DeltaSet(FaceTable{{{}, {}, {}}, {{1, 0}, {2, 1}}}, "path"); }

}  // namespace plk::fixtures
