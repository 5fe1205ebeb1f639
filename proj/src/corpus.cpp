#include "plk/corpus.hpp"

namespace plk::corpus {

namespace {

std::vector<VertexId> range_ids(VertexId n) {
    std::vector<VertexId> v;
    for (VertexId i = 0; i < n; ++i) v.push_back(i);
    return v;
}

Point pt(std::initializer_list<long> xs) {
    Point p;
    for (auto x : xs) p.emplace_back(x);
    return p;
}

}  // namespace

OrderedComplex torus7() {
    std::vector<Simplex> tris;
    for (VertexId i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return OrderedComplex::from_maximal(range_ids(7), std::move(tris));
}

OrderedComplex rp2_6() {
    std::vector<Simplex> tris{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    return OrderedComplex::from_maximal(range_ids(6), std::move(tris));
}

DeltaSet circle_one_vertex() { return DeltaSet(FaceTable{{{}}, {{0, 0}}}, "S1_1"); }

DeltaSet delta_torus() {
    // edges a,b,c = 0,1,2; U = (b,c,a), L = (a,c,b)
    return DeltaSet(FaceTable{{{}}, {{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 2, 1}}}, "T2");
}

DeltaSet delta_rp2() {
    // vertices v,w = 0,1; edges a,b: v->w, c: w->w
    return DeltaSet(FaceTable{{{}, {}}, {{1, 0}, {1, 0}, {1, 1}}, {{2, 1, 0}, {2, 0, 1}}},
                    "RP2");
}

std::vector<NamedDelta> homology_corpus() {
    return {
        {"S1 one vertex", circle_one_vertex()},
        {"S1 boundary of triangle", delta_set_of(simplex_boundary(2))},
        {"boundary of tetrahedron", delta_set_of(simplex_boundary(3))},
        {"7-vertex torus", delta_set_of(torus7())},
        {"6-vertex RP2", delta_set_of(rp2_6())},
    };
}

std::vector<NamedComplex> abstract_corpus() {
    return {
        {"simplex 2", standard_simplex(2)},
        {"simplex 3", standard_simplex(3)},
        {"boundary of triangle", simplex_boundary(2)},
        {"boundary of tetrahedron", simplex_boundary(3)},
        {"7-vertex torus", torus7()},
        {"6-vertex RP2", rp2_6()},
        {"sd boundary of tetrahedron", barycentric_subdivide(simplex_boundary(3))},
        {"bowtie", OrderedComplex::from_maximal({0, 1, 2, 3, 4}, {{0, 1, 2}, {0, 3, 4}})},
    };
}

EuclideanComplex hexagon() {
    std::vector<Point> c{pt({0, 0}), pt({1, 0}), pt({2, 0}), pt({2, 1}), pt({1, 1}), pt({0, 1})};
    auto k = OrderedComplex::from_maximal(range_ids(6),
                                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    return EuclideanComplex(std::move(k), 2, std::move(c));
}

EuclideanComplex tetrahedron_boundary() {
    std::vector<Point> c{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
    return EuclideanComplex(simplex_boundary(3), 3, std::move(c));
}

std::vector<NamedEuclidean> euclidean_corpus() {
    std::vector<Point> sq{pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})};
    EuclideanComplex square(OrderedComplex::from_maximal(range_ids(4), {{0, 1, 2}, {0, 2, 3}}), 2,
                            sq);
    std::vector<Point> fan{pt({0, 0}), pt({2, 0}), pt({1, 2}), pt({-1, 2}), pt({-2, 0}),
                           pt({0, -2})};
    EuclideanComplex star_fan(
        OrderedComplex::from_maximal(range_ids(6), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                                    {0, 1, 5}}),
        2, fan);
    std::vector<Point> mixed{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({3, 3}), pt({4, 3})};
    EuclideanComplex tri_and_edge(
        OrderedComplex::from_maximal(range_ids(5), {{0, 1, 2}, {3, 4}, {2, 3}}), 2, mixed);
    return {
        {"chart simplex 1", chart_simplex(1)},
        {"chart simplex 2", chart_simplex(2)},
        {"chart simplex 3", chart_simplex(3)},
        {"square", std::move(square)},
        {"pentagon fan", std::move(star_fan)},
        {"hexagon", hexagon()},
        {"tetrahedron boundary", tetrahedron_boundary()},
        {"triangle with tail", std::move(tri_and_edge)},
    };
}

}  // namespace plk::corpus
