#pragma once

#include "plk/complex.hpp"
#include "plk/rational.hpp"

#include <map>
#include <vector>

namespace plk {

// Vertices of {(λ, μ) : λ ∈ Δ_a, μ ∈ Δ_b, Σ λ_i a_i = Σ μ_j b_j}, as pairs of
// barycentric weight vectors. The a_i and b_j live in a common R^n.
struct Coupling {
    std::vector<Rational> lambda, mu;
};
std::vector<Coupling> coupling_vertices(const std::vector<Point>& a, const std::vector<Point>& b);

// The points that are not convex combinations of the others (duplicates removed).
std::vector<Point> extreme_points(std::vector<Point> pts);

// Placing triangulation of conv(pts), points taken in lexicographic order.
// Simplices are index lists into the sorted, deduplicated point list returned
// in `points`.
struct Triangulation {
    std::vector<Point> points;
    std::vector<std::vector<std::size_t>> simplices;
    int dimension = -1;
};
Triangulation placing_triangulation(std::vector<Point> pts);

// Deduplicating collector of simplices given by coordinates; ids follow
// lexicographic point order.
class ComplexBuilder {
public:
    explicit ComplexBuilder(std::size_t ambient) : ambient_(ambient) {}
    void add_simplex(const std::vector<Point>& pts);
    void add_point(const Point& p);
    EuclideanComplex build() const;

private:
    std::size_t ambient_;
    std::map<Point, std::size_t> index_;
    std::vector<std::vector<Point>> simplices_;
};

// Relative volume of conv(pts) measured in the barycentric chart of an
// s-simplex, as a multiple of that simplex's volume (so the simplex itself has 1).
// pts are barycentric weight vectors.
Rational relative_volume(const std::vector<std::vector<Rational>>& weights);

// |simplex| ⊆ |k|, exactly.
bool covered(const std::vector<Point>& simplex, const EuclideanComplex& k);
// |a| = |b| as point sets.
bool same_point_set(const EuclideanComplex& a, const EuclideanComplex& b);

// Axis-aligned box overlap of two point lists.
bool boxes_overlap(const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace plk
