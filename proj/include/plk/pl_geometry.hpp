#pragma once

#include "plk/complex.hpp"
#include "plk/rational.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace plk {

// A simplexwise affine map |source| -> |target| given by vertex images.
struct AffineSimplicialMap {
    EuclideanComplex source, target;
    std::vector<Point> images;  // aligned with source.base().vertices()

    const Point& image(VertexId v) const;
    // Value at a point of |source|; GeometryError when x is outside.
    Point operator()(const Point& x) const;
};

// Every source simplex must land in a single target simplex.
void check_map(const AffineSimplicialMap& f);
// Vertex images given by a function of the vertex coordinates.
AffineSimplicialMap affine_map(const EuclideanComplex& source, const EuclideanComplex& target,
                               const std::vector<Point>& images);
AffineSimplicialMap identity_affine(const EuclideanComplex& k);
AffineSimplicialMap constant_map(const EuclideanComplex& source, const EuclideanComplex& target,
                                 const Point& q);
// f ∘ g; g must send each simplex into one simplex of f's source.
AffineSimplicialMap compose(const AffineSimplicialMap& f, const AffineSimplicialMap& g);

// Graph in source x target coordinates, triangulated by the source simplices.
EuclideanComplex graph_of(const AffineSimplicialMap& f);

// W ⊆ |K| x R^N with the coordinate projection simplicial onto `refinement`,
// a subdivision of `base`.
struct PolyhedralFamily {
    EuclideanComplex base, refinement;
    std::size_t fiber_ambient = 0;
    EuclideanComplex total;

    // Refinement vertex below each total vertex.
    std::vector<VertexId> projection() const;
    bool empty() const { return total.base().empty(); }
};

// Throws ValidityError when the projection is not simplicial onto the
// refinement or the refinement does not subdivide the base.
void check_family(const PolyhedralFamily& w);

PolyhedralFamily empty_family(const EuclideanComplex& base, std::size_t fiber_ambient);
// |K| x |M| with the staircase triangulation of each product of simplices.
PolyhedralFamily product_family(const EuclideanComplex& base, const EuclideanComplex& fiber);
// Graph of f as a family over f's source.
PolyhedralFamily graph_family(const AffineSimplicialMap& f);
// Graph of the PL function with the given values on the refinement vertices.
PolyhedralFamily graph_family(const EuclideanComplex& base, const EuclideanComplex& refinement,
                              const std::vector<Point>& values);

// f*W = {(p, x) : (f(p), x) ∈ W} over f's source.
PolyhedralFamily pullback(const AffineSimplicialMap& f, const PolyhedralFamily& w);

// The fiber W_q ⊂ R^N; GeometryError when q is outside |base|.
EuclideanComplex slice(const PolyhedralFamily& w, const Point& q);

// Point-set equality of the totals (and same base point set).
bool same_family(const PolyhedralFamily& a, const PolyhedralFamily& b);

struct RegularFiber {
    EuclideanComplex fiber;
    std::vector<Point> probes;
    bool certified = false;
    std::string message;
};

// f : |K| -> Δ^p (chart simplex) sending vertices to vertices; λ interior.
RegularFiber regular_fiber(const AffineSimplicialMap& f, const Point& lambda);

// The horn Λ^p_j in the chart of Δ^p.
EuclideanComplex horn(std::size_t p, std::size_t j);
// The stored retraction Δ^p -> Λ^p_j, affine on sd Δ^p.
AffineSimplicialMap horn_retraction(std::size_t p, std::size_t j);
// r*W for W over the horn, as a family over the chart Δ^p.
PolyhedralFamily horn_fill_family(const PolyhedralFamily& w, std::size_t p, std::size_t j);
// Restriction of a family over Δ^p to the horn Λ^p_j.
PolyhedralFamily restrict_to_horn(const PolyhedralFamily& w, std::size_t p, std::size_t j);

struct ManifoldReport {
    bool ok = true;
    bool exact = true;  // false for d >= 3: link homology is only necessary
    std::optional<VertexId> witness;
    std::string message;
};

ManifoldReport manifold_check(const OrderedComplex& k, std::size_t d);
ManifoldReport manifold_check(const EuclideanComplex& k, std::size_t d);

// Family file: "family <name> fiber=<N>", then base, refinement and total
// complexes, then "proj" with one "p <total simplex> : <refinement simplex>"
// line per maximal total simplex.
struct NamedFamily {
    std::string name;
    PolyhedralFamily family;
};
NamedFamily read_family(std::istream& in);
void write_family(std::ostream& out, const std::string& name, const PolyhedralFamily& w);

// Map file: "map <name>", source and target complexes, then "f <id> <coords>".
struct NamedMap {
    std::string name;
    AffineSimplicialMap map;
};
NamedMap read_map(std::istream& in);
void write_map(std::ostream& out, const std::string& name, const AffineSimplicialMap& f);

}  // namespace plk
