#pragma once

#include "plk/delta_set.hpp"
#include "plk/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plk {

using VertexId = std::int64_t;
// Vertices in increasing id order; the global order on vertices is id order.
using Simplex = std::vector<VertexId>;

std::string to_string(const Simplex& s);

class OrderedComplex {
public:
    OrderedComplex() = default;

    // Closes the given simplices under faces. Every listed vertex becomes a
    // 0-simplex. Throws StructuralError on unknown or repeated vertices.
    static OrderedComplex from_maximal(std::vector<VertexId> vertices,
                                       std::vector<Simplex> simplices);
    // Takes the simplex list as is (no face closure); validate() reports gaps.
    static OrderedComplex from_simplices(std::vector<VertexId> vertices,
                                         std::vector<Simplex> simplices);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    bool has_vertex(VertexId v) const;
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }
    // k-simplices in lexicographic order.
    const std::vector<Simplex>& simplices(std::size_t k) const;
    std::size_t count(std::size_t k) const { return simplices(k).size(); }
    // All simplices ordered by (dimension, lexicographic).
    std::vector<Simplex> all_simplices() const;
    bool contains(const Simplex& s) const;
    // Position of s within simplices(s.size()-1).
    std::optional<std::size_t> index_of(const Simplex& s) const;
    std::vector<Simplex> maximal_simplices() const;
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;
    bool is_pure() const;

    friend bool operator==(const OrderedComplex&, const OrderedComplex&) = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
};

class EuclideanComplex {
public:
    EuclideanComplex() = default;
    // coords[i] belongs to base.vertices()[i]; each of length ambient.
    EuclideanComplex(OrderedComplex base, std::size_t ambient, std::vector<Point> coords);

    const OrderedComplex& base() const { return base_; }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Point>& coords() const { return coords_; }
    const Point& point(VertexId v) const;
    std::vector<Point> points(const Simplex& s) const;

    // Same vertices, simplices and coordinates.
    friend bool operator==(const EuclideanComplex&, const EuclideanComplex&) = default;

private:
    OrderedComplex base_;
    std::size_t ambient_ = 0;
    std::vector<Point> coords_;
};

struct ValidityReport {
    bool ok = true;
    std::string reason;
    std::string witness;
    // True when validity was settled by the pseudomanifold certificate.
    bool certified_fast = false;
};

struct ValidateOptions {
    // Try the degree certificate for pure full-dimensional complexes first.
    bool allow_fast_path = true;
};

ValidityReport validate(const EuclideanComplex& k, ValidateOptions opts = {});
// Face closure and simplex well-formedness only.
ValidityReport validate(const OrderedComplex& k);

// Intersection of the hulls of two simplices, as an exact LP witness; nullopt
// when they meet in the hull of their shared vertices.
std::optional<Point> improper_intersection(const std::vector<Point>& a, const Simplex& sa,
                                           const std::vector<Point>& b, const Simplex& sb);

// New vertex i is the barycenter of all_simplices()[i].
OrderedComplex barycentric_subdivide(const OrderedComplex& k);
EuclideanComplex barycentric_subdivide(const EuclideanComplex& k);
// Carrier of each vertex of sd K (the simplex whose barycenter it is).
std::vector<Simplex> subdivision_carriers(const OrderedComplex& k);

OrderedComplex star(VertexId v, const OrderedComplex& k);
OrderedComplex link(VertexId v, const OrderedComplex& k);
EuclideanComplex star(VertexId v, const EuclideanComplex& k);
EuclideanComplex link(VertexId v, const EuclideanComplex& k);
// Abstract cone: L plus apex plus apex*β for every β.
OrderedComplex cone(VertexId apex, const OrderedComplex& l);
// Geometric join with a point; the apex gets id `apex` (default max id + 1).
// Throws GeometryError naming the first simplex not in general position.
EuclideanComplex join(const Point& a0, const EuclideanComplex& l,
                      std::optional<VertexId> apex = std::nullopt);

// Restriction to the given vertex subset (full subcomplex).
OrderedComplex full_subcomplex(const OrderedComplex& k, const std::vector<VertexId>& verts);

DeltaSet delta_set_of(const OrderedComplex& k);

// Sum of volumes of the top-dimensional simplices; ambient must equal dimension.
Rational total_volume(const EuclideanComplex& k);

// Standard ordered simplex on vertices 0..p (abstract).
OrderedComplex standard_simplex(std::size_t p);
// hull{0, e_1, ..., e_p} in R^p with vertex i at e_i.
EuclideanComplex chart_simplex(std::size_t p);
OrderedComplex simplex_boundary(std::size_t p);

}  // namespace plk
