#pragma once

#include "plk/complex.hpp"
#include "plk/delta_set.hpp"

#include <string>
#include <vector>

namespace plk::corpus {

// Möbius' 7-vertex torus: triangles {i,i+1,i+3}, {i,i+2,i+3} mod 7.
OrderedComplex torus7();
// 6-vertex real projective plane (hemi-icosahedron).
OrderedComplex rp2_6();
// Circle with one vertex and one edge.
DeltaSet circle_one_vertex();
// Square-with-diagonal torus: 1 vertex, 3 edges, 2 triangles.
DeltaSet delta_torus();
// Square-with-diagonal projective plane: 2 vertices, 3 edges, 2 triangles.
DeltaSet delta_rp2();

struct NamedDelta {
    std::string name;
    DeltaSet set;
};
// The subdivision-invariance corpus.
std::vector<NamedDelta> homology_corpus();

struct NamedComplex {
    std::string name;
    OrderedComplex complex;
};
// Abstract complexes whose vertices get the star/link checks.
std::vector<NamedComplex> abstract_corpus();

struct NamedEuclidean {
    std::string name;
    EuclideanComplex complex;
};
// Valid Euclidean complexes with rational coordinates.
std::vector<NamedEuclidean> euclidean_corpus();

// Hexagonal circle in the plane: (0,0),(1,0),(2,0),(2,1),(1,1),(0,1).
EuclideanComplex hexagon();
// Boundary of the standard tetrahedron in R^3.
EuclideanComplex tetrahedron_boundary();

}  // namespace plk::corpus
