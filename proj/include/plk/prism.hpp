#pragma once

#include "plk/complex.hpp"
#include "plk/delta_set.hpp"
#include "plk/simplicial_set.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace plk {

// Largest p accepted by the prism builders: PLKERNEL_CAP or 6.
std::size_t prism_cap();

// Faces of [p] as bitmasks, ordered by (size, lexicographic element list).
// This is also the vertex order of sd Δ^p.
const std::vector<unsigned>& faces_of_simplex(std::size_t p);
std::vector<std::size_t> mask_elements(unsigned mask);

// Vertex of R(p): (e_i, 0) or (bF, 1).
struct RVertex {
    bool top = false;
    std::size_t index = 0;  // i for bottom vertices
    unsigned face = 0;      // F for top vertices
};

// Triangulation of Δ^p x [0,1] in the chart R^p x R. Bottom vertex i has id
// i; top vertex F has id p + 1 + (position of F in faces_of_simplex(p)).
struct PrismR {
    std::size_t p = 0;
    EuclideanComplex complex;
    std::vector<RVertex> labels;  // by vertex id

    VertexId bottom(std::size_t i) const { return static_cast<VertexId>(i); }
    VertexId top(unsigned face) const;
    std::string label(VertexId v) const;
};

// Memoized; throws StructuralError above the cap.
const PrismR& build_R(std::size_t p);

// The relation ≤_p on R(p) vertices.
using VertexRelation = std::function<bool(const RVertex&, const RVertex&)>;
bool prism_order(const RVertex& a, const RVertex& b);

struct OrderingReport {
    bool ok = true;
    Simplex witness;
    std::string message;
};

// Checks that rel restricts to a linear order on every simplex and agrees with
// the vertex id order there.
OrderingReport verify_R_ordering(std::size_t p, const VertexRelation& rel = prism_order);

// 𝓡η : R(p) -> R(q) for monotone η : [p] -> [q]. Acts on vertices, hence on
// weakly increasing vertex strings.
struct RMap {
    std::size_t p = 0, q = 0;
    MonotoneMap eta;
    std::vector<VertexId> vertex_image;

    std::vector<VertexId> operator()(const std::vector<VertexId>& s) const;
    // Only for injective η, where simplices go to simplices of equal dimension.
    DeltaMorphism delta() const;
};

// Throws StructuralError for a non-monotone map or one leaving [q].
RMap build_R_map(const MonotoneMap& eta, std::size_t q);
// Image of every simplex is a simplex (support) and vertex order is kept.
MorphismReport check_R_map(const RMap& f);

// Level inclusions Δ^p -> R(p) and sd Δ^p -> R(p) as vertex maps.
std::vector<VertexId> bottom_inclusion(std::size_t p);
std::vector<VertexId> top_inclusion(std::size_t p);

// K^p: bottom vertex i has id i, top vertex i' has id p + 1 + i. Realized in
// R x R^p with bottom at height 0.
struct PrismK {
    std::size_t p = 0;
    EuclideanComplex complex;
    VertexId bottom(std::size_t i) const { return static_cast<VertexId>(i); }
    VertexId top(std::size_t i) const { return static_cast<VertexId>(p + 1 + i); }
    // "(0,i)" or "(1,i)"
    std::string label(VertexId v) const;
};

const PrismK& build_K(std::size_t p);

// F^p on a pair of equal-length weakly increasing strings in [1] and [p].
std::vector<VertexId> F_on_strings(std::size_t p, const std::vector<std::size_t>& x,
                                   const std::vector<std::size_t>& y);

struct FMap {
    ProductSet source;        // Δ^1 x Δ^p
    SimplicialSetFP target;   // K^p as a simplicial set
    SimplicialMorphism map;
};

FMap build_F(std::size_t p);

struct FReport {
    bool ok = true;
    std::string message;
};

// Degreewise bijection up to `degree`, plus face and degeneracy equivariance.
FReport check_F(const FMap& f, std::size_t degree);
// F^p ∘ (Id x η) = η~ ∘ F^q on all simplices up to `degree`.
FReport check_F_naturality(const MonotoneMap& eta, std::size_t p, std::size_t degree);

// Carrier of a generator of sd X: a generator x of X in degree k and a flag
// of faces of [k] ending in [k].
struct Carrier {
    std::size_t degree = 0, generator = 0;
    std::vector<unsigned> flag;
};

struct Subdivision {
    DeltaSet set;
    std::vector<std::vector<Carrier>> carriers;  // by degree and generator
};

// sd X as the colimit of sd Δ^k over the simplices of X.
Subdivision sd_delta(const DeltaSet& x);
// Iterated; r = 0 returns X with trivial carriers.
DeltaSet sd_delta_power(const DeltaSet& x, std::size_t r);

// The identification sd_delta(delta_set_of(K)) -> delta_set_of(sd K).
DeltaMorphism sd_comparison(const OrderedComplex& k, const Subdivision& s);

}  // namespace plk
