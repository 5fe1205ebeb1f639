#pragma once

#include "plk/complex.hpp"
#include "plk/pl_geometry.hpp"

#include <string>
#include <vector>

namespace plk {

// A classifying assignment on the Δ-set of an ordered complex: each simplex
// σ = (v_0 < ... < v_k) carries a family over the chart Δ^k.
struct Classification {
    EuclideanComplex geometry;
    std::vector<std::vector<PolyhedralFamily>> values;  // [k][index in simplices(k)]
};

// φ_σ : chart Δ^k -> |K|, e_i -> v_i.
AffineSimplicialMap characteristic_map(const EuclideanComplex& k, const Simplex& s,
                                       const EuclideanComplex& target);

// σ -> φ_σ^* W over every simplex of W's base.
Classification classify(const PolyhedralFamily& w);

// g on sd^r K: g(F) = φ_F^* W for each flag F. r = 0 returns f.
Classification subdivision_lift(const Classification& f, const PolyhedralFamily& w, std::size_t r);

struct LiftReport {
    bool ok = true;
    std::string message;
};

// d_i^* c(σ) = c(d_i σ) for every simplex and face.
LiftReport check_classification(const Classification& c);
// Values on lower simplices are the restrictions of the values on every top
// simplex containing them, so a Δ-morphism is fixed by its top simplices.
LiftReport check_forced_by_top(const Classification& c);
// g(F) = ψ_F^* f(F_top) where ψ_F sends e_i to the barycenter of F_i inside F_top.
LiftReport check_lift_compatibility(const Classification& f, const Classification& g);
// The union over top simplices of the pushed-forward values equals |W|.
LiftReport check_reassembly(const Classification& c, const PolyhedralFamily& w);

}  // namespace plk
