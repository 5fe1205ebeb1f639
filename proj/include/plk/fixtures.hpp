#pragma once

#include "plk/delta_set.hpp"
#include "plk/nerve.hpp"
#include "plk/pl_geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plk::fixtures {

// Hexagonal circle -> Δ^1 by height.
AffineSimplicialMap hexagon_height();

struct FiberFixture {
    std::string name;
    AffineSimplicialMap map;  // simplicial onto a chart simplex
    Point lambda;
    std::size_t manifold_dim = 0;
    std::size_t fiber_dim = 0;
};
// Hexagon height plus projections of prism triangulations.
std::vector<FiberFixture> fiber_fixtures();

struct FamilyFixture {
    std::string name;
    PolyhedralFamily family;
};
// Families over the charts Δ^1 and Δ^2.
std::vector<FamilyFixture> lift_fixtures();

// W over Q, f : P -> Q and g : R -> P between chart simplices.
struct PullbackInstance {
    PolyhedralFamily w;
    AffineSimplicialMap f, g;
};
std::vector<PullbackInstance> pullback_instances(std::uint32_t seed, std::size_t count);

struct HornFixture {
    std::string name;
    std::size_t p = 0, j = 0;
    PolyhedralFamily family;  // over horn(p, j)
};
std::vector<HornFixture> horn_fixtures();

// 0 -> 1 -> 2 with the composite.
Category chain_category();
// chain_category plus k : 0 -> 1 given as the composite of f and g.
Category wrong_target_category();
// f, g, h with (fg)h != f(gh).
Category non_associative_category();
// 0 -> 1 -> 2 as a Δ-set, no 2-simplices.
DeltaSet directed_path();

}  // namespace plk::fixtures
