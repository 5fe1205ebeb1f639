#pragma once

#include "plk/delta_set.hpp"
#include "plk/homology.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace plk {

// Finite category without identities. comp[(f, g)] is "f then g":
// src(fg) = src(f), tgt(fg) = tgt(g).
struct Category {
    struct Morphism {
        std::string name;
        std::size_t src = 0, tgt = 0;
    };
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;

    bool composable(std::size_t f, std::size_t g) const { return morphisms[f].tgt == morphisms[g].src; }
    std::size_t morphism(const std::string& name) const;
};

struct CategoryReport {
    bool ok = true;
    std::string message;
    std::vector<std::size_t> witness;  // morphism indices
};

// Source/target bookkeeping and associativity. StructuralError when a
// composable pair has no composite or an entry names an unknown morphism.
CategoryReport check_category(const Category& c);

// N_0 = objects, N_k = composable k-strings; d_0 and d_k drop an end, inner
// d_i compose. Built without the identity check, so a non-associative table
// shows up in check_identities. Strings longer than max_degree are left out.
DeltaSet nerve(const Category& c, std::optional<std::size_t> max_degree = {});
// The composable strings behind each nerve generator in degree k >= 1.
std::vector<std::vector<std::size_t>> composable_strings(const Category& c, std::size_t k);

// "obj <id>", "mor <id> <src> <tgt>", "cmp <f> <g> <fg>".
Category read_category(std::istream& in);
void write_category(std::ostream& out, const Category& c);

// 1-cobordism between point sets: partner[x] pairs the endpoints, source
// points first (0..source-1), then target points.
struct Cobordism {
    std::size_t source = 0, target = 0;
    std::vector<std::size_t> partner;
    unsigned loops = 0;

    std::string name() const;
    friend bool operator==(const Cobordism&, const Cobordism&) = default;
};
// Glue along the middle points; closed components add to the loop count,
// which saturates at cap.
Cobordism glue(const Cobordism& a, const Cobordism& b, unsigned cap);

struct CobordismCategory {
    Category category;
    std::vector<Cobordism> cobordisms;  // by morphism index
};
// Objects with 0 and 2 points; every pairing with loop counts 0..3.
CobordismCategory demo_cobordism_category();

// Bigraded generators with horizontal faces (p, q) -> (p-1, q), i <= p and
// vertical faces (p, q) -> (p, q-1), j <= q.
struct BiDeltaSet {
    std::vector<std::vector<std::vector<FaceList>>> horizontal, vertical;  // [p][q][g]
    std::optional<std::size_t> truncated_q;  // q above this was left out

    std::size_t count(std::size_t p, std::size_t q) const;
    std::size_t p_extent() const { return horizontal.size(); }
    std::size_t q_extent(std::size_t p) const { return p < horizontal.size() ? horizontal[p].size() : 0; }
    long euler_characteristic() const;
};

IdentityReport check_bi_delta(const BiDeltaSet& b);

// X in row q = 0.
BiDeltaSet bi_delta_of(const DeltaSet& x);

// Total complex with D = ∂h + (-1)^p ∂v. Degrees at or above truncated_q are
// dropped from the profile.
ChainComplex total_complex(const BiDeltaSet& b);
HomologyProfile total_homology(const BiDeltaSet& b);

// Δ-sets of objects and morphisms with source/target maps and a composition
// table per simplicial degree.
struct SimplicialCategory {
    DeltaSet objects, morphisms;
    DeltaMorphism source, target;
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> comp;  // [p]

    Category level(std::size_t p) const;
};

// Categories in every degree, source/target Δ-morphisms, faces commute with
// composition. ValidityError naming the degree and witness otherwise.
void check_simplicial_category(const SimplicialCategory& c);
SimplicialCategory discrete_simplicial(const Category& c);

// (p, q)-generators are composable q-strings of p-morphisms.
BiDeltaSet nerve_simplicial(const SimplicialCategory& c, std::optional<std::size_t> max_q = {});

}  // namespace plk
