#pragma once

#include "plk/complex.hpp"
#include "plk/delta_set.hpp"
#include "plk/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plk {

// Monotone map [n] -> [m] stored as its value list (length n+1).
using MonotoneMap = std::vector<std::size_t>;

// Eilenberg–Zilber normal form: the simplex eta^* y for a nondegenerate
// generator y of degree eta.back() and a monotone surjection eta.
struct NormalForm {
    std::size_t generator = 0;
    MonotoneMap eta;

    std::size_t degree() const { return eta.size() - 1; }
    std::size_t base_degree() const { return eta.back(); }
    bool nondegenerate() const { return eta.size() == eta.back() + 1; }
    // Degeneracy word s_{j_1} ... s_{j_r} with j_1 > ... > j_r.
    std::vector<std::size_t> degeneracy_indices() const;

    friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

std::string to_string(const NormalForm& x);

MonotoneMap identity_map(std::size_t n);
// Coface δ_i : [n-1] -> [n] and codegeneracy σ_j : [n+1] -> [n].
MonotoneMap coface(std::size_t n, std::size_t i);
MonotoneMap codegeneracy(std::size_t n, std::size_t j);
// (f ∘ g)(x) = f(g(x)).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);
bool is_monotone(const MonotoneMap& f);
// All monotone surjections [n] ->> [m] in lexicographic order.
std::vector<MonotoneMap> surjections(std::size_t n, std::size_t m);
// All monotone maps [n] -> [m] in lexicographic order.
std::vector<MonotoneMap> monotone_maps(std::size_t n, std::size_t m);

// Finitely presented simplicial set: nondegenerate generators with face
// tables landing in normal forms.
class SimplicialSetFP {
public:
    SimplicialSetFP() = default;
    // faces[m][g][i] = d_i of generator g in degree m (degree m-1 normal form).
    SimplicialSetFP(std::vector<std::vector<std::vector<NormalForm>>> faces, std::string name = "X");

    const std::string& name() const { return name_; }
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    std::size_t count(std::size_t m) const { return m < faces_.size() ? faces_[m].size() : 0; }
    const NormalForm& generator_face(std::size_t m, std::size_t g, std::size_t i) const {
        return faces_[m][g][i];
    }

    NormalForm generator(std::size_t m, std::size_t g) const { return {g, identity_map(m)}; }
    // theta^* x for monotone theta : [k] -> [deg x].
    NormalForm apply(const MonotoneMap& theta, const NormalForm& x) const;
    NormalForm face(const NormalForm& x, std::size_t i) const;
    NormalForm degeneracy(const NormalForm& x, std::size_t j) const;
    // Every simplex of degree n, sorted.
    std::vector<NormalForm> simplices(std::size_t n) const;
    long euler_characteristic() const;

private:
    std::vector<std::vector<std::vector<NormalForm>>> faces_;
    std::string name_;
};

// d_i d_j = d_{j-1} d_i on generators, plus d_i s_j relations.
IdentityReport check_identities(const SimplicialSetFP& x);

// Images of nondegenerate generators.
class SimplicialMorphism {
public:
    SimplicialMorphism() = default;
    explicit SimplicialMorphism(std::vector<std::vector<NormalForm>> images)
        : images_(std::move(images)) {}
    const NormalForm& image(std::size_t m, std::size_t g) const { return images_[m][g]; }
    NormalForm operator()(const SimplicialSetFP& target, const NormalForm& x) const;
    const std::vector<std::vector<NormalForm>>& images() const { return images_; }

private:
    std::vector<std::vector<NormalForm>> images_;
};

MorphismReport check_morphism(const SimplicialSetFP& src, const SimplicialSetFP& dst,
                              const SimplicialMorphism& f);

// Product with its factor bookkeeping.
struct ProductSet {
    SimplicialSetFP set;
    // components[n][g] = (x, y) simplices of the factors with jointly injective degeneracies.
    std::vector<std::vector<std::pair<NormalForm, NormalForm>>> components;
    std::map<std::pair<NormalForm, NormalForm>, std::size_t> lookup;
    // Normal form of the pair (x, y) of equal degree.
    NormalForm pair(const NormalForm& x, const NormalForm& y) const;
};

ProductSet product(const SimplicialSetFP& x, const SimplicialSetFP& y);

// Δ-set of all simplices up to `cap` (default dim+1), degenerate ones included.
DeltaSet forget(const SimplicialSetFP& x, std::optional<std::size_t> cap = std::nullopt);

// Normalized chain complex: nondegenerate generators, degenerate faces dropped.
ChainComplex normalized_chains(const SimplicialSetFP& x);
HomologyProfile homology(const SimplicialSetFP& x);

// Simplicial set of an ordered complex; simplices are weakly increasing vertex strings.
SimplicialSetFP simplicial_set_of(const OrderedComplex& k);
// String <-> normal form for simplicial_set_of(k).
NormalForm nf_of_string(const OrderedComplex& k, const std::vector<VertexId>& s);
std::vector<VertexId> string_of_nf(const OrderedComplex& k, const NormalForm& x);

// Nerve of a finite group given by its multiplication table (identity 0),
// nondegenerate generators up to degree `top`.
SimplicialSetFP group_nerve(const std::vector<std::vector<std::size_t>>& mult, std::size_t top);

// Simplicial horn search: faces has p+1 entries of degree p-1, entry j ignored.
// Returns the least p-simplex (normal-form order) or nullopt.
std::optional<NormalForm> kan_fill(const SimplicialSetFP& x, std::size_t p, std::size_t j,
                                   const std::vector<NormalForm>& faces);

}  // namespace plk
