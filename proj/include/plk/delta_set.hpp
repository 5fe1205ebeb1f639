#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace plk {

// Faces of one generator: entry i is d_i (empty in degree 0).
using FaceList = std::vector<std::size_t>;
// faces[k][g] = face list of generator g in degree k.
using FaceTable = std::vector<std::vector<FaceList>>;

struct IdentityReport {
    bool ok = true;
    std::size_t degree = 0, generator = 0, i = 0, j = 0;
    std::string message;
};

// Finitely presented semi-simplicial set. Generators in degree k are 0..count(k)-1.
class DeltaSet {
public:
    struct Unchecked {};

    DeltaSet() = default;
    // Throws StructuralError on out-of-range faces, ValidityError when
    // d_i d_j = d_{j-1} d_i fails somewhere.
    explicit DeltaSet(FaceTable faces, std::string name = "X");
    // Range-checked only; use check_identities() to inspect.
    DeltaSet(Unchecked, FaceTable faces, std::string name = "X");

    const std::string& name() const { return name_; }
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    std::size_t count(std::size_t k) const { return k < faces_.size() ? faces_[k].size() : 0; }
    std::size_t face(std::size_t k, std::size_t g, std::size_t i) const { return faces_[k][g][i]; }
    const FaceList& faces(std::size_t k, std::size_t g) const { return faces_[k][g]; }
    const FaceTable& table() const { return faces_; }
    long euler_characteristic() const;
    std::size_t total_count() const;

    // The generator reached by deleting vertex positions in order (iterated faces),
    // i.e. the face spanned by the sorted vertex subset `keep` of [k].
    std::size_t sub_face(std::size_t k, std::size_t g, const std::vector<std::size_t>& keep) const;
    // Vertex list (iterated last/first faces) of a generator.
    std::vector<std::size_t> vertices_of(std::size_t k, std::size_t g) const;

    friend bool operator==(const DeltaSet& a, const DeltaSet& b) { return a.faces_ == b.faces_; }

private:
    void check_ranges() const;

    FaceTable faces_;
    std::string name_;
};

IdentityReport check_identities(const DeltaSet& x);

// Per-degree generator map; maps[k][g] is the image of generator g.
class DeltaMorphism {
public:
    DeltaMorphism() = default;
    explicit DeltaMorphism(std::vector<std::vector<std::size_t>> maps, std::string name = "f")
        : maps_(std::move(maps)), name_(std::move(name)) {}

    static DeltaMorphism identity(const DeltaSet& x);

    std::size_t operator()(std::size_t k, std::size_t g) const { return maps_[k][g]; }
    const std::vector<std::vector<std::size_t>>& maps() const { return maps_; }
    const std::string& name() const { return name_; }

    friend bool operator==(const DeltaMorphism& a, const DeltaMorphism& b) {
        return a.maps_ == b.maps_;
    }

private:
    std::vector<std::vector<std::size_t>> maps_;
    std::string name_;
};

struct MorphismReport {
    bool ok = true;
    std::string message;
};

MorphismReport check_morphism(const DeltaSet& src, const DeltaSet& dst, const DeltaMorphism& f);
// g ∘ f
DeltaMorphism compose(const DeltaMorphism& g, const DeltaMorphism& f);
bool is_isomorphism(const DeltaSet& src, const DeltaSet& dst, const DeltaMorphism& f);

// Kan search on a Δ-set. faces has p+1 entries; entry j is ignored.
// Throws ValidityError when the horn is incompatible.
std::optional<std::size_t> kan_fill(const DeltaSet& x, std::size_t p, std::size_t j,
                                    const std::vector<std::size_t>& faces);

// Horn compatibility: d_i a_k = d_{k-1} a_i for i < k, both != j.
std::optional<std::string> horn_incompatibility(const DeltaSet& x, std::size_t p, std::size_t j,
                                                const std::vector<std::size_t>& faces);

struct Diagram {
    struct Arrow {
        std::size_t from = 0, to = 0;
        DeltaMorphism map;
    };
    std::vector<DeltaSet> objects;
    std::vector<Arrow> arrows;
};

struct Colimit {
    DeltaSet apex;
    std::vector<DeltaMorphism> cocone;  // one per diagram object
    // members[k][c] = (object, generator) pairs in class c, sorted.
    std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> members;
};

// Throws DiagramError (with a witness pair) when the identifications do not
// respect faces, StructuralError on malformed arrows.
Colimit colimit(const Diagram& d);

// The unique u: apex -> target with u ∘ cocone_o = competing_o, or nullopt when
// the competing maps are not a cocone.
std::optional<DeltaMorphism> factor_through(const Diagram& d, const Colimit& c,
                                            const DeltaSet& target,
                                            const std::vector<DeltaMorphism>& competing);

}  // namespace plk
