#pragma once

#include "plk/delta_set.hpp"
#include "plk/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plk {

struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    // columns[c] = (row, value) pairs sorted by row, no zeros.
    std::vector<std::vector<std::pair<std::size_t, long long>>> columns;
};

class ChainComplex {
public:
    ChainComplex() = default;
    // boundaries[k] is ∂_k : C_k -> C_{k-1}; boundaries[0] is ignored.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);

    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const SparseMatrix& boundary(std::size_t k) const { return boundaries_[k]; }
    std::size_t top() const { return ranks_.size(); }
    // First k with ∂_{k-1} ∂_k != 0, or 0 when ∂∂ = 0 everywhere.
    std::size_t first_nonzero_square() const;
    long euler_characteristic() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<SparseMatrix> boundaries_;
};

// ∂_k = Σ (-1)^i d_i. Throws ValidityError when X fails its identities.
ChainComplex chains_of(const DeltaSet& x);

using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
    std::vector<Integer> factors;  // positive, d_1 | d_2 | ...
    IntMatrix u, v, d;             // u * m * v = d
};

// Minimal-absolute-value pivoting with the unimodular certificate.
SmithForm smith_normal_form(const IntMatrix& m);
// Checks u*m*v == d, d diagonal with the factors, |det u| = |det v| = 1.
bool verify_smith(const IntMatrix& m, const SmithForm& s);

struct RankTorsion {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
};

// Sparse unit-pivot elimination, dense SNF on what remains. Matrices within
// dense_threshold in both dimensions go straight to the certified dense path.
RankTorsion rank_and_torsion(const SparseMatrix& m, std::size_t dense_threshold = 64);

struct DegreeHomology {
    std::size_t betti = 0;
    std::vector<Integer> torsion;
    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyProfile {
    std::vector<DegreeHomology> degrees;

    // "H_k = Z^b ⊕ Z/t ..." with "0" for the trivial group.
    std::string line(std::size_t k) const;
    std::vector<std::string> lines() const;
    long euler_characteristic() const;
    // Equality up to trailing trivial degrees.
    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

HomologyProfile homology(const ChainComplex& c);
HomologyProfile homology(const DeltaSet& x);
// Profile with the given Betti numbers and no torsion.
HomologyProfile betti_profile(const std::vector<std::size_t>& betti);

IntMatrix dense(const SparseMatrix& m);

}  // namespace plk
