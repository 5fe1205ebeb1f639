#pragma once

#include "plk/rational.hpp"

#include <optional>
#include <vector>

namespace plk {

using Matrix = std::vector<std::vector<Rational>>;

std::size_t rank(Matrix m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Some solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

// Rank of the difference vectors p_i - p_0; -1 for an empty list.
int affine_rank(const std::vector<Point>& pts);
bool affinely_independent(const std::vector<Point>& pts);

// Affine coordinates of x w.r.t. affinely independent pts (they sum to 1),
// or nullopt when x is off their affine hull.
std::optional<std::vector<Rational>> affine_coordinates(const std::vector<Point>& pts,
                                                        const Point& x);

// Unsigned k-volume of a full-dimensional simplex in R^k (k+1 points).
Rational simplex_volume(const std::vector<Point>& pts);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace plk
