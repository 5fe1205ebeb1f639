#pragma once

#include "plk/rational.hpp"

#include <vector>

namespace plk::lp {

enum class Sense { le, eq, ge };

struct Constraint {
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
};

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational value;
    std::vector<Rational> x;
};

// Exact two-phase simplex with Bland's rule: maximize c.x subject to the
// constraints and x >= 0.
Result maximize(const std::vector<Rational>& c, const std::vector<Constraint>& constraints);

}  // namespace plk::lp
