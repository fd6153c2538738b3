#pragma once

#include "initforms/rational.hpp"

#include <vector>

namespace initforms {

// Outcome of an equality-form feasibility question: does some x >= 0 solve
// A x = b? When infeasible, `farkas` holds a vector y with yA <= 0
// (componentwise over columns) and y.b > 0, certifying infeasibility.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> point;   // x, length = #columns (feasible case)
    std::vector<Rational> farkas;  // y, length = #rows (infeasible case)
};

// Exact phase-1 simplex with Bland's anti-cycling rule. No floating point
// anywhere; every pivot is a rational row operation. Problem sizes here are
// tiny, so exactness wins over speed.
FeasibilityResult equality_feasibility(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<Rational>& rhs);

}  // namespace initforms
