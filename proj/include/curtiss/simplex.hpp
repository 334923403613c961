#pragma once

#include <optional>

#include "curtiss/convolution.hpp"

namespace curtiss {

/// Outcome of an exact phase-I feasibility run on  E x = d,  x >= 0.
struct PhaseIResult {
    bool feasible = false;
    // feasible: a solution x (length = #columns of E).
    Vector x;
    // infeasible: Farkas vector y (length = #rows of E) with y^T E <= 0
    // componentwise and y^T d > 0.
    Vector y;
};

/// Dense rational phase-I simplex with Bland's rule (lowest index wins every
/// tie), so runs are deterministic and never cycle.
PhaseIResult phase1_feasible(const Matrix& E, const Vector& d);

}  // namespace curtiss
