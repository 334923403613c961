#pragma once

#include <optional>

#include "curtiss/convolution.hpp"
#include "curtiss/polynomial.hpp"

namespace curtiss {

/// Result of the degree-s multiplier feasibility question for monic f:
/// does a monic g of degree s exist with coeffs(g*f) >= 0?
struct FeasibilityOutcome {
    int s = 0;
    bool feasible = false;
    // feasible: a monic multiplier of degree exactly s.
    std::optional<Polynomial> multiplier_g;
    // infeasible: y >= 0 over the columns of A_s with A_s[i]*y = 0 for the
    // free rows i < s and A_s[s]*y < 0.
    std::optional<Vector> farkas_y;
};

struct OptResult {
    int opt = 0;
    std::vector<FeasibilityOutcome> per_degree;  // s = 0..opt
    std::optional<int> bound;                    // b(f) when a spec is known
    std::optional<int> precision_digits;         // set for approx-mode inputs
};

// Exact LP decision of {exists b in R^{s+1}: b_s = 1, b*A_s >= 0}.
// Throws if f is not monic.  Does not check positivity.
FeasibilityOutcome feasible_at_degree(const Polynomial& f, int s);

// Minimal s with feasible_at_degree(f, s), by ascending scan from 0.
// Throws if f is not monic, not positive, or the scan exceeds `cap`.
OptResult opt(const Polynomial& f, int cap);

// True iff ConvexHull(rows of T_s) meets the nonnegative orthant, i.e. a
// nonzero multiplier of degree <= s exists.  Independent LP formulation used
// as a cross-check oracle for feasible_at_degree.
bool hull_separation_test(const Polynomial& f, int s);

// Diagnostic: Euclidean distance between CH(rows of T_s) and the nonnegative
// orthant within additive `tol`, by alternating projection in double
// precision.  Not on the exact decision path.
double separation_distance(const Polynomial& f, int s, double tol);

// Re-verifies a claimed multiplier by independent convolution arithmetic.
bool verify_multiplier(const Polynomial& f, const Polynomial& g);

// Re-verifies a Farkas certificate against A_s by the refutation identity.
bool verify_farkas(const Polynomial& f, int s, const Vector& y);

}  // namespace curtiss
