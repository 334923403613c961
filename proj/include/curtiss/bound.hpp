#pragma once

#include <vector>

#include "curtiss/factor_spec.hpp"

namespace curtiss {

struct AngleTerm {
    std::size_t source_index = 0;  // index into the spec's factor lists
    bool from_angle_factor = false;
    int ceil_value = 0;     // m = ceil(pi / theta)
    int contribution = 0;   // m - 2, always >= 0 for theta in (0, pi)
};

// ceil(pi / theta) for theta = (num/den)*pi, by integer arithmetic.
int ceil_pi_over_theta(long num, long den);

// ceil(pi / theta) for theta = arccos(t), t in (-1, 1).  Exact: for t in
// (1/2, 1) the comparison t < cos(pi/m) is decided by counting roots of the
// Chebyshev polynomial T_m + 1 in (t, 1]; by Niven's theorem a rational t
// outside {0, +-1/2} never equals cos(pi/m), so the count is decisive.
int ceil_pi_over_theta(const Rat& cosine_t);

struct BoundResult {
    std::vector<AngleTerm> terms;
    int total = 0;
};

// b(f) = sum over quadratic factors with theta != pi of (ceil(pi/theta) - 2).
// Linear factors and symbolic angle pi contribute nothing.
BoundResult curtiss_bound_terms(const FactorSpec& spec);
int curtiss_bound(const FactorSpec& spec);

}  // namespace curtiss
