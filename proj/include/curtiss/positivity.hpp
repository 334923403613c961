#pragma once

#include <optional>
#include <utility>

#include "curtiss/polynomial.hpp"

namespace curtiss {

struct PositivityVerdict {
    bool positive = false;
    // When not positive: a rational interval [lo, hi] with lo >= 0 on which f
    // vanishes or changes sign.
    std::optional<std::pair<Rat, Rat>> witness_root_interval;
};

// Sturm sequence of f (f nonzero): p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<Polynomial> sturm_sequence(const Polynomial& f);

// Number of sign variations of the sequence evaluated at x.
int sign_variations_at(const std::vector<Polynomial>& seq, const Rat& x);

// Exact count of distinct real roots of f in (lo, hi], via Sturm on the
// squarefree part.
int root_count_interval(const Polynomial& f, const Rat& lo, const Rat& hi);

// Exact count of distinct real roots of f in [0, +inf).
int root_count_nonneg(const Polynomial& f);

// Cauchy bound: every real root of f lies in (-B, B).
Rat cauchy_root_bound(const Polynomial& f);

// Decides f(x) > 0 for all x >= 0.  Throws on the zero polynomial.
PositivityVerdict is_positive(const Polynomial& f);

}  // namespace curtiss
