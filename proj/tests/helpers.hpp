#pragma once

#include <random>

#include "curtiss/factor_spec.hpp"
#include "curtiss/polynomial.hpp"

namespace curtiss::testing {

inline Rat random_rational(std::mt19937& rng, int num_lo, int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rat(num(rng), den(rng));
}

// t in (0, 1) with denominator <= den_hi
inline Rat random_open01(std::mt19937& rng, int den_hi) {
    std::uniform_int_distribution<int> den(2, den_hi);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(1, d - 1);
    return Rat(num(rng), d);
}

inline Rat random_positive(std::mt19937& rng, int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(1, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rat(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937& rng, int max_degree, int coeff_range) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rat> coeffs(d + 1);
    std::uniform_int_distribution<int> num(-coeff_range, coeff_range);
    std::uniform_int_distribution<int> den(1, 4);
    for (auto& c : coeffs) c = Rat(num(rng), den(rng));
    if (coeffs.back() == 0) coeffs.back() = Rat(1);
    return Polynomial(std::move(coeffs));
}

// quadrant-1 spec: all cosines in (0, 1), random radii
inline FactorSpec random_quadrant1_spec(std::mt19937& rng, int ell, int den_hi = 12) {
    FactorSpec spec;
    for (int i = 0; i < ell; ++i)
        spec.quad_factors.push_back({random_open01(rng, den_hi), random_positive(rng, 6, 4)});
    return spec;
}

// positive-by-construction monic polynomial from random factors
inline Polynomial random_positive_polynomial(std::mt19937& rng, int max_quads, int max_linears) {
    std::uniform_int_distribution<int> nq(0, max_quads), nl(0, max_linears);
    FactorSpec spec;
    int q = nq(rng), l = nl(rng);
    if (q == 0 && l == 0) q = 1;
    for (int i = 0; i < q; ++i) {
        std::uniform_int_distribution<int> num(-5, 5);
        Rat t(num(rng), 6);  // in (-1, 1)
        spec.quad_factors.push_back({t, random_positive(rng, 5, 3)});
    }
    for (int i = 0; i < l; ++i) spec.linear_factors.push_back({random_positive(rng, 8, 3)});
    return expand(spec, PrecisionMode::exact());
}

}  // namespace curtiss::testing
