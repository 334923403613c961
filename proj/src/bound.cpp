#include "curtiss/bound.hpp"

#include <stdexcept>

#include "curtiss/positivity.hpp"

namespace curtiss {

namespace {

// Chebyshev polynomial T_m, integer coefficients via the three-term recurrence.
Polynomial chebyshev_T(int m) {
    Polynomial t0 = Polynomial::one();
    Polynomial t1({Rat(0), Rat(1)});
    if (m == 0) return t0;
    const Polynomial two_x({Rat(0), Rat(2)});
    for (int k = 2; k <= m; ++k) {
        Polynomial t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

// Decides t < cos(pi/m) for t in (1/2, 1) and m >= 4.  cos(pi/m) is the
// largest root of T_m + 1, so the comparison reduces to whether T_m + 1 has a
// root in (t, 1].  Niven's theorem rules out equality.
bool less_than_cos_pi_over(const Rat& t, int m) {
    const Polynomial p = chebyshev_T(m) + Polynomial::one();
    return root_count_interval(p, t, Rat(1)) >= 1;
}

}  // namespace

int ceil_pi_over_theta(long num, long den) {
    if (den <= 0 || num <= 0 || num > den)
        throw std::invalid_argument("angle must be (num/den)*pi with 0 < num/den <= 1");
    // ceil(pi / ((num/den) pi)) = ceil(den/num)
    return static_cast<int>((den + num - 1) / num);
}

int ceil_pi_over_theta(const Rat& cosine_t) {
    if (cosine_t <= -1 || cosine_t >= 1)
        throw std::invalid_argument("cosine must lie in (-1, 1)");
    if (cosine_t <= 0) return 2;             // theta in [pi/2, pi)
    if (cosine_t <= Rat(1, 2)) return 3;     // theta in [pi/3, pi/2)
    for (int m = 4;; ++m)
        if (less_than_cos_pi_over(cosine_t, m)) return m;
}

BoundResult curtiss_bound_terms(const FactorSpec& spec) {
    spec.validate();
    BoundResult result;
    for (std::size_t i = 0; i < spec.quad_factors.size(); ++i) {
        const int m = ceil_pi_over_theta(spec.quad_factors[i].cosine_t);
        result.terms.push_back({i, false, m, m - 2});
        result.total += m - 2;
    }
    for (std::size_t i = 0; i < spec.angle_factors.size(); ++i) {
        const auto& a = spec.angle_factors[i];
        if (a.angle_num == a.angle_den) continue;  // angle pi: real root, excluded
        const int m = ceil_pi_over_theta(a.angle_num, a.angle_den);
        result.terms.push_back({i, true, m, m - 2});
        result.total += m - 2;
    }
    return result;
}

int curtiss_bound(const FactorSpec& spec) {
    return curtiss_bound_terms(spec).total;
}

}  // namespace curtiss
