#include "doctest.h"

#include "curtiss/multiplier.hpp"
#include "curtiss/positivity.hpp"
#include "helpers.hpp"

using namespace curtiss;

namespace {

Polynomial poly(std::vector<long> coeffs) {
    std::vector<Rat> v(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(v));
}

const Polynomial f3 = poly({10, -2, 10, -1, 1});

// coarse grid search over monic b; admits false negatives only
bool grid_feasible(const Polynomial& f, int s) {
    const int lo = -6, hi = 6, den = 2;
    std::vector<int> idx(s, lo * den);
    while (true) {
        Vector b(s + 1, Rat(0));
        for (int i = 0; i < s; ++i) b[i] = Rat(idx[i], den);
        b[s] = Rat(1);
        Polynomial g{std::vector<Rat>(b)};
        if (verify_multiplier(f, g)) return true;
        int carry = 0;
        while (carry < s && ++idx[carry] > hi * den) idx[carry++] = lo * den;
        if (carry == s) return false;
    }
}

}  // namespace

TEST_CASE("f3 has no degree-0 multiplier but x+1 works at degree 1") {
    const auto at0 = feasible_at_degree(f3, 0);
    CHECK_FALSE(at0.feasible);
    REQUIRE(at0.farkas_y.has_value());
    CHECK(verify_farkas(f3, 0, *at0.farkas_y));

    const auto at1 = feasible_at_degree(f3, 1);
    CHECK(at1.feasible);
    REQUIRE(at1.multiplier_g.has_value());
    CHECK(at1.multiplier_g->degree() == 1);
    CHECK(at1.multiplier_g->is_monic());
    CHECK(verify_multiplier(f3, *at1.multiplier_g));
    // the named witnesses from the worked example both verify
    CHECK(verify_multiplier(f3, poly({1, 1})));
    CHECK(verify_multiplier(f3, poly({1, 1, 1})));
}

TEST_CASE("nonnegative-coefficient polynomials are feasible at s = 0") {
    const Polynomial f1 = poly({10, 2, 10, 1, 1});
    const auto at0 = feasible_at_degree(f1, 0);
    CHECK(at0.feasible);
    CHECK(*at0.multiplier_g == Polynomial::one());
}

TEST_CASE("opt: f3 gives 1, f1 gives 0, non-positive input refused") {
    CHECK(opt(f3, 4).opt == 1);
    CHECK(opt(poly({10, 2, 10, 1, 1}), 4).opt == 0);
    CHECK_THROWS(opt(poly({10, -2, -10, -1, 1}), 4));  // f2 not positive
    CHECK_THROWS(feasible_at_degree(poly({1, 2}), 1));  // not monic
}

TEST_CASE("opt records per-degree certificates") {
    const auto result = opt(f3, 4);
    REQUIRE(result.per_degree.size() == 2);
    CHECK_FALSE(result.per_degree[0].feasible);
    CHECK(result.per_degree[0].farkas_y.has_value());
    CHECK(result.per_degree[1].feasible);
}

TEST_CASE("hull separation test matches the worked cases") {
    CHECK_FALSE(hull_separation_test(f3, 0));
    CHECK(hull_separation_test(f3, 1));
    CHECK(hull_separation_test(poly({10, 2, 10, 1, 1}), 0));
    CHECK(hull_separation_test(poly({1, 0, 1}), 0));
}

TEST_CASE("separation distance: zero when the hull meets the orthant") {
    CHECK(separation_distance(poly({1, 0, 1}), 0, 1e-9) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(separation_distance(f3, 0, 1e-9) > 1e-4);
    CHECK_THROWS(separation_distance(f3, 0, 0.0));
}

TEST_CASE("property: LP feasibility at <= s agrees with hull test") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = curtiss::testing::random_positive_polynomial(rng, 3, 1);
        for (int s = 0; s <= 3; ++s) {
            bool lp_any = false;
            for (int t = 0; t <= s && !lp_any; ++t)
                lp_any = feasible_at_degree(f, t).feasible;
            CHECK(lp_any == hull_separation_test(f, s));
        }
    }
}

TEST_CASE("property: feasibility is upward closed with witness x*g") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial f = curtiss::testing::random_positive_polynomial(rng, 2, 1);
        for (int s = 0; s <= 2; ++s) {
            const auto at_s = feasible_at_degree(f, s);
            if (!at_s.feasible) continue;
            const Polynomial lifted = multiply(poly({0, 1}), *at_s.multiplier_g);
            CHECK(verify_multiplier(f, lifted));
            CHECK(feasible_at_degree(f, s + 1).feasible);
        }
    }
}

TEST_CASE("property: grid-feasible implies LP-feasible (degree <= 4, s <= 2)") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 12; ++trial) {
        const Polynomial f = curtiss::testing::random_positive_polynomial(rng, 2, 0);
        for (int s = 0; s <= 2; ++s) {
            const bool lp = feasible_at_degree(f, s).feasible;
            if (grid_feasible(f, s)) CHECK(lp);
        }
    }
}
