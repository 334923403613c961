#include "doctest.h"

#include "curtiss/convolution.hpp"
#include "curtiss/factor_spec.hpp"
#include "curtiss/polynomial.hpp"
#include "helpers.hpp"

using namespace curtiss;
using curtiss::testing::random_polynomial;
using curtiss::testing::random_quadrant1_spec;

namespace {
Polynomial poly(std::vector<long> coeffs) {
    std::vector<Rat> v(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(v));
}
}  // namespace

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("7/24") == Rat(7, 24));
    CHECK(parse_rational("-3/6") == Rat(-1, 2));
    CHECK(parse_rational("10000") == Rat(10000));
    CHECK(to_string(Rat(-1, 2)) == "-1/2");
    CHECK(to_string(Rat(5)) == "5");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("expand: exact quadratic and linear factors") {
    FactorSpec spec;
    spec.quad_factors.push_back({Rat(0), Rat(1)});
    CHECK(expand(spec, PrecisionMode::exact()) == poly({1, 0, 1}));  // x^2 + 1

    FactorSpec spec2;
    spec2.quad_factors.push_back({Rat(1, 2), Rat(1)});
    spec2.linear_factors.push_back({Rat(1)});
    CHECK(expand(spec2, PrecisionMode::exact()) == poly({1, 0, 0, 1}));  // x^3 + 1
}

TEST_CASE("expand: Niven angles convert exactly") {
    FactorSpec spec;
    spec.angle_factors.push_back({1, 2, Rat(1)});  // pi/2 -> t = 0
    spec.angle_factors.push_back({1, 3, Rat(1)});  // pi/3 -> t = 1/2
    spec.angle_factors.push_back({2, 3, Rat(1)});  // 2pi/3 -> t = -1/2
    spec.angle_factors.push_back({1, 1, Rat(3)});  // pi -> x + 3
    const Polynomial f = expand(spec, PrecisionMode::exact());
    const Polynomial expected =
        poly({1, 0, 1}) * poly({1, -1, 1}) * poly({1, 1, 1}) * poly({3, 1});
    CHECK(f == expected);
}

TEST_CASE("expand: symbolic 7pi/24 needs approx mode") {
    FactorSpec spec;
    spec.angle_factors.push_back({7, 24, Rat(1)});
    CHECK_THROWS_WITH(expand(spec, PrecisionMode::exact()),
                      doctest::Contains("approx mode"));
    const Polynomial f = expand(spec, PrecisionMode::approx(50));
    CHECK(f.degree() == 2);
    CHECK(f.is_monic());
    // -2cos(7pi/24) is about -1.2175
    CHECK(f.coeff(1) < Rat(-12, 10));
    CHECK(f.coeff(1) > Rat(-122, 100));
}

TEST_CASE("expand: degree-9 instance with mixed-sign coefficients") {
    FactorSpec spec;
    for (long num : {7, 10, 11, 14}) spec.angle_factors.push_back({num, 24, Rat(1)});
    spec.linear_factors.push_back({Rat(1)});
    const Polynomial f = expand(spec, PrecisionMode::approx(50));
    CHECK(f.degree() == 9);
    CHECK(f.is_monic());
    bool has_negative = false;
    for (const auto& c : f.coeffs()) has_negative |= (c < 0);
    CHECK(has_negative);
}

TEST_CASE("multiply: worked products") {
    const Polynomial f3 = poly({10, -2, 10, -1, 1});
    // (x+1)*f3; the display of this product elsewhere carries an exponent
    // typo (9x^73), the arithmetic truth is 9x^3
    CHECK(multiply(poly({1, 1}), f3) == poly({10, 8, 8, 9, 0, 1}));
    CHECK(multiply(poly({1, 1, 1}), f3) == poly({10, 8, 18, 7, 10, 0, 1}));
    CHECK(multiply(Polynomial::one(), f3) == f3);
    CHECK(multiply(Polynomial::zero(), f3).is_zero());
}

TEST_CASE("convolution system: A_s layout and b*A_s") {
    const Polynomial f = poly({1, 0, 1});  // x^2 + 1
    const ConvolutionSystem sys = build_convolution(f, 1);
    REQUIRE(sys.A().size() == 2);
    CHECK(sys.A()[0] == Vector{Rat(1), Rat(0), Rat(1), Rat(0)});
    CHECK(sys.A()[1] == Vector{Rat(0), Rat(1), Rat(0), Rat(1)});
    CHECK(sys.apply({Rat(1), Rat(1)}) == Vector{Rat(1), Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("convolution system: s = 0 recovers f, monic R diagonal") {
    const Polynomial f = poly({10, -2, 10, -1, 1});
    const ConvolutionSystem sys = build_convolution(f, 0);
    CHECK(sys.apply({Rat(1)}) == f.coeffs());
    const ConvolutionSystem sys3 = build_convolution(f, 3);
    for (int i = 0; i <= 3; ++i) CHECK(sys3.R()[i][i] == 1);
}

TEST_CASE("property: coeffs(g*f) equals b*A_s for random f, g") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial f = random_polynomial(rng, 6, 8);
        if (f.is_zero() || f.degree() == 0) continue;
        f = f * (Rat(1) / f.leading());  // monic for the system
        const Polynomial g = random_polynomial(rng, 4, 8);
        if (g.is_zero()) continue;
        const int s = g.degree();
        const ConvolutionSystem sys = build_convolution(f, s);
        Vector b(s + 1, Rat(0));
        for (int i = 0; i <= s; ++i) b[i] = g.coeff(i);
        const Vector via_matrix = sys.apply(b);
        const Polynomial product = multiply(g, f);
        for (int k = 0; k < static_cast<int>(via_matrix.size()); ++k)
            CHECK(via_matrix[k] == product.coeff(k));
    }
}

TEST_CASE("property: [L|R] re-concatenates to A and R*T = L exactly") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_polynomial(rng, 5, 6);
        if (f.is_zero() || f.degree() == 0) continue;
        f = f * (Rat(1) / f.leading());
        const int s = trial % 4;
        const ConvolutionSystem sys = build_convolution(f, s);
        const int n = sys.n();
        for (int i = 0; i <= s; ++i) {
            for (int j = 0; j < n; ++j) CHECK(sys.L()[i][j] == sys.A()[i][j]);
            for (int j = 0; j <= s; ++j) CHECK(sys.R()[i][j] == sys.A()[i][n + j]);
        }
        for (int i = 0; i <= s; ++i)
            for (int j = 0; j < n; ++j) {
                Rat acc(0);
                for (int k = 0; k <= s; ++k) acc += sys.R()[i][k] * sys.T()[k][j];
                CHECK(acc == sys.L()[i][j]);
            }
    }
}

TEST_CASE("property: expand is multiplicative over spec union") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const FactorSpec a = random_quadrant1_spec(rng, 1 + trial % 3);
        const FactorSpec b = random_quadrant1_spec(rng, 1 + (trial / 3) % 2);
        FactorSpec both = a;
        both.quad_factors.insert(both.quad_factors.end(), b.quad_factors.begin(),
                                 b.quad_factors.end());
        CHECK(expand(both, PrecisionMode::exact()) ==
              multiply(expand(a, PrecisionMode::exact()), expand(b, PrecisionMode::exact())));
    }
}

TEST_CASE("elementary symmetric: base cases and sign flip") {
    FactorSpec empty;
    CHECK(elementary_symmetric(empty) == std::vector<Rat>{Rat(1)});

    FactorSpec one;
    one.quad_factors.push_back({Rat(1, 2), Rat(1)});
    CHECK(elementary_symmetric(one) == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

    FactorSpec with_linear;
    with_linear.linear_factors.push_back({Rat(1)});
    CHECK_THROWS(elementary_symmetric(with_linear));
}

TEST_CASE("property: quadrant-1 specs have all e_k > 0") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 60; ++trial) {
        const FactorSpec spec = random_quadrant1_spec(rng, 1 + trial % 4);
        for (const auto& e : elementary_symmetric(spec)) CHECK(e > 0);
    }
}
