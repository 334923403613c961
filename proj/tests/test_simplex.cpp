#include "doctest.h"

#include <random>

#include "curtiss/simplex.hpp"

using namespace curtiss;

namespace {

void check_result(const Matrix& E, const Vector& d, const PhaseIResult& r) {
    const int m = static_cast<int>(E.size());
    const int n = m ? static_cast<int>(E[0].size()) : 0;
    if (r.feasible) {
        REQUIRE(static_cast<int>(r.x.size()) == n);
        for (const auto& v : r.x) CHECK(v >= 0);
        for (int i = 0; i < m; ++i) {
            Rat acc(0);
            for (int j = 0; j < n; ++j) acc += E[i][j] * r.x[j];
            CHECK(acc == d[i]);
        }
    } else {
        REQUIRE(static_cast<int>(r.y.size()) == m);
        // y^T E <= 0 componentwise and y^T d > 0 refute feasibility
        for (int j = 0; j < n; ++j) {
            Rat acc(0);
            for (int i = 0; i < m; ++i) acc += r.y[i] * E[i][j];
            CHECK(acc <= 0);
        }
        Rat yd(0);
        for (int i = 0; i < m; ++i) yd += r.y[i] * d[i];
        CHECK(yd > 0);
    }
}

}  // namespace

TEST_CASE("feasible square system") {
    const Matrix E = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    const Vector d = {Rat(3), Rat(1)};
    const auto r = phase1_feasible(E, d);
    CHECK(r.feasible);
    check_result(E, d, r);
}

TEST_CASE("infeasible: x >= 0 cannot sum to a negative value") {
    const Matrix E = {{Rat(1), Rat(1)}};
    const Vector d = {Rat(-1)};
    const auto r = phase1_feasible(E, d);
    CHECK_FALSE(r.feasible);
    check_result(E, d, r);
}

TEST_CASE("infeasible pair of contradictory equations") {
    const Matrix E = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    const Vector d = {Rat(1), Rat(2)};
    const auto r = phase1_feasible(E, d);
    CHECK_FALSE(r.feasible);
    check_result(E, d, r);
}

TEST_CASE("degenerate rhs handled") {
    const Matrix E = {{Rat(1), Rat(-1)}};
    const Vector d = {Rat(0)};
    const auto r = phase1_feasible(E, d);
    CHECK(r.feasible);
    check_result(E, d, r);
}

TEST_CASE("property: random systems always yield a valid certificate") {
    std::mt19937 rng(987);
    std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
    for (int trial = 0; trial < 120; ++trial) {
        const int m = dim(rng), n = dim(rng);
        Matrix E(m, Vector(n));
        Vector d(m);
        for (auto& row : E)
            for (auto& v : row) v = Rat(entry(rng));
        for (auto& v : d) v = Rat(entry(rng));
        const auto r = phase1_feasible(E, d);
        check_result(E, d, r);
    }
}
