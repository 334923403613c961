#include "curtiss/simplex.hpp"

#include <stdexcept>

namespace curtiss {

// Phase-I simplex on E x = d, x >= 0.  Rows are sign-flipped so the right
// hand side is nonnegative, one artificial per row, minimize their sum.
// Bland's rule throughout.  On infeasibility the Farkas vector is read off
// the artificial reduced costs (y_i = 1 - redcost of artificial i) and
// unflipped.
PhaseIResult phase1_feasible(const Matrix& E, const Vector& d) {
    const int m = static_cast<int>(E.size());
    const int n = m > 0 ? static_cast<int>(E[0].size()) : 0;
    if (static_cast<int>(d.size()) != m) throw std::invalid_argument("rhs size mismatch");

    // tableau: m rows x (n structurals + m artificials), plus rhs column
    Matrix T(m, Vector(n + m, Rat(0)));
    Vector rhs(m);
    std::vector<int> flipped(m, 0);
    for (int i = 0; i < m; ++i) {
        const bool flip = d[i] < 0;
        flipped[i] = flip ? -1 : 1;
        for (int j = 0; j < n; ++j) T[i][j] = flip ? -E[i][j] : E[i][j];
        T[i][n + i] = Rat(1);
        rhs[i] = flip ? -d[i] : d[i];
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // reduced cost row for min sum of artificials: z_j = c_j - sum_i T[i][j]
    Vector cost(n + m, Rat(0));
    for (int j = 0; j < n + m; ++j) {
        Rat colsum(0);
        for (int i = 0; i < m; ++i) colsum += T[i][j];
        cost[j] = (j >= n ? Rat(1) : Rat(0)) - colsum;
    }

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (cost[j] < 0) { enter = j; break; }
        if (enter < 0) break;

        int leave = -1;
        Rat best_ratio(0);
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            const Rat ratio = rhs[i] / T[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-I objective unbounded below");  // cannot happen

        // pivot (leave, enter)
        const Rat pivot = T[leave][enter];
        for (int j = 0; j < n + m; ++j) T[leave][j] /= pivot;
        rhs[leave] /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rat factor = T[i][enter];
            for (int j = 0; j < n + m; ++j) T[i][j] -= factor * T[leave][j];
            rhs[i] -= factor * rhs[leave];
        }
        if (cost[enter] != 0) {
            const Rat factor = cost[enter];
            for (int j = 0; j < n + m; ++j) cost[j] -= factor * T[leave][j];
        }
        basis[leave] = enter;
    }

    // optimal value: remaining artificial mass in the basis
    Rat objective(0);
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n) objective += rhs[i];

    PhaseIResult result;
    if (objective == 0) {
        result.feasible = true;
        result.x.assign(n, Rat(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) result.x[basis[i]] = rhs[i];
    } else {
        result.feasible = false;
        result.y.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            const Rat yi = Rat(1) - cost[n + i];
            result.y[i] = flipped[i] < 0 ? -yi : yi;
        }
    }
    return result;
}

}  // namespace curtiss
