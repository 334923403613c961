#include "curtiss/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "curtiss/positivity.hpp"
#include "curtiss/simplex.hpp"

namespace curtiss {

FeasibilityOutcome feasible_at_degree(const Polynomial& f, int s) {
    if (!f.is_monic()) throw std::invalid_argument("feasible_at_degree requires monic f");
    const ConvolutionSystem sys(f, s);
    const int n = sys.n();
    const int rows = s + n + 1;  // one constraint per product coefficient

    // b_0..b_{s-1} free (b_s = 1 fixed): b_i = u_i - v_i, slack w_k per
    // constraint sum_i b_i A[i][k] >= -A[s][k].
    const int nvars = 2 * s + rows;
    Matrix E(rows, Vector(nvars, Rat(0)));
    Vector d(rows);
    for (int k = 0; k < rows; ++k) {
        for (int i = 0; i < s; ++i) {
            E[k][i] = sys.A()[i][k];
            E[k][s + i] = -sys.A()[i][k];
        }
        E[k][2 * s + k] = Rat(-1);
        d[k] = -sys.A()[s][k];
    }

    const PhaseIResult lp = phase1_feasible(E, d);
    FeasibilityOutcome outcome;
    outcome.s = s;
    outcome.feasible = lp.feasible;
    if (lp.feasible) {
        Vector b(s + 1, Rat(0));
        for (int i = 0; i < s; ++i) b[i] = lp.x[i] - lp.x[s + i];
        b[s] = Rat(1);
        Polynomial g{std::vector<Rat>(b)};
        if (!verify_multiplier(f, g))
            throw std::logic_error("simplex returned an invalid multiplier");
        outcome.multiplier_g = std::move(g);
    } else {
        if (!verify_farkas(f, s, lp.y))
            throw std::logic_error("simplex returned an invalid Farkas certificate");
        outcome.farkas_y = lp.y;
    }
    return outcome;
}

OptResult opt(const Polynomial& f, int cap) {
    if (!f.is_monic()) throw std::invalid_argument("opt requires monic f");
    const auto verdict = is_positive(f);
    if (!verdict.positive)
        throw std::invalid_argument("opt requires a positive polynomial (no multiplier exists otherwise)");
    OptResult result;
    for (int s = 0; s <= cap; ++s) {
        FeasibilityOutcome outcome = feasible_at_degree(f, s);
        const bool found = outcome.feasible;
        result.per_degree.push_back(std::move(outcome));
        if (found) {
            result.opt = s;
            return result;
        }
    }
    throw std::runtime_error("exceeded cap: no multiplier up to degree " + std::to_string(cap));
}

bool hull_separation_test(const Polynomial& f, int s) {
    const ConvolutionSystem sys(f, s);
    const int n = sys.n();
    // c >= 0, sum c = 1, c * T_s >= 0  (slack per orthant coordinate)
    const int nvars = (s + 1) + n;
    Matrix E(n + 1, Vector(nvars, Rat(0)));
    Vector d(n + 1, Rat(0));
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i <= s; ++i) E[k][i] = sys.T()[i][k];
        E[k][s + 1 + k] = Rat(-1);
    }
    for (int i = 0; i <= s; ++i) E[n][i] = Rat(1);
    d[n] = Rat(1);
    return phase1_feasible(E, d).feasible;
}

namespace {

// min over simplex weights c of ||P^T c - y||^2, by Frank-Wolfe with exact
// line search.  P: rows x dim.  Returns the projected point.
std::vector<double> project_onto_hull(const std::vector<std::vector<double>>& P,
                                      const std::vector<double>& y, int iters) {
    const int rows = static_cast<int>(P.size());
    const int dim = static_cast<int>(y.size());
    std::vector<double> c(rows, 1.0 / rows);
    std::vector<double> x(dim, 0.0);
    auto recompute = [&]() {
        std::fill(x.begin(), x.end(), 0.0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < dim; ++j) x[j] += c[i] * P[i][j];
    };
    recompute();
    for (int it = 0; it < iters; ++it) {
        // gradient of the objective wrt c is 2 P (x - y)
        int best = 0;
        double best_val = 0;
        for (int i = 0; i < rows; ++i) {
            double v = 0;
            for (int j = 0; j < dim; ++j) v += P[i][j] * (x[j] - y[j]);
            if (i == 0 || v < best_val) { best = i; best_val = v; }
        }
        // step toward vertex `best`: x(t) = x + t (P[best] - x)
        double num = 0, den = 0;
        for (int j = 0; j < dim; ++j) {
            const double dir = P[best][j] - x[j];
            num += (y[j] - x[j]) * dir;
            den += dir * dir;
        }
        if (den == 0) break;
        double t = num / den;
        if (t <= 0) break;
        if (t > 1) t = 1;
        for (int i = 0; i < rows; ++i) c[i] *= (1 - t);
        c[best] += t;
        recompute();
    }
    return x;
}

}  // namespace

double separation_distance(const Polynomial& f, int s, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const ConvolutionSystem sys(f, s);
    const int n = sys.n();
    std::vector<std::vector<double>> P(s + 1, std::vector<double>(n));
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j < n; ++j) P[i][j] = sys.T()[i][j].convert_to<double>();

    std::vector<double> x(n, 0.0);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j < n; ++j) x[j] += P[i][j] / (s + 1);
    double prev = -1;
    for (int round = 0; round < 500; ++round) {
        std::vector<double> y(n);
        for (int j = 0; j < n; ++j) y[j] = x[j] > 0 ? x[j] : 0.0;
        x = project_onto_hull(P, y, 200);
        double dist = 0;
        for (int j = 0; j < n; ++j) {
            const double yj = x[j] > 0 ? x[j] : 0.0;
            dist += (x[j] - yj) * (x[j] - yj);
        }
        dist = std::sqrt(dist);
        if (prev >= 0 && std::abs(prev - dist) < tol / 4) return dist;
        prev = dist;
    }
    return prev;
}

bool verify_multiplier(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero() || !g.is_monic()) return false;
    const Polynomial product = multiply(g, f);
    for (const auto& c : product.coeffs())
        if (c < 0) return false;
    return true;
}

bool verify_farkas(const Polynomial& f, int s, const Vector& y) {
    const ConvolutionSystem sys(f, s);
    const int rows = s + sys.n() + 1;
    if (static_cast<int>(y.size()) != rows) return false;
    for (const auto& v : y)
        if (v < 0) return false;
    for (int i = 0; i < s; ++i) {
        Rat acc(0);
        for (int k = 0; k < rows; ++k) acc += sys.A()[i][k] * y[k];
        if (acc != 0) return false;
    }
    Rat monic_row(0);
    for (int k = 0; k < rows; ++k) monic_row += sys.A()[s][k] * y[k];
    return monic_row < 0;
}

}  // namespace curtiss
