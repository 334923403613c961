#include "curtiss/positivity.hpp"

#include <stdexcept>

namespace curtiss {

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
    std::vector<Polynomial> seq;
    seq.push_back(f);
    Polynomial d = f.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        Polynomial r = remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sign_variations_at(const std::vector<Polynomial>& seq, const Rat& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : seq) {
        const int s = sign(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

Rat cauchy_root_bound(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    Rat m(0);
    const Rat lead = abs(f.leading());
    for (int i = 0; i < f.degree(); ++i) {
        Rat v = abs(f.coeff(i)) / lead;
        if (v > m) m = v;
    }
    return m + 1;
}

int root_count_interval(const Polynomial& f, const Rat& lo, const Rat& hi) {
    if (lo >= hi) return 0;
    const Polynomial g = squarefree_part(f);
    if (g.degree() <= 0) return 0;
    const auto seq = sturm_sequence(g);
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

int root_count_nonneg(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    const Polynomial g = squarefree_part(f);
    if (g.degree() <= 0) return 0;
    const Rat bound = cauchy_root_bound(g);
    int count = root_count_interval(g, Rat(0), bound);
    if (g.eval(Rat(0)) == 0) ++count;  // Sturm counts (0, B], add the endpoint
    return count;
}

namespace {

// Shrinks [lo, hi] (containing >= 1 root of squarefree g) to an interval
// holding exactly one root, then a few more halvings for a tight witness.
std::pair<Rat, Rat> isolate_root(const Polynomial& g, Rat lo, Rat hi) {
    const auto seq = sturm_sequence(g);
    auto count = [&](const Rat& a, const Rat& b) {
        return sign_variations_at(seq, a) - sign_variations_at(seq, b);
    };
    int extra = 0;
    while (extra < 8) {
        const Rat mid = (lo + hi) / 2;
        if (g.eval(mid) == 0) return {mid, mid};
        if (count(lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        if (count(lo, hi) == 1) ++extra;
    }
    return {lo, hi};
}

}  // namespace

PositivityVerdict is_positive(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("positivity of zero polynomial");
    const Rat f0 = f.eval(Rat(0));
    if (f0 == 0) return {false, std::make_pair(Rat(0), Rat(0))};
    const Polynomial g = squarefree_part(f);
    if (g.degree() <= 0) {
        if (f0 > 0) return {true, std::nullopt};
        return {false, std::make_pair(Rat(0), Rat(0))};
    }
    const Rat bound = cauchy_root_bound(g);
    const auto seq = sturm_sequence(g);
    const int roots = sign_variations_at(seq, Rat(0)) - sign_variations_at(seq, bound);
    if (roots == 0 && f0 > 0) return {true, std::nullopt};
    if (roots == 0) {
        // f(0) < 0 with no nonnegative root: f stays negative on [0, B].
        return {false, std::make_pair(Rat(0), bound)};
    }
    return {false, isolate_root(g, Rat(0), bound)};
}

}  // namespace curtiss
