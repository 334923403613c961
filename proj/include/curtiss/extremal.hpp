#pragma once

#include <array>
#include <optional>

#include "curtiss/bound.hpp"
#include "curtiss/factor_spec.hpp"
#include "curtiss/multiplier.hpp"

namespace curtiss {

/// All-quadrant-1 instance: cosines 1 > t_1 >= ... >= t_l > 0 (angles
/// ascending) with radii, and s the Curtiss bound of the quadratic factors.
struct Quadrant1Instance {
    std::vector<Rat> cosines;  // descending, all in (0, 1)
    std::vector<Rat> radii;    // positive
    int s = 0;

    int ell() const { return static_cast<int>(cosines.size()); }
    FactorSpec to_spec() const;
    // Constructs with s computed from the cosines; sorts factors by
    // descending cosine.  Throws on values outside (0, 1) or radii <= 0.
    static Quadrant1Instance make(std::vector<Rat> cosines, std::vector<Rat> radii);
};

/// Geometry of the lines c_{s-2} = 0 and c_{2l+s-5} = 0 in the
/// (b_{s-2}, b_{s-3}) plane.
struct CertificateGeometry {
    Rat d0, d1;
    Rat mu_low;   // slope of c_{s-2} = 0,   -a_0/a_1
    Rat mu_high;  // slope of c_{2l+s-5} = 0, -a_{2l-3}/a_{2l-2}
    Rat p, q;     // intersection point
};

// Partial witness radii r_1 = 2 t_1, r_i = 1/(2 t_i) for 2 <= i <= l-1;
// the l-th radius is left free.  Requires l >= 3.
std::vector<Rat> witness_radii(const std::vector<Rat>& cosines);

// C(r) = 1 / ((sum 2 r_i t_i)(sum 2 t_i / r_i)) over i = 1..l-1.
// For l = 2 this reduces to 1/(4 t_1^2) once r_1 cancels.
Rat evaluate_C(const std::vector<Rat>& cosines, const std::vector<Rat>& radii);

// The three product coefficients at indices {s-2, 2l+s-5, 2l+s-2} for a monic
// multiplier b of degree s-1, computed from the closed forms and checked
// against full convolution.  b holds b_0..b_{s-2}; out-of-range indices are 0.
std::array<Rat, 3> coefficient_expressions(const Quadrant1Instance& inst,
                                           const std::vector<Rat>& b);

// Slopes, right-hand sides and the intersection (p, q) for fixed
// b_0..b_{s-4}.  Throws when the lines are parallel (raise r_l).
CertificateGeometry certificate_geometry(const Quadrant1Instance& inst,
                                         const std::vector<Rat>& fixed_b);

struct LadderDiagnostics {
    Rat radius;
    bool slope_ordering = false;         // mu_high > mu_low (Claim 2)
    std::optional<bool> intersection_ok; // p < -a_{2l-1} (Claim 4), s >= 3 only
    int opt_found = -1;
};

struct ExtremalResult {
    Quadrant1Instance instance;  // with the found last radius filled in
    int s = 0;
    std::vector<LadderDiagnostics> trail;
    OptResult verification;      // opt of the full instance, == s
};

// Fixes r_1..r_{l-1} (witness radii for l >= 3, r_1 = 1 for l = 2), then
// walks the geometric ladder start*growth^k in r_l until the exact LP search
// confirms opt = s = Curtiss bound.  If max_iter such rungs fail (the fixed
// prefix is not always sufficient), falls back to max_iter rungs of
// geometrically spread radii r_i = m^i with m = growth^k.  Throws when both
// ladders are exhausted.
ExtremalResult find_extremal_radius(const std::vector<Rat>& cosines,
                                    const Rat& start = Rat(1),
                                    const Rat& growth = Rat(10),
                                    int max_iter = 12);

struct ExtensionResult {
    Rat radius;
    Polynomial product;
    OptResult verification;  // opt(f * h) == opt(f)
    std::vector<std::pair<Rat, double>> epsilon_trail;  // (radius, eps_h) diagnostics
};

// Finds r > 0 with opt(f * h_{phi,r}) = opt(f) for a quadrant-2 factor:
// h = x + r when phi = pi (cos_phi unset), else x^2 - 2 r cos(phi) x + r^2
// with cos(phi) <= 0.  Verified exactly by the LP search.  The ladder is
// two-sided (start, start*growth^±k): small radii are the direction the
// continuity argument guarantees, large radii match the worked examples.
// For some f no radius preserves opt; then the search throws and the caller
// should retry with more separated quadrant-1 radii in f.
ExtensionResult extend_quadrant2(const Polynomial& f, int opt_f,
                                 std::optional<Rat> cos_phi,
                                 const Rat& start = Rat(1),
                                 const Rat& growth = Rat(10),
                                 int max_iter = 12);

}  // namespace curtiss
