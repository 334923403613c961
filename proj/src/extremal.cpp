#include "curtiss/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "curtiss/positivity.hpp"

namespace curtiss {

FactorSpec Quadrant1Instance::to_spec() const {
    FactorSpec spec;
    for (std::size_t i = 0; i < cosines.size(); ++i)
        spec.quad_factors.push_back({cosines[i], radii[i]});
    return spec;
}

Quadrant1Instance Quadrant1Instance::make(std::vector<Rat> cosines, std::vector<Rat> radii) {
    if (cosines.size() != radii.size())
        throw std::invalid_argument("cosine/radius count mismatch");
    if (cosines.empty()) throw std::invalid_argument("empty instance");
    for (const auto& t : cosines)
        if (t <= 0 || t >= 1) throw std::invalid_argument("quadrant-1 cosine must lie in (0, 1)");
    for (const auto& r : radii)
        if (r <= 0) throw std::invalid_argument("radius must be > 0");

    std::vector<std::size_t> order(cosines.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cosines[a] > cosines[b]; });
    Quadrant1Instance inst;
    for (auto idx : order) {
        inst.cosines.push_back(cosines[idx]);
        inst.radii.push_back(radii[idx]);
    }
    inst.s = curtiss_bound(inst.to_spec());
    return inst;
}

std::vector<Rat> witness_radii(const std::vector<Rat>& cosines) {
    const int ell = static_cast<int>(cosines.size());
    if (ell < 3) throw std::invalid_argument("witness radii need at least 3 factors");
    for (std::size_t i = 0; i + 1 < cosines.size(); ++i)
        if (cosines[i] < cosines[i + 1])
            throw std::invalid_argument("cosines must be sorted descending");
    for (const auto& t : cosines)
        if (t <= 0 || t >= 1) throw std::invalid_argument("cosines must lie in (0, 1)");
    std::vector<Rat> r;
    r.push_back(2 * cosines[0]);
    for (int i = 1; i < ell - 1; ++i) r.push_back(Rat(1) / (2 * cosines[i]));
    return r;
}

Rat evaluate_C(const std::vector<Rat>& cosines, const std::vector<Rat>& radii) {
    const int ell = static_cast<int>(cosines.size());
    if (ell < 2) throw std::invalid_argument("C(r) needs at least 2 factors");
    if (static_cast<int>(radii.size()) < ell - 1)
        throw std::invalid_argument("need radii r_1..r_{l-1}");
    Rat sum_rt(0), sum_t_over_r(0);
    for (int i = 0; i < ell - 1; ++i) {
        if (radii[i] <= 0) throw std::invalid_argument("radius must be > 0");
        sum_rt += 2 * radii[i] * cosines[i];
        sum_t_over_r += 2 * cosines[i] / radii[i];
    }
    return Rat(1) / (sum_rt * sum_t_over_r);
}

namespace {

// b_j of the monic degree s-1 multiplier; free holds b_0..b_{s-2} (short
// vectors are zero-padded), indices outside [0, s-1] read as zero.
Rat b_at(const std::vector<Rat>& free, int s, int j) {
    if (j == s - 1) return Rat(1);
    if (j < 0 || j >= s - 1) return Rat(0);
    if (j >= static_cast<int>(free.size())) return Rat(0);
    return free[j];
}

}  // namespace

std::array<Rat, 3> coefficient_expressions(const Quadrant1Instance& inst,
                                           const std::vector<Rat>& b) {
    const int s = inst.s;
    if (s < 2) throw std::invalid_argument("coefficient expressions need s >= 2");
    if (static_cast<int>(b.size()) > s - 1)
        throw std::invalid_argument("multiplier coefficient vector too long");
    const Polynomial f = expand(inst.to_spec(), PrecisionMode::exact());
    const int two_ell = f.degree();

    Rat c_low(0);
    for (int i = 0; i <= s - 2; ++i) c_low += f.coeff(i) * b_at(b, s, s - 2 - i);
    const Rat c_mid = f.coeff(two_ell - 4) + f.coeff(two_ell - 3) * b_at(b, s, s - 2) +
                      f.coeff(two_ell - 2) * b_at(b, s, s - 3) +
                      f.coeff(two_ell - 1) * b_at(b, s, s - 4) + b_at(b, s, s - 5);
    const Rat c_high = f.coeff(two_ell - 1) + b_at(b, s, s - 2);

    // cross-check against full convolution
    std::vector<Rat> gc(s, Rat(0));
    for (int j = 0; j < s; ++j) gc[j] = b_at(b, s, j);
    const Polynomial product = multiply(Polynomial(std::move(gc)), f);
    if (product.coeff(s - 2) != c_low || product.coeff(two_ell + s - 5) != c_mid ||
        product.coeff(two_ell + s - 2) != c_high)
        throw std::logic_error("closed-form coefficients disagree with convolution");

    return {c_low, c_mid, c_high};
}

CertificateGeometry certificate_geometry(const Quadrant1Instance& inst,
                                         const std::vector<Rat>& fixed_b) {
    const int s = inst.s;
    if (s < 3) throw std::invalid_argument("certificate geometry needs s >= 3");
    if (static_cast<int>(fixed_b.size()) > std::max(0, s - 3))
        throw std::invalid_argument("fixed_b holds b_0..b_{s-4}");
    const Polynomial f = expand(inst.to_spec(), PrecisionMode::exact());
    const int two_ell = f.degree();
    const Rat a0 = f.coeff(0), a1 = f.coeff(1);
    const Rat a_hi3 = f.coeff(two_ell - 3), a_hi2 = f.coeff(two_ell - 2);
    const Rat a_hi1 = f.coeff(two_ell - 1), a_hi4 = f.coeff(two_ell - 4);

    CertificateGeometry geo;
    geo.mu_low = -a0 / a1;
    geo.mu_high = -a_hi3 / a_hi2;

    // slope identities through the elementary symmetric polynomials:
    // e_k = (-1)^k a_{2l-k}
    const Rat e2l = f.coeff(0) * ((two_ell % 2 == 0) ? 1 : -1);
    const Rat e2lm1 = -f.coeff(1) * ((two_ell % 2 == 0) ? 1 : -1);
    const Rat e3 = -a_hi3, e2 = a_hi2;
    if (geo.mu_low != e2l / e2lm1 || geo.mu_high != e3 / e2)
        throw std::logic_error("slope formulas disagree");

    geo.d0 = Rat(0);
    for (int i = 2; i <= s - 2; ++i) geo.d0 -= f.coeff(i) * b_at(fixed_b, s, s - 2 - i);
    geo.d1 = -a_hi1 * b_at(fixed_b, s, s - 4) - b_at(fixed_b, s, s - 5) - a_hi4;

    const Rat denom = a0 * a_hi2 - a1 * a_hi3;
    if (denom == 0) throw std::runtime_error("lines parallel: raise the last radius");
    geo.p = (a_hi2 * geo.d0 - a1 * geo.d1) / denom;
    geo.q = (a0 * geo.d1 - a_hi3 * geo.d0) / denom;
    return geo;
}

ExtremalResult find_extremal_radius(const std::vector<Rat>& cosines_in, const Rat& start,
                                    const Rat& growth, int max_iter) {
    if (cosines_in.empty()) throw std::invalid_argument("need at least one cosine");
    if (growth <= 1) throw std::invalid_argument("growth must exceed 1");
    if (start <= 0) throw std::invalid_argument("start radius must be > 0");

    std::vector<Rat> cosines = cosines_in;
    std::sort(cosines.begin(), cosines.end(), std::greater<Rat>());
    for (const auto& t : cosines)
        if (t <= 0 || t >= 1) throw std::invalid_argument("quadrant-1 cosine must lie in (0, 1)");
    const int ell = static_cast<int>(cosines.size());

    std::vector<Rat> fixed;
    if (ell == 2) {
        fixed = {Rat(1)};
    } else if (ell >= 3) {
        fixed = witness_radii(cosines);
        if (evaluate_C(cosines, fixed) >= 1)
            throw std::logic_error("witness radii failed C(r) < 1");
    }

    ExtremalResult result;
    // Rung radii: the first max_iter rungs follow the paper's construction
    // (fixed r_1..r_{l-1}, geometric ladder in r_l).  That construction can
    // stall: its r_l threshold argument secretly depends on the multiplier
    // coefficients, and for some angle tuples no r_l works with the witness
    // prefix (verified exactly up to r_l = 10^80).  The remaining rungs fall
    // back to geometrically spread radii r_i = m^i, the shape of all the
    // worked examples, ladder in m.
    const auto rung_radii = [&](int iter) {
        std::vector<Rat> radii;
        if (iter < max_iter) {
            radii = fixed;
            Rat r_last = start;
            for (int k = 0; k < iter; ++k) r_last *= growth;
            radii.push_back(r_last);
        } else {
            Rat m(1);
            for (int k = max_iter; k < iter; ++k) m *= growth;
            Rat r(1);
            for (int i = 0; i < ell; ++i, r *= m) radii.push_back(r);
        }
        return radii;
    };
    for (int iter = 0; iter < 2 * max_iter; ++iter) {
        const std::vector<Rat> radii = rung_radii(iter);
        Quadrant1Instance inst = Quadrant1Instance::make(cosines, radii);
        const int s = inst.s;
        const Polynomial f = expand(inst.to_spec(), PrecisionMode::exact());

        LadderDiagnostics diag;
        diag.radius = radii.back();
        if (s >= 3 && ell >= 2) {
            try {
                const auto geo = certificate_geometry(inst, {});
                diag.slope_ordering = geo.mu_high > geo.mu_low;
                diag.intersection_ok = geo.p < -f.coeff(f.degree() - 1);
            } catch (const std::runtime_error&) {
                diag.slope_ordering = false;  // parallel lines at this rung
            }
        } else if (s == 2 && ell == 2) {
            // Claim 1 sufficient condition: r1 r2 < (2r2 t1 + 2r1 t2)(2r1 t1 + 2r2 t2)
            const Rat lhs = radii[0] * radii[1];
            const Rat rhs = (2 * radii[1] * cosines[0] + 2 * radii[0] * cosines[1]) *
                            (2 * radii[0] * cosines[0] + 2 * radii[1] * cosines[1]);
            diag.slope_ordering = lhs < rhs;
        } else {
            diag.slope_ordering = true;  // l = 1: any radius attains the bound
        }

        const OptResult verification = opt(f, s);
        diag.opt_found = verification.opt;
        result.trail.push_back(diag);
        if (verification.opt == s) {
            result.instance = std::move(inst);
            result.s = s;
            result.verification = verification;
            return result;
        }
    }
    std::ostringstream os;
    os << "extremal radius search exhausted after " << 2 * max_iter << " rungs";
    throw std::runtime_error(os.str());
}

ExtensionResult extend_quadrant2(const Polynomial& f, int opt_f, std::optional<Rat> cos_phi,
                                 const Rat& start, const Rat& growth, int max_iter) {
    if (!f.is_monic()) throw std::invalid_argument("extend_quadrant2 requires monic f");
    if (cos_phi && (*cos_phi > 0 || *cos_phi <= -1))
        throw std::invalid_argument("quadrant-2 cosine must lie in (-1, 0]");
    if (!is_positive(f).positive) throw std::invalid_argument("f must be positive");
    if (growth <= 1 || start <= 0) throw std::invalid_argument("bad ladder parameters");

    ExtensionResult result;
    // Two-sided ladder: start, start*growth, start/growth, start*growth^2, ...
    // The existence argument is a continuity statement at r = 0, so small
    // radii are the guaranteed direction; large radii match the worked
    // examples.  Try both.
    const auto rung = [&](int iter) {
        if (iter == 0) return start;
        const int k = (iter + 1) / 2;
        Rat factor(1);
        for (int i = 0; i < k; ++i) factor *= growth;
        return iter % 2 == 1 ? Rat(start * factor) : Rat(start / factor);
    };
    for (int iter = 0; iter < 2 * max_iter + 1; ++iter) {
        const Rat r = rung(iter);
        Polynomial h = cos_phi ? Polynomial({r * r, Rat(-2) * r * (*cos_phi), Rat(1)})
                               : Polynomial({r, Rat(1)});
        Polynomial product = multiply(f, h);
        // opt(f h) <= opt(f): a multiplier for f also works for f h, since h
        // already has nonnegative coefficients.
        OptResult verification = opt(product, opt_f);
        double eps = 0.0;
        if (opt_f >= 1 && verification.opt == opt_f)
            eps = separation_distance(product, opt_f - 1, 1e-9);
        result.epsilon_trail.emplace_back(r, eps);
        if (verification.opt == opt_f) {
            result.radius = r;
            result.product = std::move(product);
            result.verification = std::move(verification);
            return result;
        }
    }
    throw std::runtime_error("quadrant-2 extension search exhausted");
}

}  // namespace curtiss
