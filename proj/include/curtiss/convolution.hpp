#pragma once

#include <vector>

#include "curtiss/polynomial.hpp"

namespace curtiss {

using Matrix = std::vector<std::vector<Rat>>;
using Vector = std::vector<Rat>;

/// The banded multiplication matrix A_s of a monic polynomial f together with
/// its column partition [L_s | R_s] and T_s = R_s^{-1} L_s.
///
/// A_s is (s+1) x (s+n+1); row i holds a_0..a_n in columns i..i+n.  For a
/// multiplier coefficient row b of length s+1, b*A_s equals coeffs(g*f).
class ConvolutionSystem {
public:
    ConvolutionSystem(const Polynomial& f, int s);

    int n() const { return n_; }
    int s() const { return s_; }
    const Matrix& A() const { return A_; }
    const Matrix& L() const { return L_; }
    const Matrix& R() const { return R_; }
    const Matrix& T() const { return T_; }

    // b*A_s; b may be shorter than s+1 (padded with zeros).
    Vector apply(const Vector& b) const;

private:
    int n_;
    int s_;
    Matrix A_, L_, R_, T_;
};

ConvolutionSystem build_convolution(const Polynomial& f, int s);

}  // namespace curtiss
