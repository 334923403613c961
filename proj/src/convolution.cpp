#include "curtiss/convolution.hpp"

#include <stdexcept>

namespace curtiss {

ConvolutionSystem::ConvolutionSystem(const Polynomial& f, int s) {
    if (!f.is_monic()) throw std::invalid_argument("convolution system requires monic f");
    if (s < 0) throw std::invalid_argument("multiplier degree must be >= 0");
    n_ = f.degree();
    s_ = s;
    const int cols = s_ + n_ + 1;
    A_.assign(s_ + 1, Vector(cols, Rat(0)));
    for (int i = 0; i <= s_; ++i)
        for (int j = 0; j <= n_; ++j) A_[i][i + j] = f.coeff(j);

    L_.assign(s_ + 1, Vector(n_, Rat(0)));
    R_.assign(s_ + 1, Vector(s_ + 1, Rat(0)));
    for (int i = 0; i <= s_; ++i) {
        for (int j = 0; j < n_; ++j) L_[i][j] = A_[i][j];
        for (int j = 0; j <= s_; ++j) R_[i][j] = A_[i][n_ + j];
    }

    // R_s is lower triangular with ones on the diagonal (f monic); solve
    // R_s T_s = L_s by forward substitution, one column at a time.
    T_.assign(s_ + 1, Vector(n_, Rat(0)));
    for (int col = 0; col < n_; ++col) {
        for (int i = 0; i <= s_; ++i) {
            Rat acc = L_[i][col];
            for (int k = 0; k < i; ++k) acc -= R_[i][k] * T_[k][col];
            T_[i][col] = acc / R_[i][i];
        }
    }
}

Vector ConvolutionSystem::apply(const Vector& b) const {
    if (static_cast<int>(b.size()) > s_ + 1)
        throw std::invalid_argument("multiplier vector longer than s+1");
    Vector out(s_ + n_ + 1, Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (int j = 0; j <= s_ + n_; ++j)
            if (A_[i][j] != 0) out[j] += b[i] * A_[i][j];
    return out;
}

ConvolutionSystem build_convolution(const Polynomial& f, int s) {
    return ConvolutionSystem(f, s);
}

}  // namespace curtiss
