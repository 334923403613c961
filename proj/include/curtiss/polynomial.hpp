#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "curtiss/rational.hpp"

namespace curtiss {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs[i] is the coefficient of x^i; the zero polynomial is the empty
/// vector, otherwise the last entry is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    Polynomial(std::initializer_list<Rat> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({Rat(1)}); }
    static Polynomial constant(const Rat& c);
    // x^k
    static Polynomial monomial(int k, const Rat& c = Rat(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    // Coefficient of x^i; zero outside the stored range.
    Rat coeff(int i) const;
    const Rat& leading() const { return coeffs_.back(); }

    Rat eval(const Rat& x) const;

    Polynomial derivative() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return coeffs_ != rhs.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

Polynomial multiply(const Polynomial& f, const Polynomial& g);

// Remainder of f divided by g (g nonzero), exact over the rationals.
Polynomial remainder(const Polynomial& f, const Polynomial& g);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// f with repeated roots collapsed: f / gcd(f, f').
Polynomial squarefree_part(const Polynomial& f);

// Exact quotient; throws if the division is not exact.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace curtiss
