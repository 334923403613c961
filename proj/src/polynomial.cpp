#include "curtiss/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curtiss {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
    trim();
}

Polynomial Polynomial::constant(const Rat& c) {
    return Polynomial({c});
}

Polynomial Polynomial::monomial(int k, const Rat& c) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * int(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& c) const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat mag = abs(c);
        if (mag != 1 || i == 0) os << mag.str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
    return f * g;
}

Polynomial remainder(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("remainder by zero polynomial");
    std::vector<Rat> r = f.coeffs();
    const auto& gc = g.coeffs();
    const int dg = g.degree();
    while (static_cast<int>(r.size()) - 1 >= dg) {
        const int dr = static_cast<int>(r.size()) - 1;
        Rat q = r.back() / gc.back();
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= q * gc[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Polynomial(std::move(r));
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading());
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.is_zero()) return Polynomial();
    std::vector<Rat> r = f.coeffs();
    const auto& gc = g.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) throw std::invalid_argument("inexact polynomial division");
    std::vector<Rat> q(f.degree() - dg + 1, Rat(0));
    while (static_cast<int>(r.size()) - 1 >= dg && !r.empty()) {
        const int dr = static_cast<int>(r.size()) - 1;
        Rat c = r.back() / gc.back();
        q[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * gc[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (!r.empty() && static_cast<int>(r.size()) - 1 < dg) break;
    }
    if (!r.empty()) throw std::invalid_argument("inexact polynomial division");
    return Polynomial(std::move(q));
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero()) return f;
    Polynomial g = gcd(f, f.derivative());
    if (g.degree() <= 0) return f;
    return exact_divide(f, g);
}

}  // namespace curtiss
