#include "curtiss/rational.hpp"

namespace curtiss {

Rat parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);  // mpq_rational canonicalizes
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string to_string(const Rat& q) {
    return q.str();
}

Int pow10(int digits) {
    Int p = 1;
    for (int i = 0; i < digits; ++i) p *= 10;
    return p;
}

}  // namespace curtiss
