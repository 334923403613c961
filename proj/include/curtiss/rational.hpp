#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace curtiss {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rat& q) { return q.sign(); }

// Parses "num/den" or a plain integer string.
Rat parse_rational(const std::string& text);

// Serializes canonically: "num" when the denominator is 1, else "num/den".
std::string to_string(const Rat& q);

// 10^digits
Int pow10(int digits);

}  // namespace curtiss
