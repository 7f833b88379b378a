#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weylcoinv {

// Exact rational arithmetic. mpq_class keeps values canonical (gcd 1,
// positive denominator), which the serialization format relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (no whitespace, no decimals).
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Emits "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

}  // namespace weylcoinv
