#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fracbox {

// All solver arithmetic runs on exact rationals; no floating point touches
// any optimization path. boost's cpp_rational keeps values canonical
// (gcd(p,q) = 1, q > 0) after every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical serialization: "p/q" with q > 0 and gcd(p,q) = 1, shortened to
/// "p" when q == 1. This is the one format used in JSON and text output.
inline std::string rational_to_string(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r); // > 0
    BigInt q = num / den;        // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

/// Smallest integer >= r.
inline BigInt rational_ceil(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    BigInt q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

/// Fractional part r - floor(r), in [0, 1).
inline Rational fractional_part(const Rational& r) {
    return r - Rational(rational_floor(r));
}

/// Decimal approximation for human-readable output only.
inline double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace fracbox
