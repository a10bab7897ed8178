#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace typicality {

// Exact arithmetic used wherever a result is a rational number by
// construction (Bernoulli numbers, series coefficients, purity splits).
// cpp_rational keeps gcd-reduced canonical form with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Exact integer power with non-negative exponent.
inline BigInt int_pow(BigInt base, unsigned exp) {
    BigInt out = 1;
    while (exp != 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

}  // namespace typicality
