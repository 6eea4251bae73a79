#pragma once

// Exact integer and rational types shared by every module. Nothing in this
// library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace seifert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Floor division; cpp_int's operator/ truncates toward zero.
inline Integer floor_div(const Integer& num, const Integer& den)
{
    Integer q = num / den;
    Integer r = num - q * den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Always "p/q" with q >= 1, including integers ("0/1", "-2/1").
inline std::string to_fraction_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace seifert
