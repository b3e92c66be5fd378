#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pft {

// All kernel arithmetic is arbitrary precision. Fixed-width integers are
// reserved for indices and sizes; values that participate in algebra use
// these types.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

// Least nonnegative residue of a mod m, m > 0.
inline Integer mod_reduce(const Integer& a, const Integer& m) {
    if (m <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a mod m; throws if gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

// a^e mod m with e >= 0.
Integer mod_pow(Integer base, Integer exp, const Integer& m);

// Parses a decimal string, the wire format for exact integers.
inline Integer parse_integer(const std::string& s) { return Integer(s); }

// Parses "p" or "p/q".
Rational parse_rational(const std::string& s);

std::string to_string(const Integer& a);
std::string to_string(const Rational& r);

}  // namespace pft
