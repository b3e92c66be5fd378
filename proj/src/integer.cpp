#include "pft/integer.hpp"

namespace pft {

Integer mod_inverse(const Integer& a, const Integer& m) {
    // Extended Euclid on (a mod m, m).
    Integer r0 = mod_reduce(a, m), r1 = m;
    Integer s0 = 1, s1 = 0;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: element is not a unit");
    return mod_reduce(s0, m);
}

Integer mod_pow(Integer base, Integer exp, const Integer& m) {
    if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
    base = mod_reduce(base, m);
    Integer acc = mod_reduce(1, m);
    while (exp > 0) {
        if ((exp & 1) != 0) acc = mod_reduce(acc * base, m);
        base = mod_reduce(base * base, m);
        exp >>= 1;
    }
    return acc;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
}

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace pft
