#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pft/integer.hpp"

namespace pft {

// Unit groups for dotted equality: p ~ c * t^k * q with c in the group.
enum class UnitGroup { PlusMinusOne, NonzeroRational };

// Exact Laurent polynomial with coefficients C (Integer or Rational).
// Invariant: no stored coefficient is zero; zero polynomial is the empty map.
template <typename C>
class BasicLaurent {
public:
    using Exp = long long;
    using CoeffMap = std::map<Exp, C>;

    BasicLaurent() = default;
    explicit BasicLaurent(const C& c) {
        if (c != 0) coeffs_[0] = c;
    }

    static BasicLaurent monomial(const C& c, Exp e) {
        BasicLaurent p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static BasicLaurent variable() { return monomial(C(1), 1); }
    static BasicLaurent one() { return BasicLaurent(C(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    std::size_t term_count() const { return coeffs_.size(); }
    const CoeffMap& coeffs() const { return coeffs_; }

    Exp lowest_exp() const {
        if (is_zero()) throw std::domain_error("lowest_exp of zero polynomial");
        return coeffs_.begin()->first;
    }
    Exp highest_exp() const {
        if (is_zero()) throw std::domain_error("highest_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }
    // Degree spread; 0 for constants and for the zero polynomial.
    Exp span() const { return is_zero() ? 0 : highest_exp() - lowest_exp(); }

    C coeff(Exp e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? C(0) : it->second;
    }
    C leading_coeff() const { return coeffs_.rbegin()->second; }
    C trailing_coeff() const { return coeffs_.begin()->second; }

    void set_coeff(Exp e, const C& c) {
        if (c == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }

    BasicLaurent operator-() const {
        BasicLaurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    BasicLaurent operator+(const BasicLaurent& o) const {
        BasicLaurent r = *this;
        for (auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
        return r;
    }
    BasicLaurent operator-(const BasicLaurent& o) const {
        BasicLaurent r = *this;
        for (auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
        return r;
    }
    BasicLaurent operator*(const BasicLaurent& o) const {
        BasicLaurent r;
        for (auto& [e1, c1] : coeffs_)
            for (auto& [e2, c2] : o.coeffs_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
        return r;
    }
    BasicLaurent operator*(const C& s) const {
        BasicLaurent r;
        if (s == 0) return r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
        return r;
    }
    BasicLaurent& operator+=(const BasicLaurent& o) { return *this = *this + o; }
    BasicLaurent& operator-=(const BasicLaurent& o) { return *this = *this - o; }
    BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

    bool operator==(const BasicLaurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BasicLaurent& o) const { return coeffs_ != o.coeffs_; }
    // Lexicographic on the coefficient maps; used for canonical sorting only.
    bool operator<(const BasicLaurent& o) const { return coeffs_ < o.coeffs_; }

    BasicLaurent pow(unsigned long n) const {
        BasicLaurent acc = one(), base = *this;
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    // Multiplication by t^k.
    BasicLaurent shifted(Exp k) const {
        BasicLaurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    // Substitution t -> t^k, k != 0 (negative k reverses).
    BasicLaurent power_substituted(Exp k) const {
        if (k == 0) throw std::invalid_argument("power_substituted: k must be nonzero");
        BasicLaurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
        return r;
    }
    BasicLaurent reversed() const { return power_substituted(-1); }

    // Evaluation at x. Negative exponents require x invertible in X.
    template <typename X>
    X evaluate(const X& x) const {
        if (is_zero()) return X(0);
        Exp lo = lowest_exp();
        // v = sum c_e x^(e - lo), all exponents nonnegative.
        X v(0);
        X xpow(1);
        Exp cur = lo;
        for (auto& [e, c] : coeffs_) {
            while (cur < e) {
                xpow = xpow * x;
                ++cur;
            }
            v = v + X(c) * xpow;
        }
        if (lo == 0) return v;
        X shift(1);
        for (Exp i = 0; i < (lo > 0 ? lo : -lo); ++i) shift = shift * x;
        if (lo > 0) return v * shift;
        if (shift == X(0)) throw std::domain_error("evaluate: negative exponent at zero");
        return v / shift;
    }

    // Canonical representative of the doteq class: lowest exponent shifted
    // to 0, then sign/scale normalization per unit group. Over rationals the
    // trailing coefficient becomes 1; over integers it becomes positive
    // (primitive when rational units are allowed).
    BasicLaurent canonical(UnitGroup g) const;

    std::string str() const;

private:
    CoeffMap coeffs_;
};

using LaurentZ = BasicLaurent<Integer>;
using LaurentQ = BasicLaurent<Rational>;

// --- integer-coefficient helpers -----------------------------------------

Integer content(const LaurentZ& p);
LaurentZ primitive_part(const LaurentZ& p);

// Exact division; throws std::domain_error when q does not divide p.
LaurentZ div_exact(const LaurentZ& p, const LaurentZ& q);
LaurentQ div_exact(const LaurentQ& p, const LaurentQ& q);
bool divides(const LaurentZ& q, const LaurentZ& p);

// GCD in Z[t^{\pm 1}], returned with lowest exponent 0 and positive
// trailing coefficient. gcd(0, 0) = 0.
LaurentZ laurent_gcd(const LaurentZ& a, const LaurentZ& b);

// Resultant of integer polynomials (nonnegative exponents required),
// computed by the subresultant pseudo-remainder sequence.
Integer resultant(const LaurentZ& a, const LaurentZ& b);

// k-th cyclotomic polynomial.
LaurentZ cyclotomic(unsigned long k);

LaurentQ to_rational(const LaurentZ& p);
// Clears denominators; returns the primitive integer polynomial and the
// positive rational scale r with input = r * output.
std::pair<LaurentZ, Rational> to_integer_primitive(const LaurentQ& p);

// Parse "t^2-3t+1", "2*t^-1 + 1/2", ... (sum of monomials, no parentheses).
LaurentQ parse_laurent(const std::string& s);
LaurentZ parse_laurent_z(const std::string& s);

bool laurent_doteq(const LaurentZ& p, const LaurentZ& q, UnitGroup g);
bool laurent_doteq(const LaurentQ& p, const LaurentQ& q, UnitGroup g);

}  // namespace pft
