#include "pft/laurent.hpp"

#include <cctype>
#include <sstream>

namespace pft {

namespace {

// Signed power helper for Integer coefficients.
Integer ipow(Integer b, long long e) {
    Integer acc = 1;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace

template <typename C>
BasicLaurent<C> BasicLaurent<C>::canonical(UnitGroup g) const {
    if (is_zero()) return *this;
    BasicLaurent<C> r = shifted(-lowest_exp());
    if constexpr (std::is_same_v<C, Rational>) {
        if (g == UnitGroup::NonzeroRational) {
            Rational t = r.trailing_coeff();
            BasicLaurent<C> out;
            for (auto& [e, c] : r.coeffs()) out.set_coeff(e, c / t);
            return out;
        }
        if (r.trailing_coeff() < 0) return -r;
        return r;
    } else {
        if (g == UnitGroup::NonzeroRational) {
            Integer cont = content(r);
            BasicLaurent<C> out;
            for (auto& [e, c] : r.coeffs()) out.set_coeff(e, c / cont);
            r = out;
        }
        if (r.trailing_coeff() < 0) return -r;
        return r;
    }
}

template <typename C>
std::string BasicLaurent<C>::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        C c = it->second;
        Exp e = it->first;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        C a = neg ? C(-c) : c;
        if (e == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

template class BasicLaurent<Integer>;
template class BasicLaurent<Rational>;

Integer content(const LaurentZ& p) {
    Integer g = 0;
    for (auto& [e, c] : p.coeffs()) g = gcd(g, c);
    return g;  // 0 for the zero polynomial
}

LaurentZ primitive_part(const LaurentZ& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    LaurentZ r;
    for (auto& [e, c] : p.coeffs()) r.set_coeff(e, c / g);
    return r;
}

namespace {

// Ordinary polynomial long division of p by q over a field-like coefficient
// domain is not available for Integer; this version requires each step to
// divide exactly and is used for both Z and Q coefficients.
template <typename C>
bool try_div_exact(const BasicLaurent<C>& p, const BasicLaurent<C>& q, BasicLaurent<C>* out) {
    if (q.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
    if (p.is_zero()) {
        *out = BasicLaurent<C>();
        return true;
    }
    // Work with the t^k ambiguity removed: p = t^a p0, q = t^b q0.
    BasicLaurent<C> rem = p.shifted(-p.lowest_exp());
    BasicLaurent<C> den = q.shifted(-q.lowest_exp());
    BasicLaurent<C> quot;
    while (!rem.is_zero() && rem.highest_exp() >= den.highest_exp()) {
        C lead = rem.leading_coeff();
        C dlead = den.leading_coeff();
        C q0;
        if constexpr (std::is_same_v<C, Integer>) {
            if (lead % dlead != 0) return false;
            q0 = lead / dlead;
        } else {
            q0 = lead / dlead;
        }
        auto e = rem.highest_exp() - den.highest_exp();
        auto term = BasicLaurent<C>::monomial(q0, e);
        quot += term;
        rem -= term * den;  // leading terms cancel, degree strictly drops
    }
    if (!rem.is_zero()) return false;
    *out = quot.shifted(p.lowest_exp() - q.lowest_exp());
    return true;
}

}  // namespace

LaurentZ div_exact(const LaurentZ& p, const LaurentZ& q) {
    LaurentZ out;
    if (!try_div_exact(p, q, &out)) throw std::domain_error("div_exact: not divisible");
    return out;
}

LaurentQ div_exact(const LaurentQ& p, const LaurentQ& q) {
    LaurentQ out;
    if (!try_div_exact(p, q, &out)) throw std::domain_error("div_exact: not divisible");
    return out;
}

bool divides(const LaurentZ& q, const LaurentZ& p) {
    LaurentZ out;
    return try_div_exact(p, q, &out);
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
// Inputs are ordinary polynomials (lowest exponent >= 0). Each reduction
// step contributes one factor of lc(b); skipped degrees are padded at the
// end so the normalization is exactly lc(b)^(delta+1).
LaurentZ pseudo_rem(LaurentZ a, const LaurentZ& b) {
    auto db = b.highest_exp();
    Integer lb = b.leading_coeff();
    long long e = (a.is_zero() ? 0 : a.highest_exp()) - db + 1;
    while (!a.is_zero() && a.highest_exp() >= db) {
        auto shift = a.highest_exp() - db;
        Integer la = a.leading_coeff();
        a = a * lb - b * LaurentZ::monomial(la, shift);
        --e;
    }
    for (; e > 0; --e) a = a * lb;
    return a;
}

}  // namespace

LaurentZ laurent_gcd(const LaurentZ& a0, const LaurentZ& b0) {
    if (a0.is_zero()) return b0.canonical(UnitGroup::PlusMinusOne);
    if (b0.is_zero()) return a0.canonical(UnitGroup::PlusMinusOne);
    Integer cont = gcd(content(a0), content(b0));
    LaurentZ a = primitive_part(a0.shifted(-a0.lowest_exp()));
    LaurentZ b = primitive_part(b0.shifted(-b0.lowest_exp()));
    if (a.highest_exp() < b.highest_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.highest_exp() == 0) {
            a = LaurentZ::one();  // primitive constant is a unit
            break;
        }
        LaurentZ r = pseudo_rem(a, b);
        a = b;
        if (r.is_zero()) break;
        b = primitive_part(r.shifted(-r.lowest_exp()));
    }
    return a.canonical(UnitGroup::PlusMinusOne) * cont;
}

Integer resultant(const LaurentZ& a0, const LaurentZ& b0) {
    if (a0.is_zero() || b0.is_zero()) return 0;
    if (a0.lowest_exp() < 0 || b0.lowest_exp() < 0)
        throw std::invalid_argument("resultant: inputs must be ordinary polynomials");
    LaurentZ A = a0, B = b0;
    long long degA = A.highest_exp(), degB = B.highest_exp();
    if (degA == 0 && degB == 0) return 1;
    int s = 1;
    if (degA < degB) {
        if ((degA & 1) && (degB & 1)) s = -s;
        std::swap(A, B);
        std::swap(degA, degB);
    }
    Integer ca = content(A), cb = content(B);
    A = primitive_part(A);
    B = primitive_part(B);
    Integer scale = ipow(ca, degB) * ipow(cb, degA);
    Integer g = 1, h = 1;
    while (true) {
        degA = A.highest_exp();
        degB = B.is_zero() ? -1 : B.highest_exp();
        if (B.is_zero()) return 0;
        if (degB == 0) break;
        long long delta = degA - degB;
        if ((degA & 1) && (degB & 1)) s = -s;
        LaurentZ R = pseudo_rem(A, B);
        A = B;
        Integer divisor = g * ipow(h, delta);
        LaurentZ newB;
        for (auto& [e, c] : R.coeffs()) {
            if (c % divisor != 0) throw std::logic_error("resultant: inexact subresultant step");
            newB.set_coeff(e, c / divisor);
        }
        B = newB;
        g = A.leading_coeff();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact in Z.
            Integer num = ipow(g, delta);
            Integer den = ipow(h, delta - 1);
            if (num % den != 0) throw std::logic_error("resultant: inexact h update");
            h = num / den;
        }
    }
    // deg B == 0 here.
    long long dA = A.highest_exp();
    Integer lb = B.trailing_coeff();
    Integer num = ipow(lb, dA);
    Integer den = ipow(h, dA - 1);
    if (dA == 0) {
        // A is constant too: the loop was never entered with degA > 0.
        return s * scale;
    }
    if (num % den != 0) throw std::logic_error("resultant: inexact final step");
    h = num / den;
    return Integer(s) * scale * h;
}

LaurentZ cyclotomic(unsigned long k) {
    if (k == 0) throw std::invalid_argument("cyclotomic: k must be positive");
    LaurentZ num = LaurentZ::monomial(1, static_cast<long long>(k)) - LaurentZ::one();
    if (k == 1) return num;
    LaurentZ den = LaurentZ::one();
    for (unsigned long d = 1; d < k; ++d)
        if (k % d == 0) den *= cyclotomic(d);
    return div_exact(num, den);
}

LaurentQ to_rational(const LaurentZ& p) {
    LaurentQ r;
    for (auto& [e, c] : p.coeffs()) r.set_coeff(e, Rational(c));
    return r;
}

std::pair<LaurentZ, Rational> to_integer_primitive(const LaurentQ& p) {
    if (p.is_zero()) return {LaurentZ(), Rational(1)};
    Integer den = 1;
    for (auto& [e, c] : p.coeffs()) den = lcm(den, denominator(c));
    LaurentZ z;
    for (auto& [e, c] : p.coeffs()) z.set_coeff(e, numerator(c) * (den / denominator(c)));
    Integer cont = content(z);
    LaurentZ prim;
    for (auto& [e, c] : z.coeffs()) prim.set_coeff(e, c / cont);
    return {prim, Rational(cont, den)};
}

LaurentQ parse_laurent(const std::string& s) {
    LaurentQ out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("parse_laurent: empty input");
    bool expect_term = true;
    int pending_sign = 1;
    while (i < s.size()) {
        skip_ws();
        if (i == s.size()) break;
        char ch = s[i];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') pending_sign = -pending_sign;
            else if (expect_term && ch == '+') { /* no-op */ }
            else {
                pending_sign = (ch == '-') ? -1 : 1;
                expect_term = true;
            }
            ++i;
            continue;
        }
        // term: [number] [* ] [t [^ int]]
        Rational coeff(1);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            coeff = parse_rational(s.substr(i, j - i));
            i = j;
            saw_number = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        }
        long long exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                std::size_t j = i;
                if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw std::invalid_argument("parse_laurent: missing exponent");
                exp = std::stoll(s.substr(i, j - i));
                i = j;
            }
        } else if (!saw_number) {
            throw std::invalid_argument("parse_laurent: unexpected character '" + std::string(1, ch) + "'");
        }
        out.set_coeff(exp, out.coeff(exp) + coeff * pending_sign);
        pending_sign = 1;
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("parse_laurent: dangling sign");
    return out;
}

LaurentZ parse_laurent_z(const std::string& s) {
    LaurentQ q = parse_laurent(s);
    LaurentZ z;
    for (auto& [e, c] : q.coeffs()) {
        if (denominator(c) != 1)
            throw std::invalid_argument("parse_laurent_z: non-integer coefficient");
        z.set_coeff(e, numerator(c));
    }
    return z;
}

bool laurent_doteq(const LaurentZ& p, const LaurentZ& q, UnitGroup g) {
    return p.canonical(g) == q.canonical(g);
}

bool laurent_doteq(const LaurentQ& p, const LaurentQ& q, UnitGroup g) {
    return p.canonical(g) == q.canonical(g);
}

}  // namespace pft
