#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pft/group.hpp"
#include "pft/laurent.hpp"
#include "pft/matrix.hpp"

namespace pft {

// Profinite integer known to finite precision: a residue modulo N.
struct TruncatedProfiniteInt {
    Integer residue;  // in [0, N)
    Integer modulus;  // N > 0

    TruncatedProfiniteInt() : residue(0), modulus(1) {}
    TruncatedProfiniteInt(Integer r, Integer n) : modulus(std::move(n)) {
        if (modulus <= 0) throw std::invalid_argument("profinite modulus must be positive");
        residue = mod_reduce(r, modulus);
    }

    bool is_unit() const { return gcd(residue, modulus) == 1; }

    // Residue modulo d; requires d | N.
    Integer reduce(const Integer& d) const {
        if (d <= 0 || modulus % d != 0)
            throw std::domain_error("insufficient profinite precision");
        return mod_reduce(residue, d);
    }

    TruncatedProfiniteInt inverse() const {
        if (!is_unit()) throw std::domain_error("profinite inverse of a non-unit");
        return TruncatedProfiniteInt(mod_inverse(residue, modulus), modulus);
    }
};

// g^nu in a finite group; requires |G| to divide nu's modulus.
FiniteGroup::Elem nu_power(const FiniteGroup& g, FiniteGroup::Elem elem,
                           const TruncatedProfiniteInt& nu);

// A linear map written as z_1 Phi_1 + ... + z_r Phi_r with integer
// matrices Phi_i and formal profinite scalars z_i (optionally carrying a
// residue at the working precision).
struct SymbolicTerm {
    IntMat coefficient;  // target_rank x source_rank
    std::string symbol;
    std::optional<TruncatedProfiniteInt> residue;
};

struct SymbolicProfiniteMap {
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    std::vector<SymbolicTerm> terms;

    void validate() const;
};

// Z-basis of the span of the entry-coefficient vectors, in symbol
// coordinates (Hermite-reduced rows).
struct MCModule {
    std::size_t rank = 0;
    IntMat basis;  // rank x (number of symbols)
};

MCModule mc_module(const SymbolicProfiniteMap& phi);

// Rank-one factorization Phi = z * F where z is the primitive generator
// in symbol coordinates (the spec's normalization; the module's honest
// lattice generator may be an integer multiple, which F absorbs).
struct RankOneFactor {
    std::vector<Integer> generator;  // coefficients of z over the symbols
    IntMat factor;                   // F_z
    std::optional<TruncatedProfiniteInt> residue;  // attached when all symbols carry one
};

// Empty optional signals "not rank one".
std::optional<RankOneFactor> rank_one_factor(const SymbolicProfiniteMap& phi);

// epsilon-specialization: sum of eps(z_i) * Phi_i. Missing symbols throw.
RatMat specialize(const SymbolicProfiniteMap& phi, const std::map<std::string, Rational>& eps);
// Dual specialization on cohomology: the transpose.
RatMat dual_specialize(const SymbolicProfiniteMap& phi, const std::map<std::string, Rational>& eps);

// The finite quotient R_{l,d} = (Z/l)[t]/(t^d - 1) of the completed group
// algebra; elements are coefficient vectors of length d, multiplication is
// cyclic convolution mod l.
class GroupRingQuotient {
public:
    GroupRingQuotient(Integer l, std::size_t d);

    Integer coefficient_modulus() const { return l_; }
    std::size_t exponent_modulus() const { return d_; }

    // Image of f(t^exp_scale) in R_{l,d}.
    std::vector<Integer> reduce(const LaurentZ& f, const Integer& exp_scale = 1) const;
    std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

    // Canonical basis (HNF) of the Z-lattice of the principal ideal (f),
    // with l*Z^d included; ideal equality is HNF equality.
    IntMat ideal_lattice(const std::vector<Integer>& f) const;

private:
    Integer l_;
    std::size_t d_;
};

// Whether (a(t^mu)) = (b(t)) in R_{l,d}. mu must be a unit and d must
// divide mu's modulus.
bool ideal_equal(const LaurentZ& a, const LaurentZ& b, const TruncatedProfiniteInt& mu,
                 const Integer& l, std::size_t d);

struct FriedComparison {
    enum class Verdict { equivalent, distinguished, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    unsigned long at_m = 0;  // first separating m when distinguished

    std::string str() const;
};

// Fried-Ueki comparison of reciprocal integer polynomials: "equivalent"
// when a and b agree up to +-t^k; otherwise hunt for a separating cyclic
// resultant (signed on canonical forms, and absolute after stripping all
// cyclotomic factors) for m = 1..m_max; "inconclusive" when none is found.
FriedComparison fried_compare(const LaurentZ& a, const LaurentZ& b, unsigned long m_max);

// Removes every cyclotomic factor Phi_k with deg Phi_k <= deg f.
LaurentZ strip_cyclotomic_factors(const LaurentZ& f);

struct ConjugacySearchOptions {
    std::size_t exhaustive_bound = 2000000;  // max matrices enumerated
    std::size_t random_tries = 20000;
    unsigned long long seed = 0;
};

// Whether A is conjugate to B^mu in GL(r, Z/N). Exhaustive for small
// search spaces; otherwise the necessary char-poly test plus a bounded
// seeded random conjugator search (a false answer is then "not found").
bool mu_conjugacy_check(const IntMat& a, const IntMat& b, const TruncatedProfiniteInt& mu,
                        const Integer& n, const ConjugacySearchOptions& opt = {});

}  // namespace pft
