#include "pft/profinite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pft/exact.hpp"
#include "pft/smith.hpp"

namespace pft {

FiniteGroup::Elem nu_power(const FiniteGroup& g, FiniteGroup::Elem elem,
                           const TruncatedProfiniteInt& nu) {
    if (nu.modulus % Integer(g.order()) != 0)
        throw std::domain_error("insufficient profinite precision");
    return g.power(elem, nu.residue);
}

void SymbolicProfiniteMap::validate() const {
    std::set<std::string> seen;
    for (auto& t : terms) {
        if (t.coefficient.rows() != target_rank || t.coefficient.cols() != source_rank)
            throw std::invalid_argument("symbolic map: matrix shape mismatch");
        if (!seen.insert(t.symbol).second)
            throw std::invalid_argument("symbolic map: duplicate symbol " + t.symbol);
    }
}

namespace {

// (b*a) x r matrix whose rows are the entry vectors in symbol coordinates.
IntMat entry_matrix(const SymbolicProfiniteMap& phi) {
    std::size_t r = phi.terms.size();
    IntMat e(phi.source_rank * phi.target_rank, r);
    for (std::size_t k = 0; k < r; ++k) {
        const IntMat& m = phi.terms[k].coefficient;
        for (std::size_t i = 0; i < phi.target_rank; ++i)
            for (std::size_t j = 0; j < phi.source_rank; ++j)
                e(i * phi.source_rank + j, k) = m(i, j);
    }
    return e;
}

}  // namespace

MCModule mc_module(const SymbolicProfiniteMap& phi) {
    phi.validate();
    MCModule out;
    IntMat basis = hermite_row_basis(entry_matrix(phi));
    out.rank = basis.rows();
    out.basis = std::move(basis);
    // Basis rows of an HNF are independent; cross-check through smith_form.
    if (smith_form(out.basis).rank != out.rank)
        throw std::logic_error("mc_module: basis rank mismatch");
    return out;
}

std::optional<RankOneFactor> rank_one_factor(const SymbolicProfiniteMap& phi) {
    MCModule mc = mc_module(phi);
    if (mc.rank != 1) return std::nullopt;
    std::size_t r = phi.terms.size();
    std::vector<Integer> gen(r);
    Integer cont = 0;
    for (std::size_t k = 0; k < r; ++k) cont = gcd(cont, mc.basis(0, k));
    for (std::size_t k = 0; k < r; ++k) gen[k] = mc.basis(0, k) / cont;

    // Each entry vector is an integer multiple of gen; that multiple is the
    // corresponding entry of F.
    std::size_t pivot = 0;
    while (gen[pivot] == 0) ++pivot;
    RankOneFactor out;
    out.generator = gen;
    out.factor = IntMat(phi.target_rank, phi.source_rank);
    for (std::size_t i = 0; i < phi.target_rank; ++i)
        for (std::size_t j = 0; j < phi.source_rank; ++j) {
            Integer num = phi.terms[pivot].coefficient(i, j);
            if (num % gen[pivot] != 0)
                throw std::logic_error("rank_one_factor: non-integral multiple");
            Integer mult = num / gen[pivot];
            for (std::size_t k = 0; k < r; ++k)
                if (phi.terms[k].coefficient(i, j) != mult * gen[k])
                    throw std::logic_error("rank_one_factor: entries not proportional");
            out.factor(i, j) = mult;
        }

    bool all_residues = !phi.terms.empty();
    for (auto& t : phi.terms) all_residues = all_residues && t.residue.has_value();
    if (all_residues) {
        Integer m = 0;
        for (auto& t : phi.terms) m = gcd(m, t.residue->modulus);
        Integer res = 0;
        for (std::size_t k = 0; k < r; ++k) res += gen[k] * phi.terms[k].residue->residue;
        out.residue = TruncatedProfiniteInt(res, m);
    }
    return out;
}

RatMat specialize(const SymbolicProfiniteMap& phi, const std::map<std::string, Rational>& eps) {
    phi.validate();
    RatMat out(phi.target_rank, phi.source_rank);
    for (auto& t : phi.terms) {
        auto it = eps.find(t.symbol);
        if (it == eps.end())
            throw std::invalid_argument("specialize: missing symbol " + t.symbol);
        for (std::size_t i = 0; i < phi.target_rank; ++i)
            for (std::size_t j = 0; j < phi.source_rank; ++j)
                out(i, j) += it->second * Rational(t.coefficient(i, j));
    }
    return out;
}

RatMat dual_specialize(const SymbolicProfiniteMap& phi, const std::map<std::string, Rational>& eps) {
    return specialize(phi, eps).transpose();
}

GroupRingQuotient::GroupRingQuotient(Integer l, std::size_t d) : l_(std::move(l)), d_(d) {
    if (l_ <= 1) throw std::invalid_argument("GroupRingQuotient: coefficient modulus must be > 1");
    if (d_ == 0) throw std::invalid_argument("GroupRingQuotient: exponent modulus must be >= 1");
}

std::vector<Integer> GroupRingQuotient::reduce(const LaurentZ& f, const Integer& exp_scale) const {
    std::vector<Integer> v(d_, 0);
    Integer d(d_);
    for (auto& [e, c] : f.coeffs()) {
        Integer slot = mod_reduce(Integer(e) * exp_scale, d);
        std::size_t s = slot.convert_to<std::size_t>();
        v[s] = mod_reduce(v[s] + c, l_);
    }
    return v;
}

std::vector<Integer> GroupRingQuotient::multiply(const std::vector<Integer>& a,
                                                 const std::vector<Integer>& b) const {
    std::vector<Integer> v(d_, 0);
    for (std::size_t i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d_; ++j) {
            std::size_t k = (i + j) % d_;
            v[k] = mod_reduce(v[k] + a[i] * b[j], l_);
        }
    }
    return v;
}

IntMat GroupRingQuotient::ideal_lattice(const std::vector<Integer>& f) const {
    // Rows: the d cyclic shifts t^i * f, plus l * e_i. Equality of the
    // resulting row lattices is equality of the ideals as subsets.
    IntMat rows(2 * d_, d_);
    for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) rows(i, (i + j) % d_) = f[j];
        rows(d_ + i, i) = l_;
    }
    return hermite_row_basis(rows);
}

bool ideal_equal(const LaurentZ& a, const LaurentZ& b, const TruncatedProfiniteInt& mu,
                 const Integer& l, std::size_t d) {
    if (!mu.is_unit()) throw std::domain_error("ideal_equal: mu must be a unit");
    GroupRingQuotient ring(l, d);
    Integer m = mu.reduce(Integer(d));
    auto va = ring.reduce(a, m);
    auto vb = ring.reduce(b, 1);
    return ring.ideal_lattice(va) == ring.ideal_lattice(vb);
}

LaurentZ strip_cyclotomic_factors(const LaurentZ& f) {
    if (f.is_zero()) return f;
    LaurentZ g = f.shifted(-f.lowest_exp());
    long long deg = g.highest_exp();
    // phi(k) <= deg forces k within this bound.
    unsigned long kmax = static_cast<unsigned long>(2 * deg * deg + 6);
    for (unsigned long k = 1; k <= kmax; ++k) {
        LaurentZ phi_k = cyclotomic(k);
        if (phi_k.highest_exp() > deg) continue;
        while (divides(phi_k, g)) g = div_exact(g, phi_k);
        if (g.highest_exp() == 0) break;
    }
    return g;
}

std::string FriedComparison::str() const {
    switch (verdict) {
        case Verdict::equivalent: return "equivalent";
        case Verdict::distinguished: return "distinguished-at " + std::to_string(at_m);
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

FriedComparison fried_compare(const LaurentZ& a, const LaurentZ& b, unsigned long m_max) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("fried_compare: zero polynomial");
    if (!is_reciprocal(a) || !is_reciprocal(b))
        throw std::invalid_argument("fried_compare: inputs must be reciprocal");

    FriedComparison out;
    if (laurent_doteq(a, b, UnitGroup::PlusMinusOne)) {
        out.verdict = FriedComparison::Verdict::equivalent;
        return out;
    }
    LaurentZ ac = a.canonical(UnitGroup::PlusMinusOne);
    LaurentZ bc = b.canonical(UnitGroup::PlusMinusOne);
    LaurentZ sa = strip_cyclotomic_factors(ac);
    LaurentZ sb = strip_cyclotomic_factors(bc);
    for (unsigned long m = 1; m <= m_max; ++m) {
        if (cyclic_resultant(ac, m) != cyclic_resultant(bc, m) ||
            abs(cyclic_resultant(sa, m)) != abs(cyclic_resultant(sb, m))) {
            out.verdict = FriedComparison::Verdict::distinguished;
            out.at_m = m;
            return out;
        }
    }
    out.verdict = FriedComparison::Verdict::inconclusive;
    return out;
}

namespace {

IntMat mat_mod(const IntMat& m, const Integer& n) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = mod_reduce(m(i, j), n);
    return out;
}

bool invertible_mod(const IntMat& m, const Integer& n) {
    return gcd(mod_reduce(det(m), n), n) == 1;
}

// det(1 - t M) with coefficients reduced mod n.
LaurentZ char_series_mod(const IntMat& m, const Integer& n) {
    PolyMat p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            LaurentZ e = LaurentZ::monomial(-m(i, j), 1);
            if (i == j) e += LaurentZ::one();
            p(i, j) = e;
        }
    LaurentZ d = det(p);
    LaurentZ out;
    for (auto& [e, c] : d.coeffs()) out.set_coeff(e, mod_reduce(c, n));
    return out;
}

std::size_t matrix_order_mod(const IntMat& m, const Integer& n, std::size_t cap = 1000000) {
    IntMat id = IntMat::identity(m.rows());
    IntMat cur = mat_mod(m, n);
    std::size_t ord = 1;
    while (cur != id) {
        cur = mat_mod(cur * m, n);
        ++ord;
        if (ord > cap) throw std::domain_error("mu_conjugacy_check: matrix order exceeds cap");
    }
    return ord;
}

IntMat mat_pow_mod(const IntMat& m, Integer e, const Integer& n) {
    IntMat acc = IntMat::identity(m.rows());
    IntMat base = mat_mod(m, n);
    while (e > 0) {
        if ((e & 1) != 0) acc = mat_mod(acc * base, n);
        base = mat_mod(base * base, n);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool mu_conjugacy_check(const IntMat& a, const IntMat& b, const TruncatedProfiniteInt& mu,
                        const Integer& n, const ConjugacySearchOptions& opt) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("mu_conjugacy_check: shape mismatch");
    if (!invertible_mod(a, n) || !invertible_mod(b, n))
        throw std::domain_error("mu_conjugacy_check: matrix singular mod N");
    if (!mu.is_unit()) throw std::domain_error("mu_conjugacy_check: mu must be a unit");

    std::size_t r = a.rows();
    std::size_t ordb = matrix_order_mod(b, n);
    Integer e = mu.reduce(Integer(ordb));
    IntMat bmu = mat_pow_mod(b, e, n);
    IntMat am = mat_mod(a, n);

    // Necessary condition first; it is decisive in the negative direction.
    if (char_series_mod(am, n) != char_series_mod(bmu, n)) return false;

    // Exhaustive search when the matrix space is small enough.
    Integer space = 1;
    bool small = true;
    for (std::size_t i = 0; i < r * r && small; ++i) {
        space *= n;
        if (space > Integer(opt.exhaustive_bound)) small = false;
    }
    if (small) {
        std::size_t total = space.convert_to<std::size_t>();
        std::size_t nn = n.convert_to<std::size_t>();
        for (std::size_t code = 0; code < total; ++code) {
            IntMat v(r, r);
            std::size_t c = code;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    v(i, j) = Integer(c % nn);
                    c /= nn;
                }
            if (!invertible_mod(v, n)) continue;
            if (mat_mod(v * am, n) == mat_mod(bmu * v, n)) return true;
        }
        return false;
    }

    // Bounded randomized conjugator search (deterministic per seed).
    std::mt19937_64 rng(opt.seed);
    std::size_t nn_cap = 1u << 30;
    std::uniform_int_distribution<unsigned long long> dist(0, n > Integer(nn_cap)
                                                                  ? nn_cap
                                                                  : n.convert_to<unsigned long long>() - 1);
    for (std::size_t t = 0; t < opt.random_tries; ++t) {
        IntMat v(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) v(i, j) = Integer(dist(rng));
        if (!invertible_mod(v, n)) continue;
        if (mat_mod(v * am, n) == mat_mod(bmu * v, n)) return true;
    }
    return false;
}

}  // namespace pft
