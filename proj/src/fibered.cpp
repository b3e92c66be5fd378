#include "pft/fibered.hpp"

#include <algorithm>

namespace pft {

SurfaceComplex surface_chain_complex(const SurfaceSpec& s) {
    SurfaceComplex out;
    out.surface = s;
    std::size_t n = s.generator_count();
    out.d1 = Mat<GroupRingElem>(1, n);
    for (std::size_t i = 0; i < n; ++i)
        out.d1(0, i) = GroupRingElem::of_word(FreeWord::generator(i)) - GroupRingElem(1);
    if (s.closed()) {
        out.ranks = {1, n, 1};
        out.d2 = Mat<GroupRingElem>(n, 1);
        FreeWord rel = surface_relator(s.genus);
        for (std::size_t i = 0; i < n; ++i) out.d2(i, 0) = fox_derivative(rel, i);
    } else {
        out.ranks = {1, n};
    }
    return out;
}

Representation Representation::trivial(std::size_t generator_count) {
    Representation r;
    r.dim = 1;
    r.generator_images.assign(generator_count, IntMat::identity(1));
    r.stable_letter_image = IntMat::identity(1);
    r.declared_group_order = 1;
    return r;
}

bool Representation::trivial_on_surface() const {
    IntMat id = IntMat::identity(dim);
    for (auto& m : generator_images)
        if (m != id) return false;
    return true;
}

namespace {

void check_finite_order(const IntMat& m, const Integer& declared, const std::string& what) {
    Integer d = det(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument(what + ": matrix is not invertible over Z");
    IntMat id = IntMat::identity(m.rows());
    IntMat cur = m;
    Integer ord = 1;
    while (cur != id) {
        cur = cur * m;
        ++ord;
        if (ord > declared)
            throw std::invalid_argument(what + ": order exceeds the declared group order");
    }
    if (declared % ord != 0)
        throw std::invalid_argument(what + ": order does not divide the declared group order");
}

}  // namespace

void FiberedPresentation::validate() const {
    std::size_t n = surface.generator_count();
    if (monodromy_h1.rows() != n || monodromy_h1.cols() != n)
        throw std::invalid_argument("fibered presentation: monodromy size mismatch with H_1 rank");
    Integer d = det(monodromy_h1);
    if (d != 1 && d != -1)
        throw std::invalid_argument("fibered presentation: monodromy not invertible over Z");
    if (rep.generator_images.size() != n)
        throw std::invalid_argument("fibered presentation: one representation matrix per generator required");
    if (rep.declared_group_order < 1)
        throw std::invalid_argument("fibered presentation: declared group order must be positive");
    for (auto& m : rep.generator_images) {
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw std::invalid_argument("fibered presentation: representation dimension mismatch");
        check_finite_order(m, rep.declared_group_order, "representation generator image");
    }
    if (rep.stable_letter_image.rows() != rep.dim || rep.stable_letter_image.cols() != rep.dim)
        throw std::invalid_argument("fibered presentation: stable letter dimension mismatch");
    check_finite_order(rep.stable_letter_image, rep.declared_group_order, "stable letter image");
}

namespace {

// sigma(w) as a k x k integer matrix.
IntMat apply_word(const std::vector<IntMat>& images, const std::vector<IntMat>& inverses,
                  std::size_t k, const FreeWord& w) {
    IntMat acc = IntMat::identity(k);
    for (int l : w.letters()) {
        std::size_t idx = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
        if (idx >= images.size()) throw std::invalid_argument("word uses an unknown generator");
        acc = acc * (l > 0 ? images[idx] : inverses[idx]);
    }
    return acc;
}

IntMat apply_ring(const std::vector<IntMat>& images, const std::vector<IntMat>& inverses,
                  std::size_t k, const GroupRingElem& e) {
    IntMat acc(k, k);
    for (auto& [w, c] : e.terms()) acc = acc + apply_word(images, inverses, k, w) * c;
    return acc;
}

// Twisted boundary: each group-ring entry becomes a k x k block.
IntMat twist(const Mat<GroupRingElem>& d, const std::vector<IntMat>& images,
             const std::vector<IntMat>& inverses, std::size_t k) {
    IntMat out(d.rows() * k, d.cols() * k);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            IntMat block = apply_ring(images, inverses, k, d(i, j));
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t q = 0; q < k; ++q) out(i * k + p, j * k + q) = block(p, q);
        }
    return out;
}

struct QuotientData {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
};

// ker(a) / im(b) with a*b = 0; b may be empty (then the image is zero).
QuotientData kernel_mod_image(const IntMat& a, const IntMat* b) {
    IntMat k = kernel_basis(a);
    QuotientData out;
    if (b == nullptr || b->cols() == 0 || b->is_zero()) {
        out.free_rank = k.cols();
        return out;
    }
    // Coordinates of each image generator in the kernel basis; integral
    // because the kernel lattice is saturated.
    RatMat kq = to_rational(k);
    IntMat y(k.cols(), b->cols());
    for (std::size_t j = 0; j < b->cols(); ++j) {
        std::vector<Rational> rhs(b->rows());
        for (std::size_t i = 0; i < b->rows(); ++i) rhs[i] = Rational((*b)(i, j));
        std::vector<Rational> sol;
        if (!solve(kq, rhs, &sol))
            throw std::logic_error("kernel_mod_image: image not contained in kernel");
        for (std::size_t i = 0; i < k.cols(); ++i) {
            if (denominator(sol[i]) != 1)
                throw std::logic_error("kernel_mod_image: non-integral kernel coordinates");
            y(i, j) = numerator(sol[i]);
        }
    }
    SmithDecomposition s = smith_form(y);
    out.free_rank = k.cols() - s.rank;
    for (auto& d : s.invariant_factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// Induced matrix of an endomorphism on the free part of coker(m).
// Requires endo(im m) <= im m: the column lattice of [m | endo*m] must
// equal that of m.
std::optional<IntMat> induced_on_cokernel(const IntMat& m, const IntMat& endo) {
    IntMat tm = endo * m;
    IntMat combined(m.rows(), m.cols() + tm.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) combined(i, j) = m(i, j);
        for (std::size_t j = 0; j < tm.cols(); ++j) combined(i, m.cols() + j) = tm(i, j);
    }
    if (hermite_row_basis(m.transpose()) != hermite_row_basis(combined.transpose()))
        return std::nullopt;
    CokernelSplit split = cokernel_split(m);
    return split.projection * endo * split.section;
}

}  // namespace

TwistedHomologyResult twisted_homology(const FiberedPresentation& fp) {
    fp.validate();
    SurfaceComplex cx = surface_chain_complex(fp.surface);
    std::size_t k = fp.rep.dim;
    std::vector<IntMat> inverses;
    inverses.reserve(fp.rep.generator_images.size());
    for (auto& m : fp.rep.generator_images) inverses.push_back(inverse_unimodular(m));

    IntMat d1 = twist(cx.d1, fp.rep.generator_images, inverses, k);
    bool closed = fp.surface.closed();
    IntMat d2;
    if (closed) d2 = twist(cx.d2, fp.rep.generator_images, inverses, k);

    TwistedHomologyResult out;
    out.degrees.resize(3);

    // Degree 0: cokernel of d1, action always induced by the stable letter.
    CokernelSplit h0 = cokernel_split(d1);
    out.degrees[0].free_rank = h0.free_rank;
    out.degrees[0].torsion = h0.torsion;
    out.degrees[0].action = induced_on_cokernel(d1, fp.rep.stable_letter_image);

    // Degree 1.
    QuotientData h1 = kernel_mod_image(d1, closed ? &d2 : nullptr);
    out.degrees[1].free_rank = h1.free_rank;
    out.degrees[1].torsion = h1.torsion;

    // Degree 2.
    if (closed) {
        IntMat k2 = kernel_basis(d2);
        out.degrees[2].free_rank = k2.cols();
    }

    if (fp.rep.trivial_on_surface()) {
        // Tensor structure H_n(S; Z) (x) Z^k: the ingested H_1 matrix and
        // the stable letter image determine every action.
        const IntMat& t = fp.rep.stable_letter_image;
        std::size_t h1_rank = fp.surface.h1_rank();
        if (out.degrees[0].free_rank != k || out.degrees[1].free_rank != h1_rank * k ||
            (closed && out.degrees[2].free_rank != k))
            throw std::logic_error("twisted_homology: tensor rank cross-check failed");
        out.degrees[0].action = t;
        out.degrees[1].action = kronecker(fp.monodromy_h1, t);
        if (closed) out.degrees[2].action = t;
    }
    return out;
}

LaurentZ monodromy_char_poly(const FiberedPresentation& fp, unsigned degree) {
    TwistedHomologyResult th = twisted_homology(fp);
    if (degree >= th.degrees.size() || th.degrees[degree].free_rank == 0) return LaurentZ::one();
    if (!th.degrees[degree].action.has_value())
        throw std::domain_error(
            "monodromy action unavailable in degree " + std::to_string(degree) +
            " for this representation");
    const IntMat& f = *th.degrees[degree].action;
    PolyMat p(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            p(i, j) = LaurentZ::monomial(-f(i, j), 1);
            if (i == j) p(i, j) += LaurentZ::one();
        }
    LaurentZ out = det(p);
    if (out.coeff(0) != 1)
        throw std::logic_error("monodromy_char_poly: constant coefficient must be 1");
    Integer lead = out.is_zero() ? Integer(0) : out.leading_coeff();
    if (!out.is_zero() && out.highest_exp() == static_cast<long long>(f.rows()) && lead != 1 &&
        lead != -1)
        throw std::logic_error("monodromy_char_poly: leading coefficient must be +-1");
    return out;
}

LaurentQ twisted_alexander(const FiberedPresentation& fp, unsigned degree) {
    return to_rational(monodromy_char_poly(fp, degree)).canonical(UnitGroup::NonzeroRational);
}

TorsionResult reidemeister_torsion(const FiberedPresentation& fp) {
    LaurentZ p0 = monodromy_char_poly(fp, 0);
    LaurentZ p1 = monodromy_char_poly(fp, 1);
    LaurentZ p2 = monodromy_char_poly(fp, 2);
    TorsionResult out;
    if (p0.is_zero() || p1.is_zero() || p2.is_zero()) {
        out.zero = true;
        return out;
    }
    LaurentZ num = p1;
    LaurentZ den = p0 * p2;
    LaurentZ g = laurent_gcd(num, den);
    num = div_exact(num, g);
    den = div_exact(den, g);
    out.numerator = to_rational(num).canonical(UnitGroup::NonzeroRational);
    out.denominator = to_rational(den).canonical(UnitGroup::NonzeroRational);
    return out;
}

bool fiberedness_evidence(const FiberedPresentation& fp, const Integer& q) {
    if (q < 2) throw std::invalid_argument("fiberedness_evidence: modulus must be >= 2");
    LaurentZ p1 = monodromy_char_poly(fp, 1);
    for (auto& [e, c] : p1.coeffs())
        if (mod_reduce(c, q) != 0) return true;
    return false;
}

DualityReport duality_check(const FiberedPresentation& fp) {
    FiberedPresentation bar = fp;
    for (auto& m : bar.rep.generator_images) m = inverse_unimodular(m).transpose();
    bar.rep.stable_letter_image = inverse_unimodular(fp.rep.stable_letter_image).transpose();

    auto delta = [](const FiberedPresentation& f, unsigned n) {
        return to_rational(monodromy_char_poly(f, n));
    };
    auto pair_check = [&](unsigned n_plain, unsigned n_bar) {
        LaurentQ lhs = delta(fp, n_plain);
        LaurentQ rhs = delta(bar, n_bar).reversed();
        return laurent_doteq(lhs, rhs, UnitGroup::NonzeroRational);
    };

    DualityReport out;
    if (!fp.surface.closed()) {
        out.pairings.push_back({"Delta_0(t) ~ Delta-bar_0(1/t)", pair_check(0, 0)});
        out.pairings.push_back({"Delta_1(t) ~ Delta-bar_1(1/t)", pair_check(1, 1)});
        bool d2_trivial =
            laurent_doteq(delta(fp, 2), LaurentQ(Rational(1)), UnitGroup::NonzeroRational);
        out.pairings.push_back({"Delta_2 ~ 1", d2_trivial});
    } else {
        out.pairings.push_back({"Delta_0(t) ~ Delta-bar_2(1/t)", pair_check(0, 2)});
        out.pairings.push_back({"Delta_1(t) ~ Delta-bar_1(1/t)", pair_check(1, 1)});
        out.pairings.push_back({"Delta_2(t) ~ Delta-bar_0(1/t)", pair_check(2, 0)});
    }
    for (auto& p : out.pairings) out.all_pass = out.all_pass && p.pass;
    return out;
}

std::vector<IntMat> realize_over_integers(const std::vector<RatMat>& images) {
    if (images.empty()) return {};
    std::size_t k = images[0].rows();
    for (auto& m : images)
        if (m.rows() != k || m.cols() != k)
            throw std::invalid_argument("realize_over_integers: shape mismatch");

    // Generate the finite group of the given matrices.
    auto key = [&](const RatMat& m) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s += to_string(m(i, j)) + ",";
        return s;
    };
    std::vector<RatMat> elems{RatMat(IntMat::identity(k).map<Rational>(
        [](const Integer& x) { return Rational(x); }))};
    std::vector<std::string> seen{key(elems[0])};
    for (std::size_t cur = 0; cur < elems.size(); ++cur) {
        for (auto& g : images) {
            RatMat next = elems[cur] * g;
            std::string s = key(next);
            if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
            if (elems.size() > 10000)
                throw std::domain_error("realize_over_integers: group too large");
            seen.push_back(s);
            elems.push_back(next);
        }
    }

    // Invariant lattice: intersection of g(Z^k) over all group elements,
    // computed by pairwise lattice intersection.
    auto intersect = [&](const RatMat& l, const RatMat& m) {
        // L cap M = L * K, K = {y : M^-1 L y integral}.
        RatMat x = inverse(m) * l;
        Integer s = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s = lcm(s, denominator(x(i, j)));
        IntMat r(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                r(i, j) = numerator(x(i, j)) * (s / denominator(x(i, j)));
        // y with R y = s w: kernel of [R | -sI], y-part.
        IntMat stacked(k, 2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) stacked(i, j) = r(i, j);
            stacked(i, k + i) = -s;
        }
        IntMat ker = kernel_basis(stacked);
        IntMat ypart(k, ker.cols());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < ker.cols(); ++j) ypart(i, j) = ker(i, j);
        IntMat basis = hermite_row_basis(ypart.transpose()).transpose();
        return l * to_rational(basis);
    };

    RatMat lattice = elems[0];  // identity: Z^k
    for (auto& g : elems) lattice = intersect(lattice, g);

    RatMat tinv = inverse(lattice);
    std::vector<IntMat> out;
    for (auto& g : images) {
        RatMat conj = tinv * g * lattice;
        IntMat z(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (denominator(conj(i, j)) != 1)
                    throw std::logic_error("realize_over_integers: lattice not invariant");
                z(i, j) = numerator(conj(i, j));
            }
        out.push_back(z);
    }
    return out;
}

}  // namespace pft
