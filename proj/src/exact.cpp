#include "pft/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pft {

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

LaurentZ module_order(const PolyMat& p) {
    std::size_t r = p.rows(), c = p.cols();
    if (r == 0) return LaurentZ::one();  // trivial module
    if (c < r) return LaurentZ();        // free rank >= r - c > 0
    std::vector<std::size_t> all_rows(r);
    for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
    LaurentZ g;
    for_each_subset(c, r, [&](const std::vector<std::size_t>& cols) {
        LaurentZ minor_det = det(p.submatrix(all_rows, cols));
        g = laurent_gcd(g, minor_det);
    });
    return g.canonical(UnitGroup::PlusMinusOne);
}

Integer cyclic_resultant(const LaurentZ& f, unsigned long m) {
    if (f.is_zero()) throw std::domain_error("cyclic_resultant: zero polynomial");
    if (m == 0) throw std::invalid_argument("cyclic_resultant: m must be >= 1");
    long long lo = f.lowest_exp();
    LaurentZ poly = f.shifted(-lo);
    LaurentZ tm = LaurentZ::monomial(1, static_cast<long long>(m)) - LaurentZ::one();
    Integer base = resultant(tm, poly);
    // The t^lo factor contributes (prod of all m-th roots of unity)^lo.
    if (m % 2 == 0 && (lo % 2 != 0)) return -base;
    return base;
}

bool is_reciprocal(const LaurentZ& f) {
    if (f.is_zero()) return true;
    LaurentZ p = f.shifted(-f.lowest_exp());
    long long r = p.highest_exp();
    for (long long i = 0; i <= r; ++i)
        if (p.coeff(i) != p.coeff(r - i)) return false;
    return true;
}

AnnihilatorWitness annihilator_witness(const PolyMat& p) {
    std::size_t r = p.rows(), c = p.cols();
    AnnihilatorWitness out;
    out.q = PolyMat(c, r);
    if (p.is_zero()) {
        out.a = LaurentZ::one();
        return out;
    }

    // Largest k with a nonsingular k x k submatrix (the rank of P over the
    // fraction field), located by direct minor search; sizes here are small.
    std::size_t maxk = std::min(r, c);
    for (std::size_t k = maxk; k >= 1; --k) {
        std::vector<std::size_t> found_rows, found_cols;
        LaurentZ found_det;
        bool found = false;
        for_each_subset(r, k, [&](const std::vector<std::size_t>& ri) {
            if (found) return;
            for_each_subset(c, k, [&](const std::vector<std::size_t>& ci) {
                if (found) return;
                LaurentZ d = det(p.submatrix(ri, ci));
                if (!d.is_zero()) {
                    found = true;
                    found_rows = ri;
                    found_cols = ci;
                    found_det = d;
                }
            });
        });
        if (!found) continue;

        // Q carries adj(block) at the transposed index positions.
        PolyMat block = p.submatrix(found_rows, found_cols);
        PolyMat adj = adjugate(block);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) out.q(found_cols[i], found_rows[j]) = adj(i, j);
        out.a = found_det;
        return out;
    }
    throw std::logic_error("annihilator_witness: unreachable");
}

}  // namespace pft
