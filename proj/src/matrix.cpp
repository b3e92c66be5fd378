#include "pft/matrix.hpp"

namespace pft {

std::size_t rref(RatMat& m, std::vector<std::size_t>* pivot_cols) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0, r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (; r < rows && lead < cols; ++lead) {
        std::size_t i = r;
        while (i < rows && m(i, lead) == 0) ++i;
        if (i == rows) continue;
        if (i != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(i, j), m(r, j));
        Rational piv = m(r, lead);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) = m(r, j) / piv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r) continue;
            Rational f = m(k, lead);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m(k, j) = m(k, j) - f * m(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(lead);
        ++r;
    }
    return r;
}

std::size_t rank(const RatMat& m) {
    RatMat w = m;
    return rref(w);
}

std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

bool solve(const RatMat& m, const std::vector<Rational>& b, std::vector<Rational>* x) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RatMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots;
    rref(aug, &pivots);
    for (auto p : pivots)
        if (p == m.cols()) return false;  // pivot in the constant column
    x->assign(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) (*x)[pivots[r]] = aug(r, m.cols());
    return true;
}

RatMat inverse(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    std::size_t rk = rref(aug, &pivots);
    if (rk != n) throw std::domain_error("inverse: singular matrix");
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
    RatMat inv = inverse(to_rational(m));
    IntMat out(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (denominator(inv(i, j)) != 1)
                throw std::domain_error("inverse_unimodular: matrix is not unimodular");
            out(i, j) = numerator(inv(i, j));
        }
    return out;
}

RatMat nullspace(const RatMat& m) {
    RatMat w = m;
    std::vector<std::size_t> pivots;
    std::size_t rk = rref(w, &pivots);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    RatMat basis(n, n - rk);
    std::size_t bcol = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis(free, bcol) = 1;
        for (std::size_t r = 0; r < rk; ++r) basis(pivots[r], bcol) = -w(r, free);
        ++bcol;
    }
    return basis;
}

}  // namespace pft
