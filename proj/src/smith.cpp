#include "pft/smith.hpp"

namespace pft {

namespace {

struct Worker {
    IntMat a, u, v;

    explicit Worker(const IntMat& m)
        : a(m), u(IntMat::identity(m.rows())), v(IntMat::identity(m.cols())) {}

    std::size_t rows() const { return a.rows(); }
    std::size_t cols() const { return a.cols(); }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols(); ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < rows(); ++k) std::swap(u(i, k), u(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows(); ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < cols(); ++k) std::swap(v(k, i), v(k, j));
    }
    // row i -= q * row j
    void row_sub(std::size_t i, std::size_t j, const Integer& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < cols(); ++k) a(i, k) -= q * a(j, k);
        for (std::size_t k = 0; k < rows(); ++k) u(i, k) -= q * u(j, k);
    }
    // col i -= q * col j
    void col_sub(std::size_t i, std::size_t j, const Integer& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < rows(); ++k) a(k, i) -= q * a(k, j);
        for (std::size_t k = 0; k < cols(); ++k) v(k, i) -= q * v(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols(); ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < rows(); ++k) u(i, k) = -u(i, k);
    }
    void col_add(std::size_t i, std::size_t j) { col_sub(i, j, Integer(-1)); }
};

}  // namespace

SmithDecomposition smith_form(const IntMat& m) {
    Worker w(m);
    std::size_t rows = w.rows(), cols = w.cols();
    std::size_t n = std::min(rows, cols);

    for (std::size_t k = 0; k < n; ++k) {
        // Find a pivot of minimal absolute value in the remaining block.
        bool found = false;
        while (true) {
            std::size_t pi = k, pj = k;
            Integer best = 0;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    Integer x = abs(w.a(i, j));
                    if (x != 0 && (best == 0 || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // remaining block is zero
            found = true;
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            if (w.a(k, k) < 0) w.negate_row(k);

            // Clear column and row k; restart pivot search if a remainder
            // smaller than the pivot appears.
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                Integer q = w.a(i, k) / w.a(k, k);
                w.row_sub(i, k, q);
                if (w.a(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                Integer q = w.a(k, j) / w.a(k, k);
                w.col_sub(j, k, q);
                if (w.a(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility sweep: pivot must divide the remaining block.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < cols && divides_all; ++j)
                    if (w.a(i, j) % w.a(k, k) != 0) {
                        // Fold the offending row into row k and restart.
                        w.row_sub(k, i, Integer(-1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (!found) break;
    }

    SmithDecomposition out;
    out.invariant_factors.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.invariant_factors[k] = w.a(k, k);
        if (w.a(k, k) != 0) ++out.rank;
    }
    out.U = std::move(w.u);
    out.V = std::move(w.v);
    return out;
}

IntMat kernel_basis(const IntMat& m) {
    if (m.cols() == 0) return IntMat(0, 0);
    if (m.rows() == 0) return IntMat::identity(m.cols());
    SmithDecomposition s = smith_form(m);
    std::size_t dim = m.cols() - s.rank;
    IntMat basis(m.cols(), dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j) = s.V(i, s.rank + j);
    return basis;
}

IntMat hermite_row_basis(const IntMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> work;
    for (std::size_t i = 0; i < rows; ++i) work.push_back(m.row(i));

    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t j = 0; j < cols && r < work.size(); ++j) {
        // Euclid down column j on rows r.. until one nonzero entry remains.
        while (true) {
            std::size_t nz = work.size();
            for (std::size_t i = r; i < work.size(); ++i)
                if (work[i][j] != 0 && (nz == work.size() || abs(work[i][j]) < abs(work[nz][j]))) nz = i;
            if (nz == work.size()) break;  // column zero below r
            std::swap(work[r], work[nz]);
            if (work[r][j] < 0)
                for (auto& x : work[r]) x = -x;
            bool done = true;
            for (std::size_t i = r + 1; i < work.size(); ++i) {
                if (work[i][j] == 0) continue;
                Integer q = work[i][j] / work[r][j];
                for (std::size_t t = 0; t < cols; ++t) work[i][t] -= q * work[r][t];
                if (work[i][j] != 0) done = false;
            }
            if (done) break;
        }
        if (r < work.size() && work[r][j] != 0) {
            pivot_col.push_back(j);
            ++r;
        }
    }
    // Reduce above-pivot entries into [0, pivot).
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        std::size_t j = pivot_col[k];
        for (std::size_t i = 0; i < k; ++i) {
            Integer q = work[i][j] / work[k][j];
            if (work[i][j] - q * work[k][j] < 0) q -= 1;
            for (std::size_t t = 0; t < cols; ++t) work[i][t] -= q * work[k][t];
        }
    }
    IntMat out(pivot_col.size(), cols);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = work[i][j];
    return out;
}

CokernelSplit cokernel_split(const IntMat& m) {
    SmithDecomposition s = smith_form(m);
    std::size_t rows = m.rows();
    CokernelSplit out;
    out.free_rank = rows - s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.invariant_factors[i] > 1) out.torsion.push_back(s.invariant_factors[i]);

    // In U-coordinates the image is spanned by d_i * e_i for i < rank, so
    // the free quotient is read off the trailing rows of U.
    out.projection = IntMat(out.free_rank, rows);
    for (std::size_t i = 0; i < out.free_rank; ++i)
        for (std::size_t j = 0; j < rows; ++j) out.projection(i, j) = s.U(s.rank + i, j);

    IntMat uinv = inverse_unimodular(s.U);
    out.section = IntMat(rows, out.free_rank);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < out.free_rank; ++j) out.section(i, j) = uinv(i, s.rank + j);
    return out;
}

}  // namespace pft
