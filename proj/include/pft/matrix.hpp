#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pft/integer.hpp"
#include "pft/laurent.hpp"

namespace pft {

// Dense matrix over an exact coefficient domain (Integer, Rational,
// LaurentZ, LaurentQ). Row-major, value semantics.
template <typename T>
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
    Mat(std::size_t r, std::size_t c, std::vector<T> entries) : r_(r), c_(c), a_(std::move(entries)) {
        if (a_.size() != r * c) throw std::invalid_argument("Mat: entry count mismatch");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }
    Mat operator-() const {
        Mat m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }
    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    m(i, j) = m(i, j) + aik * o(k, j);
            }
        return m;
    }
    Mat operator*(const T& s) const {
        Mat m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
        return m;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(c_);
        for (std::size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    // Submatrix picking the given rows and columns, in order.
    Mat submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
        Mat m(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) m(i, j) = (*this)(ri[i], ci[j]);
        return m;
    }

    template <typename U, typename F>
    Mat<U> map(F f) const {
        Mat<U> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch");
    }

    std::size_t r_, c_;
    std::vector<T> a_;
};

using IntMat = Mat<Integer>;
using RatMat = Mat<Rational>;
using PolyMat = Mat<LaurentZ>;

// Exact division hooks for the fraction-free elimination.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0 || a % b != 0) throw std::domain_error("exact_div: not divisible");
    return a / b;
}
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    return a / b;
}
inline LaurentZ exact_div(const LaurentZ& a, const LaurentZ& b) { return div_exact(a, b); }
inline LaurentQ exact_div(const LaurentQ& a, const LaurentQ& b) { return div_exact(a, b); }

// Determinant by Bareiss fraction-free elimination; valid over any of the
// supported exact domains.
template <typename T>
T det(Mat<T> m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? T(-d) : d;
}

// Adjugate by cofactor expansion; adj(M) * M = det(M) * I.
template <typename T>
Mat<T> adjugate(const Mat<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    std::size_t n = m.rows();
    Mat<T> adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> ri, ci;
            for (auto r : all)
                if (r != i) ri.push_back(r);
            for (auto c : all)
                if (c != j) ci.push_back(c);
            T minor_det = det(m.submatrix(ri, ci));
            adj(j, i) = ((i + j) % 2 == 0) ? minor_det : T(-minor_det);
        }
    return adj;
}

// --- rational linear algebra ----------------------------------------------

// Reduced row echelon form in place; returns rank and records pivot columns.
std::size_t rref(RatMat& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RatMat& m);
std::size_t rank(const IntMat& m);

// Solves m * x = b over the rationals; returns false if inconsistent.
bool solve(const RatMat& m, const std::vector<Rational>& b, std::vector<Rational>* x);

// Inverse of a square rational matrix; throws on singular input.
RatMat inverse(const RatMat& m);

// Inverse of a unimodular integer matrix (det must be +-1).
IntMat inverse_unimodular(const IntMat& m);

// Basis of the rational null space, as matrix columns.
RatMat nullspace(const RatMat& m);

inline RatMat to_rational(const IntMat& m) {
    return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

template <typename T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return out;
}

}  // namespace pft
