#pragma once

#include <cstddef>
#include <vector>

#include "wmin/errors.hpp"

namespace wmin {

/* Dense matrices over an exact field scalar (Rational, Gaussian or
   RadicalScalar). Everything is plain Gaussian elimination; sizes here are
   at most ~100, so no care beyond exactness is needed. */
template <class S>
struct Mat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<S> data;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), data(r * c, S(0)) {}

    S& at(size_t i, size_t j) { return data[i * cols + j]; }
    const S& at(size_t i, size_t j) const { return data[i * cols + j]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    Mat transposed() const {
        Mat t(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols != b.rows) throw InternalError("matrix product shape mismatch");
        Mat c(a.rows, b.cols);
        for (size_t i = 0; i < a.rows; ++i)
            for (size_t k = 0; k < a.cols; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

/* In-place reduced row echelon form; returns the pivot column of each
   pivot row in order. */
template <class S>
std::vector<size_t> rref(Mat<S>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        S inv = S(1) / m.at(row, col);
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            S f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
size_t rank(Mat<S> m) {
    return rref(m).size();
}

/* Basis of the right kernel, one vector per free column, deterministic
   (free variable set to 1, others 0). */
template <class S>
std::vector<std::vector<S>> nullspace(Mat<S> m) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(m.cols, S(0));
        v[free] = S(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/* Unique solution of A x = b; throws on inconsistent or underdetermined
   systems (callers rely on uniqueness). */
template <class S>
std::vector<S> solve_unique(Mat<S> a, std::vector<S> b) {
    if (a.rows != b.size()) throw InternalError("solve shape mismatch");
    Mat<S> aug(a.rows, a.cols + 1);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    for (size_t p : pivots)
        if (p == a.cols) throw InternalError("inconsistent linear system");
    if (pivots.size() != a.cols) throw InternalError("underdetermined linear system");
    std::vector<S> x(a.cols, S(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
    return x;
}

template <class S>
Mat<S> inverse(Mat<S> a) {
    if (a.rows != a.cols) throw InternalError("inverse of non-square matrix");
    size_t n = a.rows;
    Mat<S> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = S(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw InternalError("inverse of singular matrix");
    Mat<S> out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

template <class S>
S determinant(Mat<S> m) {
    if (m.rows != m.cols) throw InternalError("determinant of non-square matrix");
    S det = S(1);
    size_t n = m.rows;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m.at(sel, col).is_zero()) ++sel;
        if (sel == n) return S(0);
        if (sel != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        S inv = S(1) / m.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            S f = m.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return det;
}

}  // namespace wmin
