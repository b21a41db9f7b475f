#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "exptrop/error.hpp"
#include "exptrop/scalar.hpp"

namespace exptrop {

using RealVec = std::vector<ExactReal>;
using ComplexVec = std::vector<ExactComplex>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    T s{};
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    }
    return s;
}

template <class T>
std::vector<T> add(std::vector<T> a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sum of vectors of different length");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

template <class T>
std::vector<T> sub(std::vector<T> a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("difference of vectors of different length");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

template <class T>
std::vector<T> scale(std::vector<T> a, const T& s) {
    for (auto& x : a) x *= s;
    return a;
}

template <class T>
bool is_zero_vector(const std::vector<T>& a) {
    return std::all_of(a.begin(), a.end(), [](const T& x) { return x.is_zero(); });
}

/**
 * In-place reduced row echelon form. Columns are scanned in the order given by
 * `order` (all columns, left to right, when empty). Zero rows are dropped.
 * Returns the pivot column of each remaining row.
 */
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m, std::size_t cols, std::vector<std::size_t> order = {}) {
    if (order.empty()) {
        order.resize(cols);
        for (std::size_t c = 0; c < cols; ++c) order[c] = c;
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c : order) {
        if (row >= m.size()) break;
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const T inv = m[row][c].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            const T f = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) {
                if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
            }
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    return rref(m, cols).size();
}

/**
 * Basis of {x : m x = 0}. Pivots are taken from the rightmost columns first, so
 * the basis vectors carry a 1 in the leftmost free coordinates; e.g. the kernel
 * of the row (a, -1) is spanned by (1, a).
 */
template <class T>
Matrix<T> nullspace(Matrix<T> m, std::size_t cols) {
    std::vector<std::size_t> order(cols);
    for (std::size_t c = 0; c < cols; ++c) order[c] = cols - 1 - c;
    const auto pivots = rref(m, cols, order);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix<T> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m, std::size_t cols) {
    Matrix<T> t(cols, std::vector<T>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
    return t;
}

template <class T>
T determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return T(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const T inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const T f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Some solution of m x = rhs, or throws PreconditionError when the system is inconsistent.
template <class T>
std::vector<T> solve_linear(Matrix<T> m, const std::vector<T>& rhs, std::size_t cols) {
    if (m.size() != rhs.size()) throw DimensionMismatch("right-hand side length");
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
    const auto pivots = rref(m, cols + 1);
    std::vector<T> x(cols, T(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) throw PreconditionError("inconsistent linear system");
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

inline ComplexVec to_complex_vec(const RealVec& v) { return ComplexVec(v.begin(), v.end()); }

}  // namespace exptrop
