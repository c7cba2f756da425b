#pragma once

// Dense exact linear algebra over any supported field.  Everything here is
// plain Gaussian elimination; sizes are small (dimensions are extension
// degrees, rarely above a few dozen).

#include <optional>
#include <vector>

#include "composita/fields.hpp"

namespace composita {

/// Row-major dense matrix of field values.
struct Mat {
    Field k;
    std::size_t rows = 0, cols = 0;
    std::vector<Value> a;

    Mat() = default;
    Mat(Field field, std::size_t r, std::size_t c)
        : k(std::move(field)), rows(r), cols(c), a(r * c, k.zero()) {}

    Value& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Value& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Mat identity(const Field& k, std::size_t n) {
        Mat m(k, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
        return m;
    }

    static Mat from_rows(const Field& k, const std::vector<std::vector<Value>>& rows_in) {
        std::size_t c = rows_in.empty() ? 0 : rows_in[0].size();
        Mat m(k, rows_in.size(), c);
        for (std::size_t i = 0; i < rows_in.size(); ++i) {
            if (rows_in[i].size() != c) throw internal_error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    static Mat from_columns(const Field& k, const std::vector<std::vector<Value>>& cols_in) {
        std::size_t r = cols_in.empty() ? 0 : cols_in[0].size();
        Mat m(k, r, cols_in.size());
        for (std::size_t j = 0; j < cols_in.size(); ++j) {
            if (cols_in[j].size() != r) throw internal_error("ragged matrix columns");
            for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols_in[j][i];
        }
        return m;
    }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw internal_error("matrix shape mismatch");
    Mat r(x.k, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t kk = 0; kk < x.cols; ++kk) {
            if (x.k.is_zero(x.at(i, kk))) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = x.k.add(r.at(i, j), x.k.mul(x.at(i, kk), y.at(kk, j)));
        }
    return r;
}

inline std::vector<Value> mat_apply(const Mat& m, const std::vector<Value>& v) {
    if (m.cols != v.size()) throw internal_error("matrix/vector shape mismatch");
    std::vector<Value> r(m.rows, m.k.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.k.is_zero(m.at(i, j)))
                r[i] = m.k.add(r[i], m.k.mul(m.at(i, j), v[j]));
    return r;
}

/// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> mat_rref(Mat& m) {
    const Field& k = m.k;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && k.is_zero(m.at(pr, col))) ++pr;
        if (pr == m.rows) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        Value inv = k.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            Value f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t mat_rank(Mat m) { return mat_rref(m).size(); }

/// Basis of the right kernel {v : M v = 0}.
inline std::vector<std::vector<Value>> mat_kernel(Mat m) {
    const Field& k = m.k;
    auto pivots = mat_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Value>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Value> v(m.cols, k.zero());
        v[free_col] = k.one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = k.neg(m.at(pi, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of M x = b, if any.
inline std::optional<std::vector<Value>> mat_solve(const Mat& m, const std::vector<Value>& b) {
    if (b.size() != m.rows) throw internal_error("matrix/vector shape mismatch");
    const Field& k = m.k;
    Mat aug(k, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = mat_rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt; // inconsistent
    std::vector<Value> x(m.cols, k.zero());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, m.cols);
    return x;
}

/// Inverse of a square matrix; empty if singular.
inline std::optional<Mat> mat_inverse(const Mat& m) {
    if (m.rows != m.cols) throw internal_error("inverse of a non-square matrix");
    const Field& k = m.k;
    Mat aug(k, m.rows, 2 * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = k.one();
    }
    auto pivots = mat_rref(aug);
    if (pivots.size() != m.rows || (!pivots.empty() && pivots.back() >= m.cols))
        return std::nullopt;
    Mat inv(k, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

/// Expresses target in the span of the given vectors, if possible; returns
/// the coefficient vector.
inline std::optional<std::vector<Value>>
in_span(const Field& k, const std::vector<std::vector<Value>>& vecs, const std::vector<Value>& target) {
    if (vecs.empty()) {
        for (const auto& v : target)
            if (!k.is_zero(v)) return std::nullopt;
        return std::vector<Value>{};
    }
    return mat_solve(Mat::from_columns(k, vecs), target);
}

} // namespace composita
