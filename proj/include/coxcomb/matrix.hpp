#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "coxcomb/scalar.hpp"

namespace coxcomb {

using Vec = std::vector<Scalar>;

inline Vec operator+(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}
inline Vec operator-(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}
inline Vec operator*(const Scalar& c, const Vec& x) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}
inline Scalar dot(const Vec& x, const Vec& y) {
    Scalar s(0);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    return s;
}
inline bool is_zero(const Vec& x) {
    for (auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

/// Dense matrix over Q(sqrt(d)), row major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        d_.reserve(rows_ * cols_);
        for (auto& r : init) {
            if (r.size() != cols_) raise(errc::dimension_mismatch, "ragged matrix initializer");
            for (auto& v : r) d_.push_back(v);
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) raise(errc::dimension_mismatch, "ragged row list");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vec>& cols) {
        Matrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) raise(errc::dimension_mismatch, "ragged column list");
            for (size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return d_[r * cols_ + c]; }

    Vec row(size_t r) const {
        Vec v(cols_);
        for (size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
        return v;
    }
    Vec column(size_t c) const {
        Vec v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) raise(errc::dimension_mismatch, "matrix-vector size mismatch");
        Vec y(rows_, Scalar(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) raise(errc::dimension_mismatch, "matrix product size mismatch");
        Matrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.d_.size(); ++i)
            if (a.d_[i] != b.d_[i]) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    std::vector<Scalar> d_;
};

/// In-place reduced row echelon form. Returns the pivot columns (strictly
/// increasing); pivots are 1 with zeros above and below.
inline std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = Scalar(1) / m.at(r, c);
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Matrix m) { return rref(m).size(); }

/// Exact solution of A x = b, or nullopt when inconsistent. When the solution
/// space is positive-dimensional, free variables are set to zero.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) raise(errc::dimension_mismatch, "solve: rhs size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols(), Scalar(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

} // namespace coxcomb
