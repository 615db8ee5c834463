#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "coxcomb/matrix.hpp"

namespace coxcomb {

/// Dense integer matrix (arbitrary precision), row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (auto& r : init) {
            if (r.size() != cols_) raise(errc::dimension_mismatch, "ragged matrix initializer");
            for (auto& v : r) d_.push_back(v);
        }
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return d_[r * cols_ + c]; }

    std::vector<Int> row(size_t r) const {
        std::vector<Int> v(cols_);
        for (size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
        return v;
    }
    std::vector<Int> column(size_t c) const {
        std::vector<Int> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) raise(errc::dimension_mismatch, "matrix product size mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    Matrix to_scalar() const {
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(i, j) = Scalar(at(i, j));
        return m;
    }

private:
    size_t rows_, cols_;
    std::vector<Int> d_;
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Fraction-free determinant (Bareiss).
inline Int int_det(IntMatrix m) {
    if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

/// Row-style Hermite normal form with zero rows dropped: pivots positive and
/// strictly stepping right, entries above each pivot reduced into [0, pivot).
/// The rows span the same integer row lattice as the input.
inline IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix m = a;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // gcd-reduce column c among rows >= r
        while (true) {
            size_t best = m.rows();
            for (size_t i = r; i < m.rows(); ++i)
                if (m.at(i, c) != 0 && (best == m.rows() || int_abs(m.at(i, c)) < int_abs(m.at(best, c))))
                    best = i;
            if (best == m.rows()) break;
            if (best != r)
                for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(r, j));
            if (m.at(r, c) < 0)
                for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
            bool clean = true;
            for (size_t i = r + 1; i < m.rows(); ++i) {
                if (m.at(i, c) == 0) continue;
                Int q = floor_div(m.at(i, c), m.at(r, c));
                for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(r, c) == 0) continue;
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(m.at(i, c), m.at(r, c));
            if (q == 0) continue;
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(r, j);
        }
        ++r;
    }
    IntMatrix h(r, m.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols(); ++j) h.at(i, j) = m.at(i, j);
    return h;
}

/// A = U * D * W with U, W unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithDecomposition {
    IntMatrix U, D, W;
    IntMatrix Winv; // exact inverse of W, tracked during reduction

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D.at(i, i));
        return d;
    }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    size_t m = a.rows(), n = a.cols();
    SmithDecomposition s;
    s.D = a;
    s.U = IntMatrix::identity(m);
    s.W = IntMatrix::identity(n);
    s.Winv = IntMatrix::identity(n);
    IntMatrix& D = s.D;

    // row op on D (row j += k row i) adjusts U by the inverse column op
    auto row_add = [&](size_t j, size_t i, const Int& k) {
        for (size_t c = 0; c < n; ++c) D.at(j, c) += k * D.at(i, c);
        for (size_t r = 0; r < m; ++r) s.U.at(r, i) -= k * s.U.at(r, j);
    };
    auto row_swap = [&](size_t i, size_t j) {
        for (size_t c = 0; c < n; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (size_t r = 0; r < m; ++r) std::swap(s.U.at(r, i), s.U.at(r, j));
    };
    auto row_negate = [&](size_t i) {
        for (size_t c = 0; c < n; ++c) D.at(i, c) = -D.at(i, c);
        for (size_t r = 0; r < m; ++r) s.U.at(r, i) = -s.U.at(r, i);
    };
    auto col_add = [&](size_t j, size_t i, const Int& k) { // col j += k col i
        for (size_t r = 0; r < m; ++r) D.at(r, j) += k * D.at(r, i);
        for (size_t c = 0; c < n; ++c) s.W.at(i, c) -= k * s.W.at(j, c);
        for (size_t r = 0; r < n; ++r) s.Winv.at(r, j) += k * s.Winv.at(r, i);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < m; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (size_t c = 0; c < n; ++c) std::swap(s.W.at(i, c), s.W.at(j, c));
        for (size_t r = 0; r < n; ++r) std::swap(s.Winv.at(r, i), s.Winv.at(r, j));
    };

    size_t t = 0;
    size_t steps = std::min(m, n);
    while (t < steps) {
        // bring the absolutely smallest nonzero entry of D[t:,t:] to (t,t)
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (D.at(i, j) != 0 && (pi == m || int_abs(D.at(i, j)) < int_abs(D.at(pi, pj)))) { pi = i; pj = j; }
        if (pi == m) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        if (D.at(t, t) < 0) row_negate(t);

        bool dirty = false;
        for (size_t i = t + 1; i < m; ++i) {
            if (D.at(i, t) == 0) continue;
            Int q = floor_div(D.at(i, t), D.at(t, t));
            row_add(i, t, -q);
            if (D.at(i, t) != 0) dirty = true;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (D.at(t, j) == 0) continue;
            Int q = floor_div(D.at(t, j), D.at(t, t));
            col_add(j, t, -q);
            if (D.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue; // a smaller remainder appeared, redo position t

        // enforce d_t | entries of the remaining block
        bool divides = true;
        for (size_t i = t + 1; i < m && divides; ++i)
            for (size_t j = t + 1; j < n && divides; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    row_add(t, i, 1); // pulls row i into row t, redo position t
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    return s;
}

/// Coordinates of v in the row lattice spanned by an HNF basis, or nullopt
/// when v is not in the lattice. x * basis = v.
inline std::optional<std::vector<Int>> hnf_coordinates(const IntMatrix& basis, const std::vector<Int>& v) {
    if (v.size() != basis.cols()) raise(errc::dimension_mismatch, "hnf_coordinates: size mismatch");
    std::vector<Int> w = v, x(basis.rows(), 0);
    for (size_t i = 0; i < basis.rows(); ++i) {
        size_t p = 0;
        while (p < basis.cols() && basis.at(i, p) == 0) ++p;
        if (p == basis.cols()) raise(errc::internal_error, "zero row in HNF basis");
        if (w[p] % basis.at(i, p) != 0) return std::nullopt;
        x[i] = w[p] / basis.at(i, p);
        if (x[i] != 0)
            for (size_t j = 0; j < basis.cols(); ++j) w[j] -= x[i] * basis.at(i, j);
    }
    for (auto& c : w)
        if (c != 0) return std::nullopt;
    return x;
}

} // namespace coxcomb
