#pragma once

#include <vector>

#include "coxcomb/matrix.hpp"

namespace coxcomb {

/// Linear subspace of Q(sqrt(d))^n in canonical form: the basis matrix is in
/// reduced row echelon form with no zero rows, so equality of subspaces is
/// structural equality of the representation.
class Subspace {
public:
    explicit Subspace(size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace span(size_t ambient_dim, const std::vector<Vec>& vectors) {
        Matrix m = Matrix::from_rows(vectors);
        if (!vectors.empty() && m.cols() != ambient_dim)
            raise(errc::dimension_mismatch, "span: vector length != ambient dimension");
        auto pivots = rref(m);
        Subspace s(ambient_dim);
        s.basis_ = Matrix(pivots.size(), ambient_dim);
        for (size_t i = 0; i < pivots.size(); ++i)
            for (size_t j = 0; j < ambient_dim; ++j) s.basis_.at(i, j) = m.at(i, j);
        s.pivots_ = pivots;
        return s;
    }

    static Subspace full(size_t ambient_dim) {
        std::vector<Vec> rows;
        for (size_t i = 0; i < ambient_dim; ++i) {
            Vec e(ambient_dim, Scalar(0));
            e[i] = Scalar(1);
            rows.push_back(e);
        }
        return span(ambient_dim, rows);
    }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivot_columns() const { return pivots_; }
    Vec basis_row(size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) raise(errc::dimension_mismatch, "contains: vector length mismatch");
        // reduce v against the echelon basis
        Vec w = v;
        for (size_t i = 0; i < basis_.rows(); ++i) {
            Scalar c = w[pivots_[i]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
        }
        return is_zero(w);
    }

    bool contains(const Subspace& other) const {
        for (size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) raise(errc::dimension_mismatch, "subspace sum: ambient mismatch");
        std::vector<Vec> rows;
        for (size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_row(i));
        for (size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_row(i));
        return span(a.ambient_, rows);
    }

private:
    size_t ambient_;
    Matrix basis_;
    std::vector<size_t> pivots_;
};

/// Kernel of A as a canonical subspace of the column space domain.
inline Subspace kernel(const Matrix& a) {
    Matrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v(a.cols(), Scalar(0));
        v[j] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, j);
        basis.push_back(v);
    }
    return Subspace::span(a.cols(), basis);
}

/// Smallest subspace with a rational basis containing W: split every basis
/// vector v = a + sqrt(d) b into its rational parts a, b and span them all
/// (1 and sqrt(d) are linearly independent over Q).
inline Subspace rational_closure(const Subspace& w) {
    std::vector<Vec> parts;
    for (size_t i = 0; i < w.dim(); ++i) {
        Vec v = w.basis_row(i);
        Vec a(v.size()), b(v.size());
        bool has_surd = false;
        for (size_t j = 0; j < v.size(); ++j) {
            a[j] = Scalar(v[j].rational_part());
            b[j] = Scalar(v[j].surd_part());
            has_surd = has_surd || !v[j].is_rational();
        }
        parts.push_back(a);
        if (has_surd) parts.push_back(b);
    }
    return Subspace::span(w.ambient_dim(), parts);
}

/// Projection matrix P: V -> V/L realized on the coordinates of the non-pivot
/// columns of L's echelon basis. P v = (v - sum_i v[p_i] r_i) restricted to the
/// complement coordinates, so ker P = L exactly and the result is reproducible.
inline Matrix complement_projection(const Subspace& l) {
    size_t n = l.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : l.pivot_columns()) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix p(free_cols.size(), n);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t j = free_cols[i];
        p.at(i, j) = Scalar(1);
        for (size_t k = 0; k < l.dim(); ++k) p.at(i, l.pivot_columns()[k]) = -l.basis().at(k, j);
    }
    return p;
}

} // namespace coxcomb
