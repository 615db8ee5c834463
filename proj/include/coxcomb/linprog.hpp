#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxcomb/matrix.hpp"

namespace coxcomb {

enum class Rel { le, eq, ge };

/// One linear condition coeffs . x REL rhs over the ordered field Q(sqrt(d)).
struct LinearConstraint {
    Vec coeffs;
    Rel rel;
    Scalar rhs;
};

namespace lp_detail {

// internal form: c . x >= b
struct Row {
    Vec c;
    Scalar b;
};

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};

// Canonicalize scales, merge rows with equal direction (keep the strongest),
// and strip rows with no active variables. Returns false on a contradiction.
inline bool prune(std::vector<Row>& rows, size_t active) {
    std::map<Vec, Scalar, VecLess> best;
    for (auto& r : rows) {
        size_t lead = active;
        for (size_t j = 0; j < active; ++j)
            if (!r.c[j].is_zero()) { lead = j; break; }
        if (lead == active) {
            if (r.b.sign() > 0) return false; // 0 >= positive
            continue;
        }
        Scalar scale = Scalar(1) / r.c[lead].abs();
        Vec key(active);
        for (size_t j = 0; j < active; ++j) key[j] = r.c[j] * scale;
        Scalar b = r.b * scale;
        auto it = best.find(key);
        if (it == best.end()) best.emplace(std::move(key), b);
        else if (b > it->second) it->second = b;
    }
    rows.clear();
    for (auto& [c, b] : best) rows.push_back(Row{c, b});
    return true;
}

} // namespace lp_detail

/// Exact Fourier-Motzkin feasibility over Q(sqrt(d)). Returns a witness point
/// satisfying every constraint, or nullopt when the system is infeasible.
/// Indices in strict_positive get the extra constraint x_i >= 1 (the scale
/// invariant encoding of strict positivity used by cone systems).
inline std::optional<Vec> lp_feasible(const std::vector<LinearConstraint>& constraints, size_t nvars,
                                      const std::vector<size_t>& strict_positive = {}) {
    using lp_detail::Row;
    std::vector<Row> sys;
    for (const auto& con : constraints) {
        if (con.coeffs.size() != nvars) raise(errc::dimension_mismatch, "constraint arity mismatch");
        if (con.rel == Rel::ge || con.rel == Rel::eq) sys.push_back(Row{con.coeffs, con.rhs});
        if (con.rel == Rel::le || con.rel == Rel::eq) {
            Vec neg(nvars);
            for (size_t j = 0; j < nvars; ++j) neg[j] = -con.coeffs[j];
            sys.push_back(Row{neg, -con.rhs});
        }
    }
    for (size_t i : strict_positive) {
        Vec c(nvars, Scalar(0));
        c[i] = Scalar(1);
        sys.push_back(Row{c, Scalar(1)});
    }

    // stages[k] = pruned system over variables 0..k-1, input to eliminating x_{k-1}
    std::vector<std::vector<Row>> stages(nvars + 1);
    for (size_t k = nvars; k >= 1; --k) {
        if (!lp_detail::prune(sys, k)) return std::nullopt;
        stages[k] = sys;
        std::vector<Row> pos, neg, next;
        for (auto& r : sys) {
            int s = r.c[k - 1].sign();
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (auto& p : pos)
            for (auto& q : neg) {
                // (-gamma) * p + alpha * q with alpha = p.c[k-1] > 0 > gamma = q.c[k-1]
                Scalar alpha = p.c[k - 1], mgamma = -q.c[k - 1];
                Row r;
                r.c.resize(nvars, Scalar(0));
                for (size_t j = 0; j + 1 < k; ++j) r.c[j] = mgamma * p.c[j] + alpha * q.c[j];
                r.b = mgamma * p.b + alpha * q.b;
                next.push_back(std::move(r));
            }
        sys = std::move(next);
    }
    if (!lp_detail::prune(sys, 0)) return std::nullopt;

    // back-substitute a witness, tightest lower bound first
    Vec x(nvars, Scalar(0));
    for (size_t k = 1; k <= nvars; ++k) {
        std::optional<Scalar> lo, hi;
        for (auto& r : stages[k]) {
            if (r.c[k - 1].is_zero()) continue;
            Scalar rest = r.b;
            for (size_t j = 0; j + 1 < k; ++j) rest -= r.c[j] * x[j];
            Scalar bound = rest / r.c[k - 1];
            if (r.c[k - 1].sign() > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo) x[k - 1] = *lo;
        else if (hi) x[k - 1] = *hi;
        else x[k - 1] = Scalar(0);
    }
    return x;
}

struct Extremum {
    bool unbounded = false;
    Scalar value; // meaningful when !unbounded
};

/// Exact optimum of objective . x over the constraint set, or Unbounded.
/// Raises EmptyRegion when the feasible region is empty.
inline Extremum lp_extremum(const Vec& objective, const std::vector<LinearConstraint>& constraints,
                            bool maximize) {
    size_t nvars = objective.size();
    // variable 0 is t = objective . x; x shifts to 1..nvars
    std::vector<LinearConstraint> aug;
    for (const auto& con : constraints) {
        if (con.coeffs.size() != nvars) raise(errc::dimension_mismatch, "constraint arity mismatch");
        LinearConstraint c2;
        c2.coeffs.resize(nvars + 1, Scalar(0));
        for (size_t j = 0; j < nvars; ++j) c2.coeffs[j + 1] = con.coeffs[j];
        c2.rel = con.rel;
        c2.rhs = con.rhs;
        aug.push_back(std::move(c2));
    }
    LinearConstraint link;
    link.coeffs.resize(nvars + 1, Scalar(0));
    link.coeffs[0] = Scalar(1);
    for (size_t j = 0; j < nvars; ++j) link.coeffs[j + 1] = -objective[j];
    link.rel = Rel::eq;
    link.rhs = Scalar(0);
    aug.push_back(std::move(link));

    using lp_detail::Row;
    std::vector<Row> sys;
    for (const auto& con : aug) {
        if (con.rel == Rel::ge || con.rel == Rel::eq) sys.push_back(Row{con.coeffs, con.rhs});
        if (con.rel == Rel::le || con.rel == Rel::eq) {
            Vec neg(nvars + 1);
            for (size_t j = 0; j <= nvars; ++j) neg[j] = -con.coeffs[j];
            sys.push_back(Row{neg, -con.rhs});
        }
    }
    for (size_t k = nvars + 1; k >= 2; --k) {
        if (!lp_detail::prune(sys, k)) raise(errc::empty_region, "optimization over an empty region");
        std::vector<Row> pos, neg, next;
        for (auto& r : sys) {
            int s = r.c[k - 1].sign();
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (auto& p : pos)
            for (auto& q : neg) {
                Scalar alpha = p.c[k - 1], mgamma = -q.c[k - 1];
                Row r;
                r.c.resize(nvars + 1, Scalar(0));
                for (size_t j = 0; j + 1 < k; ++j) r.c[j] = mgamma * p.c[j] + alpha * q.c[j];
                r.b = mgamma * p.b + alpha * q.b;
                next.push_back(std::move(r));
            }
        sys = std::move(next);
    }
    // projection onto t: a t >= b rows
    std::optional<Scalar> lo, hi;
    for (auto& r : sys) {
        int s = r.c[0].sign();
        if (s == 0) {
            if (r.b.sign() > 0) raise(errc::empty_region, "optimization over an empty region");
            continue;
        }
        Scalar bound = r.b / r.c[0];
        if (s > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    if (lo && hi && *lo > *hi) raise(errc::empty_region, "optimization over an empty region");
    Extremum e;
    if (maximize) {
        if (!hi) { e.unbounded = true; return e; }
        e.value = *hi;
    } else {
        if (!lo) { e.unbounded = true; return e; }
        e.value = *lo;
    }
    return e;
}

} // namespace coxcomb
