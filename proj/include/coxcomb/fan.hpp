#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxcomb/linprog.hpp"
#include "coxcomb/subspace.hpp"

namespace coxcomb {

/// A face of the simplicial complex: sorted list of label indices.
using Face = std::vector<int>;
using FaceSet = std::set<Face>;

/// Downward closure of a collection of faces (always contains the empty face).
inline FaceSet face_closure(const std::vector<Face>& faces) {
    FaceSet out;
    out.insert(Face{});
    for (const Face& f : faces) {
        Face sorted = f;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        size_t n = sorted.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            Face sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(sorted[i]);
            out.insert(sub);
        }
    }
    return out;
}

/// Generalized fan (S, K, V, rho): a simplicial complex K on the ordered label
/// set S with a ray vector in V per label. Cones may overlap and need not be
/// strongly convex; labels outside every face are ghost vertices. Immutable by
/// convention: every construction returns a fresh value with provenance.
struct Fan {
    std::vector<std::string> labels;
    FaceSet faces; // downward closed, contains {}
    size_t ambient_dim = 0;
    std::vector<Vec> rays; // indexed like labels
    FieldContext field;
    std::vector<std::string> provenance;

    size_t size() const { return labels.size(); }

    int label_index(const std::string& name) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool is_ghost(int s) const { return faces.find(Face{s}) == faces.end(); }

    std::vector<int> ghosts() const {
        std::vector<int> g;
        for (size_t s = 0; s < size(); ++s)
            if (is_ghost(static_cast<int>(s))) g.push_back(static_cast<int>(s));
        return g;
    }
    std::vector<int> non_ghosts() const {
        std::vector<int> g;
        for (size_t s = 0; s < size(); ++s)
            if (!is_ghost(static_cast<int>(s))) g.push_back(static_cast<int>(s));
        return g;
    }

    std::vector<Face> maximal_faces() const {
        std::vector<Face> out;
        for (const Face& f : faces) {
            bool maximal = true;
            for (const Face& g : faces)
                if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(f);
        }
        return out;
    }

    bool has_rational_rays() const {
        for (const Vec& r : rays)
            for (const Scalar& x : r)
                if (!x.is_rational()) return false;
        return true;
    }

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.labels == b.labels && a.faces == b.faces && a.ambient_dim == b.ambient_dim && a.rays == b.rays &&
               a.field.d == b.field.d;
    }
};

/// Builds a fan from maximal faces (closure is computed) without validating.
inline Fan make_fan(std::vector<std::string> labels, const std::vector<Face>& maximal, size_t ambient_dim,
                    std::vector<Vec> rays, FieldContext field = FieldContext(), std::string origin = "") {
    Fan f;
    f.labels = std::move(labels);
    f.faces = face_closure(maximal);
    f.ambient_dim = ambient_dim;
    f.rays = std::move(rays);
    f.field = field;
    if (!origin.empty()) f.provenance.push_back(std::move(origin));
    return f;
}

struct ValidationIssue {
    errc code;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    std::vector<std::string> ghost_labels;

    void flag(errc code, std::string msg) {
        ok = false;
        issues.push_back({code, std::move(msg)});
    }
};

/// Structural validation: label consistency, downward closure, dimension
/// consistency, one field context; flags ghost vertices.
inline ValidationReport validate(const Fan& fan) {
    ValidationReport rep;
    std::set<std::string> seen;
    for (const auto& l : fan.labels) {
        if (l.empty()) rep.flag(errc::malformed_complex, "empty label name");
        if (!seen.insert(l).second) rep.flag(errc::malformed_complex, "duplicate label '" + l + "'");
    }
    if (fan.faces.find(Face{}) == fan.faces.end())
        rep.flag(errc::malformed_complex, "face set does not contain the empty face");
    for (const Face& f : fan.faces) {
        if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end()) {
            rep.flag(errc::malformed_complex, "face is not a sorted duplicate-free index list");
            continue;
        }
        for (int s : f)
            if (s < 0 || s >= static_cast<int>(fan.size()))
                rep.flag(errc::malformed_complex, "face references unknown vertex index " + std::to_string(s));
        // downward closure: removing any single vertex must stay in K
        for (size_t i = 0; i < f.size(); ++i) {
            Face sub = f;
            sub.erase(sub.begin() + i);
            if (fan.faces.find(sub) == fan.faces.end())
                rep.flag(errc::malformed_complex, "complex is not downward closed at a subset of a face");
        }
    }
    if (fan.rays.size() != fan.size())
        rep.flag(errc::dimension_mismatch, "ray count differs from label count");
    for (size_t s = 0; s < fan.rays.size(); ++s) {
        if (fan.rays[s].size() != fan.ambient_dim)
            rep.flag(errc::dimension_mismatch, "ray '" + fan.labels[s] + "' has wrong length");
        for (const Scalar& x : fan.rays[s])
            if (!x.is_rational() && x.field_d() != fan.field.d)
                rep.flag(errc::mixed_field_context, "ray '" + fan.labels[s] + "' uses a different sqrt(d)");
    }
    if (rep.ok)
        for (int g : fan.ghosts()) rep.ghost_labels.push_back(fan.labels[g]);
    return rep;
}

inline void ensure_valid(const Fan& fan) {
    ValidationReport rep = validate(fan);
    if (!rep.ok) raise(rep.issues.front().code, rep.issues.front().message);
}

// ---------------------------------------------------------------------------
// cone membership

struct MembershipCertificate {
    bool inside = false;
    // inside: nonnegative coefficients on the face's rays with sum_i c_i rho(s_i) = v
    std::vector<std::pair<int, Scalar>> coefficients;
    // outside: exact separating covector m with <m, rho(s)> >= 0 on the face and <m, v> < 0
    Vec separating;
};

namespace fan_detail {

inline std::optional<Vec> cone_coefficients(const Fan& fan, const Face& sigma, const Vec& v) {
    size_t k = sigma.size();
    if (k == 0) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Matrix aug(fan.ambient_dim, k + 1);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < fan.ambient_dim; ++i) aug.at(i, j) = fan.rays[sigma[j]][i];
    for (size_t i = 0; i < fan.ambient_dim; ++i) aug.at(i, k) = v[i];
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt; // v outside the span
    if (pivots.size() == k) {
        // simplicial cone: the representation is unique
        Vec x(k);
        for (size_t i = 0; i < k; ++i) {
            x[i] = aug.at(i, k);
            if (x[i].sign() < 0) return std::nullopt;
        }
        return x;
    }
    // generators are dependent (pushforward cones); decide by exact LP
    std::vector<LinearConstraint> cons;
    for (size_t i = 0; i < fan.ambient_dim; ++i) {
        Vec row(k);
        for (size_t j = 0; j < k; ++j) row[j] = fan.rays[sigma[j]][i];
        cons.push_back({row, Rel::eq, v[i]});
    }
    for (size_t j = 0; j < k; ++j) {
        Vec row(k, Scalar(0));
        row[j] = Scalar(1);
        cons.push_back({row, Rel::ge, Scalar(0)});
    }
    return lp_feasible(cons, k);
}

} // namespace fan_detail

/// Quick test without certificates.
inline bool cone_contains(const Fan& fan, const Face& sigma, const Vec& v) {
    return fan_detail::cone_coefficients(fan, sigma, v).has_value();
}

/// Membership of v in C(sigma) with an exact certificate either way.
inline MembershipCertificate cone_membership(const Fan& fan, const Face& sigma, const Vec& v) {
    if (fan.faces.find(sigma) == fan.faces.end())
        raise(errc::unknown_face, "face is not in the simplicial complex");
    if (v.size() != fan.ambient_dim) raise(errc::dimension_mismatch, "point has wrong length");
    MembershipCertificate cert;
    auto coeffs = fan_detail::cone_coefficients(fan, sigma, v);
    if (coeffs) {
        cert.inside = true;
        for (size_t j = 0; j < sigma.size(); ++j) cert.coefficients.push_back({sigma[j], (*coeffs)[j]});
        return cert;
    }
    // separating functional: <m, rho(s)> >= 0 on sigma, <m, v> <= -1
    std::vector<LinearConstraint> cons;
    for (int s : sigma) cons.push_back({fan.rays[s], Rel::ge, Scalar(0)});
    cons.push_back({v, Rel::le, Scalar(-1)});
    auto m = lp_feasible(cons, fan.ambient_dim);
    if (!m) raise(errc::internal_error, "no separating covector for a point outside a closed cone");
    cert.inside = false;
    cert.separating = *m;
    return cert;
}

// ---------------------------------------------------------------------------
// completeness by chamber certification

struct CompletenessCertificate {
    bool complete = false;
    Vec witness;             // an uncovered point when incomplete
    size_t chambers = 0;     // chambers of the facet-hyperplane arrangement inspected
    size_t hyperplanes = 0;
};

namespace fan_detail {

// Normals of all hyperplanes spanned by (dim-1)-subsets of the rays,
// canonicalized (first nonzero entry = 1) and sorted.
inline std::vector<Vec> arrangement_normals(const Fan& fan) {
    size_t n = fan.ambient_dim;
    std::vector<Vec> distinct;
    {
        std::set<std::vector<std::string>> seen; // key on canonical text
        for (const Vec& r : fan.rays) {
            if (is_zero(r)) continue;
            std::vector<std::string> key;
            for (const Scalar& x : r) key.push_back(x.to_string());
            if (seen.insert(key).second) distinct.push_back(r);
        }
    }
    std::set<std::vector<std::string>> seen_normals;
    std::vector<Vec> normals;
    std::vector<size_t> pick(n ? n - 1 : 0);
    auto emit = [&]() {
        Matrix m(pick.size(), n);
        for (size_t i = 0; i < pick.size(); ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = distinct[pick[i]][j];
        Subspace ker = kernel(m);
        if (ker.dim() != 1) return;
        Vec normal = ker.basis_row(0); // echelon form: leading entry is 1
        std::vector<std::string> key;
        for (const Scalar& x : normal) key.push_back(x.to_string());
        if (seen_normals.insert(key).second) normals.push_back(normal);
    };
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == pick.size()) {
            emit();
            return;
        }
        for (size_t i = start; i < distinct.size(); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (n >= 1) rec(0, 0);
    return normals;
}

} // namespace fan_detail

/// Exact completeness decision. The facet hyperplane of every full-dimensional
/// cone is spanned by dim-1 rays, so every cone is a union of closed chambers
/// of the arrangement of all such hyperplanes; covering each chamber's interior
/// point therefore certifies covering all of V. An uncovered chamber point is
/// returned as the witness otherwise.
inline CompletenessCertificate is_complete(const Fan& fan) {
    CompletenessCertificate cert;
    size_t n = fan.ambient_dim;
    if (n == 0) { // a 0-dimensional space is covered by any cone, even C({}) = {0}
        cert.complete = true;
        return cert;
    }
    Matrix ray_rows = Matrix::from_rows(fan.rays);
    if (fan.rays.empty() || rank(ray_rows) < n) {
        // rays span a proper subspace; exhibit a coordinate vector off it
        Matrix m = ray_rows;
        auto pivots = rref(m);
        std::vector<bool> piv(n, false);
        for (size_t c : pivots) piv[c] = true;
        Vec w(n, Scalar(0));
        for (size_t j = 0; j < n; ++j)
            if (!piv[j]) { w[j] = Scalar(1); break; }
        cert.complete = false;
        cert.witness = w;
        return cert;
    }

    std::vector<Vec> normals = fan_detail::arrangement_normals(fan);
    cert.hyperplanes = normals.size();
    std::vector<Face> maximal = fan.maximal_faces();

    // enumerate chambers as feasible strict sign vectors, reusing witnesses
    struct Node {
        std::vector<int> signs;
        Vec witness;
    };
    std::vector<Node> frontier;
    {
        // seed with a point strictly off every hyperplane: a moment-curve point
        // (1, t, ..., t^(n-1)) works for all but finitely many t
        Vec seed(n, Scalar(1));
        for (long t = 2;; ++t) {
            Scalar p(1);
            for (size_t i = 0; i < n; ++i) {
                seed[i] = p;
                p *= Scalar(t);
            }
            bool generic = true;
            for (const Vec& m : normals)
                if (dot(m, seed).is_zero()) { generic = false; break; }
            if (generic) break;
        }
        frontier.push_back({{}, seed});
    }
    for (size_t h = 0; h < normals.size(); ++h) {
        std::vector<Node> next;
        for (auto& node : frontier) {
            Scalar val = dot(normals[h], node.witness);
            for (int sgn : {+1, -1}) {
                if ((sgn > 0 && val.sign() > 0) || (sgn < 0 && val.sign() < 0)) {
                    Node child = node;
                    child.signs.push_back(sgn);
                    next.push_back(std::move(child));
                    continue;
                }
                std::vector<LinearConstraint> cons;
                for (size_t j = 0; j < node.signs.size(); ++j) {
                    Vec c = normals[j];
                    if (node.signs[j] < 0)
                        for (auto& x : c) x = -x;
                    cons.push_back({std::move(c), Rel::ge, Scalar(1)});
                }
                {
                    Vec c = normals[h];
                    if (sgn < 0)
                        for (auto& x : c) x = -x;
                    cons.push_back({std::move(c), Rel::ge, Scalar(1)});
                }
                auto w = lp_feasible(cons, n);
                if (!w) continue;
                Node child;
                child.signs = node.signs;
                child.signs.push_back(sgn);
                child.witness = std::move(*w);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    cert.chambers = frontier.size();
    size_t hot = 0; // move-to-front over maximal faces
    for (auto& node : frontier) {
        bool covered = false;
        for (size_t t = 0; t < maximal.size() && !covered; ++t) {
            size_t idx = (t == 0) ? hot : (t <= hot ? t - 1 : t);
            if (cone_contains(fan, maximal[idx], node.witness)) {
                covered = true;
                hot = idx;
            }
        }
        if (!covered) {
            cert.complete = false;
            cert.witness = node.witness;
            return cert;
        }
    }
    cert.complete = true;
    return cert;
}

/// Strictly positive vanishing combination of all rays (lambda_s >= 1 after
/// scale normalization). Exists whenever the fan is complete.
inline std::optional<Vec> positive_combination(const Fan& fan) {
    size_t k = fan.size();
    std::vector<LinearConstraint> cons;
    for (size_t i = 0; i < fan.ambient_dim; ++i) {
        Vec row(k);
        for (size_t s = 0; s < k; ++s) row[s] = fan.rays[s][i];
        cons.push_back({row, Rel::eq, Scalar(0)});
    }
    std::vector<size_t> strict(k);
    for (size_t s = 0; s < k; ++s) strict[s] = s;
    return lp_feasible(cons, k, strict);
}

// ---------------------------------------------------------------------------
// constructions

/// Pushforward along a linear map: same (S, K), rays composed with the map.
inline Fan pushforward(const Fan& fan, const Matrix& map, const std::string& note = "pushforward") {
    if (map.cols() != fan.ambient_dim)
        raise(errc::dimension_mismatch, "pushforward map expects dimension " + std::to_string(fan.ambient_dim));
    Fan out = fan;
    out.ambient_dim = map.rows();
    out.rays.clear();
    for (const Vec& r : fan.rays) out.rays.push_back(map.apply(r));
    out.provenance.push_back(note);
    return out;
}

/// Quotient fan Sigma/L: pushforward along the echelon-complement projection,
/// so quotients are reproducible coordinate-for-coordinate.
inline Fan quotient_fan(const Fan& fan, const Subspace& l) {
    if (l.ambient_dim() != fan.ambient_dim)
        raise(errc::dimension_mismatch, "quotient subspace lives in the wrong space");
    Matrix p = complement_projection(l);
    return pushforward(fan, p, "quotient by a " + std::to_string(l.dim()) + "-dimensional subspace");
}

struct Rationalization {
    Fan fan;              // rays are integer vectors; field is plain Q
    Matrix projection;    // (new_dim x |S|) integer matrix applied to the canonical development
    Subspace closed_kernel; // rational closure of ker A_Sigma^R inside R^S
};

/// Canonical rationalization: quotient of the canonical development (S, K,
/// R^S, e_s) by the rational closure of ker A_Sigma^R. The projection is
/// scaled by the lcm of its denominators, which makes the generalized lattice
/// of the result literally integral; this is the maximal algebraic shadow of
/// the fan and is idempotent coordinate-for-coordinate.
inline Rationalization rationalize(const Fan& fan) {
    Matrix op = Matrix::from_columns(fan.rays.empty() ? std::vector<Vec>{} : fan.rays);
    if (fan.rays.empty()) op = Matrix(fan.ambient_dim, 0);
    Subspace ker_op = kernel(op);
    Subspace closed = rational_closure(ker_op);
    Matrix p = complement_projection(closed);
    Int scale = 1;
    for (size_t i = 0; i < p.rows(); ++i)
        for (size_t j = 0; j < p.cols(); ++j) {
            const Rational& q = p.at(i, j).rational_part();
            Int den = denominator(q);
            scale = scale / boost::multiprecision::gcd(scale, den) * den;
        }
    if (scale != 1)
        for (size_t i = 0; i < p.rows(); ++i)
            for (size_t j = 0; j < p.cols(); ++j) p.at(i, j) *= Scalar(Rational(scale));

    Rationalization out;
    out.projection = p;
    out.closed_kernel = closed;
    out.fan.labels = fan.labels;
    out.fan.faces = fan.faces;
    out.fan.ambient_dim = p.rows();
    for (size_t s = 0; s < fan.size(); ++s) out.fan.rays.push_back(p.column(s));
    out.fan.field = FieldContext(0);
    out.fan.provenance = fan.provenance;
    out.fan.provenance.push_back("rationalize");
    return out;
}

// ---------------------------------------------------------------------------
// ghost reduction

struct GhostExpression {
    int ghost;                        // label index in the original fan
    Face support;                     // lex-least face whose cone contains the ghost ray
    std::vector<std::pair<int, Scalar>> coefficients; // exact nonnegative combination over the face
    std::vector<std::pair<int, Int>> integer_coefficients;
    Int scale = 1;                    // sum c_s rho(s) = scale * rho(ghost)
    bool integral = true;             // scale == 1 and integer coefficients
};

struct GhostReduction {
    Fan reduced;
    std::vector<int> ghost_indices;
    std::vector<GhostExpression> expressions;
};

/// The reduced fan: ghost vertices dropped, complex and rays restricted.
inline Fan drop_ghosts(const Fan& fan) {
    std::vector<int> keep = fan.non_ghosts();
    std::vector<int> new_index(fan.size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);
    Fan out;
    for (int s : keep) {
        out.labels.push_back(fan.labels[s]);
        out.rays.push_back(fan.rays[s]);
    }
    out.ambient_dim = fan.ambient_dim;
    out.field = fan.field;
    for (const Face& f : fan.faces) {
        Face g;
        for (int s : f) g.push_back(new_index[s]);
        out.faces.insert(g);
    }
    out.provenance = fan.provenance;
    out.provenance.push_back("reduce_ghosts");
    return out;
}

/// Drops ghost vertices and expresses each ghost ray as a nonnegative
/// combination over a face of the reduced complex (completeness guarantees one
/// exists). Coefficient choice is deterministic: lex-least supporting face,
/// then the Fourier-Motzkin witness, scaled to integers when rational.
inline GhostReduction reduce_ghosts(const Fan& fan) {
    if (!is_complete(fan).complete)
        raise(errc::not_complete, "ghost reduction requires a complete fan");
    GhostReduction out;
    out.ghost_indices = fan.ghosts();
    out.reduced = drop_ghosts(fan);

    for (int g : out.ghost_indices) {
        GhostExpression expr;
        expr.ghost = g;
        bool found = false;
        for (const Face& sigma : fan.faces) { // std::set iterates faces in lex order
            auto coeffs = fan_detail::cone_coefficients(fan, sigma, fan.rays[g]);
            if (!coeffs) continue;
            expr.support = sigma;
            Int scale = 1;
            bool rational = true;
            for (size_t j = 0; j < sigma.size(); ++j) {
                expr.coefficients.push_back({sigma[j], (*coeffs)[j]});
                if (!(*coeffs)[j].is_rational()) rational = false;
                else {
                    Int den = denominator((*coeffs)[j].rational_part());
                    scale = scale / boost::multiprecision::gcd(scale, den) * den;
                }
            }
            if (rational) {
                expr.scale = scale;
                for (auto& [s, c] : expr.coefficients)
                    expr.integer_coefficients.push_back({s, numerator(c.rational_part() * Rational(scale))});
                expr.integral = (scale == 1);
            } else {
                expr.integral = false;
            }
            found = true;
            break;
        }
        if (!found) raise(errc::internal_error, "complete fan with a ghost ray outside every cone");
        out.expressions.push_back(std::move(expr));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cox construction membership

/// z in U(Sigma) iff the zero pattern {s : z_s = 0} is a face of K.
inline bool in_cox_construction(const Fan& fan, const std::vector<ComplexScalar>& z) {
    if (z.size() != fan.size()) raise(errc::dimension_mismatch, "point has wrong number of coordinates");
    Face zero_pattern;
    for (size_t s = 0; s < z.size(); ++s)
        if (z[s].is_zero()) zero_pattern.push_back(static_cast<int>(s));
    return fan.faces.find(zero_pattern) != fan.faces.end();
}

} // namespace coxcomb
