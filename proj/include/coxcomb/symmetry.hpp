#pragma once

#include <map>
#include <vector>

#include "coxcomb/lattice.hpp"

namespace coxcomb {

/// A symmetry of the fan: a permutation of S together with the unique lattice
/// automorphism g with g(rho(s)) = rho(perm(s)). The matrix acts on column
/// coordinate vectors in the HNF lattice basis and has determinant +-1.
struct FanSymmetry {
    std::vector<int> perm;
    IntMatrix matrix;
    Int det = 1;
};

/// S(Sigma) with its normal inertia subgroup I(Sigma) (symmetries permuting
/// only rays of equal degree) and coset data for ES(Sigma) = S/I.
struct SymmetryGroups {
    std::vector<FanSymmetry> full;  // perm-lex order
    std::vector<size_t> inertia;    // indices into full
    size_t quotient_order = 1;
    std::vector<size_t> coset_reps; // indices into full, identity's coset first
};

namespace sym_detail {

struct Invariant {
    bool ghost;
    Int multiplier;                 // gcd of the lattice coordinates, 0 for the zero ray
    std::vector<size_t> face_profile; // number of faces of each size containing the label

    bool operator==(const Invariant& o) const {
        return ghost == o.ghost && multiplier == o.multiplier && face_profile == o.face_profile;
    }
};

} // namespace sym_detail

/// Enumerates S(Sigma) on the rationalization: candidate permutations are
/// pruned by per-label invariants and exact linear-dependence constraints,
/// then each survivor is checked to extend to a lattice automorphism fixing
/// the ray map and preserving K. Raises RaysDoNotSpan when the rays of the
/// given fan do not span its ambient space and the fan was not rationalized.
inline SymmetryGroups symmetry_group(const Fan& fan) {
    Rationalization rat = rationalize(fan);
    FanLattice lat = fan_lattice(rat);
    size_t n = fan.size(), r = lat.rank;
    if (lat.ambient_dim != r) raise(errc::rays_do_not_span, "rays do not span the ambient space");

    // per-label invariants
    size_t max_face = 0;
    for (const Face& f : fan.faces) max_face = std::max(max_face, f.size());
    std::vector<sym_detail::Invariant> inv(n);
    for (size_t s = 0; s < n; ++s) {
        inv[s].ghost = fan.is_ghost(static_cast<int>(s));
        Int g = 0;
        for (size_t i = 0; i < r; ++i) g = boost::multiprecision::gcd(g, lat.ray_coords.at(i, s));
        inv[s].multiplier = int_abs(g);
        inv[s].face_profile.assign(max_face + 1, 0);
        for (const Face& f : fan.faces)
            if (std::find(f.begin(), f.end(), static_cast<int>(s)) != f.end()) ++inv[s].face_profile[f.size()];
    }

    // independent spanning subset B (greedy in label order) and dependency
    // expressions of every other ray over the prefix of B
    Matrix cols = lat.ray_coords.to_scalar();
    std::vector<int> basis_labels;
    std::vector<std::optional<Vec>> dependency(n); // coefficients over basis_labels prefix
    {
        std::vector<Vec> have;
        for (size_t s = 0; s < n; ++s) {
            Vec c = cols.column(s);
            if (have.size() < r && !is_zero(c)) {
                std::vector<Vec> test = have;
                test.push_back(c);
                if (rank(Matrix::from_rows(test)) > have.size()) {
                    have.push_back(c);
                    basis_labels.push_back(static_cast<int>(s));
                    continue;
                }
            }
            if (have.empty()) {
                dependency[s] = Vec{}; // the zero ray
                continue;
            }
            auto gamma = solve(Matrix::from_columns(have), c);
            if (!gamma) raise(errc::internal_error, "dependent ray without an expression");
            dependency[s] = *gamma;
        }
    }

    // faces indexed by their largest vertex, for incremental K checks
    std::vector<std::vector<Face>> faces_by_max(n);
    for (const Face& f : fan.faces)
        if (!f.empty()) faces_by_max[f.back()].push_back(f);

    Matrix cb(r, r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < r; ++i) cb.at(i, j) = cols.at(i, basis_labels[j]);

    SymmetryGroups out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    std::function<void(size_t)> assign = [&](size_t s) {
        if (s == n) {
            // solve g from the spanning subset and verify everything exactly:
            // g cb = cpb, so cb^T g^T = cpb^T column by column
            Matrix cpb(r, r);
            for (size_t j = 0; j < r; ++j)
                for (size_t i = 0; i < r; ++i) cpb.at(i, j) = cols.at(i, perm[basis_labels[j]]);
            Matrix cbt = cb.transposed();
            Matrix gt(r, r);
            for (size_t i = 0; i < r; ++i) {
                auto x = solve(cbt, cpb.transposed().column(i));
                if (!x) return;
                for (size_t j = 0; j < r; ++j) gt.at(j, i) = (*x)[j];
            }
            Matrix gm = gt.transposed();
            IntMatrix gi(r, r);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) {
                    if (!gm.at(i, j).is_integer()) return; // not a lattice map
                    gi.at(i, j) = numerator(gm.at(i, j).rational_part());
                }
            for (size_t t = 0; t < n; ++t) {
                Vec img = gm.apply(cols.column(t));
                if (img != cols.column(perm[t])) return;
            }
            Int det = int_det(gi);
            if (det != 1 && det != -1) return;
            FanSymmetry sym;
            sym.perm = perm;
            sym.matrix = gi;
            sym.det = det;
            out.full.push_back(std::move(sym));
            return;
        }
        for (size_t u = 0; u < n; ++u) {
            if (used[u] || !(inv[s] == inv[u])) continue;
            if (dependency[s]) {
                // image ray must satisfy the same dependency over the images
                Vec expect(r, Scalar(0));
                const Vec& gamma = *dependency[s];
                for (size_t j = 0; j < gamma.size(); ++j) {
                    int bj = perm[basis_labels[j]];
                    for (size_t i = 0; i < r; ++i) expect[i] += gamma[j] * cols.at(i, bj);
                }
                if (expect != cols.column(u)) continue;
            }
            perm[s] = static_cast<int>(u);
            used[u] = true;
            bool ok = true;
            for (const Face& f : faces_by_max[s]) {
                Face img;
                for (int v : f) img.push_back(perm[v]);
                std::sort(img.begin(), img.end());
                if (fan.faces.find(img) == fan.faces.end()) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign(s + 1);
            perm[s] = -1;
            used[u] = false;
        }
    };
    assign(0);

    std::sort(out.full.begin(), out.full.end(),
              [](const FanSymmetry& a, const FanSymmetry& b) { return a.perm < b.perm; });

    // inertia: permutations preserving every degree class
    GradingGroup grading = grading_group(lat, n);
    std::vector<int> class_of(n, -1);
    for (size_t c = 0; c < grading.classes.size(); ++c)
        for (int s : grading.classes[c]) class_of[s] = static_cast<int>(c);
    for (size_t i = 0; i < out.full.size(); ++i) {
        bool inert = true;
        for (size_t s = 0; s < n && inert; ++s) inert = class_of[s] == class_of[out.full[i].perm[s]];
        if (inert) out.inertia.push_back(i);
    }
    if (out.inertia.empty()) raise(errc::internal_error, "inertia subgroup lost the identity");
    out.quotient_order = out.full.size() / out.inertia.size();

    // coset representatives by the lex-least member of each coset phi . I
    std::map<std::vector<int>, size_t> coset_key;
    for (size_t i = 0; i < out.full.size(); ++i) {
        std::vector<int> least = out.full[i].perm;
        for (size_t j : out.inertia) {
            // composite perm: s -> phi(psi(s))
            std::vector<int> comp(n);
            for (size_t s = 0; s < n; ++s) comp[s] = out.full[i].perm[out.full[j].perm[s]];
            if (comp < least) least = comp;
        }
        if (coset_key.emplace(least, i).second) out.coset_reps.push_back(i);
    }
    return out;
}

/// Composition phi . psi (apply psi first), for closure checks and reports.
inline std::vector<int> compose(const std::vector<int>& phi, const std::vector<int>& psi) {
    std::vector<int> out(phi.size());
    for (size_t s = 0; s < phi.size(); ++s) out[s] = phi[psi[s]];
    return out;
}

/// Cycle notation over the fan's labels, fixed points omitted ("(x0 x1)(x2 x3)").
inline std::string cycle_notation(const Fan& fan, const std::vector<int>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s] || perm[s] == static_cast<int>(s)) continue;
        out += "(" + fan.labels[s];
        seen[s] = true;
        int t = perm[s];
        while (t != static_cast<int>(s)) {
            seen[t] = true;
            out += " " + fan.labels[t];
            t = perm[t];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace coxcomb
