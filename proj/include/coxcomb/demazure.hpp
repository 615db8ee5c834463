#pragma once

#include <set>
#include <vector>

#include "coxcomb/cox_ring.hpp"
#include "coxcomb/lattice.hpp"

namespace coxcomb {

/// A Demazure root of the generalized fan: a dual-lattice covector pairing to
/// exactly 1 with the distinguished ray and <= 0 with every other ray.
/// Semisimple means -m is also a root; geometric means the associated root
/// subgroup preserves the Cox construction.
struct DemazureRoot {
    std::vector<Int> covector; // coordinates in the dual HNF lattice basis
    int distinguished = -1;    // label index with pairing 1
    std::vector<Int> pairings; // <m, rho(s)> per label (basis independent)
    bool semisimple = false;
    bool geometric = false;
};

struct DemazureRootSet {
    std::vector<DemazureRoot> roots; // ordered by (distinguished label, lex covector)
    FanLattice lattice;
    size_t n_semisimple = 0;
    size_t n_geometric = 0;
};

/// True iff for every face sigma there is a face containing {distinguished}
/// together with sigma_m = {s' in sigma : <m, rho(s')> = 0}. Checking maximal
/// faces suffices since sigma_m grows with sigma and K is downward closed.
inline bool geometric_filter(const Fan& fan, const DemazureRoot& root) {
    for (const Face& sigma : fan.maximal_faces()) {
        Face need;
        for (int s : sigma)
            if (root.pairings[s] == 0) need.push_back(s);
        if (std::find(need.begin(), need.end(), root.distinguished) == need.end()) {
            need.push_back(root.distinguished);
            std::sort(need.begin(), need.end());
        }
        if (fan.faces.find(need) == fan.faces.end()) return false;
    }
    return true;
}

/// Complete enumeration of the Demazure roots via per-label root polyhedra:
/// each {m : <m, rho(s)> = 1, <m, rho(s')> <= 0} is swept from an exact LP
/// bounding box (bounded exactly when the rationalization is complete).
inline DemazureRootSet demazure_roots(const Fan& fan) {
    DemazureRootSet out;
    out.lattice = fan_lattice(fan);
    const FanLattice& lat = out.lattice;
    size_t r = lat.rank, n = fan.size();
    if (r == 0) return out; // no covectors pair to 1 against zero rays

    for (size_t s = 0; s < n; ++s) {
        std::vector<Int> cs = lat.ray_coords.column(s);
        bool zero_ray = true;
        for (const Int& c : cs) zero_ray = zero_ray && c == 0;
        if (zero_ray) continue;

        std::vector<LinearConstraint> cons;
        {
            Vec row(r);
            for (size_t i = 0; i < r; ++i) row[i] = Scalar(cs[i]);
            cons.push_back({row, Rel::eq, Scalar(1)});
        }
        for (size_t t = 0; t < n; ++t) {
            if (t == s) continue;
            Vec row(r);
            for (size_t i = 0; i < r; ++i) row[i] = Scalar(lat.ray_coords.at(i, t));
            cons.push_back({std::move(row), Rel::le, Scalar(0)});
        }
        if (!lp_feasible(cons, r)) continue;

        std::vector<Int> lo(r), hi(r);
        bool empty = false;
        for (size_t i = 0; i < r && !empty; ++i) {
            Vec obj(r, Scalar(0));
            obj[i] = Scalar(1);
            Extremum mn = lp_extremum(obj, cons, false);
            Extremum mx = lp_extremum(obj, cons, true);
            if (mn.unbounded || mx.unbounded)
                raise(errc::unbounded_root_polyhedron,
                      "root polyhedron of '" + fan.labels[s] + "' is unbounded (rationalization not complete)");
            const Rational& a = mn.value.rational_part();
            const Rational& b = mx.value.rational_part();
            Int f = numerator(a) / denominator(a);
            if (Rational(f) < a) ++f; // ceil
            lo[i] = f;
            Int g = numerator(b) / denominator(b);
            if (Rational(g) > b) --g; // floor
            hi[i] = g;
            if (lo[i] > hi[i]) empty = true;
        }
        if (empty) continue;

        std::vector<Int> m(r);
        std::function<void(size_t)> sweep = [&](size_t i) {
            if (i == r) {
                for (size_t t = 0; t < n; ++t) {
                    Int p = lat.pairing(m, t);
                    if (t == s ? p != 1 : p > 0) return;
                }
                DemazureRoot root;
                root.covector = m;
                root.distinguished = static_cast<int>(s);
                root.pairings.resize(n);
                for (size_t t = 0; t < n; ++t) root.pairings[t] = lat.pairing(m, t);
                out.roots.push_back(std::move(root));
                return;
            }
            for (Int v = lo[i]; v <= hi[i]; ++v) {
                m[i] = v;
                sweep(i + 1);
            }
        };
        sweep(0);
    }

    std::set<std::vector<Int>> all;
    for (const DemazureRoot& root : out.roots) all.insert(root.covector);
    for (DemazureRoot& root : out.roots) {
        std::vector<Int> neg(root.covector.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -root.covector[i];
        root.semisimple = all.count(neg) > 0;
        root.geometric = geometric_filter(fan, root);
        if (root.semisimple) ++out.n_semisimple;
        if (root.geometric) ++out.n_geometric;
    }
    return out;
}

/// The one-parameter subgroup y_m(lambda): only the distinguished coordinate
/// moves, by lambda times the monomial with exponents <-m, rho(s')>.
inline std::vector<ComplexScalar> root_subgroup_apply(const Fan& fan, const DemazureRoot& root,
                                                      const ComplexScalar& lambda,
                                                      const std::vector<ComplexScalar>& z) {
    if (z.size() != fan.size()) raise(errc::dimension_mismatch, "point has wrong number of coordinates");
    std::vector<ComplexScalar> out = z;
    ComplexScalar mono(Scalar(1));
    for (size_t t = 0; t < z.size(); ++t) {
        if (static_cast<int>(t) == root.distinguished) continue;
        long e = static_cast<long>(-root.pairings[t]);
        if (e != 0) mono *= z[t].pow(e);
    }
    out[root.distinguished] = z[root.distinguished] + lambda * mono;
    return out;
}

/// Verifies the conjugation identity t y_m(lambda) t^{-1} = y_m(lambda t_s
/// prod t_{s'}^{<m, rho(s')>}) by exact evaluation at a sample point.
inline bool conjugation_check(const Fan& fan, const DemazureRoot& root, const std::vector<ComplexScalar>& torus,
                              const ComplexScalar& lambda, const std::vector<ComplexScalar>& z) {
    if (torus.size() != fan.size()) raise(errc::dimension_mismatch, "torus element has wrong length");
    for (const ComplexScalar& t : torus)
        if (t.is_zero()) raise(errc::bad_parameters, "torus coordinates must be nonzero");

    std::vector<ComplexScalar> w(z.size());
    for (size_t i = 0; i < z.size(); ++i) w[i] = z[i] / torus[i];
    w = root_subgroup_apply(fan, root, lambda, w);
    for (size_t i = 0; i < z.size(); ++i) w[i] = w[i] * torus[i];

    ComplexScalar factor = torus[root.distinguished];
    for (size_t t = 0; t < torus.size(); ++t) {
        if (static_cast<int>(t) == root.distinguished) continue;
        long e = static_cast<long>(root.pairings[t]);
        if (e != 0) factor *= torus[t].pow(e);
    }
    std::vector<ComplexScalar> rhs = root_subgroup_apply(fan, root, lambda * factor, z);
    return w == rhs;
}

/// For a non-geometric root: the point with zeros exactly on sigma_m of the
/// first failing face and ones elsewhere. It lies in U(Sigma), and
/// y_m(-1) sends it to a point whose zero pattern sigma_m + {s} is not a face.
struct EscapeWitness {
    std::vector<ComplexScalar> point;
    Face failing_face; // lex-least face with no face containing sigma_m + {s}
    Face zero_set;     // sigma_m of that face
};

inline EscapeWitness escape_witness(const Fan& fan, const DemazureRoot& root) {
    if (root.geometric) raise(errc::root_is_geometric, "escape witnesses exist only for non-geometric roots");
    for (const Face& sigma : fan.faces) {
        Face need;
        for (int s : sigma)
            if (root.pairings[s] == 0) need.push_back(s);
        Face zero_set = need;
        if (std::find(need.begin(), need.end(), root.distinguished) == need.end()) {
            need.push_back(root.distinguished);
            std::sort(need.begin(), need.end());
        }
        if (fan.faces.find(need) != fan.faces.end()) continue;
        EscapeWitness w;
        w.failing_face = sigma;
        w.zero_set = zero_set;
        w.point.assign(fan.size(), ComplexScalar(Scalar(1)));
        for (int s : zero_set) w.point[s] = ComplexScalar(Scalar(0));
        return w;
    }
    raise(errc::internal_error, "non-geometric root with no failing face");
}

} // namespace coxcomb
