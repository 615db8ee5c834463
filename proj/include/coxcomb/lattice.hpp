#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coxcomb/fan.hpp"
#include "coxcomb/normal_forms.hpp"

namespace coxcomb {

/// The generalized lattice Gamma(Sigma) of the rationalized fan, with every
/// ray expressed in the canonical HNF basis. All covector bookkeeping in the
/// toolkit (Demazure roots, degree polyhedra, symmetries) uses the dual of
/// this basis, so coordinates never drift between modules.
struct FanLattice {
    size_t ambient_dim = 0; // of the rationalized fan
    IntMatrix basis;        // rank x ambient_dim, HNF rows generating Gamma
    IntMatrix ray_coords;   // rank x |S|; column s = coordinates of ray s
    size_t rank = 0;

    /// Pairing <m, rho(s)> for a covector m in dual-basis coordinates.
    Int pairing(const std::vector<Int>& m, size_t s) const {
        Int v = 0;
        for (size_t i = 0; i < rank; ++i) v += m[i] * ray_coords.at(i, s);
        return v;
    }
};

inline FanLattice fan_lattice(const Rationalization& rat) {
    const Fan& f = rat.fan;
    FanLattice lat;
    lat.ambient_dim = f.ambient_dim;
    IntMatrix rows(f.size(), f.ambient_dim);
    for (size_t s = 0; s < f.size(); ++s)
        for (size_t j = 0; j < f.ambient_dim; ++j) {
            const Scalar& x = f.rays[s][j];
            if (!x.is_integer()) raise(errc::internal_error, "rationalized ray is not integral");
            rows.at(s, j) = numerator(x.rational_part());
        }
    lat.basis = hermite_normal_form(rows);
    lat.rank = lat.basis.rows();
    lat.ray_coords = IntMatrix(lat.rank, f.size());
    for (size_t s = 0; s < f.size(); ++s) {
        auto coords = hnf_coordinates(lat.basis, rows.row(s));
        if (!coords) raise(errc::internal_error, "ray outside its own lattice");
        for (size_t i = 0; i < lat.rank; ++i) lat.ray_coords.at(i, s) = (*coords)[i];
    }
    return lat;
}

/// Lattice of a fan (irrational fans are rationalized first; the dual lattice
/// is unchanged by that, which is what every consumer pairs against).
inline FanLattice fan_lattice(const Fan& fan) { return fan_lattice(rationalize(fan)); }

/// Matrix of the dual fan map Gamma^v -> (Z^S)^v, gamma |-> sum <gamma,
/// rho(s)> e_s^*, in the dual HNF basis: row i lists <gamma_i^v, rho(s)>.
inline IntMatrix dual_fan_map(const Fan& fan) { return fan_lattice(fan).ray_coords; }

/// Element of L_Sigma in (torsion, free) coordinates.
struct Degree {
    std::vector<Int> torsion; // entry j reduced mod invariant_factors[j]
    std::vector<Int> free;

    friend bool operator==(const Degree& a, const Degree& b) { return a.torsion == b.torsion && a.free == b.free; }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (a.torsion != b.torsion) return a.torsion < b.torsion;
        return a.free < b.free;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (const Int& t : torsion) {
            if (!first) os << ",";
            os << t << "t";
            first = false;
        }
        for (const Int& f : free) {
            if (!first) os << ",";
            os << f;
            first = false;
        }
        os << ")";
        return os.str();
    }
};

/// The grading group L_Sigma = Z^S / im (A_Sigma^Z)^v with per-variable
/// degrees and the partition of S into equal-degree classes.
struct GradingGroup {
    std::vector<Int> invariant_factors; // the d_i >= 2
    size_t free_rank = 0;
    std::vector<Degree> degree_of;        // per label
    std::vector<std::vector<int>> classes; // partition of label indices, by least member

    // change-of-basis data: degree of an exponent vector iota is iota * Winv
    // reduced into (torsion, free) coordinates
    IntMatrix winv;
    std::vector<Int> diag; // full Smith diagonal, padded with zeros up to |S|

    Degree reduce(const std::vector<Int>& y) const {
        Degree deg;
        for (size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] == 1) continue;
            if (diag[i] == 0) deg.free.push_back(y[i]);
            else {
                Int m = y[i] % diag[i];
                if (m < 0) m += diag[i];
                deg.torsion.push_back(m);
            }
        }
        return deg;
    }

    Degree degree_of_exponent(const std::vector<Int>& iota) const {
        std::vector<Int> y(diag.size(), 0);
        for (size_t i = 0; i < diag.size(); ++i)
            for (size_t s = 0; s < iota.size(); ++s) y[i] += iota[s] * winv.at(s, i);
        return reduce(y);
    }

    std::string structure_string() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) { os << "Z"; first = false; }
        else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
        for (const Int& d : invariant_factors) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

inline GradingGroup grading_group(const FanLattice& lat, size_t nlabels) {
    GradingGroup g;
    size_t n = nlabels;
    SmithDecomposition snf = smith_normal_form(lat.ray_coords);
    g.winv = snf.Winv;
    g.diag.assign(n, 0);
    auto d = snf.diagonal();
    for (size_t i = 0; i < d.size(); ++i) g.diag[i] = d[i];
    for (const Int& di : g.diag) {
        if (di >= 2) g.invariant_factors.push_back(di);
        if (di == 0) ++g.free_rank;
    }
    for (size_t s = 0; s < n; ++s) {
        std::vector<Int> e(n, 0);
        e[s] = 1;
        g.degree_of.push_back(g.degree_of_exponent(e));
    }
    std::map<Degree, std::vector<int>> by_degree;
    for (size_t s = 0; s < n; ++s) by_degree[g.degree_of[s]].push_back(static_cast<int>(s));
    std::vector<std::vector<int>> classes(by_degree.size());
    std::vector<int> order;
    for (auto& [deg, members] : by_degree) order.push_back(members.front());
    std::sort(order.begin(), order.end());
    for (auto& [deg, members] : by_degree) {
        size_t pos = std::find(order.begin(), order.end(), members.front()) - order.begin();
        classes[pos] = members;
    }
    g.classes = classes;
    return g;
}

inline GradingGroup grading_group(const Fan& fan) { return grading_group(fan_lattice(fan), fan.size()); }

} // namespace coxcomb
