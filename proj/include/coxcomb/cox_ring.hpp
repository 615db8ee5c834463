#pragma once

#include <vector>

#include "coxcomb/lattice.hpp"

namespace coxcomb {

namespace cox_detail {

/// Integer points of the degree polyhedron P_alpha = {tau : <tau, rho(s)> >=
/// -alpha_s} in dual-lattice coordinates, swept from an exact LP bounding box.
/// Completeness of the rationalization makes P_alpha compact; an unbounded
/// direction raises instead. Points come back in lexicographic order.
inline std::vector<std::vector<Int>> degree_polyhedron_points(const FanLattice& lat, const std::vector<Int>& alpha) {
    size_t r = lat.rank, n = lat.ray_coords.cols();
    if (alpha.size() != n) raise(errc::dimension_mismatch, "degree vector has wrong length");
    if (r == 0) {
        for (const Int& a : alpha)
            if (a < 0) return {};
        return {std::vector<Int>{}};
    }
    std::vector<LinearConstraint> cons;
    for (size_t s = 0; s < n; ++s) {
        Vec row(r);
        for (size_t i = 0; i < r; ++i) row[i] = Scalar(lat.ray_coords.at(i, s));
        cons.push_back({row, Rel::ge, Scalar(-Rational(alpha[s]))});
    }
    std::vector<Int> lo(r), hi(r);
    for (size_t i = 0; i < r; ++i) {
        Vec obj(r, Scalar(0));
        obj[i] = Scalar(1);
        Extremum mn = lp_extremum(obj, cons, false);
        Extremum mx = lp_extremum(obj, cons, true);
        if (mn.unbounded || mx.unbounded)
            raise(errc::unbounded_component, "degree polyhedron is unbounded (fan not complete)");
        // integer bounds: ceil(min), floor(max) over Q(sqrt d) values
        auto floor_of = [](const Scalar& x) {
            Rational q = x.rational_part();
            Int f = numerator(q) / denominator(q);
            if (Rational(f) > q) --f; // true floor for negatives
            if (!x.is_rational()) {
                while (Scalar(Rational(f + 1)) <= x) ++f;
                while (Scalar(Rational(f)) > x) --f;
            }
            return f;
        };
        hi[i] = floor_of(mx.value);
        lo[i] = -floor_of(-mn.value); // ceil
        if (lo[i] > hi[i]) return {};
    }
    std::vector<std::vector<Int>> points;
    std::vector<Int> tau(r);
    std::function<void(size_t)> sweep = [&](size_t i) {
        if (i == r) {
            for (size_t s = 0; s < n; ++s)
                if (lat.pairing(tau, s) < -alpha[s]) return;
            points.push_back(tau);
            return;
        }
        for (Int v = lo[i]; v <= hi[i]; ++v) {
            tau[i] = v;
            sweep(i + 1);
        }
    };
    sweep(0);
    return points;
}

} // namespace cox_detail

/// Number of monomials of degree [alpha] in the Cox ring: lattice points of
/// the degree polyhedron, by the P_alpha bijection.
inline size_t graded_dimension(const FanLattice& lat, const std::vector<Int>& alpha) {
    return cox_detail::degree_polyhedron_points(lat, alpha).size();
}

inline size_t graded_dimension(const Fan& fan, const std::vector<Int>& alpha) {
    return graded_dimension(fan_lattice(fan), alpha);
}

/// One graded component R(Sigma)_{alpha_i} split into generators (the
/// variables of class S_i) and decomposable monomials.
struct GradedComponent {
    int class_index = 0;
    std::vector<int> class_members;
    std::vector<Int> representative;           // alpha = e_s for the least s in the class
    std::vector<std::vector<Int>> monomials;   // exponent vectors, lex sorted
    size_t generator_dim = 0;
    size_t decomposable_dim = 0;
};

inline GradedComponent monomial_basis(const FanLattice& lat, const GradingGroup& grading, size_t class_index) {
    size_t n = lat.ray_coords.cols();
    if (class_index >= grading.classes.size()) raise(errc::bad_parameters, "no such degree class");
    GradedComponent comp;
    comp.class_index = static_cast<int>(class_index);
    comp.class_members = grading.classes[class_index];
    comp.representative.assign(n, 0);
    comp.representative[comp.class_members.front()] = 1;
    auto points = cox_detail::degree_polyhedron_points(lat, comp.representative);
    for (const auto& tau : points) {
        std::vector<Int> iota(n);
        for (size_t s = 0; s < n; ++s) iota[s] = comp.representative[s] + lat.pairing(tau, s);
        comp.monomials.push_back(std::move(iota));
    }
    std::sort(comp.monomials.begin(), comp.monomials.end());
    comp.generator_dim = comp.class_members.size();
    comp.decomposable_dim = comp.monomials.size() - comp.generator_dim;
    return comp;
}

inline GradedComponent monomial_basis(const Fan& fan, size_t class_index) {
    FanLattice lat = fan_lattice(fan);
    return monomial_basis(lat, grading_group(lat, fan.size()), class_index);
}

/// Shape of the graded automorphism group Aut_g(Sigma): one GL(dim R^g) factor
/// per degree class of the reduced fan, one torus factor per ghost vertex, and
/// the unipotent radical dimension. Classes and graded dimensions are taken on
/// the reduced fan, consistently with splitting the ghost torus off first.
struct AutGStructure {
    Int total_dim = 0;
    Int unipotent_dim = 0;
    std::vector<size_t> reductive_factors; // class sizes |S_i| (GL factors), reduced fan
    std::vector<size_t> component_dims;    // dim R_{alpha_i} per class, same order
    size_t ghost_torus_dim = 0;
};

inline AutGStructure autg_structure(const Fan& fan) {
    AutGStructure out;
    Fan red = drop_ghosts(fan);
    out.ghost_torus_dim = fan.size() - red.size();
    FanLattice lat = fan_lattice(red);
    GradingGroup grading = grading_group(lat, red.size());
    for (size_t i = 0; i < grading.classes.size(); ++i) {
        size_t csize = grading.classes[i].size();
        std::vector<Int> alpha(red.size(), 0);
        alpha[grading.classes[i].front()] = 1;
        size_t dim = graded_dimension(lat, alpha);
        out.reductive_factors.push_back(csize);
        out.component_dims.push_back(dim);
        out.total_dim += Int(csize) * Int(dim);
        out.unipotent_dim += Int(csize) * (Int(dim) - Int(csize));
    }
    out.total_dim += Int(out.ghost_torus_dim);
    return out;
}

} // namespace coxcomb
