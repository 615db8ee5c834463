#include <catch2/catch_amalgamated.hpp>

#include "coxcomb/cox_ring.hpp"
#include "coxcomb/demazure.hpp"
#include "coxcomb/fan_examples.hpp"
#include "test_support.hpp"

using namespace coxcomb;

namespace {

Fan cp2_mod_l() {
    Subspace l = Subspace::span(2, {{Scalar(1), Scalar::sqrt_of(2)}});
    Fan f = quotient_fan(projective_space(2), l);
    f.field = FieldContext(2);
    return f;
}

// Independent oracle: enumerate monomials x^iota directly. A strictly positive
// integer vanishing combination w of the rays makes <w, iota> constant on a
// degree class, so the search space {iota >= 0 : <w, iota> = <w, alpha>} is
// finite and complete; filter by degree equality in L_Sigma.
size_t brute_force_graded_dimension(const Fan& fan, const std::vector<Int>& alpha) {
    auto lambda = positive_combination(fan);
    REQUIRE(lambda.has_value());
    Int scale = 1;
    for (const Scalar& c : *lambda) {
        REQUIRE(c.is_rational());
        Int den = denominator(c.rational_part());
        scale = scale / boost::multiprecision::gcd(scale, den) * den;
    }
    std::vector<Int> w;
    for (const Scalar& c : *lambda) w.push_back(numerator(c.rational_part() * Rational(scale)));

    GradingGroup grading = grading_group(fan);
    Degree target = grading.degree_of_exponent(alpha);
    Int budget = 0;
    for (size_t s = 0; s < alpha.size(); ++s) budget += w[s] * alpha[s];
    if (budget < 0) return 0;

    size_t count = 0;
    std::vector<Int> iota(fan.size(), 0);
    std::function<void(size_t, Int)> rec = [&](size_t s, Int rest) {
        if (s == fan.size()) {
            if (rest == 0 && grading.degree_of_exponent(iota) == target) ++count;
            return;
        }
        for (Int v = 0; v * w[s] <= rest; ++v) {
            iota[s] = v;
            rec(s + 1, rest - v * w[s]);
        }
        iota[s] = 0;
    };
    rec(0, budget);
    return count;
}

std::vector<Int> unit(size_t n, size_t s, Int k = 1) {
    std::vector<Int> a(n, 0);
    a[s] = k;
    return a;
}

} // namespace

TEST_CASE("graded dimensions of CP^2", "[coxring]") {
    Fan f = projective_space(2);
    CHECK(graded_dimension(f, unit(3, 0)) == 3);       // x0, x1, x2
    CHECK(graded_dimension(f, {0, 0, 0}) == 1);        // constants
    CHECK(graded_dimension(f, unit(3, 0, 2)) == 6);    // degree-2 monomials in 3 variables
    CHECK(brute_force_graded_dimension(f, unit(3, 0, 2)) == 6);
}

TEST_CASE("unbounded components are rejected", "[coxring]") {
    // a single-cone fan is not complete: P_alpha is unbounded
    Fan single = make_fan({"a", "b"}, {{0, 1}}, 2, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
    CHECK_THROWS_AS(graded_dimension(single, {1, 0}), error);
}

TEST_CASE("monomial bases", "[coxring]") {
    // CP^2 degree-1 component: exactly the three generators
    GradedComponent c = monomial_basis(projective_space(2), 0);
    CHECK(c.generator_dim == 3);
    CHECK(c.decomposable_dim == 0);
    REQUIRE(c.monomials.size() == 3);
    CHECK(c.monomials[0] == std::vector<Int>{0, 0, 1});
    CHECK(c.monomials[2] == std::vector<Int>{1, 0, 0});

    // distinct degrees on the irrational quotient: class of x0 is {x0}
    GradedComponent q = monomial_basis(cp2_mod_l(), 0);
    CHECK(q.class_members == std::vector<int>{0});
    CHECK(q.monomials.size() == 1);
    CHECK(q.decomposable_dim == 0);

    // Hirzebruch(2), class of the (0,-1) ray: one generator plus three decomposables
    Fan h2 = hirzebruch(2);
    GradingGroup g = grading_group(h2);
    size_t klass = 0;
    for (size_t i = 0; i < g.classes.size(); ++i)
        if (g.classes[i] == std::vector<int>{3}) klass = i;
    GradedComponent hc = monomial_basis(h2, klass);
    CHECK(hc.generator_dim == 1);
    CHECK(hc.decomposable_dim == 3);
    CHECK(hc.monomials.size() == 4);
}

TEST_CASE("graded dimensions match brute-force monomial enumeration", "[coxring][property]") {
    std::vector<Fan> fans = {projective_space(2), calabi_eckmann(1, 1), hirzebruch(1), hirzebruch(2), hirzebruch(3)};
    for (const Fan& f : fans) {
        FanLattice lat = fan_lattice(f);
        GradingGroup g = grading_group(lat, f.size());
        for (size_t i = 0; i < g.classes.size(); ++i) {
            std::vector<Int> alpha = unit(f.size(), g.classes[i].front());
            CHECK(graded_dimension(lat, alpha) == brute_force_graded_dimension(f, alpha));
        }
        // a couple of composite degrees too
        std::vector<Int> twice = unit(f.size(), 0, 2);
        CHECK(graded_dimension(lat, twice) == brute_force_graded_dimension(f, twice));
        std::vector<Int> mixed(f.size(), 0);
        mixed[0] = 1;
        mixed[f.size() - 1] = 1;
        CHECK(graded_dimension(lat, mixed) == brute_force_graded_dimension(f, mixed));
    }
}

TEST_CASE("graded automorphism group structure", "[coxring]") {
    AutGStructure cp2 = autg_structure(projective_space(2));
    CHECK(cp2.total_dim == 9);
    CHECK(cp2.unipotent_dim == 0);
    CHECK(cp2.reductive_factors == std::vector<size_t>{3});
    CHECK(cp2.ghost_torus_dim == 0);

    for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 3; ++q) {
            AutGStructure ce = autg_structure(calabi_eckmann(p, q));
            // a CP^0 block contributes 1 = (0+1)^2 as its ghost torus factor
            Int expect = Int(p + 1) * Int(p + 1) + Int(q + 1) * Int(q + 1);
            CHECK(ce.total_dim == expect);
            std::vector<size_t> factors = ce.reductive_factors;
            std::sort(factors.begin(), factors.end());
            std::vector<size_t> want;
            if (p == 0 || q == 0) {
                // the CP^0 block is a ghost vertex, moved into the torus factor
                want = {static_cast<size_t>(std::max(p, q) + 1)};
                if (p == 0 && q == 0) want = {};
                CHECK(ce.ghost_torus_dim == static_cast<size_t>((p == 0) + (q == 0)));
            } else {
                want = {static_cast<size_t>(std::min(p, q) + 1), static_cast<size_t>(std::max(p, q) + 1)};
                CHECK(ce.ghost_torus_dim == 0);
            }
            CHECK(factors == want);
        }

    // Hopf fan: GL(2) plus a one-dimensional ghost torus
    Fan hopf = hopf_surface(ComplexScalar::parse("1+1i"), ComplexScalar::parse("1+1i"));
    AutGStructure h = autg_structure(hopf);
    CHECK(h.total_dim == 5);
    CHECK(h.ghost_torus_dim == 1);
    CHECK(h.reductive_factors == std::vector<size_t>{2});
    CHECK(h.unipotent_dim == 0);

    // Hirzebruch(2): classes {u0,u2}, {u1}, {u3} with dims 2, 1, 4
    AutGStructure h2 = autg_structure(hirzebruch(2));
    CHECK(h2.total_dim == 9); // = |S| + #roots = 4 + 5, see the consistency test below
    CHECK(h2.unipotent_dim == 3);
    CHECK(h2.reductive_factors == std::vector<size_t>{2, 1, 1});
}

TEST_CASE("dimension formula consistency: dim Aut_g = |S| + #roots", "[coxring][property]") {
    std::vector<Fan> fans = {projective_space(1), projective_space(2), projective_space(3),
                             hirzebruch(1),       hirzebruch(2),       hirzebruch(4),
                             calabi_eckmann(1, 1), calabi_eckmann(2, 1), calabi_eckmann(1, 0),
                             hopf_surface(ComplexScalar::parse("1+1i"), ComplexScalar::parse("1+1i"))};
    for (const Fan& f : fans) {
        AutGStructure a = autg_structure(f);
        DemazureRootSet roots = demazure_roots(f);
        CHECK(a.total_dim == Int(f.size()) + Int(roots.roots.size()));
    }
}

TEST_CASE("product additivity of the automorphism structure", "[coxring][property]") {
    Fan a = calabi_eckmann(1, 1), b = calabi_eckmann(2, 2);
    Fan prod = product(a, b);
    AutGStructure sa = autg_structure(a), sb = autg_structure(b), sp = autg_structure(prod);
    CHECK(sp.total_dim == sa.total_dim + sb.total_dim);
    CHECK(sp.unipotent_dim == sa.unipotent_dim + sb.unipotent_dim);
    std::vector<size_t> merged = sa.reductive_factors;
    merged.insert(merged.end(), sb.reductive_factors.begin(), sb.reductive_factors.end());
    std::sort(merged.begin(), merged.end());
    std::vector<size_t> got = sp.reductive_factors;
    std::sort(got.begin(), got.end());
    CHECK(got == merged);
}
