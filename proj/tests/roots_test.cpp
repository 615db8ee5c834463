#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coxcomb/demazure.hpp"
#include "coxcomb/fan_examples.hpp"
#include "test_support.hpp"

using namespace coxcomb;
namespace ct = coxcomb::testing;

namespace {

Fan cp2_mod_l() {
    Subspace l = Subspace::span(2, {{Scalar(1), Scalar::sqrt_of(2)}});
    Fan f = quotient_fan(projective_space(2), l);
    f.field = FieldContext(2);
    return f;
}

// complete fan with a non-geometric root: CP^2 rays plus a fourth ray -e2
// attached only as a singleton cone
Fan overlap_fan() {
    return make_fan({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 2}, {3}}, 2,
                    {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(-1)}, {Scalar(0), Scalar(-1)}});
}

std::set<std::vector<Int>> pairing_set(const DemazureRootSet& rs) {
    std::set<std::vector<Int>> out;
    for (const auto& r : rs.roots) out.insert(r.pairings);
    return out;
}

// Independent oracle: sweep a fixed covector box and test the root axioms
// directly against the ray coordinates.
std::set<std::vector<Int>> box_oracle(const Fan& fan, long radius) {
    FanLattice lat = fan_lattice(fan);
    std::set<std::vector<Int>> found;
    std::vector<Int> m(lat.rank);
    std::function<void(size_t)> sweep = [&](size_t i) {
        if (i == lat.rank) {
            int ones = 0;
            bool ok = true;
            for (size_t s = 0; s < fan.size() && ok; ++s) {
                Int p = lat.pairing(m, s);
                if (p == 1) ++ones;
                else if (p > 0) ok = false;
            }
            if (ok && ones == 1) {
                std::vector<Int> pair(fan.size());
                for (size_t s = 0; s < fan.size(); ++s) pair[s] = lat.pairing(m, s);
                found.insert(pair);
            }
            return;
        }
        for (long v = -radius; v <= radius; ++v) {
            m[i] = v;
            sweep(i + 1);
        }
    };
    if (lat.rank > 0) sweep(0);
    return found;
}

std::vector<ComplexScalar> cpoint(std::initializer_list<int> v) {
    std::vector<ComplexScalar> z;
    for (int x : v) z.push_back(ComplexScalar(Scalar(x)));
    return z;
}

ComplexScalar random_cscalar() {
    return ComplexScalar(ct::random_rational_scalar(4), ct::random_rational_scalar(4));
}

ComplexScalar random_nonzero_cscalar() {
    while (true) {
        ComplexScalar z = random_cscalar();
        if (!z.is_zero()) return z;
    }
}

} // namespace

TEST_CASE("roots of CP^2", "[roots]") {
    DemazureRootSet rs = demazure_roots(projective_space(2));
    CHECK(rs.roots.size() == 6);
    CHECK(rs.n_semisimple == 6);
    CHECK(rs.n_geometric == 6);
    // the six pairing vectors of the A2 system: one +1, one -1, one 0
    std::set<std::vector<Int>> expect = {{1, -1, 0}, {1, 0, -1}, {-1, 1, 0}, {0, 1, -1}, {-1, 0, 1}, {0, -1, 1}};
    CHECK(pairing_set(rs) == expect);
    CHECK(pairing_set(rs) == box_oracle(projective_space(2), 3));
    // every root re-verifies its axioms
    for (const auto& r : rs.roots) {
        CHECK(r.pairings[r.distinguished] == 1);
        for (size_t s = 0; s < 3; ++s)
            if (static_cast<int>(s) != r.distinguished) CHECK(r.pairings[s] <= 0);
    }
}

TEST_CASE("root counts of projective spaces", "[roots][property]") {
    for (long n = 1; n <= 3; ++n) {
        DemazureRootSet rs = demazure_roots(projective_space(n));
        CHECK(rs.roots.size() == static_cast<size_t>(n * (n + 1)));
        CHECK(rs.n_semisimple == rs.roots.size());
        CHECK(rs.n_geometric == rs.roots.size());
        CHECK(pairing_set(rs) == box_oracle(projective_space(n), 3));
    }
}

TEST_CASE("roots of Hirzebruch surfaces", "[roots]") {
    for (long a = 1; a <= 5; ++a) {
        Fan f = hirzebruch(a);
        DemazureRootSet rs = demazure_roots(f);
        CHECK(rs.roots.size() == static_cast<size_t>(a + 3));
        CHECK(rs.n_semisimple == 2);
        CHECK(rs.n_geometric == rs.roots.size());

        // hand enumeration: +-(1,0,-1,0) and, at the (0,-1) ray, (k,-1,-k-a,1)
        std::set<std::vector<Int>> expect = {{1, 0, -1, 0}, {-1, 0, 1, 0}};
        for (long k = -a; k <= 0; ++k) expect.insert({Int(k), -1, Int(-k - a), 1});
        CHECK(pairing_set(rs) == expect);
        CHECK(pairing_set(rs) == box_oracle(f, a + 2));

        size_t at_u3 = 0;
        for (const auto& r : rs.roots)
            if (r.distinguished == 3) ++at_u3;
        CHECK(at_u3 == static_cast<size_t>(a + 1));
    }
}

TEST_CASE("rationalized irrational quotient has no roots", "[roots]") {
    DemazureRootSet rs = demazure_roots(cp2_mod_l());
    CHECK(rs.roots.empty());
    CHECK(rs.lattice.rank == 0);
}

TEST_CASE("non-complete rationalizations are rejected", "[roots]") {
    Fan single = make_fan({"a", "b"}, {{0, 1}}, 2, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
    CHECK_THROWS_AS(demazure_roots(single), error);
}

TEST_CASE("geometric filter on a crafted overlapping fan", "[roots]") {
    Fan f = overlap_fan();
    REQUIRE(is_complete(f).complete);
    DemazureRootSet rs = demazure_roots(f);
    // the root pairing (1,0,-1,0) is blocked: sigma = {d} has sigma_m = {d}
    // but {a,d} is not a face
    bool found_nongeom = false;
    for (const auto& r : rs.roots)
        if (r.pairings == std::vector<Int>{1, 0, -1, 0}) {
            found_nongeom = true;
            CHECK(!r.geometric);
            CHECK(!geometric_filter(f, r));
        }
    CHECK(found_nongeom);
    CHECK(rs.n_geometric < rs.roots.size());
}

TEST_CASE("root subgroup evaluation", "[roots]") {
    Fan f = projective_space(2);
    DemazureRootSet rs = demazure_roots(f);

    // lambda = 0 is the identity
    for (const auto& r : rs.roots) CHECK(root_subgroup_apply(f, r, ComplexScalar(Scalar(0)), cpoint({1, 2, 3})) == cpoint({1, 2, 3}));

    // the paper's example: m with pairings (1, -1, 0) at the first ray moves
    // (1,1,1) to (2,1,1) for lambda = 1
    const DemazureRoot* m = nullptr;
    for (const auto& r : rs.roots)
        if (r.pairings == std::vector<Int>{1, -1, 0}) m = &r;
    REQUIRE(m != nullptr);
    auto image = root_subgroup_apply(f, *m, ComplexScalar(Scalar(1)), cpoint({1, 1, 1}));
    CHECK(image == cpoint({2, 1, 1}));

    // one-parameter group law on random exact points
    for (int t = 0; t < 50; ++t) {
        ComplexScalar lambda = random_cscalar();
        std::vector<ComplexScalar> z = {random_cscalar(), random_cscalar(), random_cscalar()};
        for (const auto& r : rs.roots) {
            auto fwd = root_subgroup_apply(f, r, lambda, z);
            auto back = root_subgroup_apply(f, r, -lambda, fwd);
            CHECK(back == z);
        }
    }
}

TEST_CASE("conjugation identity of root subgroups", "[roots][property]") {
    std::vector<Fan> fans = {projective_space(2), hirzebruch(2), calabi_eckmann(1, 1)};
    for (const Fan& f : fans) {
        DemazureRootSet rs = demazure_roots(f);
        REQUIRE(!rs.roots.empty());
        for (int t = 0; t < 40; ++t) {
            const DemazureRoot& r = rs.roots[t % rs.roots.size()];
            std::vector<ComplexScalar> torus(f.size()), z(f.size());
            for (size_t s = 0; s < f.size(); ++s) {
                torus[s] = random_nonzero_cscalar();
                z[s] = random_cscalar();
            }
            CHECK(conjugation_check(f, r, torus, random_cscalar(), z));
        }
    }

    // explicit checks from the CP^2 example
    Fan f = projective_space(2);
    DemazureRootSet rs = demazure_roots(f);
    const DemazureRoot* m = nullptr;
    for (const auto& r : rs.roots)
        if (r.pairings == std::vector<Int>{1, 0, -1}) m = &r;
    REQUIRE(m != nullptr);
    std::vector<ComplexScalar> ones = {ComplexScalar(Scalar(1)), ComplexScalar(Scalar(1)), ComplexScalar(Scalar(1))};
    std::vector<ComplexScalar> t2 = {ComplexScalar(Scalar(2)), ComplexScalar(Scalar(1)), ComplexScalar(Scalar(1))};
    std::vector<ComplexScalar> z = {random_cscalar(), random_cscalar(), random_cscalar()};
    CHECK(conjugation_check(f, *m, ones, ComplexScalar(Scalar(1)), z));
    CHECK(conjugation_check(f, *m, t2, ComplexScalar(Scalar(1)), z));

    // no root subgroup is centralized by the torus: t_s = 2 rescales lambda
    auto lhs = root_subgroup_apply(f, *m, ComplexScalar(Scalar(1)), cpoint({1, 1, 1}));
    std::vector<ComplexScalar> w = {cpoint({1, 1, 1})[0] / t2[0], ComplexScalar(Scalar(1)), ComplexScalar(Scalar(1))};
    auto conj = root_subgroup_apply(f, *m, ComplexScalar(Scalar(1)), w);
    for (size_t i = 0; i < 3; ++i) conj[i] = conj[i] * t2[i];
    CHECK(conj != lhs);
}

TEST_CASE("geometric roots preserve the Cox construction, non-geometric ones escape", "[roots][property]") {
    std::vector<Fan> fans = {projective_space(2), hirzebruch(2), overlap_fan()};
    for (const Fan& f : fans) {
        DemazureRootSet rs = demazure_roots(f);
        for (const auto& r : rs.roots) {
            if (r.geometric) {
                CHECK_THROWS_AS(escape_witness(f, r), error);
                int checked = 0;
                for (int t = 0; checked < 25 && t < 500; ++t) {
                    std::vector<ComplexScalar> z(f.size());
                    for (size_t s = 0; s < f.size(); ++s)
                        z[s] = (ct::rng()() % 4 == 0) ? ComplexScalar(Scalar(0)) : random_cscalar();
                    if (!in_cox_construction(f, z)) continue;
                    ++checked;
                    for (int lam : {1, -1, 2, -2})
                        CHECK(in_cox_construction(f, root_subgroup_apply(f, r, ComplexScalar(Scalar(lam)), z)));
                }
                CHECK(checked == 25);
            } else {
                EscapeWitness w = escape_witness(f, r);
                CHECK(in_cox_construction(f, w.point)); // the witness starts inside
                auto moved = root_subgroup_apply(f, r, ComplexScalar(Scalar(-1)), w.point);
                CHECK(!in_cox_construction(f, moved)); // and leaves U(Sigma)
            }
        }
    }
}

TEST_CASE("pushforwards of complete embedded fans have only geometric roots", "[roots][property]") {
    // strongly complete images: DR = DRG on the rationalization
    std::vector<Fan> bases = {projective_space(2), projective_space(3), calabi_eckmann(1, 1)};
    for (int t = 0; t < 30; ++t) {
        const Fan& base = bases[t % bases.size()];
        size_t target = 1 + t % base.ambient_dim;
        Matrix a(target, base.ambient_dim);
        for (size_t i = 0; i < target; ++i)
            for (size_t j = 0; j < base.ambient_dim; ++j) a.at(i, j) = Scalar(ct::random_int(-3, 3));
        if (rank(a) < target) continue; // keep the image complete
        Fan pushed = pushforward(base, a);
        DemazureRootSet rs = demazure_roots(pushed);
        CHECK(rs.n_geometric == rs.roots.size());
    }
}
