#include <catch2/catch_amalgamated.hpp>

#include "coxcomb/linprog.hpp"
#include "coxcomb/normal_forms.hpp"
#include "coxcomb/subspace.hpp"
#include "test_support.hpp"

using namespace coxcomb;
namespace ct = coxcomb::testing;

namespace {

Vec vec(std::initializer_list<int> v) {
    Vec r;
    for (int x : v) r.push_back(Scalar(x));
    return r;
}

LinearConstraint ge(Vec c, Scalar b) { return {std::move(c), Rel::ge, b}; }
LinearConstraint le(Vec c, Scalar b) { return {std::move(c), Rel::le, b}; }
LinearConstraint eq(Vec c, Scalar b) { return {std::move(c), Rel::eq, b}; }

bool satisfies(const Vec& x, const std::vector<LinearConstraint>& cons) {
    for (auto& c : cons) {
        Scalar v = dot(c.coeffs, x);
        if (c.rel == Rel::ge && v < c.rhs) return false;
        if (c.rel == Rel::le && v > c.rhs) return false;
        if (c.rel == Rel::eq && v != c.rhs) return false;
    }
    return true;
}

} // namespace

TEST_CASE("kernel of exact matrices", "[exactlin]") {
    Matrix id2 = Matrix::identity(2);
    CHECK(kernel(id2).dim() == 0);

    // fan operator of the CP^2 fan: columns e1, e2, -e1-e2
    Matrix a{{Scalar(1), Scalar(0), Scalar(-1)}, {Scalar(0), Scalar(1), Scalar(-1)}};
    Subspace k = kernel(a);
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec({1, 1, 1})));

    Matrix zero13(1, 3);
    CHECK(kernel(zero13).dim() == 3);
}

TEST_CASE("kernel properties on random matrices", "[exactlin][property]") {
    for (int t = 0; t < 60; ++t) {
        size_t r = 1 + t % 4, c = 1 + (t * 7) % 5;
        Matrix a = ct::random_matrix(r, c, t % 3 == 0);
        Subspace k = kernel(a);
        CHECK(rank(a) + k.dim() == c);
        for (size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(a.apply(k.basis_row(i))));
    }
}

TEST_CASE("smith normal form examples", "[exactlin]") {
    auto s1 = smith_normal_form(IntMatrix::identity(2));
    CHECK(s1.diagonal() == std::vector<Int>{1, 1});

    auto s2 = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s2.diagonal() == std::vector<Int>{1, 6});
    CHECK(s2.U * s2.D * s2.W == IntMatrix{{2, 0}, {0, 3}});

    auto s3 = smith_normal_form(IntMatrix{{3, 6}});
    CHECK(s3.diagonal() == std::vector<Int>{3});
    CHECK(s3.D.at(0, 1) == 0);
}

TEST_CASE("smith normal form properties", "[exactlin][property]") {
    for (int t = 0; t < 80; ++t) {
        size_t m = 1 + t % 8, n = 1 + (t * 5) % 8;
        IntMatrix a = ct::random_int_matrix(m, n);
        auto s = smith_normal_form(a);
        CHECK(s.U * s.D * s.W == a);
        CHECK(int_abs(int_det(s.U)) == 1);
        CHECK(int_abs(int_det(s.W)) == 1);
        CHECK(s.W * s.Winv == IntMatrix::identity(n));
        auto d = s.diagonal();
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            else CHECK(d[i + 1] == 0);
        }
    }
}

TEST_CASE("hermite normal form", "[exactlin]") {
    IntMatrix h = hermite_normal_form(IntMatrix{{2, 4}, {1, 3}});
    CHECK(h == IntMatrix{{1, 1}, {0, 2}});
    CHECK(hermite_normal_form(IntMatrix{{3, 6}}) == IntMatrix{{3, 6}});
    // zero rows are dropped
    CHECK(hermite_normal_form(IntMatrix{{2, 2}, {2, 2}}).rows() == 1);

    auto coords = hnf_coordinates(h, {5, 7});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] * 1 + (*coords)[1] * 0 == 5);
    CHECK((*coords)[0] * 1 + (*coords)[1] * 2 == 7);
    CHECK(!hnf_coordinates(h, {0, 1}).has_value());
}

TEST_CASE("lp feasibility examples", "[exactlin]") {
    auto w1 = lp_feasible({ge(vec({1}), Scalar(1)), ge(vec({-1}), Scalar(-2))}, 1);
    REQUIRE(w1.has_value());
    CHECK((*w1)[0] == Scalar(1));

    auto w2 = lp_feasible({eq(vec({1, 1}), Scalar(0)), ge(vec({1, 0}), Scalar(1)), ge(vec({0, 1}), Scalar(1))}, 2);
    CHECK(!w2.has_value());

    // CP^2 dependency lambda_1 e1 + lambda_2 e2 + lambda_3 (-e1-e2) = 0, lambda >= 1
    std::vector<LinearConstraint> cp2 = {
        eq(vec({1, 0, -1}), Scalar(0)),
        eq(vec({0, 1, -1}), Scalar(0)),
    };
    auto w3 = lp_feasible(cp2, 3, {0, 1, 2});
    REQUIRE(w3.has_value());
    CHECK(*w3 == vec({1, 1, 1}));
}

TEST_CASE("lp extrema", "[exactlin]") {
    auto e1 = lp_extremum(vec({1}), {le(vec({1}), Scalar(5))}, true);
    CHECK(!e1.unbounded);
    CHECK(e1.value == Scalar(5));

    auto e2 = lp_extremum(vec({1}), {ge(vec({1}), Scalar(0))}, true);
    CHECK(e2.unbounded);

    // root box for the ray e1 of the CP^2 fan
    auto e3 = lp_extremum(vec({0, 1}),
                          {eq(vec({1, 0}), Scalar(1)), le(vec({0, 1}), Scalar(0)), le(vec({-1, -1}), Scalar(0))},
                          true);
    CHECK(!e3.unbounded);
    CHECK(e3.value == Scalar(0));

    CHECK_THROWS_AS(lp_extremum(vec({1}), {ge(vec({1}), Scalar(1)), le(vec({1}), Scalar(0))}, true), error);
}

TEST_CASE("lp feasibility over the quadratic field", "[exactlin]") {
    // x >= sqrt(2), x <= 7/5 is infeasible (49/25 < 2); x <= 3/2 is feasible
    Scalar r2 = Scalar::sqrt_of(2);
    CHECK(!lp_feasible({ge(vec({1}), r2), le(vec({1}), Scalar(Rational(7, 5)))}, 1).has_value());
    auto w = lp_feasible({ge(vec({1}), r2), le(vec({1}), Scalar(Rational(3, 2)))}, 1);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == r2);
}

TEST_CASE("lp agrees with brute-force vertex enumeration", "[exactlin][property]") {
    // random boxed systems in <= 4 variables: feasibility matches enumeration of
    // basic solutions, and returned witnesses always satisfy the system
    for (int t = 0; t < 120; ++t) {
        size_t n = 1 + t % 4;
        std::vector<LinearConstraint> cons;
        for (size_t i = 0; i < n; ++i) {
            Vec lo(n, Scalar(0)), hi(n, Scalar(0));
            lo[i] = Scalar(1);
            hi[i] = Scalar(1);
            cons.push_back(ge(lo, Scalar(-5)));
            cons.push_back(le(hi, Scalar(5)));
        }
        size_t extra = 1 + t % 3;
        for (size_t e = 0; e < extra; ++e) {
            Vec c(n);
            for (size_t j = 0; j < n; ++j) c[j] = ct::random_rational_scalar(3);
            cons.push_back(ge(c, ct::random_rational_scalar(4)));
        }

        // brute force: solve every n-subset of tight constraints, test the solutions
        std::vector<std::pair<Vec, Scalar>> rows; // c . x >= b normalized
        for (auto& c : cons) {
            if (c.rel == Rel::ge || c.rel == Rel::eq) rows.push_back({c.coeffs, c.rhs});
            if (c.rel == Rel::le || c.rel == Rel::eq) {
                Vec neg(n);
                for (size_t j = 0; j < n; ++j) neg[j] = -c.coeffs[j];
                rows.push_back({neg, -c.rhs});
            }
        }
        bool brute = false;
        std::vector<size_t> idx(rows.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::vector<size_t> pick(n);
        std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
            if (brute) return;
            if (depth == n) {
                Matrix a(n, n);
                Vec b(n);
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = 0; j < n; ++j) a.at(i, j) = rows[pick[i]].first[j];
                    b[i] = rows[pick[i]].second;
                }
                auto x = solve(a, b);
                if (!x) return;
                for (auto& [c, bb] : rows)
                    if (dot(c, *x) < bb) return;
                brute = true;
                return;
            }
            for (size_t i = start; i < rows.size(); ++i) {
                pick[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);

        auto w = lp_feasible(cons, n);
        CHECK(w.has_value() == brute);
        if (w) CHECK(satisfies(*w, cons));
    }
}

TEST_CASE("rational closure", "[exactlin]") {
    Subspace w1 = Subspace::span(2, {vec({1, 2})});
    CHECK(rational_closure(w1) == w1);

    Subspace w2 = Subspace::span(2, {{Scalar(1), Scalar::sqrt_of(2)}});
    CHECK(rational_closure(w2) == Subspace::full(2));

    Scalar s = Scalar(1) + Scalar::sqrt_of(2);
    Subspace w3 = Subspace::span(2, {{s, s}});
    CHECK(rational_closure(w3) == Subspace::span(2, {vec({1, 1})}));
}

TEST_CASE("rational closure is idempotent and monotone", "[exactlin][property]") {
    for (int t = 0; t < 60; ++t) {
        size_t n = 2 + t % 4;
        std::vector<Vec> gens;
        for (size_t g = 0; g < 1 + t % 3; ++g) {
            Vec v(n);
            for (size_t j = 0; j < n; ++j) v[j] = ct::random_scalar(2, 3);
            gens.push_back(v);
        }
        Subspace w = Subspace::span(n, gens);
        Subspace cl = rational_closure(w);
        CHECK(rational_closure(cl) == cl);
        CHECK(cl.contains(w));
        // monotone: W' = W + one more generator
        Vec extra(n);
        for (size_t j = 0; j < n; ++j) extra[j] = ct::random_scalar(2, 3);
        gens.push_back(extra);
        Subspace w2 = Subspace::span(n, gens);
        CHECK(rational_closure(w2).contains(cl));
    }
}

TEST_CASE("complement projection kills exactly the subspace", "[exactlin]") {
    Subspace l = Subspace::span(3, {vec({1, 1, 1}), {Scalar(1), Scalar::sqrt_of(2), Scalar(0)}});
    Matrix p = complement_projection(l);
    CHECK(p.rows() == 1);
    for (size_t i = 0; i < l.dim(); ++i) CHECK(is_zero(p.apply(l.basis_row(i))));
    CHECK(kernel(p) == l);
}
