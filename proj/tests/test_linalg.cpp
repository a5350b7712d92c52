#include <random>

#include "doctest.h"
#include "explograph/error.hpp"
#include "explograph/linalg.hpp"
#include "explograph/lp.hpp"

using namespace explograph;

TEST_CASE("rationals on the wire") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(format_rational(make_rational(4, 2)) == "2");
    CHECK(wire_rational(make_rational(4, 2)) == "2/1");
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("x"), SchemaError);
    CHECK_THROWS_AS(parse_rational("1.5"), SchemaError);
}

TEST_CASE("primitive vectors") {
    CHECK(gcd_of({2, 4}) == 2);
    CHECK(gcd_of({0, 0}) == 0);
    CHECK(primitive({-2, 4}) == IVec{-1, 2});
    CHECK(primitive({0, 0}) == IVec{0, 0});
}

TEST_CASE("determinants and solves") {
    CHECK(determinant(IMatrix{{1, 1}, {1, 2}}) == 1);
    CHECK(determinant(IMatrix{{2, 0, 0}, {0, 3, 0}, {1, 1, 1}}) == 6);
    auto x = solve_unique({{to_rational(1), to_rational(1)}, {to_rational(1), to_rational(-1)}},
                          {to_rational(3), to_rational(1)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK(solve({{to_rational(1), to_rational(1)}}, {to_rational(1)}).kind == SolveKind::Infinite);
    CHECK(solve({{to_rational(0)}}, {to_rational(1)}).kind == SolveKind::None);
}

TEST_CASE("integer kernels are lattice bases") {
    auto k = integer_kernel_basis({{1, 1}}, 2);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IVec{1, -1});
    auto k2 = integer_kernel_basis({{2, 4, 6}}, 3);
    CHECK(k2.size() == 2);
    for (const auto& v : k2) CHECK(2 * v[0] + 4 * v[1] + 6 * v[2] == 0);
    // Saturated: the basis extends to a unimodular matrix iff some 2×2 minor gcd is one.
    Integer g = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Integer m = k2[0][i] * k2[1][j] - k2[0][j] * k2[1][i];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    CHECK(g == 1);
    CHECK(integer_kernel_basis({}, 2).size() == 2);
}

TEST_CASE("Smith normal form") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int t = 0; t < 40; ++t) {
        IMatrix a(2 + t % 2, IVec(3));
        for (auto& r : a)
            for (auto& v : r) v = c(rng);
        auto s = smith_normal_form(a);
        CHECK(multiply(multiply(s.u, a), s.v) == s.d);
        auto du = determinant(s.u), dv = determinant(s.v);
        CHECK(abs(du) == 1);
        CHECK(abs(dv) == 1);
        for (std::size_t i = 0; i < s.d.size(); ++i)
            for (std::size_t j = 0; j < s.d[i].size(); ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
        for (std::size_t i = 0; i + 1 < std::min(s.d.size(), s.d[0].size()); ++i) {
            CHECK(s.d[i][i] >= 0);
            if (s.d[i][i] != 0) CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
        }
    }
}

TEST_CASE("unimodular inverse") {
    IMatrix a{{2, 1}, {1, 1}};
    CHECK(multiply(a, unimodular_inverse(a)) == identity_matrix(2));
    CHECK_THROWS(unimodular_inverse({{2, 0}, {0, 1}}));
}

TEST_CASE("simplex statuses") {
    LinearProgram lp(2);
    lp.add_ge({1, 0}, 0);
    lp.add_ge({0, 1}, 0);
    lp.add_le({1, 1}, 4);
    auto r = maximize(lp, {3, 1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == 12);
    CHECK(minimize(lp, {1, 1}).value == 0);
    LinearProgram open(1);
    open.add_ge({1}, 0);
    CHECK(maximize(open, {1}).status == LpStatus::Unbounded);
    open.add_le({1}, -1);
    CHECK(find_feasible(open).status == LpStatus::Infeasible);
    // Redundant equalities are dropped after phase one.
    LinearProgram eq(2);
    eq.add_eq({1, 1}, 2);
    eq.add_eq({2, 2}, 4);
    eq.add_ge({1, 0}, 0);
    eq.add_ge({0, 1}, 0);
    CHECK(maximize(eq, {1, 0}).value == 2);
}
