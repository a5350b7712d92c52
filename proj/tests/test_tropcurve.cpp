#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "explograph/error.hpp"
#include "explograph/linalg.hpp"
#include "explograph/tropcurve.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace explograph;
using namespace fixtures;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

TropicalCurve line_at(Rational x, Rational y) {
    TropicalCurve c;
    c.vertices.push_back({{x, y}, 0, 0});
    c.ends = {{0, {-1, 0}}, {0, {0, -1}}, {0, {1, 1}}};
    return c;
}

// Two vertices joined by an edge of direction (1,0), each balanced by two ends.
TropicalCurve dumbbell() {
    TropicalCurve c;
    c.vertices = {{{q(0), q(0)}, 0, 0}, {{q(1), q(0)}, 0, 0}};
    c.edges = {{0, 1, q(1), {1, 0}}};
    c.ends = {{0, {-1, 1}}, {0, {0, -1}}, {1, {1, 1}}, {1, {0, -1}}};
    return c;
}

}  // namespace

TEST_CASE("balancing") {
    CHECK(check_balanced(line_at(0, 0)));
    auto bad = line_at(0, 0);
    bad.ends[2].d = {1, 0};
    CHECK_FALSE(check_balanced(bad));
    CHECK(check_balanced(dumbbell()));
    auto wrong_length = dumbbell();
    wrong_length.edges[0].length = 2;
    CHECK_FALSE(check_balanced(wrong_length));
}

TEST_CASE("genus") {
    CHECK(curve_genus(dumbbell()) == 0);
    TropicalCurve theta;
    theta.vertices = {{{q(0), q(0)}, 0, 0}, {{q(1), q(0)}, 0, 0}};
    theta.edges = {{0, 1, q(1), {1, 0}}, {0, 1, q(1, 2), {2, 0}}};
    CHECK(curve_genus(theta) == 1);
    auto g2 = line_at(0, 0);
    g2.vertices[0].genus = 2;
    CHECK(curve_genus(g2) == 2);
    TropicalCurve split;
    split.vertices = {{{q(0), q(0)}, 0, 0}, {{q(1), q(0)}, 0, 0}};
    CHECK_THROWS_AS(curve_genus(split), Error);
}

TEST_CASE("multiplicities") {
    CHECK(edge_multiplicity({2, 4}) == 2);
    CHECK(edge_multiplicity({1, 1}) == 1);
    CHECK(edge_multiplicity({0, 0}) == 0);
    CHECK(edge_multiplicity({-3, 6}) == 3);
    CHECK(k_factor(line_at(0, 0)) == 1);
    TropicalCurve c;
    c.vertices = {{{q(0), q(0)}, 0, 0}, {{q(2), q(0)}, 0, 0}, {{q(3), q(1)}, 0, 0}};
    c.edges = {{0, 1, q(1), {2, 0}}};
    CHECK(k_factor(c) == 2);
    c.edges = {{1, 2, q(1), {1, 1}}, {0, 1, q(2, 3), {3, 0}}};
    CHECK(k_factor(c) == 3);
    c.edges.push_back({0, 0, q(1), {0, 0}});
    CHECK_THROWS_AS(k_factor(c), Error);
    CHECK(k_factor(c, true) == 3);
    // Invariant under a unimodular change of lattice.
    IMatrix u{{2, 1}, {1, 1}};
    for (IVec d : {IVec{2, 4}, IVec{3, 0}, IVec{-6, 9}}) CHECK(edge_multiplicity(multiply(u, d)) == edge_multiplicity(d));
}

TEST_CASE("automorphisms") {
    CHECK(automorphism_order(line_at(0, 0)) == 1);
    CHECK(automorphism_order(dumbbell()) == 1);
    TropicalCurve theta;
    theta.vertices = {{{q(0), q(0)}, 0, 0}, {{q(1), q(0)}, 0, 0}};
    theta.edges = {{0, 1, q(1), {1, 0}}, {1, 0, q(1), {-1, 0}}};
    CHECK(automorphism_order(theta) == 2);
    TropicalCurve twin;
    twin.vertices = {{{q(0), q(0)}, 0, 0}};
    twin.ends = {{0, {1, 0}}, {0, {1, 0}}, {0, {-2, 0}}};
    CHECK(automorphism_order(twin) == 2);
    TropicalCurve big = line_at(0, 0);
    for (int i = 0; i < 30; ++i) big.ends.push_back({0, {0, 0}});
    CHECK_THROWS_AS(automorphism_order(big), Error);
}

TEST_CASE("automorphisms agree with exhaustive search on small graphs") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        auto c = small_graph(rng, t);
        if (c.edges.size() + c.ends.size() > 8) continue;
        CHECK(automorphism_order(c) == brute_automorphisms(c));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("cut") {
    auto single = cut(line_at(0, 0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].ends.size() == 3);
    auto two = cut(dumbbell());
    REQUIRE(two.size() == 2);
    CHECK(std::find(two[0].ends.begin(), two[0].ends.end(), IVec{1, 0}) != two[0].ends.end());
    CHECK(std::find(two[1].ends.begin(), two[1].ends.end(), IVec{-1, 0}) != two[1].ends.end());
    TropicalCurve theta;
    theta.vertices = {{{q(0), q(0)}, 0, 0}, {{q(2), q(0)}, 0, 0}};
    theta.edges = {{0, 1, q(2), {1, 0}}, {0, 1, q(1), {2, 0}}, {0, 1, q(2, 3), {3, 0}}};
    auto th = cut(theta);
    CHECK(th[0].ends.size() + th[1].ends.size() == 6);
}

TEST_CASE("cut bookkeeping on random balanced curves") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        auto c = random_balanced(rng);
        REQUIRE(check_balanced(c));
        auto stars = cut(c);
        std::size_t total = 0;
        for (const auto& s : stars) {
            CHECK(is_balanced(s));
            total += s.ends.size();
        }
        CHECK(total == c.ends.size() + 2 * c.edges.size());
    }
}
