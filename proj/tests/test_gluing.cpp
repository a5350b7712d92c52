#include <random>

#include "doctest.h"
#include "explograph/error.hpp"
#include "explograph/gluing.hpp"
#include "explograph/linalg.hpp"
#include "explograph/plane_types.hpp"
#include "oracles.hpp"

using namespace explograph;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

IVec act(const IMatrix& a, const IVec& v) { return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]}; }

CountingProblem transformed(const CountingProblem& p, const IMatrix& a) {
    CountingProblem t = p;
    t.degree = 0;
    for (auto& d : t.ends) d = act(a, d);
    for (auto& x : t.points)
        x = {to_rational(a[0][0]) * x[0] + to_rational(a[0][1]) * x[1], to_rational(a[1][0]) * x[0] + to_rational(a[1][1]) * x[1]};
    return t;
}

void check_ledger(const CountReport& r) {
    Rational direct = 0, glued = 0;
    for (const auto& l : r.ledger) {
        CHECK(l.glued == Rational(l.k) / Rational(Integer(static_cast<unsigned long>(l.aut))) * l.matching * l.oracle_product);
        CHECK(l.glued == l.direct);
        direct += l.direct;
        glued += l.glued;
    }
    CHECK(direct == r.direct);
    CHECK(glued == r.glued);
}

}  // namespace

TEST_CASE("vertex multiplicity") {
    CHECK(plane_vertex_multiplicity({{}, 0, {{-1, 0}, {0, -1}, {1, 1}}}) == 1);
    CHECK(plane_vertex_multiplicity({{}, 0, {{-2, 0}, {0, -1}, {2, 1}}}) == 2);
    CHECK_THROWS_AS(plane_vertex_multiplicity({{}, 0, {{-1, 0}, {1, 0}}}), Error);
    CHECK_THROWS_AS(plane_vertex_multiplicity({{}, 0, {{-1, 0}, {0, -1}, {1, 2}}}), Error);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-5, 5);
    const std::vector<IMatrix> moves{{{1, 1}, {0, 1}}, {{0, -1}, {1, 0}}, {{2, 1}, {1, 1}}};
    for (int t = 0; t < 200; ++t) {
        IVec a{c(rng), c(rng)}, b{c(rng), c(rng)};
        VertexStar s{{}, 0, {a, b, {-a[0] - b[0], -a[1] - b[1]}}};
        auto m = plane_vertex_multiplicity(s);
        VertexStar r{{}, 0, {s.ends[2], s.ends[0], s.ends[1]}};
        CHECK(plane_vertex_multiplicity(r) == m);
        VertexStar u{{}, 0, {}};
        for (const auto& d : s.ends) u.ends.push_back(act(moves[t % 3], d));
        CHECK(plane_vertex_multiplicity(u) == m);
    }
}

TEST_CASE("newton polygons and subdivisions") {
    auto tri = newton_polygon(degree_ends(2));
    CHECK(tri.boundary.size() == 6);
    CHECK(lattice_points(tri).size() == 6);
    CHECK(lattice_points(newton_polygon(degree_ends(3))).size() == 10);
    CHECK_THROWS_AS(newton_polygon({{1, 0}, {0, 1}}), Error);
    CHECK_THROWS_AS(newton_polygon({{2, 0}, {-2, 0}}), Error);
    for (std::size_t d = 1; d <= 3; ++d) {
        auto subs = lattice_subdivisions(newton_polygon(degree_ends(d)));
        CHECK(!subs.empty());
        for (const auto& s : subs) {
            std::int64_t area = 0;
            for (const auto& c : s) {
                CHECK(doubled_area(c) > 0);
                area += doubled_area(c);
            }
            CHECK(area == static_cast<std::int64_t>(d * d));
        }
    }
    // A unit square splits two ways or stays a parallelogram.
    CHECK(lattice_subdivisions(newton_polygon({{0, -1}, {1, 0}, {0, 1}, {-1, 0}})).size() == 3);
    for (const auto& t : plane_curve_types(degree_ends(3), 1)) CHECK(curve_genus(t.graph) == 1);
}

TEST_CASE("tropical lines") {
    auto p = plane_problem(1, 0, {{q(0), q(0)}, {q(3), q(1)}});
    auto curves = enumerate_rigid_curves(p);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].vertices[0].pos == RVec{q(2), q(0)});
    CHECK(check_balanced(curves[0]));
    CHECK(direct_count(p, lattice_multiplicity) == 1);
    CHECK(glued_count(p, lattice_multiplicity) == 1);

    CHECK_THROWS_AS(enumerate_rigid_curves(plane_problem(1, 0, {{q(0), q(0)}, {q(0), q(1)}})), NonGeneric);
    CHECK_THROWS_AS(enumerate_rigid_curves(plane_problem(1, 0, {{q(0), q(0)}, {q(0), q(0)}})), NonGeneric);
    CHECK_THROWS_AS(enumerate_rigid_curves(plane_problem(1, 0, {{q(0), q(0)}})), Error);
}

TEST_CASE("conics") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        std::vector<TropicalCurve> curves;
        auto p = random_generic_problem(2, 0, seed, &curves);
        CHECK(curves.size() == 1);
        for (const auto& c : curves) {
            CHECK(check_balanced(c));
            CHECK(curve_genus(c) == 0);
        }
        auto r = report_for(p, curves, lattice_multiplicity);
        CHECK(r.direct == oracle::paths::count(2, 0));
        CHECK(r.glued == r.direct);
        check_ledger(r);
        CHECK(enumerate_rigid_curves(p, Execution::serial) == curves);
        CHECK(direct_count(transformed(p, {{1, 1}, {0, 1}}), lattice_multiplicity) == r.direct);
        CHECK(direct_count(transformed(p, {{0, -1}, {1, 0}}), lattice_multiplicity) == r.direct);
    }
    CHECK(direct_count(random_generic_problem(2, 1, 4), lattice_multiplicity) == 0);
    CHECK(direct_count(random_generic_problem(1, 1, 4), lattice_multiplicity) == 0);
}

TEST_CASE("plane cubics") {
    std::vector<TropicalCurve> curves;
    auto p = random_generic_problem(3, 0, 1, &curves);
    auto r = report_for(p, curves, lattice_multiplicity);
    CHECK(r.direct == oracle::paths::count(3, 0));
    CHECK(r.glued == r.direct);
    check_ledger(r);
    for (const auto& c : r.curves) {
        CHECK(check_balanced(c));
        CHECK(curve_genus(c) == 0);
        CHECK(matching_solutions(c, p.points) == 1);
    }
    // An internal edge of multiplicity two: k = 2 against a halved matching.
    bool doubled = false;
    for (const auto& l : r.ledger)
        if (l.k == 2) {
            doubled = true;
            CHECK(l.matching == q(1, 2));
            CHECK(l.glued == l.oracle_product);
        }
    CHECK(doubled);
    CHECK(enumerate_rigid_curves(p, Execution::serial) == curves);

    auto other = random_generic_problem(3, 0, 2);
    CHECK(direct_count(transformed(other, {{1, 1}, {0, 1}}), lattice_multiplicity) == 12);
}

TEST_CASE("genus one cubics") {
    std::vector<TropicalCurve> curves;
    auto p = random_generic_problem(3, 1, 1, &curves);
    auto r = report_for(p, curves, lattice_multiplicity);
    CHECK(r.direct == oracle::paths::count(3, 1));
    CHECK(r.glued == r.direct);
    check_ledger(r);
    for (const auto& c : curves) CHECK(curve_genus(c) == 1);
}

TEST_CASE("matching system") {
    auto p = plane_problem(1, 0, {{q(0), q(0)}, {q(3), q(1)}});
    auto c = enumerate_rigid_curves(p)[0];
    CHECK(matching_solutions(c, p.points) == 1);
    auto inc = point_incidences(c, p.points);
    CHECK(inc[0].end);
    CHECK(inc[1].end);
    CHECK_THROWS_AS(point_incidences(c, {{q(2), q(0)}}), NonGeneric);
    CHECK_THROWS_AS(point_incidences(c, {{q(5), q(5)}}), NonGeneric);
    // With only one point the line can slide along a family.
    CHECK_THROWS_AS(matching_solutions(c, {{q(0), q(0)}}), NonGeneric);
    CHECK(type_hash(c) == type_hash(enumerate_rigid_curves(plane_problem(1, 0, {{q(0), q(0)}, {q(5), q(1)}}))[0]));
}

TEST_CASE("series") {
    CHECK(assemble_series({}).empty());
    auto one = assemble_series({{{0, 3, 1}, q(1)}});
    CHECK(one.size() == 1);
    CHECK(one.at({0, 3, 1}) == 1);
    auto two = assemble_series({{{0, 6, 2}, q(1)}, {{0, 9, 3}, q(12)}});
    auto merged = merge_series(one, two);
    CHECK(merged.size() == 3);
    CHECK(merged.at({0, 9, 3}) == 12);
    CHECK(merge_series(one, one).at({0, 3, 1}) == 2);
    CHECK(assemble_series({{{0, 3, 1}, q(1)}, {{0, 3, 1}, q(-1)}}).empty());
}
