#include "doctest.h"
#include "explograph/error.hpp"
#include "explograph/explosion.hpp"

using namespace explograph;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

NCConfiguration nc(std::size_t k, std::vector<std::vector<std::size_t>> nerve) { return {k, std::move(nerve), 0, {}}; }

ExplodedComplex projective_plane() { return explode_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("nerve validation") {
    CHECK_THROWS_AS(normalized(nc(2, {{1, 2}})), InvalidNerve);
    CHECK_THROWS_AS(normalized(nc(1, {{2}})), InvalidNerve);
    auto c = normalized(nc(2, {{2}, {1}, {}, {2, 1}}));
    CHECK(c.nerve.size() == 4);
    CHECK(c.nerve.back() == std::vector<std::size_t>{1, 2});
    CHECK(maximal_elements(c) == std::vector<std::vector<std::size_t>>{{1, 2}});
}

TEST_CASE("explode normal crossings") {
    auto one = explode_nc(nc(1, {{}, {1}}));
    REQUIRE(one.charts.size() == 1);
    CHECK(one.charts[0].polytope() == Polytope::orthant(1));
    CHECK(one.charts[0].n() == 0);
    CHECK(one.charts[0].generators() == std::vector<MonoidElement>{{0, {1}}});

    auto quad = explode_nc(nc(2, {{}, {1}, {2}, {1, 2}}));
    REQUIRE(quad.charts.size() == 1);
    CHECK(quad.charts[0].polytope() == Polytope::orthant(2));
    CHECK(quad.charts[0].generators().size() == 2);

    auto rays = explode_nc(nc(2, {{}, {1}, {2}}));
    REQUIRE(rays.charts.size() == 2);
    REQUIRE(rays.tropical.identifications.size() == 1);
    CHECK(rays.tropical.identifications[0].tight_from == std::vector<std::size_t>{0});
    CHECK(rays.gluings[0].source().m() == 0);
    CHECK(rays.charts[0].n() == 0);

    // A surface with one divisor: the chart keeps a C factor.
    auto curve = explode_nc({1, {{}, {1}}, 2, {}});
    CHECK(curve.charts[0].n() == 2);
}

TEST_CASE("generators match the divisor components through each stratum") {
    auto c = explode_nc(nc(3, {{}, {1}, {2}, {3}, {1, 2}, {2, 3}}));
    REQUIRE(c.charts.size() == 2);
    for (const auto& ch : c.charts) {
        CHECK(ch.generators().size() == ch.m());
        for (std::size_t i = 0; i < ch.m(); ++i) {
            IVec e(ch.m(), 0);
            e[i] = 1;
            CHECK(std::find(ch.generators().begin(), ch.generators().end(), MonoidElement{0, e}) !=
                  ch.generators().end());
        }
    }
}

TEST_CASE("refinement by the projective plane fan") {
    auto p2 = projective_plane();
    REQUIRE(p2.charts.size() == 3);
    for (const auto& ch : p2.charts) {
        CHECK(integral_affine_iso(ch.polytope(), Polytope::orthant(2)));
        CHECK(is_standard_corner(ch.polytope(), {q(0), q(0)}));
    }
    // Three rays shared pairwise.
    CHECK(p2.tropical.identifications.size() == 3);
    for (const auto& g : p2.gluings) CHECK(g.source().m() == 1);

    auto line = make_exploded_complex({{Polytope::space(1)}, {}}, {0});
    auto p1 = refine(line, {{Polytope(1, {AffineConstraint({1}, 0)}), Polytope(1, {AffineConstraint({-1}, 0)})}});
    CHECK(p1.charts.size() == 2);
    REQUIRE(p1.tropical.identifications.size() == 1);
    CHECK(p1.gluings[0].source().m() == 0);

    auto same = refine(line, {});
    CHECK(same.charts.size() == 1);
    CHECK(same.tropical.polytopes[0] == Polytope::space(1));

    CHECK_THROWS_AS(refine(line, {{Polytope(1, {AffineConstraint({1}, 0)})}}), Error);
}

TEST_CASE("refinement must agree on shared faces") {
    auto rays = explode_nc(nc(2, {{}, {1}, {2}, {1, 2}}));
    // Subdivide the quadrant along the diagonal.
    std::vector<Polytope> halves{Polytope::cone2({1, 0}, {1, 1}), Polytope::cone2({1, 1}, {0, 1})};
    auto r = refine(rays, {halves});
    CHECK(r.charts.size() == 2);

    // Two quadrants glued along a ray; subdividing only one of them along that ray's interior is inconsistent.
    PolytopeComplex two;
    two.polytopes = {Polytope::interval(0, 2), Polytope::interval(0, 2)};
    two.identifications.push_back({0, 1, {0}, {0}, IntegralAffineMap::identity(1)});
    auto c = make_exploded_complex(two, {0, 0});
    CHECK_NOTHROW(refine(c, {{Polytope::interval(0, 1), Polytope::interval(1, 2)}}));
    PolytopeComplex squares;
    squares.polytopes = {Polytope(2, {AffineConstraint({1, 0}, 0), AffineConstraint({-1, 0}, 1), AffineConstraint({0, 1}, 0),
                                      AffineConstraint({0, -1}, 2)}),
                         Polytope(2, {AffineConstraint({-1, 0}, 0), AffineConstraint({1, 0}, 1), AffineConstraint({0, 1}, 0),
                                      AffineConstraint({0, -1}, 2)})};
    squares.identifications.push_back({0, 1, {0}, {0}, IntegralAffineMap::identity(2)});
    auto sq = make_exploded_complex(squares, {0, 0});
    std::vector<Polytope> cut{Polytope(2, {AffineConstraint({1, 0}, 0), AffineConstraint({-1, 0}, 1),
                                           AffineConstraint({0, 1}, 0), AffineConstraint({0, -1}, 1)}),
                              Polytope(2, {AffineConstraint({1, 0}, 0), AffineConstraint({-1, 0}, 1),
                                           AffineConstraint({0, 1}, -1), AffineConstraint({0, -1}, 2)})};
    CHECK_THROWS_AS(refine(sq, {cut}), Error);
    CHECK_NOTHROW(refine(sq, {cut, {Polytope(2, {AffineConstraint({-1, 0}, 0), AffineConstraint({1, 0}, 1),
                                                  AffineConstraint({0, 1}, 0), AffineConstraint({0, -1}, 1)}),
                                     Polytope(2, {AffineConstraint({-1, 0}, 0), AffineConstraint({1, 0}, 1),
                                                  AffineConstraint({0, 1}, -1), AffineConstraint({0, -1}, 2)})}}));
}

TEST_CASE("common refinements") {
    std::vector<Polytope> fan{Polytope::cone2({1, 0}, {0, 1}), Polytope::cone2({0, 1}, {-1, -1}),
                              Polytope::cone2({-1, -1}, {1, 0})};
    // Pulling a refinement back along itself changes nothing.
    auto self = common_refinement(fan, fan);
    REQUIRE(self.size() == fan.size());
    for (std::size_t i = 0; i < fan.size(); ++i) CHECK(same_closure(self[i], fan[i]));
    // Refining by the coordinate half-planes after the fan is the common refinement.
    std::vector<Polytope> halves{Polytope(2, {AffineConstraint({1, 0}, 0)}), Polytope(2, {AffineConstraint({-1, 0}, 0)})};
    auto both = common_refinement(fan, halves);
    CHECK(validate_subdivision(Polytope::space(2), both));
    CHECK(both.size() == 4);
    auto line = make_exploded_complex({{Polytope::space(2)}, {}}, {0});
    auto once = refine(line, {both});
    auto twice = refine(refine(line, {fan}), {{}, {}, {}});
    CHECK(once.charts.size() == 4);
    CHECK(twice.charts.size() == 3);
}

TEST_CASE("rend components") {
    auto two = rend_components(nc(2, {{}, {1}, {2}, {1, 2}}), 1);
    REQUIRE(two.size() == 4);
    CHECK(two[0].contact == IVec{0, 0});
    CHECK(two[0].kind == "B");
    CHECK(two[1].contact == IVec{0, 1});
    CHECK(two[1].kind == "expl D2");
    CHECK(two[2].kind == "expl D1");
    CHECK(two[3].kind == "needs refinement");
    auto sep = rend_components(nc(2, {{}, {1}, {2}}), 3);
    CHECK(sep.size() == 7);
    auto order = rend_components(nc(1, {{}, {1}}), 4);
    CHECK(order.back().contact == IVec{4});
    CHECK(order.back().kind == "expl D1");
    // Adding a nerve element outside every listed support keeps the classification of the others.
    auto more = rend_components(nc(3, {{}, {1}, {2}, {3}, {1, 2}}), 1);
    for (const auto& r : more)
        if (r.contact[2] == 0) {
            auto it = std::find_if(two.begin(), two.end(), [&](const auto& x) {
                return x.contact[0] == r.contact[0] && x.contact[1] == r.contact[1];
            });
            REQUIRE(it != two.end());
            CHECK(it->kind == r.kind);
        }
    CHECK(nerve_link(normalized(nc(2, {{}, {1}, {2}, {1, 2}})), 1).nerve.size() == 2);
}

TEST_CASE("tropical completion") {
    auto seg = make_exploded_complex({{Polytope::interval(0, 5)}, {}}, {0});
    auto end = tropical_completion(seg, 0, {q(0)});
    REQUIRE(end.charts.size() == 1);
    CHECK(same_closure(end.charts[0].polytope(), Polytope::orthant(1)));
    auto mid = tropical_completion(seg, 0, {q(2)});
    REQUIRE(mid.charts.size() == 1);
    CHECK(mid.charts[0].polytope().constraints().empty());
    CHECK_THROWS_AS(tropical_completion(seg, 0, {q(6)}), Error);

    auto deg = make_exploded_complex(degeneration_fiber_complex(nc(2, {{}, {1}, {2}, {1, 2}})), {0});
    auto at_vertex = tropical_completion(deg, 0, {q(0)});
    REQUIRE(at_vertex.charts.size() == 1);
    CHECK(same_closure(at_vertex.charts[0].polytope(), Polytope::orthant(1)));

    // Completing the fan complex at the origin: every polytope is a cone.
    auto p2 = projective_plane();
    auto cones = tropical_completion(p2, 0, {q(0), q(0)});
    CHECK(cones.charts.size() == 3);
    for (const auto& p : cones.tropical.polytopes)
        for (const auto& c : p.constraints()) CHECK(sgn(c.offset) == 0);
    // Along a ray: two half-planes glued along a line.
    auto along = tropical_completion(p2, 0, {q(3), q(0)});
    CHECK(along.charts.size() == 2);
}

TEST_CASE("degeneration fibers") {
    auto seg = degeneration_fiber_complex(nc(2, {{}, {1}, {2}, {1, 2}}));
    REQUIRE(seg.polytopes.size() == 1);
    CHECK(seg.polytopes[0].dim() == 1);
    CHECK(vertices(seg.polytopes[0]).size() == 2);
    auto tri = degeneration_fiber_complex(nc(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
    REQUIRE(tri.polytopes.size() == 1);
    CHECK(vertices(tri.polytopes[0]).size() == 3);
    CHECK(volume(tri.polytopes[0]) == q(1, 2));
    auto point = degeneration_fiber_complex(nc(1, {{}, {1}}));
    REQUIRE(point.polytopes.size() == 1);
    CHECK(point.polytopes[0].dim() == 0);
    // A cycle of three components meeting pairwise without a triple point.
    auto cycle = degeneration_fiber_complex(nc(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(cycle.polytopes.size() == 3);
    CHECK(cycle.identifications.size() == 3);
}
