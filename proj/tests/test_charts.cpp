#include <random>

#include "doctest.h"
#include "explograph/charts.hpp"
#include "explograph/error.hpp"

using namespace explograph;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
ExplodedScalar es(long c, Rational a) { return {GaussianRational(c), std::move(a)}; }

Chart quadrant() { return Chart(0, Polytope::orthant(2)); }
Chart ray() { return Chart(0, Polytope::orthant(1)); }
Chart line() { return Chart(0, Polytope::space(1)); }

ChartMorphism product_map() {
    return make_morphism(quadrant(), ray(), {ExplodedMonomial{ExplodedScalar::one(), {1, 1}}});
}

}  // namespace

TEST_CASE("chart dimension") {
    CHECK(quadrant().dimension() == 4);
    CHECK(Chart(3, Polytope::interval(0, 2)).dimension() == 5);
    CHECK(Chart(0, Polytope::interval(0, 2)).generators().size() == 2);
}

TEST_CASE("evaluate monomials") {
    auto p = make_point(quadrant(), {es(2, 1), es(3, 2)});
    CHECK(evaluate_monomial({ExplodedScalar::one(), {1, 1}}, p) == es(6, 3));
    Chart seg(0, Polytope::interval(0, 5));
    auto s = make_point(seg, {es(4, 5)});
    CHECK(evaluate_monomial({ExplodedScalar(GaussianRational(1), 5), {-1}}, s) ==
          ExplodedScalar(GaussianRational(q(1, 4)), 0));
    CHECK(evaluate_monomial({ExplodedScalar::one(), {0, 0}}, p) == ExplodedScalar::one());
    CHECK_THROWS_AS(make_point(seg, {es(1, 6)}), Error);
    CHECK_THROWS_AS(make_point(seg, {es(0, 1)}), Error);
}

TEST_CASE("smooth coordinates") {
    Chart seg(0, Polytope::interval(0, 5));
    auto z = smooth_coordinates(seg, make_point(seg, {es(4, 0)}));
    CHECK(z == std::vector<GaussianRational>{4, 0});
    auto node = smooth_coordinates(seg, make_point(seg, {es(7, 2)}));
    CHECK(node == std::vector<GaussianRational>{0, 0});
    CHECK(smooth_coordinates(ray(), make_point(ray(), {es(5, 0)})) == std::vector<GaussianRational>{5});
}

TEST_CASE("smooth monomials vanish off their zero set") {
    Chart seg(0, Polytope::interval(0, 3));
    for (const auto& g : seg.generators()) {
        auto mon = monomial_of(g);
        CHECK(is_smooth_monomial(mon, seg.polytope()));
        for (int k = 0; k <= 6; ++k) {
            auto p = make_point(seg, {es(2, q(k, 2))});
            bool zero_trop = sgn(g.offset + dot(g.alpha, tropical_part(p))) == 0;
            CHECK(es_smooth_part(evaluate_monomial(mon, p)).is_zero() == !zero_trop);
        }
    }
    CHECK_FALSE(is_smooth_monomial({ExplodedScalar::one(), {-1}}, Polytope::orthant(1)));
}

TEST_CASE("morphisms") {
    auto f = product_map();
    CHECK(f.tropical_part().a == IMatrix{{1, 1}});
    CHECK(f.tropical_part().b == RVec{q(0)});
    auto id = identity_morphism(quadrant());
    CHECK(id.tropical_part() == IntegralAffineMap::identity(2));
    CHECK_THROWS_WITH_AS(make_morphism(Chart(0, Polytope::space(0)), ray(), {{es(1, -1), {}}}),
                         "tropical part leaves target polytope", Error);
    // z ↦ z^{-1} does not map [0,∞) into itself.
    CHECK_THROWS_AS(make_morphism(ray(), ray(), {{ExplodedScalar::one(), {-1}}}), Error);
    // Open target needs strictly positive images.
    Chart open(0, Polytope(1, {AffineConstraint({1}, 0, true)}));
    CHECK_THROWS_AS(make_morphism(ray(), open, {{ExplodedScalar::one(), {1}}}), Error);
    CHECK_NOTHROW(make_morphism(open, open, {{ExplodedScalar::one(), {2}}}));
}

TEST_CASE("composition") {
    auto sq = make_morphism(line(), line(), {{ExplodedScalar::one(), {2}}});
    auto cube = make_morphism(line(), line(), {{ExplodedScalar::one(), {3}}});
    CHECK(compose_morphisms(cube, sq).entries()[0].alpha == IVec{6});
    auto f = make_morphism(quadrant(), quadrant(),
                           {{ExplodedScalar::one(), {1, 0}}, {es(1, 2), {0, 1}}});
    CHECK(compose_morphisms(identity_morphism(quadrant()), f).entries() == f.entries());
    auto gf = compose_morphisms(f, product_map());
    CHECK(gf.entries()[0] == ExplodedMonomial{es(1, 2), {1, 1}});
    CHECK(gf.tropical_part().b == RVec{q(2)});
    CHECK_THROWS_WITH_AS(compose_morphisms(product_map(), f), "chart mismatch", Error);
}

TEST_CASE("random functoriality and multiplicativity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> e(0, 2), c(1, 3), a(0, 4);
    Chart q2 = quadrant();
    for (int t = 0; t < 200; ++t) {
        std::vector<ExplodedMonomial> fe, ge;
        for (int i = 0; i < 2; ++i) {
            fe.push_back({es(c(rng), a(rng)), {e(rng), e(rng)}});
            ge.push_back({es(c(rng), a(rng)), {e(rng), e(rng)}});
        }
        auto f = make_morphism(q2, q2, fe);
        auto g = make_morphism(q2, q2, ge);
        auto gf = compose_morphisms(f, g);
        CHECK(gf.tropical_part() == g.tropical_part().compose(f.tropical_part()));
        auto p = make_point(q2, {es(c(rng), a(rng)), es(c(rng), a(rng))});
        auto lhs = gf.apply(p);
        auto rhs = g.apply(f.apply(p));
        CHECK(lhs.w == rhs.w);
        auto prod = monomial_mul(fe[0], fe[1]);
        CHECK(evaluate_monomial(prod, p) == es_mul(evaluate_monomial(fe[0], p), evaluate_monomial(fe[1], p)));
        CHECK(es_tropical_part(evaluate_monomial(fe[0], p)) ==
              fe[0].tropical_offset() + dot(fe[0].alpha, tropical_part(p)));
    }
}

TEST_CASE("fibers of z1 z2") {
    auto f = product_map();
    for (Rational l : {q(1), q(3), q(7, 2)}) {
        auto fib = fiber_of_monomial_map(f, ExplodedScalar(GaussianRational(1), l));
        CHECK(fib.chart.m() == 1);
        CHECK(fib.chart.n() == 0);
        CHECK(integral_affine_iso(fib.chart.polytope(), Polytope::interval(0, l)));
        auto z1 = restrict_to_fiber(fib, {0, {1, 0}});
        auto z2 = restrict_to_fiber(fib, {0, {0, 1}});
        std::vector<MonoidElement> expect{z1, z2};
        std::sort(expect.begin(), expect.end(), graded_lex_less);
        CHECK(fib.chart.generators() == expect);
    }
    auto smooth = fiber_of_monomial_map(f, ExplodedScalar(GaussianRational(q(1, 10)), 0));
    CHECK(smooth.chart.m() == 0);
    CHECK(smooth.chart.n() == 2);
    CHECK(smooth.embedding.b == RVec{q(0), q(0)});

    auto single = fiber_of_monomial_map(identity_morphism(ray()), es(1, 5));
    CHECK(single.chart.m() == 0);
    CHECK(single.embedding.b == RVec{q(5)});
    CHECK_THROWS_WITH_AS(fiber_of_monomial_map(identity_morphism(ray()), es(1, -1)), "empty fiber", Error);
}
