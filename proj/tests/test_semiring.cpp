#include <random>

#include "doctest.h"
#include "explograph/error.hpp"
#include "explograph/semiring.hpp"

using namespace explograph;

namespace {

ExplodedScalar es(long c, Rational a) { return {GaussianRational(c), std::move(a)}; }

// Small random values so that exponent ties and cancellations happen often.
ExplodedScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2), a(-2, 2), d(1, 2);
    return {GaussianRational(Rational(c(rng)), Rational(c(rng))), make_rational(a(rng), d(rng))};
}

}  // namespace

TEST_CASE("multiplication") {
    CHECK(es_mul(es(2, 1), es(3, 2)) == es(6, 3));
    auto x = es(7, make_rational(-5, 3));
    CHECK(es_mul(x, ExplodedScalar::one()) == x);
    CHECK(es_mul(es(0, 1), es(5, 2)) == es(0, 3));
}

TEST_CASE("addition") {
    CHECK(es_add(es(1, 1), es(5, 2)) == es(1, 1));
    CHECK(es_add(es(5, 2), es(1, 1)) == es(1, 1));
    CHECK(es_add(es(2, 0), es(3, 0)) == es(5, 0));
    CHECK(es_add(es(1, 0), es(-1, 0)) == es(0, 0));
}

TEST_CASE("zeros stay distinct") {
    CHECK_FALSE(es(0, 1) == es(0, 2));
    CHECK_FALSE(es(0, 1).is_unit());
}

TEST_CASE("inverse") {
    CHECK(es_inv(es(2, 3)) == ExplodedScalar(GaussianRational(make_rational(1, 2)), -3));
    CHECK(es_inv(ExplodedScalar::one()) == ExplodedScalar::one());
    CHECK_THROWS_WITH_AS(es_inv(es(0, 1)), "not invertible", Error);
    ExplodedScalar z(GaussianRational(1, 1), 2);
    CHECK(es_mul(z, es_inv(z)) == ExplodedScalar::one());
}

TEST_CASE("tropical and smooth parts") {
    CHECK(es_tropical_part(es(7, make_rational(5, 2))) == make_rational(5, 2));
    CHECK(es_tropical_part(es_add(es(1, 1), es(2, 3))) == 1);
    CHECK(es_smooth_part(es(3, 0)) == GaussianRational(3));
    CHECK(es_smooth_part(es(3, 2)) == GaussianRational(0));
    CHECK_THROWS_AS(es_smooth_part(es(1, -1)), Error);
}

TEST_CASE("text round trip") {
    ExplodedScalar x(GaussianRational(make_rational(1, 2), -3), make_rational(5, 2));
    CHECK(to_text(x) == "1/2 -3/1 e 5/2");
    CHECK(scalar_from_text(to_text(x)) == x);
    CHECK(scalar_from_text("0 0 e 7") == es(0, 7));
    CHECK_THROWS_AS(scalar_from_text("1 e 2"), SchemaError);
    CHECK_THROWS_AS(scalar_from_text("1 0 e 2/0"), SchemaError);
}

TEST_CASE("semiring laws on random triples") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 5000; ++i) {
        auto x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK(es_add(x, y) == es_add(y, x));
        CHECK(es_mul(x, y) == es_mul(y, x));
        CHECK(es_add(es_add(x, y), z) == es_add(x, es_add(y, z)));
        CHECK(es_mul(es_mul(x, y), z) == es_mul(x, es_mul(y, z)));
        CHECK(es_mul(x, es_add(y, z)) == es_add(es_mul(x, y), es_mul(x, z)));
        CHECK(es_tropical_part(es_mul(x, y)) == es_tropical_part(x) + es_tropical_part(y));
        CHECK(es_tropical_part(es_add(x, y)) == std::min(es_tropical_part(x), es_tropical_part(y)));
        if (sgn(x.exponent()) >= 0 && sgn(y.exponent()) >= 0) {
            CHECK(es_smooth_part(es_mul(x, y)) == es_smooth_part(x) * es_smooth_part(y));
            CHECK(es_smooth_part(es_add(x, y)) == es_smooth_part(x) + es_smooth_part(y));
        }
        if (x.is_unit()) {
            CHECK(es_inv(es_inv(x)) == x);
            CHECK(es_tropical_part(es_inv(x)) == -es_tropical_part(x));
        }
    }
}
