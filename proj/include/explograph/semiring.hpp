#pragma once

/**
 * Exploded semiring C⌊e^R⌋, restricted to Gaussian-rational coefficients and
 * rational exponents.
 *
 * An element c⌊e^a⌋ multiplies by multiplying coefficients and adding
 * exponents. Addition keeps the summand with the smaller exponent and adds
 * coefficients when exponents tie, so ⌊e⌋ behaves like an infinitesimal.
 *
 * Zeros are not canonicalized: 0⌊e^1⌋ and 0⌊e^2⌋ are different values.
 */

#include <iosfwd>
#include <string>
#include <string_view>

#include "explograph/rational.hpp"

namespace explograph {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussianRational operator-() const { return {-re, -im}; }

    // Throws Error on zero.
    GaussianRational inverse() const;
    GaussianRational pow(std::int64_t n) const;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

class ExplodedScalar {
public:
    ExplodedScalar() = default;
    ExplodedScalar(GaussianRational coeff, Rational exponent)
        : coeff_(std::move(coeff)), exponent_(std::move(exponent)) {}

    static ExplodedScalar one() { return {GaussianRational(1), Rational(0)}; }

    const GaussianRational& coeff() const { return coeff_; }
    const Rational& exponent() const { return exponent_; }

    bool is_unit() const { return !coeff_.is_zero(); }

    friend bool operator==(const ExplodedScalar& x, const ExplodedScalar& y) {
        return x.coeff_ == y.coeff_ && x.exponent_ == y.exponent_;
    }

private:
    GaussianRational coeff_{0};
    Rational exponent_{0};
};

ExplodedScalar es_mul(const ExplodedScalar& x, const ExplodedScalar& y);
ExplodedScalar es_add(const ExplodedScalar& x, const ExplodedScalar& y);
// Throws Error("not invertible") when x.coeff() == 0.
ExplodedScalar es_inv(const ExplodedScalar& x);
ExplodedScalar es_pow(const ExplodedScalar& x, std::int64_t n);
Rational es_tropical_part(const ExplodedScalar& x);
// Throws Error when x.exponent() < 0.
GaussianRational es_smooth_part(const ExplodedScalar& x);

inline ExplodedScalar operator*(const ExplodedScalar& x, const ExplodedScalar& y) { return es_mul(x, y); }
inline ExplodedScalar operator+(const ExplodedScalar& x, const ExplodedScalar& y) { return es_add(x, y); }

// Text form "re im e a", rationals as p/q, e.g. "1/2 -3 e 5/2".
std::string to_text(const ExplodedScalar& x);
ExplodedScalar scalar_from_text(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExplodedScalar& x);

}  // namespace explograph
