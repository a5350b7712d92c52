#include "explograph/semiring.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include "explograph/error.hpp"

namespace explograph {

GaussianRational GaussianRational::inverse() const {
    Rational norm = re * re + im * im;
    if (sgn(norm) == 0) throw Error("not invertible");
    Rational r = re / norm, i = -im / norm;
    r.canonicalize();
    i.canonicalize();
    return {r, i};
}

GaussianRational GaussianRational::pow(std::int64_t n) const {
    GaussianRational base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    GaussianRational acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    os << format_rational(z.re);
    if (sgn(z.im) != 0) os << (sgn(z.im) > 0 ? "+" : "") << format_rational(z.im) << "i";
    return os;
}

ExplodedScalar es_mul(const ExplodedScalar& x, const ExplodedScalar& y) {
    return {x.coeff() * y.coeff(), x.exponent() + y.exponent()};
}

ExplodedScalar es_add(const ExplodedScalar& x, const ExplodedScalar& y) {
    int c = cmp(x.exponent(), y.exponent());
    if (c < 0) return x;
    if (c > 0) return y;
    return {x.coeff() + y.coeff(), x.exponent()};
}

ExplodedScalar es_inv(const ExplodedScalar& x) {
    if (!x.is_unit()) throw Error("not invertible");
    return {x.coeff().inverse(), -x.exponent()};
}

ExplodedScalar es_pow(const ExplodedScalar& x, std::int64_t n) {
    if (n < 0 && !x.is_unit()) throw Error("not invertible");
    return {x.coeff().pow(n), x.exponent() * to_rational(n)};
}

Rational es_tropical_part(const ExplodedScalar& x) { return x.exponent(); }

GaussianRational es_smooth_part(const ExplodedScalar& x) {
    int s = sgn(x.exponent());
    if (s < 0) throw Error("smooth part undefined: exponent outside C⌊e^[0,∞)⌋");
    if (s > 0) return GaussianRational(0);
    return x.coeff();
}

std::string to_text(const ExplodedScalar& x) {
    return wire_rational(x.coeff().re) + " " + wire_rational(x.coeff().im) + " e " +
           wire_rational(x.exponent());
}

ExplodedScalar scalar_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.size() != 4 || tok[2] != "e")
        throw SchemaError("exploded scalar must read 're im e a', got '" + std::string(text) + "'");
    return {GaussianRational(parse_rational(tok[0]), parse_rational(tok[1])), parse_rational(tok[3])};
}

std::ostream& operator<<(std::ostream& os, const ExplodedScalar& x) {
    return os << "(" << x.coeff() << ")⌊e^" << format_rational(x.exponent()) << "⌋";
}

}  // namespace explograph
