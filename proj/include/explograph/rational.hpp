#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace explograph {

// Exact rationals. mpq_class is kept canonical (reduced, positive
// denominator) by every arithmetic helper in this library.
using Rational = mpq_class;
using Integer = mpz_class;

using RVec = std::vector<Rational>;
using IVec = std::vector<std::int64_t>;

// Parses "p", "p/q" or "-p/q". Throws SchemaError on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" form, "p" when the denominator is one.
std::string format_rational(const Rational& q);

// Always "p/q", including "p/1". Used on the wire.
std::string wire_rational(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rational to_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

inline int sign(const Rational& q) { return sgn(q); }

Rational dot(const IVec& alpha, const RVec& x);
Rational dot(const RVec& a, const RVec& b);

RVec to_rvec(const IVec& v);

// True when q has denominator one.
bool is_integer(const Rational& q);

std::int64_t to_int64(const Integer& z);

}  // namespace explograph
