#include "explograph/rational.hpp"

#include <limits>

#include "explograph/error.hpp"

namespace explograph {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw SchemaError("malformed rational '" + std::string(text) + "'");
    Integer n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string wire_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational dot(const IVec& alpha, const RVec& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != 0) s += to_rational(alpha[i]) * x[i];
    return s;
}

Rational dot(const RVec& a, const RVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RVec to_rvec(const IVec& v) {
    RVec r;
    r.reserve(v.size());
    for (auto x : v) r.push_back(to_rational(x));
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("integer out of 64-bit range: " + z.get_str());
    return z.get_si();
}

}  // namespace explograph
