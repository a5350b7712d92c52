#include "explograph/charts.hpp"

#include <algorithm>

#include "explograph/error.hpp"

namespace explograph {

ExplodedMonomial coordinate_monomial(std::size_t m, std::size_t i) {
    IVec a(m, 0);
    a.at(i) = 1;
    return {ExplodedScalar::one(), a};
}

ExplodedMonomial monomial_of(const MonoidElement& e) {
    return {ExplodedScalar(GaussianRational(1), e.offset), e.alpha};
}

ExplodedMonomial monomial_mul(const ExplodedMonomial& x, const ExplodedMonomial& y) {
    if (x.alpha.size() != y.alpha.size()) throw Error("monomials live on different charts");
    IVec a(x.alpha);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += y.alpha[i];
    return {es_mul(x.coeff, y.coeff), a};
}

bool is_smooth_monomial(const ExplodedMonomial& mon, const Polytope& p) {
    if (mon.alpha.size() != p.dim()) return false;
    if (std::all_of(mon.alpha.begin(), mon.alpha.end(), [](auto v) { return v == 0; }))
        return sgn(mon.tropical_offset()) >= 0;
    auto m = minimum_over(p, mon.alpha, mon.tropical_offset());
    return m && sgn(*m) >= 0;
}

Chart::Chart(std::size_t n, Polytope p)
    : n_(n), polytope_(std::move(p)), generators_(smooth_monomial_generators(polytope_)) {}

ChartPoint make_point(const Chart& chart, std::vector<ExplodedScalar> w, RVec real) {
    if (w.size() != chart.m()) throw Error("point has the wrong number of exploded coordinates");
    for (const auto& x : w)
        if (!x.is_unit()) throw Error("exploded coordinates must be units");
    ChartPoint p{std::move(w), std::move(real)};
    p.real.resize(chart.n(), Rational(0));
    if (!chart.polytope().contains(tropical_part(p))) throw Error("tropical part of the point is outside the polytope");
    return p;
}

RVec tropical_part(const ChartPoint& p) {
    RVec x;
    for (const auto& w : p.w) x.push_back(w.exponent());
    return x;
}

ExplodedScalar evaluate_monomial(const ExplodedMonomial& mon, const ChartPoint& p) {
    if (mon.alpha.size() != p.w.size()) throw Error("monomial and point live on different charts");
    ExplodedScalar v = mon.coeff;
    for (std::size_t i = 0; i < p.w.size(); ++i)
        if (mon.alpha[i] != 0) v = es_mul(v, es_pow(p.w[i], mon.alpha[i]));
    return v;
}

std::vector<GaussianRational> smooth_coordinates(const Chart& chart, const ChartPoint& p) {
    std::vector<GaussianRational> out;
    for (const auto& g : chart.generators()) out.push_back(es_smooth_part(evaluate_monomial(monomial_of(g), p)));
    return out;
}

IntegralAffineMap ChartMorphism::tropical_part() const {
    IntegralAffineMap f;
    for (const auto& e : entries_) {
        f.a.push_back(e.alpha);
        f.b.push_back(e.tropical_offset());
    }
    return f;
}

ChartPoint ChartMorphism::apply(const ChartPoint& p) const {
    ChartPoint out;
    for (const auto& e : entries_) out.w.push_back(evaluate_monomial(e, p));
    out.real = p.real;
    out.real.resize(target_.n(), Rational(0));
    return out;
}

namespace {

// g > 0 (or >= 0) on all of P, decided exactly.
bool positive_on(const Polytope& p, const RVec& g_row, const Rational& g_off, bool strict) {
    const std::size_t m = p.dim();
    LinearProgram lp(m + 1);
    for (const auto& c : p.constraints()) {
        RVec row = to_rvec(c.alpha);
        row.push_back(c.strict ? Rational(-1) : Rational(0));
        lp.add_ge(std::move(row), -c.offset);
    }
    // Look for a point of P with g <= 0 (strict target) or g < 0.
    RVec row = g_row;
    row.push_back(strict ? Rational(0) : Rational(1));
    lp.add_le(std::move(row), -g_off);
    RVec cap(m + 1, Rational(0));
    cap[m] = 1;
    lp.add_le(cap, 1);
    auto r = maximize(lp, cap);
    if (r.status == LpStatus::Infeasible) return true;
    bool p_open = p.has_strict();
    // The slack variable certifies strictness of P's open constraints, and
    // for a non-strict target also g < 0.
    if (!p_open && strict) return false;
    return sgn(r.value) <= 0;
}

}  // namespace

ChartMorphism make_morphism(const Chart& src, const Chart& dst, std::vector<ExplodedMonomial> entries,
                            std::string smooth_factor) {
    if (entries.size() != dst.m()) throw Error("morphism needs one entry per target coordinate");
    for (const auto& e : entries) {
        if (e.alpha.size() != src.m()) throw Error("entry exponent has the wrong length");
        if (!e.coeff.is_unit()) throw Error("entry coefficient must be a unit");
    }
    ChartMorphism f;
    f.source_ = src;
    f.target_ = dst;
    f.entries_ = std::move(entries);
    f.smooth_factor_ = std::move(smooth_factor);
    IntegralAffineMap t = f.tropical_part();
    for (const auto& c : dst.polytope().constraints()) {
        RVec row(src.m(), Rational(0));
        for (std::size_t j = 0; j < src.m(); ++j)
            for (std::size_t i = 0; i < dst.m(); ++i) row[j] += to_rational(c.alpha[i] * t.a[i][j]);
        Rational off = c.offset + dot(c.alpha, t.b);
        if (!positive_on(src.polytope(), row, off, c.strict)) throw Error("tropical part leaves target polytope");
    }
    return f;
}

ChartMorphism identity_morphism(const Chart& c) {
    std::vector<ExplodedMonomial> e;
    for (std::size_t i = 0; i < c.m(); ++i) e.push_back(coordinate_monomial(c.m(), i));
    return make_morphism(c, c, std::move(e));
}

ChartMorphism compose_morphisms(const ChartMorphism& f, const ChartMorphism& g) {
    if (!(f.target() == g.source())) throw Error("chart mismatch");
    std::vector<ExplodedMonomial> entries;
    for (const auto& ge : g.entries()) {
        ExplodedMonomial e{ge.coeff, IVec(f.source().m(), 0)};
        for (std::size_t i = 0; i < ge.alpha.size(); ++i) {
            if (ge.alpha[i] == 0) continue;
            const auto& fe = f.entries()[i];
            e.coeff = es_mul(e.coeff, es_pow(fe.coeff, ge.alpha[i]));
            for (std::size_t j = 0; j < e.alpha.size(); ++j) e.alpha[j] += ge.alpha[i] * fe.alpha[j];
        }
        entries.push_back(std::move(e));
    }
    std::string h = "1";
    if (g.smooth_factor() != "1" || f.smooth_factor() != "1")
        h = "(" + g.smooth_factor() + ")∘f·(" + f.smooth_factor() + ")";
    return make_morphism(f.source(), g.target(), std::move(entries), std::move(h));
}

MonoidElement restrict_to_fiber(const Fiber& fiber, const MonoidElement& e) {
    const auto& emb = fiber.embedding;
    MonoidElement out{e.offset + dot(e.alpha, emb.b), IVec(fiber.chart.m(), 0)};
    for (std::size_t j = 0; j < out.alpha.size(); ++j)
        for (std::size_t i = 0; i < e.alpha.size(); ++i) out.alpha[j] += e.alpha[i] * emb.a[i][j];
    return out;
}

namespace {

// The polytope P pulled back along x = origin + B y, dropping constraints
// that are constant on the span.
Polytope pull_back(const Polytope& p, const std::vector<std::size_t>& skip, const std::vector<IVec>& basis,
                   const RVec& origin) {
    std::vector<AffineConstraint> cs;
    for (std::size_t k = 0; k < p.constraints().size(); ++k) {
        if (std::find(skip.begin(), skip.end(), k) != skip.end()) continue;
        const auto& c = p.constraints()[k];
        IVec beta(basis.size(), 0);
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < p.dim(); ++i) beta[j] += c.alpha[i] * basis[j][i];
        if (std::all_of(beta.begin(), beta.end(), [](auto v) { return v == 0; })) continue;
        cs.emplace_back(beta, c.eval(origin), c.strict);
    }
    return Polytope(basis.size(), std::move(cs));
}

}  // namespace

Fiber fiber_of_monomial_map(const ChartMorphism& f, const ExplodedScalar& value) {
    if (f.entries().size() != 1 || f.target().m() != 1) throw Error("fiber needs a single-entry monomial map");
    if (!value.is_unit()) throw Error("fiber value must be a unit");
    const auto& mon = f.entries()[0];
    const Chart& src = f.source();
    const Polytope& p = src.polytope();
    const std::size_t m = src.m();
    Rational rhs = value.exponent() - mon.tropical_offset();  // alpha·x == rhs

    if (std::all_of(mon.alpha.begin(), mon.alpha.end(), [](auto v) { return v == 0; })) {
        if (sgn(rhs) != 0 || !(mon.coeff.coeff() == value.coeff())) throw Error("empty fiber");
        return {src, IntegralAffineMap::identity(m)};
    }

    LinearProgram region = closure_lp(p);
    region.add_eq(to_rvec(mon.alpha), rhs);
    auto feas = find_feasible(region);
    if (feas.status == LpStatus::Infeasible) throw Error("empty fiber");
    std::vector<std::size_t> tight;
    IMatrix eqs{mon.alpha};
    for (std::size_t k = 0; k < p.constraints().size(); ++k) {
        const auto& c = p.constraints()[k];
        auto mx = maximize(region, to_rvec(c.alpha));
        if (mx.status == LpStatus::Optimal && sgn(mx.value + c.offset) == 0) {
            if (c.strict) throw Error("empty fiber");
            tight.push_back(k);
            eqs.push_back(c.alpha);
        }
    }
    auto basis = integer_kernel_basis(eqs, m);
    RVec origin = feas.x;
    Polytope y = pull_back(p, tight, basis, origin);
    // Deterministic origin: the lexicographically smallest vertex of the slice.
    if (!basis.empty()) {
        auto vs = vertices(y);
        std::optional<RVec> best;
        for (const auto& v : vs) {
            RVec x(origin);
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (std::size_t i = 0; i < m; ++i) x[i] += v[j] * to_rational(basis[j][i]);
            if (!best || x < *best) best = x;
        }
        if (best) {
            origin = *best;
            y = pull_back(p, tight, basis, origin);
        }
    }
    std::size_t r = basis.size();
    Fiber out;
    out.chart = Chart(src.n() + 2 * (m - 1 - r), std::move(y));
    out.embedding.a.assign(m, IVec(r, 0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m; ++i) out.embedding.a[i][j] = basis[j][i];
    out.embedding.b = origin;
    return out;
}

}  // namespace explograph
