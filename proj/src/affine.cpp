#include "explograph/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "explograph/error.hpp"

namespace explograph {

namespace {

RVec as_row(const IVec& alpha) { return to_rvec(alpha); }

// Scales a rational vector to the primitive integer vector with the same direction.
IVec primitive_integer(const RVec& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, q.get_den());
    IVec out;
    out.reserve(v.size());
    for (const auto& q : v) {
        Rational s = q * Rational(l);
        out.push_back(to_int64(s.get_num()));
    }
    return primitive(out);
}

void add_constraint(LinearProgram& lp, const AffineConstraint& c, std::size_t extra_vars = 0) {
    RVec row = as_row(c.alpha);
    row.resize(row.size() + extra_vars, Rational(0));
    lp.add_ge(std::move(row), -c.offset);
}

void add_equality(LinearProgram& lp, const AffineConstraint& c, std::size_t extra_vars = 0) {
    RVec row = as_row(c.alpha);
    row.resize(row.size() + extra_vars, Rational(0));
    lp.add_eq(std::move(row), -c.offset);
}

// Maximum of c over a region given as an LP; nullopt if unbounded; throws if empty.
std::optional<Rational> maximum_over(const LinearProgram& lp, const AffineConstraint& c) {
    auto r = maximize(lp, as_row(c.alpha));
    if (r.status == LpStatus::Infeasible) throw std::invalid_argument("empty region");
    if (r.status == LpStatus::Unbounded) return std::nullopt;
    return r.value + c.offset;
}

std::optional<Rational> minimum_over_lp(const LinearProgram& lp, const AffineConstraint& c) {
    auto r = minimize(lp, as_row(c.alpha));
    if (r.status == LpStatus::Infeasible) throw std::invalid_argument("empty region");
    if (r.status == LpStatus::Unbounded) return std::nullopt;
    return r.value + c.offset;
}

// Every constraint of `outer` holds on the LP region.
bool region_inside(const LinearProgram& region, const Polytope& outer) {
    for (const auto& c : outer.constraints()) {
        auto m = minimum_over_lp(region, c);
        if (!m || sgn(*m) < 0) return false;
    }
    return true;
}

// Constraints of p vanishing identically on a nonempty region.
std::vector<std::size_t> implicit_tight(const LinearProgram& region, const Polytope& p) {
    std::vector<std::size_t> t;
    for (std::size_t k = 0; k < p.constraints().size(); ++k) {
        auto m = maximum_over(region, p.constraints()[k]);
        if (m && sgn(*m) == 0) t.push_back(k);
    }
    return t;
}

std::size_t affine_rank(const std::vector<RVec>& pts, const std::vector<std::size_t>& idx) {
    if (idx.size() <= 1) return 0;
    RMatrix diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        RVec d(pts[idx[i]]);
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= pts[idx[0]][j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

RMatrix rational_inverse(const RMatrix& m) {
    std::size_t n = m.size();
    RMatrix inv(n, RVec(n));
    for (std::size_t c = 0; c < n; ++c) {
        RVec e(n, Rational(0));
        e[c] = 1;
        auto x = solve_unique(m, e);
        if (!x) throw std::invalid_argument("singular matrix");
        for (std::size_t r = 0; r < n; ++r) inv[r][c] = (*x)[r];
    }
    return inv;
}

}  // namespace

AffineConstraint::AffineConstraint(IVec a, Rational off, bool s)
    : alpha(std::move(a)), offset(std::move(off)), strict(s) {
    if (std::all_of(alpha.begin(), alpha.end(), [](auto v) { return v == 0; }))
        throw std::invalid_argument("constraint normal must be nonzero");
}

Polytope::Polytope(std::size_t dim, std::vector<AffineConstraint> constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
    for (const auto& c : constraints_)
        if (c.alpha.size() != dim_) throw std::invalid_argument("constraint dimension mismatch");
}

Polytope Polytope::orthant(std::size_t m) {
    std::vector<AffineConstraint> cs;
    for (std::size_t i = 0; i < m; ++i) {
        IVec a(m, 0);
        a[i] = 1;
        cs.emplace_back(a, 0);
    }
    return Polytope(m, std::move(cs));
}

Polytope Polytope::interval(const Rational& lo, const Rational& hi) {
    return Polytope(1, {AffineConstraint({1}, -lo), AffineConstraint({-1}, hi)});
}

Polytope Polytope::cone2(const IVec& r1, const IVec& r2) {
    // Inward normals: perpendicular to one generator, positive on the other.
    auto normal = [](const IVec& along, const IVec& other) {
        IVec n{-along[1], along[0]};
        if (n[0] * other[0] + n[1] * other[1] < 0) n = {along[1], -along[0]};
        return primitive(n);
    };
    return Polytope(2, {AffineConstraint(normal(r2, r1), 0), AffineConstraint(normal(r1, r2), 0)});
}

bool Polytope::contains(const RVec& x) const {
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.satisfied_by(x); });
}

Polytope Polytope::closure() const {
    auto cs = constraints_;
    for (auto& c : cs) c.strict = false;
    return Polytope(dim_, std::move(cs));
}

bool Polytope::has_strict() const {
    return std::any_of(constraints_.begin(), constraints_.end(), [](const auto& c) { return c.strict; });
}

IntegralAffineMap IntegralAffineMap::identity(std::size_t m) {
    return {identity_matrix(m), RVec(m, Rational(0))};
}

RVec IntegralAffineMap::apply(const RVec& x) const {
    RVec y = multiply(a, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
    return y;
}

IntegralAffineMap IntegralAffineMap::compose(const IntegralAffineMap& inner) const {
    IntegralAffineMap out;
    out.a = multiply(a, inner.a);
    out.b = apply(inner.b);
    return out;
}

bool IntegralAffineMap::is_unimodular() const {
    if (a.size() != source_dim()) return false;
    if (a.empty()) return true;
    Integer d = determinant(a);
    return d == 1 || d == -1;
}

IntegralAffineMap IntegralAffineMap::inverse() const {
    IntegralAffineMap inv;
    inv.a = unimodular_inverse(a);
    inv.b = multiply(inv.a, b);
    for (auto& v : inv.b) v = -v;
    return inv;
}

Polytope image(const Polytope& p, const IntegralAffineMap& f) {
    if (!f.is_unimodular()) throw std::invalid_argument("image requires a unimodular map");
    IMatrix inv = unimodular_inverse(f.a);
    std::vector<AffineConstraint> cs;
    for (const auto& c : p.constraints()) {
        IVec beta(p.dim(), 0);
        for (std::size_t j = 0; j < p.dim(); ++j)
            for (std::size_t i = 0; i < p.dim(); ++i) beta[j] += c.alpha[i] * inv[i][j];
        cs.emplace_back(beta, c.offset - dot(beta, f.b), c.strict);
    }
    return Polytope(p.dim(), std::move(cs));
}

LinearProgram closure_lp(const Polytope& p) {
    LinearProgram lp(p.dim());
    for (const auto& c : p.constraints()) add_constraint(lp, c);
    return lp;
}

LinearProgram face_lp(const Polytope& p, const std::vector<std::size_t>& tight) {
    LinearProgram lp(p.dim());
    for (std::size_t k = 0; k < p.constraints().size(); ++k) {
        if (std::find(tight.begin(), tight.end(), k) != tight.end())
            add_equality(lp, p.constraints()[k]);
        else
            add_constraint(lp, p.constraints()[k]);
    }
    return lp;
}

std::optional<Rational> minimum_over(const Polytope& p, const IVec& alpha, const Rational& offset) {
    LinearProgram lp = closure_lp(p);
    auto r = minimize(lp, as_row(alpha));
    if (r.status == LpStatus::Infeasible) throw std::invalid_argument("empty polytope");
    if (r.status == LpStatus::Unbounded) return std::nullopt;
    return r.value + offset;
}

std::optional<RVec> interior_point(const Polytope& p) {
    const std::size_t m = p.dim();
    if (p.constraints().empty()) return RVec(m, Rational(0));
    // maximize s subject to c(x) >= s, s <= 1
    LinearProgram lp(m + 1);
    for (const auto& c : p.constraints()) {
        RVec row = as_row(c.alpha);
        row.push_back(-1);
        lp.add_ge(std::move(row), -c.offset);
    }
    RVec cap(m + 1, Rational(0));
    cap[m] = 1;
    lp.add_le(cap, 1);
    auto r = maximize(lp, cap);
    if (r.status != LpStatus::Optimal || sgn(r.value) <= 0) return std::nullopt;
    r.x.resize(m);
    return r.x;
}

bool polytope_nonempty_interior(const Polytope& p) { return interior_point(p).has_value(); }

bool polytope_is_complete(const Polytope& p) {
    LinearProgram lp = closure_lp(p);
    for (const auto& c : p.constraints()) {
        if (!c.strict) continue;
        auto m = minimum_over_lp(lp, c);
        if (m && sgn(*m) <= 0) return false;
    }
    return true;
}

bool is_bounded(const Polytope& p) {
    LinearProgram lp = closure_lp(p);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        RVec e(p.dim(), Rational(0));
        e[i] = 1;
        if (maximize(lp, e).status != LpStatus::Optimal) return false;
        if (minimize(lp, e).status != LpStatus::Optimal) return false;
    }
    return true;
}

bool closure_contains(const Polytope& outer, const Polytope& inner) {
    if (outer.dim() != inner.dim()) return false;
    return region_inside(closure_lp(inner), outer);
}

bool same_closure(const Polytope& p, const Polytope& q) {
    return closure_contains(p, q) && closure_contains(q, p);
}

std::vector<RVec> vertices(const Polytope& p) {
    const std::size_t m = p.dim();
    const auto& cs = p.constraints();
    std::vector<RVec> out;
    if (m == 0) return {RVec{}};
    if (cs.size() < m) return out;
    Polytope cl = p.closure();
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    std::set<RVec> seen;
    for (;;) {
        RMatrix a;
        RVec b;
        for (auto i : pick) {
            a.push_back(as_row(cs[i].alpha));
            b.push_back(-cs[i].offset);
        }
        if (auto x = solve_unique(a, b); x && cl.contains(*x) && seen.insert(*x).second) out.push_back(*x);
        // next combination
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == cs.size() - m + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IVec> extreme_rays(const Polytope& p) {
    const std::size_t m = p.dim();
    const auto& cs = p.constraints();
    std::set<IVec> rays;
    auto in_recession = [&](const IVec& r) {
        for (const auto& c : cs) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < m; ++i) s += c.alpha[i] * r[i];
            if (s < 0) return false;
        }
        return true;
    };
    if (m == 0) return {};
    std::size_t k = m - 1;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (cs.size() < k) return {};
    for (;;) {
        RMatrix a;
        for (auto i : pick) a.push_back(as_row(cs[i].alpha));
        auto ns = nullspace(a, m);
        if (ns.size() == 1) {
            IVec r = primitive_integer(ns[0]);
            IVec neg(r);
            for (auto& v : neg) v = -v;
            if (in_recession(r)) rays.insert(r);
            if (in_recession(neg)) rays.insert(neg);
        }
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == cs.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {rays.begin(), rays.end()};
}

namespace {

// Closes a requested tight set to the exact tight set of the face it cuts
// out, with a relative-interior point; nullopt when the face is empty.
std::optional<std::pair<std::vector<std::size_t>, RVec>> close_face(const Polytope& p,
                                                                   const std::vector<std::size_t>& req) {
    const std::size_t n = p.constraints().size();
    const std::size_t m = p.dim();
    LinearProgram region = face_lp(p, req);
    if (find_feasible(region).status == LpStatus::Infeasible) return std::nullopt;
    auto tight = implicit_tight(region, p);
    LinearProgram lp(m + 1);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& c = p.constraints()[k];
        RVec row = as_row(c.alpha);
        if (std::binary_search(tight.begin(), tight.end(), k)) {
            row.push_back(0);
            lp.add_eq(std::move(row), -c.offset);
        } else {
            row.push_back(-1);
            lp.add_ge(std::move(row), -c.offset);
        }
    }
    RVec cap(m + 1, Rational(0));
    cap[m] = 1;
    lp.add_le(cap, 1);
    auto r = maximize(lp, cap);
    r.x.resize(m);
    return std::make_pair(std::move(tight), std::move(r.x));
}

Face build_face(const Polytope& p, const std::vector<std::size_t>& tight, const RVec& point) {
    const std::size_t m = p.dim();
    Face f;
    f.tight = tight;
    f.point = point;
    IMatrix normals;
    for (auto k : tight) normals.push_back(p.constraints()[k].alpha);
    f.lattice_basis = integer_kernel_basis(normals, m);
    f.dim = f.lattice_basis.size();
    std::vector<AffineConstraint> cs;
    for (std::size_t k = 0; k < p.constraints().size(); ++k) {
        if (std::binary_search(tight.begin(), tight.end(), k)) continue;
        const auto& c = p.constraints()[k];
        IVec beta(f.dim, 0);
        for (std::size_t j = 0; j < f.dim; ++j)
            for (std::size_t i = 0; i < m; ++i) beta[j] += c.alpha[i] * f.lattice_basis[j][i];
        if (std::all_of(beta.begin(), beta.end(), [](auto v) { return v == 0; })) continue;
        cs.emplace_back(beta, c.eval(point), c.strict);
    }
    f.in_span = Polytope(f.dim, std::move(cs));
    return f;
}

}  // namespace

Face face_of(const Polytope& p, const std::vector<std::size_t>& tight) {
    auto sorted = tight;
    std::sort(sorted.begin(), sorted.end());
    auto c = close_face(p, sorted);
    if (!c) throw std::invalid_argument("empty face");
    return build_face(p, c->first, c->second);
}

std::vector<Face> polytope_faces(const Polytope& p) {
    if (!polytope_nonempty_interior(p)) throw std::invalid_argument("polytope has empty interior");
    const std::size_t n = p.constraints().size();

    std::map<std::vector<std::size_t>, RVec> found;
    std::vector<std::vector<std::size_t>> frontier;
    auto root = close_face(p, {});
    found.emplace(root->first, root->second);
    frontier.push_back(root->first);
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : frontier) {
            std::vector<std::optional<std::pair<std::vector<std::size_t>, RVec>>> results(n);
#pragma omp parallel for schedule(dynamic)
            for (std::size_t j = 0; j < n; ++j) {
                if (std::binary_search(t.begin(), t.end(), j)) continue;
                auto req = t;
                req.insert(std::upper_bound(req.begin(), req.end(), j), j);
                results[j] = close_face(p, req);
            }
            for (auto& r : results) {
                if (!r) continue;
                if (found.emplace(r->first, r->second).second) next.push_back(r->first);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Face> faces;
    for (auto& [tight, point] : found) {
        Face f = build_face(p, tight, point);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.tight < b.tight;
    });
    return faces;
}

Polytope local_cone(const Polytope& p, const RVec& point) {
    if (point.size() != p.dim() || !p.contains(point)) throw std::invalid_argument("point is not in the polytope");
    std::vector<AffineConstraint> cs;
    for (const auto& c : p.constraints())
        if (sgn(c.eval(point)) == 0) cs.emplace_back(c.alpha, 0);
    return Polytope(p.dim(), std::move(cs));
}

bool is_standard_corner(const Polytope& p, const RVec& vertex) {
    if (vertex.size() != p.dim() || !p.contains(vertex)) throw std::invalid_argument("point is not in the polytope");
    IMatrix tight;
    for (const auto& c : p.constraints())
        if (sgn(c.eval(vertex)) == 0) tight.push_back(c.alpha);
    if (rank(tight) != p.dim()) throw std::invalid_argument("point is not a vertex");
    if (p.dim() == 0) return true;
    auto rays = extreme_rays(local_cone(p, vertex));
    if (rays.size() != p.dim()) return false;
    Integer d = determinant(transpose(rays));
    return d == 1 || d == -1;
}

std::optional<IntegralAffineMap> integral_affine_iso(const Polytope& p, const Polytope& q) {
    const std::size_t m = p.dim();
    if (q.dim() != m) return std::nullopt;
    if (polytope_is_complete(p) != polytope_is_complete(q)) return std::nullopt;
    if (m == 0) return IntegralAffineMap::identity(0);
    const bool p_space = p.constraints().empty(), q_space = q.constraints().empty();
    if (p_space || q_space) {
        if (p_space && q_space) return IntegralAffineMap::identity(m);
        return std::nullopt;
    }
    auto vp = vertices(p), vq = vertices(q);
    if (vp.size() != vq.size() || vp.empty()) return std::nullopt;

    const RVec& v = vp.front();
    auto rays_v = extreme_rays(local_cone(p.closure(), v));
    // Greedy choice of m independent edge directions at v.
    std::vector<IVec> basis;
    for (const auto& r : rays_v) {
        auto trial = basis;
        trial.push_back(r);
        if (rank(trial) == trial.size()) basis = std::move(trial);
        if (basis.size() == m) break;
    }
    if (basis.size() != m) return std::nullopt;
    RMatrix rv(m, RVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) rv[i][j] = basis[j][i];
    RMatrix rv_inv = rational_inverse(rv);

    for (const auto& w : vq) {
        auto rays_w = extreme_rays(local_cone(q.closure(), w));
        if (rays_w.size() != rays_v.size()) continue;
        // Ordered m-tuples of distinct rays at w.
        std::vector<std::size_t> idx(m, 0);
        std::function<std::optional<IntegralAffineMap>(std::size_t)> rec =
            [&](std::size_t depth) -> std::optional<IntegralAffineMap> {
            if (depth == m) {
                IntegralAffineMap f;
                f.a.assign(m, IVec(m, 0));
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        Rational s = 0;
                        for (std::size_t k = 0; k < m; ++k) s += to_rational(rays_w[idx[k]][i]) * rv_inv[k][j];
                        if (!is_integer(s)) return std::nullopt;
                        f.a[i][j] = to_int64(s.get_num());
                    }
                if (!f.is_unimodular()) return std::nullopt;
                RVec av = multiply(f.a, v);
                f.b.resize(m);
                for (std::size_t i = 0; i < m; ++i) f.b[i] = w[i] - av[i];
                if (same_closure(image(p.closure(), f), q.closure())) return f;
                return std::nullopt;
            }
            for (std::size_t r = 0; r < rays_w.size(); ++r) {
                if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(depth), r) !=
                    idx.begin() + static_cast<std::ptrdiff_t>(depth))
                    continue;
                idx[depth] = r;
                if (auto f = rec(depth + 1)) return f;
            }
            return std::nullopt;
        };
        if (auto f = rec(0)) return f;
    }
    return std::nullopt;
}

Rational volume(const Polytope& p) {
    const std::size_t m = p.dim();
    if (m == 0) return 1;
    if (!is_bounded(p)) throw std::invalid_argument("volume of an unbounded polytope");
    auto verts = vertices(p);
    const auto& cs = p.constraints();
    // tight[v] = constraints vanishing at vertex v
    std::vector<std::vector<bool>> tight(verts.size(), std::vector<bool>(cs.size()));
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (std::size_t k = 0; k < cs.size(); ++k) tight[v][k] = sgn(cs[k].eval(verts[v])) == 0;

    // Pulling triangulation from the first vertex of every face, recursively.
    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, std::size_t)> tri =
        [&](const std::vector<std::size_t>& face, std::size_t d) -> std::vector<std::vector<std::size_t>> {
        if (d == 0) return {{face.front()}};
        std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> facets;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            std::vector<std::size_t> sub;
            for (auto v : face)
                if (tight[v][k]) sub.push_back(v);
            if (sub.size() == face.size() || sub.empty()) continue;
            if (affine_rank(verts, sub) != d - 1) continue;
            if (std::find(sub.begin(), sub.end(), apex) != sub.end()) continue;
            facets.insert(sub);
        }
        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : facets)
            for (auto s : tri(f, d - 1)) {
                s.push_back(apex);
                out.push_back(std::move(s));
            }
        return out;
    };
    std::vector<std::size_t> all(verts.size());
    std::iota(all.begin(), all.end(), 0);
    Rational total = 0;
    Integer fact = 1;
    for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<unsigned long>(i);
    for (const auto& s : tri(all, m)) {
        RMatrix mat;
        for (std::size_t i = 1; i < s.size(); ++i) {
            RVec d(verts[s[i]]);
            for (std::size_t j = 0; j < m; ++j) d[j] -= verts[s[0]][j];
            mat.push_back(std::move(d));
        }
        Rational det = determinant(mat);
        total += abs(det);
    }
    return total / Rational(fact);
}

namespace {

// Both polytopes' closures intersect.
bool closures_meet(const Polytope& a, const Polytope& b) {
    LinearProgram lp = closure_lp(a);
    for (const auto& c : b.constraints()) add_constraint(lp, c);
    return find_feasible(lp).status != LpStatus::Infeasible;
}

bool interiors_meet(const Polytope& a, const Polytope& b) {
    std::vector<AffineConstraint> cs = a.constraints();
    cs.insert(cs.end(), b.constraints().begin(), b.constraints().end());
    return polytope_nonempty_interior(Polytope(a.dim(), std::move(cs)));
}

// The smallest face of `a` containing a ∩ b lies inside b.
bool meets_as_face(const Polytope& a, const Polytope& b) {
    LinearProgram both = closure_lp(a);
    for (const auto& c : b.constraints()) add_constraint(both, c);
    auto t = implicit_tight(both, a);
    return region_inside(face_lp(a, t), b.closure());
}

// A box radius beyond every vertex of the hyperplane arrangement of all constraints.
Rational truncation_radius(const std::vector<const Polytope*>& all) {
    std::vector<AffineConstraint> cs;
    std::size_t m = all.front()->dim();
    Rational r = 1;
    for (auto* p : all)
        for (const auto& c : p->constraints()) {
            cs.push_back(c);
            r = std::max(r, Rational(abs(c.offset) + 1));
        }
    Polytope arrangement(m, cs);
    // Vertices of the full arrangement: every nonsingular m-subset.
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    if (cs.size() >= m && m > 0) {
        for (;;) {
            RMatrix a;
            RVec b;
            for (auto i : pick) {
                a.push_back(to_rvec(cs[i].alpha));
                b.push_back(-cs[i].offset);
            }
            if (auto x = solve_unique(a, b))
                for (const auto& v : *x) r = std::max(r, Rational(abs(v) + 1));
            std::size_t i = m;
            while (i > 0 && pick[i - 1] == cs.size() - m + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return r;
}

Polytope truncate(const Polytope& p, const Rational& radius) {
    auto cs = p.closure().constraints();
    for (std::size_t i = 0; i < p.dim(); ++i) {
        IVec e(p.dim(), 0);
        e[i] = 1;
        cs.emplace_back(e, radius);
        e[i] = -1;
        cs.emplace_back(e, radius);
    }
    return Polytope(p.dim(), std::move(cs));
}

}  // namespace

bool validate_subdivision(const Polytope& p, const std::vector<Polytope>& pieces) {
    for (const auto& q : pieces) {
        if (q.dim() != p.dim()) throw std::invalid_argument("piece has the wrong ambient dimension");
        if (!polytope_nonempty_interior(q)) throw std::invalid_argument("piece has empty interior");
    }
    if (pieces.empty()) return false;
    for (const auto& q : pieces)
        if (!closure_contains(p, q)) return false;

    const std::size_t n = pieces.size();
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (std::size_t k = 0; k < n * n; ++k) {
        std::size_t i = k / n, j = k % n;
        if (j <= i) continue;
        const auto &a = pieces[i], &b = pieces[j];
        if (interiors_meet(a, b)) {
            ok = false;
            continue;
        }
        if (closures_meet(a, b) && !(meets_as_face(a, b) && meets_as_face(b, a))) ok = false;
    }
    if (!ok) return false;

    if (is_bounded(p)) {
        Rational sum = 0;
        for (const auto& q : pieces) sum += volume(q.closure());
        return sum == volume(p.closure());
    }
    std::vector<const Polytope*> all{&p};
    for (const auto& q : pieces) all.push_back(&q);
    Rational radius = truncation_radius(all);
    Rational sum = 0;
    for (const auto& q : pieces) {
        Polytope t = truncate(q, radius);
        if (polytope_nonempty_interior(t)) sum += volume(t);
    }
    return sum == volume(truncate(p, radius));
}

bool graded_lex_less(const MonoidElement& x, const MonoidElement& y) {
    if (x.offset != y.offset) return x.offset < y.offset;
    auto l1 = [](const IVec& v) {
        std::int64_t s = 0;
        for (auto c : v) s += c < 0 ? -c : c;
        return s;
    };
    if (l1(x.alpha) != l1(y.alpha)) return l1(x.alpha) < l1(y.alpha);
    return x.alpha > y.alpha;
}

std::vector<IVec> hilbert_basis(const std::vector<IVec>& generators, std::size_t dim) {
    std::set<IVec> gens;
    for (const auto& g : generators)
        if (std::any_of(g.begin(), g.end(), [](auto v) { return v != 0; })) gens.insert(primitive(g));
    std::vector<IVec> gv(gens.begin(), gens.end());
    if (gv.empty()) return {};

    // Extreme rays: drop generators lying in the cone of the others.
    std::vector<IVec> rays;
    for (std::size_t i = 0; i < gv.size(); ++i) {
        LinearProgram lp(gv.size() - 1);
        for (std::size_t k = 0; k < dim; ++k) {
            RVec row;
            for (std::size_t j = 0; j < gv.size(); ++j)
                if (j != i) row.push_back(to_rational(gv[j][k]));
            lp.add_eq(std::move(row), to_rational(gv[i][k]));
        }
        for (std::size_t j = 0; j + 1 < gv.size(); ++j) {
            RVec e(gv.size() - 1, Rational(0));
            e[j] = 1;
            lp.add_ge(std::move(e), 0);
        }
        if (gv.size() == 1 || find_feasible(lp).status == LpStatus::Infeasible) rays.push_back(gv[i]);
    }
    const std::size_t r = rank(rays);
    if (r == 1) return {rays.front()};

    RMatrix ray_rows;
    for (const auto& ray : rays) ray_rows.push_back(to_rvec(ray));
    auto orth = nullspace(ray_rows, dim);  // complement of the span

    // Facet normals inside the span.
    std::vector<RVec> facets;
    std::vector<std::size_t> pick(r - 1);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        RMatrix a;
        for (auto i : pick) a.push_back(to_rvec(rays[i]));
        if (rank(a) == r - 1) {
            RMatrix sys = a;
            sys.insert(sys.end(), orth.begin(), orth.end());
            auto ns = nullspace(sys, dim);
            if (ns.size() == 1) {
                RVec nrm = ns[0];
                bool pos = false, neg = false;
                for (const auto& ray : rays) {
                    int s = sgn(dot(ray, nrm));
                    pos |= s > 0;
                    neg |= s < 0;
                }
                if (pos != neg) {
                    if (neg)
                        for (auto& v : nrm) v = -v;
                    IVec prim = primitive_integer(nrm);
                    RVec pr = to_rvec(prim);
                    if (std::find(facets.begin(), facets.end(), pr) == facets.end()) facets.push_back(pr);
                }
            }
        }
        std::size_t i = r - 1;
        while (i > 0 && pick[i - 1] == rays.size() - (r - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    auto member = [&](const IVec& x) {
        for (const auto& w : orth)
            if (sgn(dot(x, w)) != 0) return false;
        for (const auto& f : facets)
            if (sgn(dot(x, f)) < 0) return false;
        return true;
    };
    RVec grading(dim, Rational(0));
    for (const auto& f : facets)
        for (std::size_t i = 0; i < dim; ++i) grading[i] += f[i];

    // Candidates: lattice points of the cone inside the zonotope Σ [0,1]·ray.
    IVec lo(dim, 0), hi(dim, 0);
    for (const auto& ray : rays)
        for (std::size_t i = 0; i < dim; ++i) (ray[i] < 0 ? lo[i] : hi[i]) += ray[i];
    double box = 1;
    for (std::size_t i = 0; i < dim; ++i) box *= static_cast<double>(hi[i] - lo[i] + 1);
    if (box > 5e6) throw Error("Hilbert basis search box too large");
    std::vector<std::pair<Rational, IVec>> cands;
    IVec x(lo);
    for (;;) {
        if (std::any_of(x.begin(), x.end(), [](auto v) { return v != 0; }) && member(x))
            cands.emplace_back(dot(x, grading), x);
        std::size_t i = 0;
        while (i < dim && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == dim) break;
        ++x[i];
    }
    std::sort(cands.begin(), cands.end());
    std::vector<IVec> basis;
    for (const auto& [deg, c] : cands) {
        bool reducible = false;
        for (const auto& h : basis) {
            IVec diff(c);
            for (std::size_t i = 0; i < dim; ++i) diff[i] -= h[i];
            if (member(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(c);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<MonoidElement> smooth_monomial_generators(const Polytope& p) {
    std::vector<MonoidElement> out;
    for (const auto& face : polytope_faces(p)) {
        if (face.tight.empty()) continue;
        bool strict = false;
        std::vector<IVec> normals;
        for (auto k : face.tight) {
            strict |= p.constraints()[k].strict;
            normals.push_back(p.constraints()[k].alpha);
        }
        if (strict) continue;  // the face is not part of P, so nothing vanishes there
        for (auto& h : hilbert_basis(normals, p.dim())) {
            MonoidElement e{-dot(h, face.point), h};
            if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

namespace {

std::vector<RVec> face_vertices(const Polytope& p, const std::vector<std::size_t>& tight) {
    std::vector<RVec> out;
    for (auto& v : vertices(p)) {
        bool on = std::all_of(tight.begin(), tight.end(),
                              [&](auto k) { return sgn(p.constraints()[k].eval(v)) == 0; });
        if (on) out.push_back(v);
    }
    return out;
}

std::vector<IVec> face_rays(const Polytope& p, const std::vector<std::size_t>& tight) {
    std::vector<IVec> out;
    for (auto& r : extreme_rays(p)) {
        bool on = std::all_of(tight.begin(), tight.end(), [&](auto k) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < p.dim(); ++i) s += p.constraints()[k].alpha[i] * r[i];
            return s == 0;
        });
        if (on) out.push_back(r);
    }
    return out;
}

}  // namespace

void validate_complex(const PolytopeComplex& c) {
    for (std::size_t i = 0; i < c.identifications.size(); ++i) {
        const auto& id = c.identifications[i];
        auto where = "identification " + std::to_string(i) + ": ";
        if (id.from >= c.polytopes.size() || id.to >= c.polytopes.size())
            throw std::invalid_argument(where + "polytope index out of range");
        const auto &src = c.polytopes[id.from], &dst = c.polytopes[id.to];
        for (auto k : id.tight_from)
            if (k >= src.constraints().size()) throw std::invalid_argument(where + "bad tight index");
        for (auto k : id.tight_to)
            if (k >= dst.constraints().size()) throw std::invalid_argument(where + "bad tight index");
        if (id.map.source_dim() != src.dim() || id.map.target_dim() != dst.dim() || id.map.b.size() != dst.dim())
            throw std::invalid_argument(where + "map dimensions do not match");
        LinearProgram face = face_lp(src, id.tight_from);
        if (find_feasible(face).status == LpStatus::Infeasible)
            throw std::invalid_argument(where + "source face is empty");
        // Pull back every target constraint along the map and test on the source face.
        for (std::size_t k = 0; k < dst.constraints().size(); ++k) {
            const auto& q = dst.constraints()[k];
            RVec row(src.dim(), Rational(0));
            for (std::size_t j = 0; j < src.dim(); ++j)
                for (std::size_t r = 0; r < dst.dim(); ++r) row[j] += to_rational(q.alpha[r] * id.map.a[r][j]);
            Rational off = q.offset + dot(q.alpha, id.map.b);
            auto mn = minimize(face, row);
            if (mn.status != LpStatus::Optimal || sgn(mn.value + off) < 0)
                throw std::invalid_argument(where + "image leaves the target face");
            if (std::find(id.tight_to.begin(), id.tight_to.end(), k) != id.tight_to.end()) {
                auto mx = maximize(face, row);
                if (mx.status != LpStatus::Optimal || sgn(mx.value + off) != 0)
                    throw std::invalid_argument(where + "image leaves the target face");
            }
        }
        // Onto: vertices and rays must correspond.
        auto vs = face_vertices(src, id.tight_from), vt = face_vertices(dst, id.tight_to);
        std::set<RVec> mapped, target(vt.begin(), vt.end());
        for (auto& v : vs) mapped.insert(id.map.apply(v));
        if (mapped != target) throw std::invalid_argument(where + "face vertices do not correspond");
        auto rs = face_rays(src, id.tight_from), rt = face_rays(dst, id.tight_to);
        std::set<IVec> mr, tr(rt.begin(), rt.end());
        for (auto& r : rs) mr.insert(primitive(multiply(id.map.a, r)));
        if (mr != tr) throw std::invalid_argument(where + "face rays do not correspond");
    }
}

}  // namespace explograph
