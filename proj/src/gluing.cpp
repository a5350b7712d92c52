#include "explograph/gluing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "explograph/error.hpp"
#include "explograph/linalg.hpp"
#include "explograph/plane_types.hpp"

namespace explograph {

namespace {

template <class T>
T from_int(std::int64_t v) {
    if constexpr (std::is_same_v<T, double>) return static_cast<double>(v);
    else return to_rational(v);
}

template <class T>
using V2 = std::array<T, 2>;

// Solves a1 + t1·d1 = a2 + t2·d2.
template <class T>
void meet(const V2<T>& a1, const V2<T>& d1, const V2<T>& a2, const V2<T>& d2, T& t1, T& t2) {
    T det = d2[0] * d1[1] - d1[0] * d2[1];
    T rx = a2[0] - a1[0], ry = a2[1] - a1[1];
    t1 = (d2[0] * ry - d2[1] * rx) / det;
    t2 = (d1[0] * ry - d1[1] * rx) / det;
}

// One child slot of a vertex in a rooted component: either a lower vertex
// reached along an unmarked edge, or a marked edge cut at its point.
struct Slot {
    bool leaf = false;
    std::size_t index = 0;  // child vertex, or global marked edge index
    IVec toward;            // direction of travel from the anchor to the vertex
    double dx = 0, dy = 0;
};

struct Step {
    std::size_t vertex = 0;
    std::array<Slot, 2> slots;
};

struct TypeSolver {
    const TropicalCurve& g;
    const std::vector<RVec>& points;
    std::vector<V2<double>> fpoints;
    std::size_t ni = 0, total = 0;
    std::vector<TropicalCurve> found;

    TypeSolver(const TropicalCurve& type, const std::vector<RVec>& pts) : g(type), points(pts) {
        ni = g.edges.size();
        total = ni + g.ends.size();
        for (const auto& p : points) fpoints.push_back({p[0].get_d(), p[1].get_d()});
    }

    // Complement of the marked set is a forest with one unmarked end per component.
    bool admissible(std::uint64_t marked) const {
        const std::size_t nv = g.vertices.size();
        std::array<std::uint8_t, 64> parent, ends;
        for (std::size_t v = 0; v < nv; ++v) {
            parent[v] = static_cast<std::uint8_t>(v);
            ends[v] = 0;
        }
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = nv;
        for (std::size_t e = 0; e < ni; ++e) {
            if (marked >> e & 1) continue;
            auto a = find(g.edges[e].tail), b = find(g.edges[e].head);
            if (a == b) return false;
            parent[a] = static_cast<std::uint8_t>(b);
            --components;
        }
        std::size_t unmarked = 0;
        for (std::size_t x = 0; x < g.ends.size(); ++x) {
            if (marked >> (ni + x) & 1) continue;
            if (++ends[find(g.ends[x].vertex)] > 1) return false;
            ++unmarked;
        }
        return unmarked == components;
    }

    std::optional<std::vector<Step>> plan(std::uint64_t marked) const {
        if (!admissible(marked)) return std::nullopt;
        const std::size_t nv = g.vertices.size();
        std::vector<std::size_t> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < ni; ++e) {
            if (marked >> e & 1) continue;
            auto a = find(g.edges[e].tail), b = find(g.edges[e].head);
            if (a == b) return std::nullopt;
            parent[a] = b;
        }
        std::vector<int> unmarked_ends(nv, 0);
        std::vector<std::size_t> root_of(nv, SIZE_MAX);
        for (std::size_t x = 0; x < g.ends.size(); ++x) {
            if (marked >> (ni + x) & 1) continue;
            auto r = find(g.ends[x].vertex);
            if (++unmarked_ends[r] > 1) return std::nullopt;
            root_of[r] = g.ends[x].vertex;
        }
        for (std::size_t v = 0; v < nv; ++v)
            if (find(v) == v && unmarked_ends[v] != 1) return std::nullopt;

        // Orient every component toward its root vertex.
        std::vector<std::vector<std::size_t>> incident(nv);
        for (std::size_t e = 0; e < ni; ++e) {
            incident[g.edges[e].tail].push_back(e);
            incident[g.edges[e].head].push_back(e);
        }
        for (std::size_t x = 0; x < g.ends.size(); ++x) incident[g.ends[x].vertex].push_back(ni + x);
        std::vector<std::size_t> up(nv, SIZE_MAX), order;
        std::vector<bool> seen(nv, false);
        for (std::size_t v = 0; v < nv; ++v) {
            if (find(v) != v) continue;
            std::size_t r = root_of[v];
            for (auto e : incident[r])
                if (e >= ni && !(marked >> e & 1)) up[r] = e;
            std::vector<std::size_t> queue{r};
            seen[r] = true;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                auto w = queue[i];
                order.push_back(w);
                for (auto e : incident[w]) {
                    if (e >= ni || (marked >> e & 1) || e == up[w]) continue;
                    auto o = g.edges[e].tail == w ? g.edges[e].head : g.edges[e].tail;
                    if (seen[o]) continue;
                    seen[o] = true;
                    up[o] = e;
                    queue.push_back(o);
                }
            }
        }
        std::reverse(order.begin(), order.end());
        std::vector<Step> steps;
        for (auto w : order) {
            Step s{w, {}};
            std::size_t k = 0;
            for (auto e : incident[w]) {
                if (e == up[w]) continue;
                if (k == 2) return std::nullopt;
                Slot& slot = s.slots[k++];
                if (e >= ni) {
                    slot = {true, e, g.ends[e - ni].d};
                } else {
                    const auto& ed = g.edges[e];
                    IVec out = ed.tail == w ? ed.d : IVec{-ed.d[0], -ed.d[1]};
                    if (marked >> e & 1) slot = {true, e, out};
                    else slot = {false, ed.tail == w ? ed.head : ed.tail, IVec{-out[0], -out[1]}};
                }
                if (slot.leaf) slot.toward = {-slot.toward[0], -slot.toward[1]};
                slot.dx = static_cast<double>(slot.toward[0]);
                slot.dy = static_cast<double>(slot.toward[1]);
            }
            if (k != 2) return std::nullopt;
            steps.push_back(s);
        }
        return steps;
    }

    template <class T>
    bool place(const Step& s, const std::vector<V2<T>>& pos, const std::vector<V2<T>>& pts,
               const std::vector<std::size_t>& assign, V2<T>& out, T& t1, T& t2) const {
        auto anchor = [&](const Slot& sl) { return sl.leaf ? pts[assign[sl.index]] : pos[sl.index]; };
        V2<T> d1{from_int<T>(s.slots[0].toward[0]), from_int<T>(s.slots[0].toward[1])};
        V2<T> d2{from_int<T>(s.slots[1].toward[0]), from_int<T>(s.slots[1].toward[1])};
        V2<T> a1 = anchor(s.slots[0]);
        meet<T>(a1, d1, anchor(s.slots[1]), d2, t1, t2);
        out = {a1[0] + t1 * d1[0], a1[1] + t1 * d1[1]};
        return true;
    }

    void exact(const std::vector<Step>& steps, const std::vector<std::size_t>& assign) {
        const std::size_t nv = g.vertices.size();
        std::vector<V2<Rational>> pos(nv), pts;
        for (const auto& p : points) pts.push_back({p[0], p[1]});
        for (const auto& s : steps) {
            Rational t1, t2;
            place<Rational>(s, pos, pts, assign, pos[s.vertex], t1, t2);
            if (sgn(t1) < 0 || sgn(t2) < 0) return;
            if (sgn(t1) == 0 || sgn(t2) == 0) throw NonGeneric("degenerate solution");
        }
        TropicalCurve c = g;
        for (std::size_t v = 0; v < nv; ++v) c.vertices[v].pos = {pos[v][0], pos[v][1]};
        for (auto& e : c.edges) {
            std::size_t i = e.d[0] != 0 ? 0 : 1;
            e.length = (c.vertices[e.head].pos[i] - c.vertices[e.tail].pos[i]) / to_rational(e.d[i]);
            if (sgn(e.length) <= 0) throw Error("inconsistent edge in rigid solve");
        }
        found.push_back(c);
    }

    void search() {
        const std::size_t n = points.size();
        if (n > total || total > 63 || g.vertices.size() > 64) return;
        const double tol = 1e-7;
        std::uint64_t marked = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
        const std::uint64_t limit = std::uint64_t{1} << total;
        while (marked < limit) {
            if (auto steps = plan(marked)) {
                std::vector<std::size_t> assign(total, SIZE_MAX);
                std::vector<bool> used(n, false);
                std::vector<V2<double>> pos(g.vertices.size());
                auto rec = [&](auto&& self, std::size_t k, std::size_t slot) -> void {
                    if (k == steps->size()) {
                        exact(*steps, assign);
                        return;
                    }
                    const Step& s = (*steps)[k];
                    if (slot < 2) {
                        const Slot& sl = s.slots[slot];
                        if (!sl.leaf || assign[sl.index] != SIZE_MAX) {
                            self(self, k, slot + 1);
                            return;
                        }
                        for (std::size_t p = 0; p < n; ++p) {
                            if (used[p]) continue;
                            used[p] = true;
                            assign[sl.index] = p;
                            self(self, k, slot + 1);
                            assign[sl.index] = SIZE_MAX;
                            used[p] = false;
                        }
                        return;
                    }
                    const Slot &u = s.slots[0], &v = s.slots[1];
                    const auto& a1 = u.leaf ? fpoints[assign[u.index]] : pos[u.index];
                    const auto& a2 = v.leaf ? fpoints[assign[v.index]] : pos[v.index];
                    double det = v.dx * u.dy - u.dx * v.dy;
                    double rx = a2[0] - a1[0], ry = a2[1] - a1[1];
                    double t1 = (v.dx * ry - v.dy * rx) / det, t2 = (u.dx * ry - u.dy * rx) / det;
                    if (t1 < -tol || t2 < -tol) return;
                    pos[s.vertex] = {a1[0] + t1 * u.dx, a1[1] + t1 * u.dy};
                    self(self, k + 1, 0);
                };
                rec(rec, 0, 0);
            }
            if (marked == 0) break;
            // Next subset of the same size.
            std::uint64_t low = marked & -marked, ripple = marked + low;
            marked = (((ripple ^ marked) >> 2) / low) | ripple;
        }
    }
};

std::string curve_key(const TropicalCurve& c) {
    std::ostringstream o;
    for (const auto& v : c.vertices) o << wire_rational(v.pos[0]) << ',' << wire_rational(v.pos[1]) << ';' << v.genus << ' ';
    o << '|';
    for (const auto& e : c.edges)
        o << e.tail << '-' << e.head << ':' << e.d[0] << ',' << e.d[1] << '@' << wire_rational(e.length) << ' ';
    o << '|';
    for (const auto& x : c.ends) o << x.vertex << '>' << x.d[0] << ',' << x.d[1] << ' ';
    return o.str();
}

void check_alignment(const CountingProblem& p) {
    auto polygon = newton_polygon(p.ends);
    auto pts = lattice_points(polygon);
    std::set<IVec> dirs;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (a == b) continue;
            IVec d = primitive(IVec{b[1] - a[1], a[0] - b[0]});
            if (d < IVec{-d[0], -d[1]}) d = {-d[0], -d[1]};
            dirs.insert(d);
        }
    for (std::size_t i = 0; i < p.points.size(); ++i)
        for (std::size_t j = i + 1; j < p.points.size(); ++j) {
            Rational dx = p.points[j][0] - p.points[i][0], dy = p.points[j][1] - p.points[i][1];
            if (sgn(dx) == 0 && sgn(dy) == 0) throw NonGeneric("repeated point");
            for (const auto& d : dirs)
                if (dx * to_rational(d[1]) == dy * to_rational(d[0])) throw NonGeneric("points aligned along an edge direction");
        }
}

std::vector<VertexStar> stars_at_vertices(const TropicalCurve& c) {
    std::vector<VertexStar> s(c.vertices.size());
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        s[v].pos = c.vertices[v].pos;
        s[v].genus = c.vertices[v].genus;
    }
    for (const auto& x : c.ends) s[x.vertex].ends.push_back(x.d);
    for (const auto& e : c.edges) {
        s[e.tail].ends.push_back(e.d);
        s[e.head].ends.push_back({-e.d[0], -e.d[1]});
    }
    return s;
}

Rational direct_weight(const TropicalCurve& c, const LocalContributionOracle& oracle) {
    Rational w = 1;
    for (const auto& s : stars_at_vertices(c)) w *= oracle(s);
    return w;
}

}  // namespace

std::vector<IVec> degree_ends(std::size_t degree) {
    std::vector<IVec> e;
    for (std::size_t i = 0; i < degree; ++i) {
        e.push_back({-1, 0});
        e.push_back({0, -1});
        e.push_back({1, 1});
    }
    return e;
}

CountingProblem plane_problem(std::size_t degree, std::size_t genus, std::vector<RVec> points) {
    return {2, degree_ends(degree), genus, std::move(points), degree};
}

std::size_t expected_point_count(const CountingProblem& p) { return p.ends.size() + p.genus - 1; }

void validate_problem(const CountingProblem& p) {
    if (p.dim != 2) throw NotPlanar("counting problems are planar");
    if (p.ends.empty()) throw Error("no ends");
    IVec sum{0, 0};
    for (const auto& d : p.ends) {
        if (d.size() != 2) throw NotPlanar("end derivative is not planar");
        sum[0] += d[0];
        sum[1] += d[1];
    }
    if (sum != IVec{0, 0}) throw Error("end derivatives do not balance");
    for (const auto& q : p.points)
        if (q.size() != 2) throw NotPlanar("point is not planar");
    if (p.points.size() != expected_point_count(p))
        throw Error("expected " + std::to_string(expected_point_count(p)) + " points, got " +
                    std::to_string(p.points.size()));
}

Integer plane_vertex_multiplicity(const VertexStar& s) {
    if (s.ends.size() != 3) throw Error("vertex is not trivalent");
    for (const auto& d : s.ends)
        if (d.size() != 2) throw NotPlanar("vertex is not planar");
    if (!is_balanced(s)) throw Error("vertex is not balanced");
    Integer det = Integer(static_cast<long>(s.ends[0][0])) * static_cast<long>(s.ends[1][1]) -
                  Integer(static_cast<long>(s.ends[0][1])) * static_cast<long>(s.ends[1][0]);
    return abs(det);
}

Rational lattice_multiplicity(const VertexStar& s) { return Rational(plane_vertex_multiplicity(s)); }

TropicalCurve canonical_form(const TropicalCurve& c) {
    const std::size_t nv = c.vertices.size();
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        const auto &x = c.vertices[a], &y = c.vertices[b];
        return std::tie(x.pos, x.genus, x.polytope) < std::tie(y.pos, y.genus, y.polytope);
    });
    std::vector<std::size_t> rank(nv);
    for (std::size_t i = 0; i < nv; ++i) rank[order[i]] = i;
    TropicalCurve out;
    out.dim = c.dim;
    for (auto v : order) out.vertices.push_back(c.vertices[v]);
    for (auto e : c.edges) {
        e.tail = rank[e.tail];
        e.head = rank[e.head];
        if (e.tail > e.head) {
            std::swap(e.tail, e.head);
            for (auto& x : e.d) x = -x;
        }
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const CurveEdge& a, const CurveEdge& b) {
        return std::tie(a.tail, a.head, a.d, a.length) < std::tie(b.tail, b.head, b.d, b.length);
    });
    for (auto x : c.ends) {
        x.vertex = rank[x.vertex];
        out.ends.push_back(x);
    }
    std::sort(out.ends.begin(), out.ends.end(),
              [](const CurveEnd& a, const CurveEnd& b) { return std::tie(a.vertex, a.d) < std::tie(b.vertex, b.d); });
    return out;
}

std::vector<Incidence> point_incidences(const TropicalCurve& c, const std::vector<RVec>& points) {
    std::vector<Incidence> out;
    for (const auto& p : points) {
        for (const auto& v : c.vertices)
            if (v.pos == p) throw NonGeneric("point on a vertex");
        // Parameter along the segment from the tail, or nullopt off the line.
        auto along = [&](const RVec& a, const IVec& d) -> std::optional<Rational> {
            Rational rx = p[0] - a[0], ry = p[1] - a[1];
            if (rx * to_rational(d[1]) != ry * to_rational(d[0])) return std::nullopt;
            return d[0] != 0 ? Rational(rx / to_rational(d[0])) : Rational(ry / to_rational(d[1]));
        };
        std::vector<Incidence> hits;
        for (std::size_t e = 0; e < c.edges.size(); ++e) {
            const auto& ed = c.edges[e];
            auto s = along(c.vertices[ed.tail].pos, ed.d);
            if (s && sgn(*s) > 0 && *s < ed.length) hits.push_back({false, e});
        }
        for (std::size_t x = 0; x < c.ends.size(); ++x) {
            auto s = along(c.vertices[c.ends[x].vertex].pos, c.ends[x].d);
            if (s && sgn(*s) > 0) hits.push_back({true, x});
        }
        if (hits.size() != 1) throw NonGeneric(hits.empty() ? "point off the curve" : "point on a crossing");
        out.push_back(hits[0]);
    }
    return out;
}

std::string type_hash(const TropicalCurve& c) {
    auto k = canonical_form(c);
    std::ostringstream o;
    for (const auto& v : k.vertices) o << v.genus << ' ';
    for (const auto& e : k.edges) o << e.tail << '-' << e.head << ':' << e.d[0] << ',' << e.d[1] << ' ';
    for (const auto& x : k.ends) o << x.vertex << '>' << x.d[0] << ',' << x.d[1] << ' ';
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : o.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << h;
    return hex.str();
}

std::vector<TropicalCurve> enumerate_rigid_curves(const CountingProblem& p, Execution ex) {
    validate_problem(p);
    check_alignment(p);
    const auto types = plane_curve_types(p.ends, p.genus);
    const long nt = static_cast<long>(types.size());
    std::vector<std::vector<TropicalCurve>> per_type(types.size());
    std::vector<std::exception_ptr> errors(types.size());
    auto run = [&](long t) {
        try {
            TypeSolver s(types[t].graph, p.points);
            s.search();
            per_type[t] = std::move(s.found);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < nt; ++t) run(t);
    } else {
        for (long t = 0; t < nt; ++t) run(t);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<std::pair<std::string, TropicalCurve>> keyed;
    for (auto& list : per_type)
        for (auto& c : list) {
            auto k = canonical_form(c);
            for (std::size_t v = 0; v + 1 < k.vertices.size(); ++v)
                if (k.vertices[v].pos == k.vertices[v + 1].pos) throw NonGeneric("coincident vertices");
            point_incidences(k, p.points);
            keyed.emplace_back(curve_key(k), std::move(k));
        }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<TropicalCurve> out;
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(std::move(keyed[i].second));
    return out;
}

std::size_t matching_solutions(const TropicalCurve& c, const std::vector<RVec>& points) {
    const auto inc = point_incidences(c, points);
    const std::size_t nv = c.vertices.size(), ne = c.edges.size(), n = points.size();
    const std::size_t cols = 2 * nv + ne + n;
    RMatrix a;
    RVec b;
    auto row = [&]() {
        a.emplace_back(cols, Rational(0));
        b.emplace_back(0);
        return a.size() - 1;
    };
    // Diagonal constraint at each cut edge: the two half-rays close up into a segment.
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& ed = c.edges[e];
        for (std::size_t i = 0; i < 2; ++i) {
            auto r = row();
            a[r][2 * ed.head + i] += 1;
            a[r][2 * ed.tail + i] -= 1;
            a[r][2 * nv + e] = -to_rational(ed.d[i]);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t from = inc[k].end ? c.ends[inc[k].index].vertex : c.edges[inc[k].index].tail;
        const IVec& d = inc[k].end ? c.ends[inc[k].index].d : c.edges[inc[k].index].d;
        for (std::size_t i = 0; i < 2; ++i) {
            auto r = row();
            a[r][2 * from + i] = 1;
            a[r][2 * nv + ne + k] = to_rational(d[i]);
            b[r] = points[k][i];
        }
    }
    auto sol = solve(a, b);
    if (sol.kind == SolveKind::Infinite) throw NonGeneric("positive-dimensional solution family");
    if (sol.kind == SolveKind::None) return 0;
    for (std::size_t e = 0; e < ne; ++e)
        if (sgn(sol.x[2 * nv + e]) <= 0) return 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational& s = sol.x[2 * nv + ne + k];
        if (sgn(s) <= 0) return 0;
        if (!inc[k].end && s >= sol.x[2 * nv + inc[k].index]) return 0;
    }
    return 1;
}

CountReport count_both(const CountingProblem& p, const LocalContributionOracle& oracle, Execution ex) {
    return report_for(p, enumerate_rigid_curves(p, ex), oracle);
}

CountReport report_for(const CountingProblem& p, std::vector<TropicalCurve> curves, const LocalContributionOracle& oracle) {
    CountReport r;
    r.curves = std::move(curves);
    for (const auto& c : r.curves) {
        LedgerEntry l;
        l.type = type_hash(c);
        l.direct = direct_weight(c, oracle);
        l.oracle_product = 1;
        for (const auto& s : cut(c)) l.oracle_product *= oracle(s);
        l.k = k_factor(c);
        l.aut = automorphism_order(c);
        const auto solutions = matching_solutions(c, p.points);
        l.matching = Rational(Integer(static_cast<unsigned long>(l.aut * solutions))) / Rational(l.k);
        l.glued = Rational(l.k) / Rational(Integer(static_cast<unsigned long>(l.aut))) * l.matching * l.oracle_product;
        r.direct += l.direct;
        r.glued += l.glued;
        r.ledger.push_back(std::move(l));
    }
    return r;
}

Rational direct_count(const CountingProblem& p, const LocalContributionOracle& oracle) {
    Rational total = 0;
    for (const auto& c : enumerate_rigid_curves(p)) total += direct_weight(c, oracle);
    return total;
}

Rational glued_count(const CountingProblem& p, const LocalContributionOracle& oracle) {
    return count_both(p, oracle).glued;
}

CountingProblem random_generic_problem(std::size_t degree, std::size_t genus, std::uint64_t seed,
                                       std::vector<TropicalCurve>* curves) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-400, 400);
    CountingProblem p = plane_problem(degree, genus, {});
    for (int attempt = 0; attempt < 200; ++attempt) {
        p.points.clear();
        for (std::size_t i = 0; i < expected_point_count(p); ++i)
            p.points.push_back({make_rational(coord(rng), 7), make_rational(coord(rng), 7)});
        try {
            auto found = enumerate_rigid_curves(p);
            if (curves) *curves = std::move(found);
            return p;
        } catch (const NonGeneric&) {
        }
    }
    throw Error("no generic configuration found");
}

GWSeries assemble_series(const std::vector<SeriesTerm>& terms) {
    GWSeries s;
    for (const auto& t : terms) s[t.key] += t.value;
    std::erase_if(s, [](const auto& kv) { return sgn(kv.second) == 0; });
    return s;
}

GWSeries merge_series(const GWSeries& a, const GWSeries& b) {
    std::vector<SeriesTerm> terms;
    for (const auto& [k, v] : a) terms.push_back({k, v});
    for (const auto& [k, v] : b) terms.push_back({k, v});
    return assemble_series(terms);
}

}  // namespace explograph
