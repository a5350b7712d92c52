#include "explograph/plane_types.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "explograph/error.hpp"
#include "explograph/linalg.hpp"

namespace explograph {

namespace {

std::int64_t cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Point2 add(const Point2& a, const Point2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Point2 sub(const Point2& a, const Point2& b) { return {a[0] - b[0], a[1] - b[1]}; }

bool upper_half(const Point2& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); }

bool angle_less(const Point2& a, const Point2& b) {
    bool ua = upper_half(a), ub = upper_half(b);
    if (ua != ub) return ua;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

bool in_closed(const Cell& c, const Point2& q) {
    const auto& k = c.corners;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (cross(k[i], k[(i + 1) % k.size()], q) < 0) return false;
    return true;
}

bool is_corner(const Cell& c, const Point2& q) {
    return std::find(c.corners.begin(), c.corners.end(), q) != c.corners.end();
}

// Separating axis test on convex cells; touching boundaries do not count.
bool interiors_meet(const Cell& a, const Cell& b) {
    auto separated_by = [](const Cell& from, const Cell& x, const Cell& y) {
        const auto& k = from.corners;
        for (std::size_t i = 0; i < k.size(); ++i) {
            Point2 e = sub(k[(i + 1) % k.size()], k[i]);
            Point2 n{e[1], -e[0]};
            auto proj = [&](const Point2& p) { return n[0] * p[0] + n[1] * p[1]; };
            std::int64_t xmin = INT64_MAX, xmax = INT64_MIN, ymin = INT64_MAX, ymax = INT64_MIN;
            for (const auto& p : x.corners) {
                xmin = std::min(xmin, proj(p));
                xmax = std::max(xmax, proj(p));
            }
            for (const auto& p : y.corners) {
                ymin = std::min(ymin, proj(p));
                ymax = std::max(ymax, proj(p));
            }
            if (xmax <= ymin || ymax <= xmin) return true;
        }
        return false;
    };
    return !separated_by(a, a, b) && !separated_by(b, a, b);
}

using Edge = std::pair<Point2, Point2>;

struct SubdivisionSearch {
    std::vector<Point2> points;
    std::set<Point2> point_set;
    std::vector<Cell> cells;
    std::set<Edge> open;
    std::multiset<Point2> used;
    std::vector<Subdivision> out;

    bool fits(const Cell& c) const {
        for (const auto& x : cells)
            if (interiors_meet(x, c)) return false;
        for (const auto& q : used)
            if (in_closed(c, q) && !is_corner(c, q)) return false;
        for (const auto& k : c.corners)
            for (const auto& x : cells)
                if (in_closed(x, k) && !is_corner(x, k)) return false;
        return true;
    }

    void place(const Cell& c) {
        std::vector<Edge> closed, opened;
        const auto& k = c.corners;
        for (std::size_t i = 0; i < k.size(); ++i) {
            Edge e{k[i], k[(i + 1) % k.size()]};
            if (open.erase(e)) closed.push_back(e);
            else {
                Edge r{e.second, e.first};
                open.insert(r);
                opened.push_back(r);
            }
        }
        cells.push_back(c);
        for (const auto& p : k) used.insert(p);
        run();
        for (const auto& p : k) used.erase(used.find(p));
        cells.pop_back();
        for (const auto& e : opened) open.erase(e);
        for (const auto& e : closed) open.insert(e);
    }

    void run() {
        if (open.empty()) {
            out.push_back(cells);
            return;
        }
        auto [a, b] = *open.begin();
        for (const auto& c : points) {
            if (cross(a, b, c) <= 0) continue;
            Cell tri{{a, b, c}};
            if (fits(tri)) place(tri);
            Point2 v = sub(c, a), d = add(b, v);
            if (!point_set.count(d)) continue;
            Cell par{{a, b, d, c}};
            if (fits(par)) place(par);
        }
    }
};

std::vector<Point2> rotated_from_min(std::vector<Point2> k) {
    std::rotate(k.begin(), std::min_element(k.begin(), k.end()), k.end());
    return k;
}

}  // namespace

LatticePolygon newton_polygon(const std::vector<IVec>& ends) {
    std::vector<Point2> steps;
    Point2 total{0, 0};
    for (const auto& d : ends) {
        if (d.size() != 2) throw NotPlanar("end derivative is not planar");
        if (gcd_of(d) != 1) throw Error("end derivatives must be primitive");
        steps.push_back({-d[1], d[0]});
        total = add(total, steps.back());
    }
    if (total != Point2{0, 0}) throw Error("end derivatives do not balance");
    if (steps.empty()) throw Error("no ends");
    std::stable_sort(steps.begin(), steps.end(), angle_less);
    std::vector<Point2> pts{{0, 0}};
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) pts.push_back(add(pts.back(), steps[i]));
    std::int64_t mx = INT64_MAX, my = INT64_MAX;
    for (const auto& p : pts) {
        mx = std::min(mx, p[0]);
        my = std::min(my, p[1]);
    }
    for (auto& p : pts) p = sub(p, {mx, my});
    return {pts};
}

std::vector<Point2> lattice_points(const LatticePolygon& p) {
    std::int64_t x0 = INT64_MAX, x1 = INT64_MIN, y0 = INT64_MAX, y1 = INT64_MIN;
    for (const auto& q : p.boundary) {
        x0 = std::min(x0, q[0]);
        x1 = std::max(x1, q[0]);
        y0 = std::min(y0, q[1]);
        y1 = std::max(y1, q[1]);
    }
    Cell whole{p.boundary};
    std::vector<Point2> out;
    for (auto x = x0; x <= x1; ++x)
        for (auto y = y0; y <= y1; ++y)
            if (in_closed(whole, {x, y})) out.push_back({x, y});
    return out;
}

std::vector<Subdivision> lattice_subdivisions(const LatticePolygon& p) {
    SubdivisionSearch s;
    s.points = lattice_points(p);
    s.point_set.insert(s.points.begin(), s.points.end());
    const auto& k = p.boundary;
    for (std::size_t i = 0; i < k.size(); ++i) {
        s.open.insert({k[i], k[(i + 1) % k.size()]});
        s.used.insert(k[i]);
    }
    if (k.size() < 3) return {};
    s.run();
    return s.out;
}

std::int64_t doubled_area(const Cell& c) {
    std::int64_t a = 0;
    for (std::size_t i = 1; i + 1 < c.corners.size(); ++i) a += cross(c.corners[0], c.corners[i], c.corners[i + 1]);
    return a;
}

std::vector<CurveType> plane_curve_types(const std::vector<IVec>& ends, std::size_t genus) {
    auto polygon = newton_polygon(ends);
    std::map<std::string, CurveType> found;
    for (const auto& sub : lattice_subdivisions(polygon)) {
        std::vector<Cell> tris;
        for (const auto& c : sub)
            if (c.corners.size() == 3) tris.push_back({rotated_from_min(c.corners)});
        std::sort(tris.begin(), tris.end(), [](const Cell& a, const Cell& b) { return a.corners < b.corners; });
        std::vector<Cell> cells = tris;
        for (const auto& c : sub)
            if (c.corners.size() == 4) cells.push_back(c);

        std::map<Edge, std::vector<std::pair<std::size_t, std::size_t>>> across;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            const auto& k = cells[ci].corners;
            for (std::size_t j = 0; j < k.size(); ++j) {
                Edge e{std::min(k[j], k[(j + 1) % k.size()]), std::max(k[j], k[(j + 1) % k.size()])};
                across[e].push_back({ci, j});
            }
        }

        TropicalCurve g;
        g.vertices.assign(tris.size(), CurveVertex{{Rational(0), Rational(0)}, 0, 0});
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& k = tris[t].corners;
            for (std::size_t j = 0; j < 3; ++j) {
                Point2 u = k[j], v = k[(j + 1) % 3];
                IVec d{v[1] - u[1], u[0] - v[0]};
                std::size_t cell = t;
                for (;;) {
                    Edge e{std::min(u, v), std::max(u, v)};
                    const auto& sides = across.at(e);
                    auto other = std::find_if(sides.begin(), sides.end(), [&](const auto& s) { return s.first != cell; });
                    if (other == sides.end()) {
                        g.ends.push_back({t, d});
                        break;
                    }
                    if (other->first < tris.size()) {
                        if (t < other->first) g.edges.push_back({t, other->first, Rational(0), d});
                        break;
                    }
                    cell = other->first;
                    const auto& pk = cells[cell].corners;
                    std::size_t i = other->second;
                    u = pk[(i + 2) % 4];
                    v = pk[(i + 3) % 4];
                }
            }
        }
        if (g.ends.size() != ends.size() || tris.empty()) continue;
        std::size_t gg;
        try {
            gg = curve_genus(g);
        } catch (const Error&) {
            continue;
        }
        if (gg != genus) continue;

        for (auto& e : g.edges)
            if (e.tail > e.head) {
                std::swap(e.tail, e.head);
                for (auto& x : e.d) x = -x;
            }
        auto edge_less = [](const CurveEdge& a, const CurveEdge& b) {
            return std::tie(a.tail, a.head, a.d) < std::tie(b.tail, b.head, b.d);
        };
        std::sort(g.edges.begin(), g.edges.end(), edge_less);
        std::sort(g.ends.begin(), g.ends.end(),
                  [](const CurveEnd& a, const CurveEnd& b) { return std::tie(a.vertex, a.d) < std::tie(b.vertex, b.d); });
        std::ostringstream key;
        for (const auto& t : tris) {
            for (const auto& p : t.corners) key << p[0] << ',' << p[1] << ' ';
            key << '|';
        }
        for (const auto& e : g.edges) key << e.tail << '-' << e.head << ':' << e.d[0] << ',' << e.d[1] << ' ';
        for (const auto& x : g.ends) key << x.vertex << '>' << x.d[0] << ',' << x.d[1] << ' ';
        std::string k = key.str();
        if (!found.count(k)) found.emplace(k, CurveType{std::move(g), std::move(tris), k});
    }
    std::vector<CurveType> out;
    for (auto& [k, t] : found) out.push_back(std::move(t));
    return out;
}

}  // namespace explograph
