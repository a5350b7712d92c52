#pragma once

// Random curves and brute-force checks shared by the unit tests and the
// acceptance run.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "explograph/linalg.hpp"
#include "explograph/tropcurve.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace explograph;

// Brute force: vertex permutations times edge permutations with orientations times end permutations.
inline std::uint64_t brute_automorphisms(const TropicalCurve& c) {
    const std::size_t nv = c.vertices.size();
    std::uint64_t total = 0;
    auto neg = [](IVec d) {
        for (auto& v : d) v = -v;
        return d;
    };
    oracle::count_permutations(nv, [&](const std::vector<std::size_t>& s) {
        for (std::size_t v = 0; v < nv; ++v)
            if (!(c.vertices[v] == c.vertices[s[v]])) return false;
        // Edge permutations; each edge contributes the number of orientations that fit.
        std::uint64_t edge_count = 0;
        std::vector<std::size_t> p(c.edges.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            std::uint64_t ways = 1;
            for (std::size_t e = 0; e < c.edges.size() && ways; ++e) {
                const auto &a = c.edges[e], &b = c.edges[p[e]];
                std::uint64_t w = 0;
                if (s[a.tail] == b.tail && s[a.head] == b.head && a.length == b.length && a.d == b.d) ++w;
                if (s[a.tail] == b.head && s[a.head] == b.tail && a.length == b.length && a.d == neg(b.d)) ++w;
                ways *= w;
            }
            edge_count += ways;
        } while (std::next_permutation(p.begin(), p.end()));
        std::uint64_t end_count = oracle::count_permutations(c.ends.size(), [&](const std::vector<std::size_t>& r) {
            for (std::size_t x = 0; x < c.ends.size(); ++x)
                if (c.ends[r[x]].vertex != s[c.ends[x].vertex] || c.ends[r[x]].d != c.ends[x].d) return false;
            return true;
        });
        total += edge_count * end_count;
        return false;
    });
    return total;
}

inline TropicalCurve random_balanced(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-4, 4), nv_d(1, 4), mult(1, 3);
    TropicalCurve c;
    std::size_t nv = static_cast<std::size_t>(nv_d(rng));
    std::set<std::pair<int, int>> used;
    while (c.vertices.size() < nv) {
        int x = coord(rng), y = coord(rng);
        if (used.insert({x, y}).second) c.vertices.push_back({{Rational(x), Rational(y)}, 0, 0});
    }
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    // A spanning tree plus a few extra edges.
    for (std::size_t v = 1; v < nv; ++v) {
        std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        c.edges.push_back({u, v, 0, {}});
    }
    for (int extra = 0; extra < 2 && nv > 1; ++extra) {
        auto u = pick(rng), v = pick(rng);
        if (u != v) c.edges.push_back({u, v, 0, {}});
    }
    for (auto& e : c.edges) {
        IVec diff{to_int64(Rational(c.vertices[e.head].pos[0] - c.vertices[e.tail].pos[0]).get_num()),
                  to_int64(Rational(c.vertices[e.head].pos[1] - c.vertices[e.tail].pos[1]).get_num())};
        std::int64_t g = gcd_of(diff), m = mult(rng);
        e.d = {diff[0] / g * m, diff[1] / g * m};
        e.length = make_rational(g, m);
    }
    std::vector<IVec> sum(nv, IVec{0, 0});
    for (const auto& e : c.edges)
        for (int i = 0; i < 2; ++i) {
            sum[e.tail][i] += e.d[i];
            sum[e.head][i] -= e.d[i];
        }
    for (std::size_t v = 0; v < nv; ++v) {
        IVec extra{coord(rng), coord(rng)};
        c.ends.push_back({v, extra});
        c.ends.push_back({v, {-sum[v][0] - extra[0], -sum[v][1] - extra[1]}});
    }
    return c;
}

// Up to four vertices on two spots with horizontal edges and a few ends;
// edges plus ends may exceed eight and are then skipped by callers.
inline TropicalCurve small_graph(std::mt19937_64& rng, int t) {
    const std::vector<RVec> spots{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
    const std::vector<IVec> dirs{{1, 0}, {0, 1}, {-1, -1}};
    TropicalCurve c;
    std::size_t nv = 1 + t % 4;
    for (std::size_t v = 0; v < nv; ++v)
        c.vertices.push_back({spots[rng() % 2], 0, static_cast<std::size_t>(rng() % 4 == 0)});
    std::size_t ne = rng() % 5, nx = rng() % 4;
    for (std::size_t e = 0; e < ne; ++e) {
        std::size_t u = rng() % nv, v = rng() % nv;
        Rational dx = c.vertices[v].pos[0] - c.vertices[u].pos[0];
        if (sgn(dx) == 0) c.edges.push_back({u, v, Rational(1 + static_cast<long>(rng() % 2)), {0, 0}});
        else {
            long m = 1 + static_cast<long>(rng() % 2);
            c.edges.push_back({u, v, make_rational(1, m), {to_int64(dx.get_num()) * m, 0}});
        }
    }
    for (std::size_t x = 0; x < nx; ++x) c.ends.push_back({rng() % nv, dirs[rng() % 2]});
    return c;
}

}  // namespace fixtures
