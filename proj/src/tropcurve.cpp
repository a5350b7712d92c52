#include "explograph/tropcurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "explograph/error.hpp"
#include "explograph/linalg.hpp"

namespace explograph {

namespace {

bool is_zero(const IVec& d) {
    return std::all_of(d.begin(), d.end(), [](auto v) { return v == 0; });
}

IVec negated(IVec d) {
    for (auto& v : d) v = -v;
    return d;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

bool is_balanced(const VertexStar& s) {
    if (s.ends.empty()) return true;
    IVec sum(s.ends[0].size(), 0);
    for (const auto& d : s.ends)
        for (std::size_t i = 0; i < d.size(); ++i) sum[i] += d[i];
    return is_zero(sum);
}

bool check_balanced(const TropicalCurve& c) {
    const std::size_t nv = c.vertices.size();
    for (const auto& v : c.vertices)
        if (v.pos.size() != c.dim) return false;
    std::vector<IVec> sum(nv, IVec(c.dim, 0));
    for (const auto& e : c.edges) {
        if (e.tail >= nv || e.head >= nv || e.d.size() != c.dim) return false;
        if (sgn(e.length) <= 0) return false;
        for (std::size_t i = 0; i < c.dim; ++i) {
            if (c.vertices[e.head].pos[i] - c.vertices[e.tail].pos[i] != e.length * to_rational(e.d[i])) return false;
            sum[e.tail][i] += e.d[i];
            sum[e.head][i] -= e.d[i];
        }
    }
    for (const auto& x : c.ends) {
        if (x.vertex >= nv || x.d.size() != c.dim) return false;
        for (std::size_t i = 0; i < c.dim; ++i) sum[x.vertex][i] += x.d[i];
    }
    return std::all_of(sum.begin(), sum.end(), is_zero);
}

std::size_t curve_genus(const TropicalCurve& c) {
    const std::size_t nv = c.vertices.size();
    if (nv == 0) throw Error("curve has no vertices");
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = nv;
    for (const auto& e : c.edges) {
        auto a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    if (components != 1) throw Error("curve is disconnected");
    std::size_t g = c.edges.size() + 1 - nv;
    for (const auto& v : c.vertices) g += v.genus;
    return g;
}

std::int64_t edge_multiplicity(const IVec& d) { return gcd_of(d); }

Integer k_factor(const TropicalCurve& c, bool allow_zero) {
    Integer k = 1;
    for (const auto& e : c.edges) {
        auto m = edge_multiplicity(e.d);
        if (m == 0) {
            if (!allow_zero) throw Error("internal edge with zero derivative");
            continue;
        }
        k *= static_cast<long>(m);
    }
    return k;
}

std::uint64_t automorphism_order(const TropicalCurve& c) {
    if (c.edges.size() + c.ends.size() > kMaxAutomorphismEdges)
        throw Error("curve too large for automorphism search");
    const std::size_t nv = c.vertices.size();

    // Edge data between an ordered vertex pair, normalized to run from the first to the second.
    using Key = std::pair<Rational, IVec>;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Key>> between;
    std::vector<std::vector<IVec>> ends_at(nv);
    for (const auto& e : c.edges) {
        auto u = e.tail, v = e.head;
        IVec d = e.d;
        if (u > v) {
            std::swap(u, v);
            d = negated(d);
        }
        if (u == v && d < negated(d)) d = negated(d);
        between[{u, v}].push_back({e.length, d});
    }
    for (auto& [k, list] : between) std::sort(list.begin(), list.end());
    for (const auto& x : c.ends) ends_at[x.vertex].push_back(x.d);
    for (auto& l : ends_at) std::sort(l.begin(), l.end());

    // Number of edge/end bijections realizing the identity vertex map.
    std::uint64_t fixed = 1;
    auto count_classes = [](const auto& sorted) {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            n *= factorial(j - i);
            i = j;
        }
        return n;
    };
    for (const auto& [uv, list] : between) {
        fixed *= count_classes(list);
        if (uv.first == uv.second)
            for (const auto& k : list)
                if (is_zero(k.second)) fixed *= 2;  // a contracted loop can be reversed
    }
    for (const auto& l : ends_at) fixed *= count_classes(l);

    // Vertex maps preserving positions and genera that carry the edge and end data along.
    auto compatible = [&](const std::vector<std::size_t>& sigma) {
        for (const auto& [uv, list] : between) {
            auto a = sigma[uv.first], b = sigma[uv.second];
            std::vector<Key> mapped = list;
            if (a > b) {
                std::swap(a, b);
                for (auto& k : mapped) k.second = negated(k.second);
            }
            if (a == b)
                for (auto& k : mapped)
                    if (k.second < negated(k.second)) k.second = negated(k.second);
            std::sort(mapped.begin(), mapped.end());
            auto it = between.find({a, b});
            if (it == between.end() || it->second != mapped) return false;
        }
        for (std::size_t v = 0; v < nv; ++v)
            if (ends_at[v] != ends_at[sigma[v]]) return false;
        return true;
    };
    std::vector<std::size_t> sigma(nv);
    std::vector<bool> used(nv, false);
    std::uint64_t maps = 0;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == nv) {
            if (compatible(sigma)) ++maps;
            return;
        }
        for (std::size_t w = 0; w < nv; ++w) {
            if (used[w] || !(c.vertices[w] == c.vertices[v])) continue;
            used[w] = true;
            sigma[v] = w;
            self(self, v + 1);
            used[w] = false;
        }
    };
    rec(rec, 0);
    return maps * fixed;
}

std::vector<VertexStar> cut(const TropicalCurve& c) {
    std::vector<VertexStar> stars;
    for (const auto& v : c.vertices) stars.push_back({v.pos, v.genus, {}});
    for (const auto& e : c.edges) {
        stars.at(e.tail).ends.push_back(e.d);
        stars.at(e.head).ends.push_back(negated(e.d));
    }
    for (const auto& x : c.ends) stars.at(x.vertex).ends.push_back(x.d);
    return stars;
}

}  // namespace explograph
