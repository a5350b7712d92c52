#include "explograph/explosion.hpp"

#include <algorithm>
#include <set>

#include "explograph/error.hpp"

namespace explograph {

NCConfiguration normalized(NCConfiguration cfg) {
    std::set<std::vector<std::size_t>> sets;
    for (auto s : cfg.nerve) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidNerve("nerve element repeats an index");
        for (auto i : s)
            if (i < 1 || i > cfg.k) throw InvalidNerve("nerve index " + std::to_string(i) + " out of range");
        sets.insert(std::move(s));
    }
    sets.insert({});
    for (const auto& s : sets)
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            auto sub = s;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!sets.count(sub)) throw InvalidNerve("nerve is not downward closed");
        }
    cfg.nerve.assign(sets.begin(), sets.end());
    std::sort(cfg.nerve.begin(), cfg.nerve.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (cfg.dim == 0)
        for (const auto& s : cfg.nerve) cfg.dim = std::max(cfg.dim, s.size());
    return cfg;
}

std::vector<std::vector<std::size_t>> maximal_elements(const NCConfiguration& cfg) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : cfg.nerve) {
        bool maximal = true;
        for (const auto& t : cfg.nerve)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

NCConfiguration nerve_link(const NCConfiguration& cfg, std::size_t i) {
    NCConfiguration link;
    link.k = cfg.k - 1;
    link.dim = cfg.dim > 0 ? cfg.dim - 1 : 0;
    for (const auto& s : cfg.nerve) {
        if (!std::binary_search(s.begin(), s.end(), i)) continue;
        std::vector<std::size_t> t;
        for (auto j : s)
            if (j != i) t.push_back(j < i ? j : j - 1);
        link.nerve.push_back(t);
    }
    for (std::size_t j = 1; j <= cfg.k; ++j)
        if (j != i && j - 1 < cfg.labels.size()) link.labels.push_back(cfg.labels[j - 1]);
    return normalized(link);
}

ChartMorphism face_gluing(const PolytopeComplex& c, const std::vector<Chart>& charts, std::size_t identification) {
    const auto& id = c.identifications.at(identification);
    const Polytope& src = c.polytopes[id.from];
    Face face = face_of(src, id.tight_from);
    Chart face_chart(charts[id.from].n() + 2 * (src.dim() - face.dim), face.in_span);
    RVec base = id.map.apply(face.point);
    std::vector<ExplodedMonomial> entries;
    for (std::size_t i = 0; i < id.map.target_dim(); ++i) {
        IVec alpha(face.dim, 0);
        for (std::size_t j = 0; j < face.dim; ++j)
            for (std::size_t t = 0; t < src.dim(); ++t) alpha[j] += id.map.a[i][t] * face.lattice_basis[j][t];
        entries.push_back({ExplodedScalar(GaussianRational(1), base[i]), alpha});
    }
    return make_morphism(face_chart, charts[id.to], std::move(entries));
}

ExplodedComplex make_exploded_complex(PolytopeComplex c, const std::vector<std::size_t>& n) {
    try {
        validate_complex(c);
    } catch (const std::invalid_argument& e) {
        throw Error(std::string("incoherent complex: ") + e.what());
    }
    ExplodedComplex out;
    for (std::size_t i = 0; i < c.polytopes.size(); ++i) out.charts.emplace_back(n.at(i), c.polytopes[i]);
    out.tropical = std::move(c);
    for (std::size_t i = 0; i < out.tropical.identifications.size(); ++i)
        out.gluings.push_back(face_gluing(out.tropical, out.charts, i));
    return out;
}

ExplodedComplex explode_nc(const NCConfiguration& input) {
    NCConfiguration cfg = normalized(input);
    auto top = maximal_elements(cfg);
    PolytopeComplex c;
    std::vector<std::size_t> n;
    for (const auto& s : top) {
        c.polytopes.push_back(Polytope::orthant(s.size()));
        n.push_back(2 * (std::max(cfg.dim, s.size()) - s.size()));
    }
    for (std::size_t a = 0; a < top.size(); ++a)
        for (std::size_t b = a + 1; b < top.size(); ++b) {
            const auto &I = top[a], &J = top[b];
            FaceIdentification id;
            id.from = a;
            id.to = b;
            for (std::size_t p = 0; p < I.size(); ++p)
                if (!std::binary_search(J.begin(), J.end(), I[p])) id.tight_from.push_back(p);
            for (std::size_t p = 0; p < J.size(); ++p)
                if (!std::binary_search(I.begin(), I.end(), J[p])) id.tight_to.push_back(p);
            id.map.a.assign(J.size(), IVec(I.size(), 0));
            id.map.b.assign(J.size(), Rational(0));
            for (std::size_t p = 0; p < J.size(); ++p) {
                auto it = std::lower_bound(I.begin(), I.end(), J[p]);
                if (it != I.end() && *it == J[p]) id.map.a[p][static_cast<std::size_t>(it - I.begin())] = 1;
            }
            c.identifications.push_back(std::move(id));
        }
    return make_exploded_complex(std::move(c), n);
}

Polytope cone_from_rays(const std::vector<IVec>& rays, std::size_t dim) {
    if (rank(rays) != dim) throw Error("cone is not full-dimensional");
    std::set<IVec> normals;
    std::vector<std::size_t> pick(dim - 1);
    for (std::size_t i = 0; i + 1 < dim; ++i) pick[i] = i;
    const std::size_t k = dim - 1;
    for (;;) {
        IMatrix sub;
        for (auto i : pick) sub.push_back(rays[i]);
        if (rank(sub) == k) {
            auto ns = integer_kernel_basis(sub, dim);
            IVec nrm = ns.at(0);
            bool pos = false, neg = false;
            for (const auto& r : rays) {
                std::int64_t s = 0;
                for (std::size_t i = 0; i < dim; ++i) s += nrm[i] * r[i];
                pos |= s > 0;
                neg |= s < 0;
            }
            if (pos != neg) {
                if (neg)
                    for (auto& v : nrm) v = -v;
                normals.insert(nrm);
            }
        }
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == rays.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<AffineConstraint> cs;
    for (const auto& nrm : normals) cs.emplace_back(nrm, 0);
    return Polytope(dim, std::move(cs));
}

ExplodedComplex explode_fan(std::size_t dim, const std::vector<IVec>& rays,
                            const std::vector<std::vector<std::size_t>>& cones) {
    std::vector<Polytope> pieces;
    for (const auto& cone : cones) {
        std::vector<IVec> r;
        for (auto i : cone) {
            if (i >= rays.size()) throw SchemaError("cone refers to a missing ray");
            if (rays[i].size() != dim) throw SchemaError("ray has the wrong dimension");
            r.push_back(rays[i]);
        }
        pieces.push_back(cone_from_rays(r, dim));
    }
    ExplodedComplex whole = make_exploded_complex({{Polytope::space(dim)}, {}}, {0});
    return refine(whole, {pieces});
}

std::vector<Polytope> common_refinement(const std::vector<Polytope>& a, const std::vector<Polytope>& b) {
    std::vector<Polytope> out;
    for (const auto& p : a)
        for (const auto& q : b) {
            auto cs = p.constraints();
            cs.insert(cs.end(), q.constraints().begin(), q.constraints().end());
            Polytope r(p.dim(), std::move(cs));
            if (polytope_nonempty_interior(r)) out.push_back(std::move(r));
        }
    return out;
}

namespace {

// Pieces restricted to a face, in the face's own coordinates; only those
// meeting the face in a full-dimensional set.
std::vector<Polytope> pieces_on_face(const std::vector<Polytope>& pieces, const Face& f) {
    std::vector<Polytope> out;
    for (const auto& q : pieces) {
        std::vector<AffineConstraint> cs;
        bool empty = false;
        for (const auto& c : q.constraints()) {
            IVec beta(f.dim, 0);
            for (std::size_t j = 0; j < f.dim; ++j)
                for (std::size_t i = 0; i < q.dim(); ++i) beta[j] += c.alpha[i] * f.lattice_basis[j][i];
            Rational off = c.eval(f.point);
            if (std::all_of(beta.begin(), beta.end(), [](auto v) { return v == 0; })) {
                if (sgn(off) < 0 || (sgn(off) == 0 && c.strict)) empty = true;
                continue;
            }
            cs.emplace_back(beta, off, c.strict);
        }
        if (empty) continue;
        Polytope r(f.dim, std::move(cs));
        if (!polytope_nonempty_interior(r)) continue;
        if (std::none_of(out.begin(), out.end(), [&](const Polytope& o) { return same_closure(o, r); }))
            out.push_back(std::move(r));
    }
    return out;
}

// Face coordinates of the source face carried to face coordinates of the target face.
IntegralAffineMap face_coordinates_map(const FaceIdentification& id, const Face& from, const Face& to) {
    auto solve_in = [&](const RVec& v) {
        RMatrix a;
        for (std::size_t i = 0; i < v.size(); ++i) {
            RVec row;
            for (std::size_t j = 0; j < to.dim; ++j) row.push_back(to_rational(to.lattice_basis[j][i]));
            a.push_back(std::move(row));
        }
        auto r = solve(a, v);
        if (r.kind != SolveKind::Unique && !(to.dim == 0 && r.kind != SolveKind::None))
            throw Error("identification does not land in the target face");
        r.x.resize(to.dim);
        return r.x;
    };
    if (from.dim != to.dim) throw Error("identification changes the face dimension");
    IntegralAffineMap g;
    RVec p0 = id.map.apply(from.point);
    RVec d0(p0);
    for (std::size_t i = 0; i < d0.size(); ++i) d0[i] -= to.point[i];
    g.b = solve_in(d0);
    g.a.assign(to.dim, IVec(from.dim, 0));
    for (std::size_t t = 0; t < from.dim; ++t) {
        RVec col = multiply(id.map.a, to_rvec(from.lattice_basis[t]));
        auto z = solve_in(col);
        for (std::size_t s = 0; s < to.dim; ++s) {
            if (!is_integer(z[s])) throw Error("identification is not integral on the face");
            g.a[s][t] = to_int64(z[s].get_num());
        }
    }
    return g;
}

bool region_feasible(const LinearProgram& lp) { return find_feasible(lp).status != LpStatus::Infeasible; }

// Constraints of q (pulled back along f) that vanish on all of the region.
std::vector<std::size_t> tight_on(const LinearProgram& region, const Polytope& q, const IntegralAffineMap& f) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < q.constraints().size(); ++k) {
        const auto& c = q.constraints()[k];
        RVec row(f.source_dim(), Rational(0));
        for (std::size_t j = 0; j < f.source_dim(); ++j)
            for (std::size_t i = 0; i < f.target_dim(); ++i) row[j] += to_rational(c.alpha[i] * f.a[i][j]);
        Rational off = c.offset + dot(c.alpha, f.b);
        auto mx = maximize(region, row);
        if (mx.status == LpStatus::Optimal && sgn(mx.value + off) == 0) out.push_back(k);
    }
    return out;
}

void add_pulled_back(LinearProgram& lp, const Polytope& q, const IntegralAffineMap& f) {
    for (const auto& c : q.constraints()) {
        RVec row(f.source_dim(), Rational(0));
        for (std::size_t j = 0; j < f.source_dim(); ++j)
            for (std::size_t i = 0; i < f.target_dim(); ++i) row[j] += to_rational(c.alpha[i] * f.a[i][j]);
        lp.add_ge(std::move(row), -(c.offset + dot(c.alpha, f.b)));
    }
}

}  // namespace

ExplodedComplex refine(const ExplodedComplex& c, const std::vector<std::vector<Polytope>>& pieces) {
    const auto& old = c.tropical;
    std::vector<std::vector<Polytope>> lists(old.polytopes.size());
    for (std::size_t i = 0; i < old.polytopes.size(); ++i) {
        if (i < pieces.size() && !pieces[i].empty()) {
            bool ok = false;
            try {
                ok = validate_subdivision(old.polytopes[i], pieces[i]);
            } catch (const std::invalid_argument& e) {
                throw Error(std::string("invalid subdivision: ") + e.what());
            }
            if (!ok) throw Error("invalid subdivision of polytope " + std::to_string(i));
            lists[i] = pieces[i];
        } else {
            lists[i] = {old.polytopes[i]};
        }
    }
    // Subdivisions must agree on every identified face.
    for (const auto& id : old.identifications) {
        Face from = face_of(old.polytopes[id.from], id.tight_from);
        Face to = face_of(old.polytopes[id.to], id.tight_to);
        auto g = face_coordinates_map(id, from, to);
        auto a = pieces_on_face(lists[id.from], from);
        auto b = pieces_on_face(lists[id.to], to);
        bool same = a.size() == b.size();
        for (const auto& p : a) {
            if (!same) break;
            Polytope img = from.dim == 0 ? p : image(p, g);
            same = std::any_of(b.begin(), b.end(), [&](const Polytope& q) { return same_closure(img, q); });
        }
        if (!same) throw Error("invalid subdivision: subdivisions disagree on a shared face");
    }

    PolytopeComplex out;
    std::vector<std::size_t> n;
    std::vector<std::vector<std::size_t>> index(old.polytopes.size());
    for (std::size_t i = 0; i < lists.size(); ++i)
        for (const auto& p : lists[i]) {
            index[i].push_back(out.polytopes.size());
            out.polytopes.push_back(p);
            n.push_back(c.charts.at(i).n());
        }
    // Pieces of one polytope meeting along common faces.
    for (std::size_t i = 0; i < lists.size(); ++i) {
        auto id_map = IntegralAffineMap::identity(old.polytopes[i].dim());
        for (std::size_t a = 0; a < lists[i].size(); ++a)
            for (std::size_t b = a + 1; b < lists[i].size(); ++b) {
                LinearProgram region = closure_lp(lists[i][a]);
                add_pulled_back(region, lists[i][b], id_map);
                if (!region_feasible(region)) continue;
                out.identifications.push_back({index[i][a], index[i][b], tight_on(region, lists[i][a], id_map),
                                               tight_on(region, lists[i][b], id_map), id_map});
            }
    }
    // Pieces across old identifications.
    for (const auto& id : old.identifications)
        for (std::size_t a = 0; a < lists[id.from].size(); ++a)
            for (std::size_t b = 0; b < lists[id.to].size(); ++b) {
                const Polytope& pa = lists[id.from][a];
                LinearProgram region = face_lp(old.polytopes[id.from], id.tight_from);
                for (const auto& con : pa.constraints()) region.add_ge(to_rvec(con.alpha), -con.offset);
                add_pulled_back(region, lists[id.to][b], id.map);
                if (!region_feasible(region)) continue;
                auto own = IntegralAffineMap::identity(pa.dim());
                out.identifications.push_back({index[id.from][a], index[id.to][b], tight_on(region, pa, own),
                                               tight_on(region, lists[id.to][b], id.map), id.map});
            }
    return make_exploded_complex(std::move(out), n);
}

std::vector<RendComponent> rend_components(const NCConfiguration& input, std::size_t max_order) {
    NCConfiguration cfg = normalized(input);
    std::set<std::vector<std::size_t>> nerve(cfg.nerve.begin(), cfg.nerve.end());
    std::vector<RendComponent> out;
    IVec v(cfg.k, 0);
    for (;;) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < cfg.k; ++i)
            if (v[i] != 0) support.push_back(i + 1);
        if (nerve.count(support)) {
            std::string kind = support.empty()       ? "B"
                               : support.size() == 1 ? "expl D" + std::to_string(support[0])
                                                     : "needs refinement";
            out.push_back({v, kind});
        }
        std::size_t i = cfg.k;
        while (i > 0 && v[i - 1] == static_cast<std::int64_t>(max_order)) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

ExplodedComplex tropical_completion(const ExplodedComplex& c, std::size_t polytope, const RVec& point) {
    const auto& tp = c.tropical;
    if (polytope >= tp.polytopes.size() || point.size() != tp.polytopes[polytope].dim() ||
        !tp.polytopes[polytope].contains(point))
        throw Error("point is outside the tropical part");

    auto on_face = [&](std::size_t idx, const std::vector<std::size_t>& tight, const RVec& x) {
        return std::all_of(tight.begin(), tight.end(),
                           [&](auto k) { return sgn(tp.polytopes[idx].constraints()[k].eval(x)) == 0; });
    };
    std::vector<std::pair<std::size_t, RVec>> seen{{polytope, point}};
    for (std::size_t head = 0; head < seen.size(); ++head) {
        auto [idx, x] = seen[head];
        auto visit = [&](std::size_t j, RVec y) {
            for (const auto& s : seen)
                if (s.first == j && s.second == y) return;
            seen.emplace_back(j, std::move(y));
        };
        for (const auto& id : tp.identifications) {
            if (id.from == idx && on_face(idx, id.tight_from, x)) visit(id.to, id.map.apply(x));
            if (id.to == idx && on_face(idx, id.tight_to, x)) {
                // Preimage on the source face.
                LinearProgram lp = face_lp(tp.polytopes[id.from], id.tight_from);
                for (std::size_t i = 0; i < id.map.target_dim(); ++i) lp.add_eq(to_rvec(id.map.a[i]), x[i] - id.map.b[i]);
                auto r = find_feasible(lp);
                if (r.status != LpStatus::Infeasible) visit(id.from, r.x);
            }
        }
    }

    PolytopeComplex out;
    std::vector<std::size_t> n;
    std::vector<std::vector<std::size_t>> renumber;  // old constraint index -> cone constraint index
    for (const auto& [idx, x] : seen) {
        const auto& p = tp.polytopes[idx];
        std::vector<std::size_t> ren(p.constraints().size(), SIZE_MAX);
        std::size_t next = 0;
        for (std::size_t k = 0; k < p.constraints().size(); ++k)
            if (sgn(p.constraints()[k].eval(x)) == 0) ren[k] = next++;
        renumber.push_back(std::move(ren));
        out.polytopes.push_back(local_cone(p, x));
        n.push_back(c.charts.at(idx).n());
    }
    for (const auto& id : tp.identifications)
        for (std::size_t u = 0; u < seen.size(); ++u)
            for (std::size_t v = 0; v < seen.size(); ++v) {
                if (seen[u].first != id.from || seen[v].first != id.to) continue;
                if (!on_face(id.from, id.tight_from, seen[u].second)) continue;
                if (id.map.apply(seen[u].second) != seen[v].second) continue;
                FaceIdentification nid;
                nid.from = u;
                nid.to = v;
                for (auto k : id.tight_from) nid.tight_from.push_back(renumber[u][k]);
                for (auto k : id.tight_to) nid.tight_to.push_back(renumber[v][k]);
                nid.map.a = id.map.a;
                nid.map.b.assign(id.map.target_dim(), Rational(0));
                out.identifications.push_back(std::move(nid));
            }
    return make_exploded_complex(std::move(out), n);
}

PolytopeComplex degeneration_fiber_complex(const NCConfiguration& input) {
    NCConfiguration cfg = normalized(input);
    std::vector<std::vector<std::size_t>> top;
    for (auto& s : maximal_elements(cfg))
        if (!s.empty()) top.push_back(s);
    // Simplex of I: y_t >= 0 (t = 1..s-1) and 1 - Σy >= 0. Vertex t sits at e_t, vertex 0 at 0;
    // the barycentric coordinate of vertex t is constraint t-1, of vertex 0 the last one.
    auto simplex = [](std::size_t s) {
        std::vector<AffineConstraint> cs;
        if (s <= 1) return Polytope(0, {});
        for (std::size_t t = 0; t + 1 < s; ++t) {
            IVec e(s - 1, 0);
            e[t] = 1;
            cs.emplace_back(e, 0);
        }
        cs.emplace_back(IVec(s - 1, -1), 1);
        return Polytope(s - 1, std::move(cs));
    };
    auto bary_constraint = [](std::size_t s, std::size_t t) { return t == 0 ? s - 1 : t - 1; };
    auto vertex = [](std::size_t s, std::size_t t) {
        RVec v(s - 1, Rational(0));
        if (t > 0) v[t - 1] = 1;
        return v;
    };
    PolytopeComplex out;
    for (const auto& s : top) out.polytopes.push_back(simplex(s.size()));
    for (std::size_t a = 0; a < top.size(); ++a)
        for (std::size_t b = a + 1; b < top.size(); ++b) {
            const auto &I = top[a], &J = top[b];
            std::vector<std::size_t> common;
            std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(common));
            if (common.empty()) continue;
            auto pos_j = [&](std::size_t d) { return static_cast<std::size_t>(std::lower_bound(J.begin(), J.end(), d) - J.begin()); };
            FaceIdentification id;
            id.from = a;
            id.to = b;
            std::vector<RVec> w;
            for (std::size_t t = 0; t < I.size(); ++t) {
                bool shared = std::binary_search(common.begin(), common.end(), I[t]);
                if (!shared) id.tight_from.push_back(bary_constraint(I.size(), t));
                w.push_back(vertex(J.size(), pos_j(shared ? I[t] : common[0])));
            }
            for (std::size_t t = 0; t < J.size(); ++t)
                if (!std::binary_search(common.begin(), common.end(), J[t]))
                    id.tight_to.push_back(bary_constraint(J.size(), t));
            std::sort(id.tight_from.begin(), id.tight_from.end());
            std::sort(id.tight_to.begin(), id.tight_to.end());
            id.map.b = w[0];
            id.map.a.assign(J.size() - 1, IVec(I.size() - 1, 0));
            for (std::size_t t = 1; t < I.size(); ++t)
                for (std::size_t r = 0; r + 1 < J.size(); ++r)
                    id.map.a[r][t - 1] = to_int64(Rational(w[t][r] - w[0][r]).get_num());
            out.identifications.push_back(std::move(id));
        }
    try {
        validate_complex(out);
    } catch (const std::invalid_argument& e) {
        throw Error(std::string("incoherent complex: ") + e.what());
    }
    return out;
}

}  // namespace explograph
