#include "explograph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "explograph/error.hpp"
#include "explograph/semiring.hpp"

namespace explograph {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& what) {
    throw SchemaError("at " + (at.empty() ? std::string("/") : at) + ": " + what);
}

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) fail(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(at, "missing \"" + key + "\"");
    return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) fail(at, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& at) {
    if (!j.is_array()) fail(at, "expected an array");
    return j;
}

std::int64_t integer(const Json& j, const std::string& at) {
    if (!j.is_number_integer()) fail(at, "expected an integer");
    return j.get<std::int64_t>();
}

std::size_t index(const Json& j, const std::string& at) {
    auto v = integer(j, at);
    if (v < 0) fail(at, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

Rational rational(const Json& j, const std::string& at) {
    if (!j.is_string()) fail(at, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const SchemaError& e) {
        fail(at, e.what());
    }
}

IVec ivec(const Json& j, const std::string& at) {
    IVec v;
    std::size_t i = 0;
    for (const auto& x : array(j, at)) v.push_back(integer(x, child(at, i++)));
    return v;
}

RVec rvec(const Json& j, const std::string& at) {
    RVec v;
    std::size_t i = 0;
    for (const auto& x : array(j, at)) v.push_back(rational(x, child(at, i++)));
    return v;
}

std::vector<std::size_t> indices(const Json& j, const std::string& at) {
    std::vector<std::size_t> v;
    std::size_t i = 0;
    for (const auto& x : array(j, at)) v.push_back(index(x, child(at, i++)));
    return v;
}

Json rationals(const RVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(wire_rational(x));
    return a;
}

Json header(const std::string& kind) {
    Json j;
    j["schema"] = "explograph/" + kind + "/v1";
    j["version"] = kToolVersion;
    return j;
}

std::optional<std::uint64_t> seed_of(const Json& j) {
    auto it = j.find("seed");
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_number_unsigned() && !it->is_number_integer()) fail("/seed", "expected an integer or null");
    return it->get<std::uint64_t>();
}

void check_schema(const Json& j, const std::string& kind) {
    auto it = j.find("schema");
    if (it != j.end() && *it != "explograph/" + kind + "/v1") fail("/schema", "expected explograph/" + kind + "/v1");
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream s;
    s << in.rdbuf();
    return parse_json(s.str());
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + path);
        out << contents;
        if (!out.flush()) throw Error("cannot write " + path);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot write " + path);
    }
}

Json to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.dim();
    j["constraints"] = Json::array();
    for (const auto& c : p.constraints())
        j["constraints"].push_back({{"alpha", c.alpha}, {"a", wire_rational(c.offset)}, {"strict", c.strict}});
    return j;
}

Polytope polytope_from_json(const Json& j, const std::string& at) {
    auto dim = index(field(j, "dim", at), child(at, "dim"));
    std::vector<AffineConstraint> cs;
    const auto where = child(at, "constraints");
    std::size_t i = 0;
    for (const auto& c : array(field(j, "constraints", at), where)) {
        auto ci = child(where, i++);
        IVec alpha = ivec(field(c, "alpha", ci), child(ci, "alpha"));
        if (alpha.size() != dim) fail(child(ci, "alpha"), "length differs from dim");
        bool strict = false;
        if (auto s = optional_field(c, "strict", ci)) {
            if (!s->is_boolean()) fail(child(ci, "strict"), "expected a boolean");
            strict = s->get<bool>();
        }
        auto a = rational(field(c, "a", ci), child(ci, "a"));
        try {
            cs.emplace_back(std::move(alpha), a, strict);
        } catch (const std::invalid_argument& e) {
            fail(child(ci, "alpha"), e.what());
        }
    }
    try {
        return Polytope(dim, std::move(cs));
    } catch (const std::exception& e) {
        fail(at, e.what());
    }
}

Json to_json(const PolytopeComplex& c) {
    Json j;
    j["polytopes"] = Json::array();
    for (const auto& p : c.polytopes) j["polytopes"].push_back(to_json(p));
    j["faces"] = Json::array();
    for (const auto& f : c.identifications)
        j["faces"].push_back({{"from", f.from},
                              {"to", f.to},
                              {"tight_from", f.tight_from},
                              {"tight_to", f.tight_to},
                              {"map", {{"a", f.map.a}, {"b", rationals(f.map.b)}}}});
    return j;
}

PolytopeComplex complex_from_json(const Json& j, const std::string& at) {
    PolytopeComplex c;
    const auto pw = child(at, "polytopes");
    std::size_t i = 0;
    for (const auto& p : array(field(j, "polytopes", at), pw)) c.polytopes.push_back(polytope_from_json(p, child(pw, i++)));
    const auto fw = child(at, "faces");
    i = 0;
    if (auto faces = optional_field(j, "faces", at))
        for (const auto& f : array(*faces, fw)) {
            auto fi = child(fw, i++);
            FaceIdentification id;
            id.from = index(field(f, "from", fi), child(fi, "from"));
            id.to = index(field(f, "to", fi), child(fi, "to"));
            id.tight_from = indices(field(f, "tight_from", fi), child(fi, "tight_from"));
            id.tight_to = indices(field(f, "tight_to", fi), child(fi, "tight_to"));
            const auto& m = field(f, "map", fi);
            auto mw = child(fi, "map");
            std::size_t r = 0;
            for (const auto& row : array(field(m, "a", mw), child(mw, "a"))) id.map.a.push_back(ivec(row, child(child(mw, "a"), r++)));
            id.map.b = rvec(field(m, "b", mw), child(mw, "b"));
            c.identifications.push_back(std::move(id));
        }
    try {
        validate_complex(c);
    } catch (const std::exception& e) {
        fail(at, e.what());
    }
    return c;
}

Json to_json(const Chart& c) {
    Json j;
    j["n"] = c.n();
    j["polytope"] = to_json(c.polytope());
    j["generators"] = Json::array();
    for (const auto& g : c.generators()) j["generators"].push_back({{"a", wire_rational(g.offset)}, {"alpha", g.alpha}});
    return j;
}

Json to_json(const ChartMorphism& m) {
    Json j;
    j["source"] = {{"n", m.source().n()}, {"polytope", to_json(m.source().polytope())}};
    j["entries"] = Json::array();
    for (const auto& e : m.entries()) j["entries"].push_back({{"coeff", to_text(e.coeff)}, {"alpha", e.alpha}});
    j["smooth_factor"] = m.smooth_factor();
    return j;
}

Json to_json(const ExplodedComplex& c) {
    Json j = header("complex");
    j["tropical"] = to_json(c.tropical);
    j["charts"] = Json::array();
    for (const auto& ch : c.charts) j["charts"].push_back(to_json(ch));
    j["gluings"] = Json::array();
    for (std::size_t i = 0; i < c.gluings.size(); ++i) {
        Json g = to_json(c.gluings[i]);
        g["face"] = i;
        j["gluings"].push_back(std::move(g));
    }
    return j;
}

ExplodedComplex exploded_from_json(const Json& j) {
    check_schema(j, "complex");
    auto tropical = complex_from_json(field(j, "tropical", ""), "/tropical");
    const auto& charts = array(field(j, "charts", ""), "/charts");
    if (charts.size() != tropical.polytopes.size()) fail("/charts", "one chart per polytope expected");
    std::vector<std::size_t> n;
    for (std::size_t i = 0; i < charts.size(); ++i) {
        auto ci = child("/charts", i);
        n.push_back(index(field(charts[i], "n", ci), child(ci, "n")));
        if (polytope_from_json(field(charts[i], "polytope", ci), child(ci, "polytope")) != tropical.polytopes[i])
            fail(child(ci, "polytope"), "chart polytope differs from the tropical part");
    }
    try {
        return make_exploded_complex(std::move(tropical), n);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        fail("/tropical", e.what());
    }
}

Json to_json(const NCConfiguration& c) {
    Json j;
    j["k"] = c.k;
    j["nerve"] = c.nerve;
    if (c.dim) j["dim"] = c.dim;
    if (!c.labels.empty()) j["labels"] = c.labels;
    return j;
}

NCConfiguration nc_from_json(const Json& j) {
    NCConfiguration c;
    c.k = index(field(j, "k", ""), "/k");
    std::size_t i = 0;
    for (const auto& s : array(field(j, "nerve", ""), "/nerve")) c.nerve.push_back(indices(s, child("/nerve", i++)));
    if (auto d = optional_field(j, "dim", "")) c.dim = index(*d, "/dim");
    if (auto l = optional_field(j, "labels", "")) {
        i = 0;
        for (const auto& s : array(*l, "/labels")) {
            if (!s.is_string()) fail(child("/labels", i), "expected a string");
            c.labels.push_back(s.get<std::string>());
            ++i;
        }
    }
    return c;
}

FanInput fan_from_json(const Json& j) {
    FanInput f;
    f.dim = index(field(j, "dim", ""), "/dim");
    std::size_t i = 0;
    for (const auto& r : array(field(j, "rays", ""), "/rays")) {
        auto at = child("/rays", i++);
        f.rays.push_back(ivec(r, at));
        if (f.rays.back().size() != f.dim) fail(at, "length differs from dim");
    }
    i = 0;
    for (const auto& c : array(field(j, "cones", ""), "/cones")) {
        auto at = child("/cones", i++);
        f.cones.push_back(indices(c, at));
        for (auto r : f.cones.back())
            if (r >= f.rays.size()) fail(at, "ray index out of range");
    }
    return f;
}

std::vector<std::vector<Polytope>> subdivision_from_json(const Json& j) {
    std::vector<std::vector<Polytope>> out;
    std::size_t i = 0;
    for (const auto& list : array(field(j, "pieces", ""), "/pieces")) {
        auto at = child("/pieces", i++);
        out.emplace_back();
        std::size_t k = 0;
        for (const auto& p : array(list, at)) out.back().push_back(polytope_from_json(p, child(at, k++)));
    }
    return out;
}

Json to_json(const TropicalCurve& c) {
    Json j;
    j["dim"] = c.dim;
    j["vertices"] = Json::array();
    for (const auto& v : c.vertices) {
        Json x{{"pos", rationals(v.pos)}, {"genus", v.genus}};
        if (v.polytope) x["polytope"] = v.polytope;
        j["vertices"].push_back(std::move(x));
    }
    j["edges"] = Json::array();
    for (const auto& e : c.edges)
        j["edges"].push_back({{"v", {e.tail, e.head}}, {"len", wire_rational(e.length)}, {"d", e.d}});
    j["ends"] = Json::array();
    for (const auto& x : c.ends) j["ends"].push_back({{"v", x.vertex}, {"d", x.d}});
    return j;
}

TropicalCurve curve_from_json(const Json& j, const std::string& at) {
    TropicalCurve c;
    c.dim = index(field(j, "dim", at), child(at, "dim"));
    const auto vw = child(at, "vertices");
    std::size_t i = 0;
    for (const auto& v : array(field(j, "vertices", at), vw)) {
        auto vi = child(vw, i++);
        CurveVertex x;
        x.pos = rvec(field(v, "pos", vi), child(vi, "pos"));
        if (x.pos.size() != c.dim) fail(child(vi, "pos"), "length differs from dim");
        if (auto g = optional_field(v, "genus", vi)) x.genus = index(*g, child(vi, "genus"));
        if (auto p = optional_field(v, "polytope", vi)) x.polytope = index(*p, child(vi, "polytope"));
        c.vertices.push_back(std::move(x));
    }
    const auto ew = child(at, "edges");
    i = 0;
    for (const auto& e : array(field(j, "edges", at), ew)) {
        auto ei = child(ew, i++);
        auto ends = indices(field(e, "v", ei), child(ei, "v"));
        if (ends.size() != 2) fail(child(ei, "v"), "expected two vertex indices");
        for (auto v : ends)
            if (v >= c.vertices.size()) fail(child(ei, "v"), "vertex index out of range");
        CurveEdge x{ends[0], ends[1], rational(field(e, "len", ei), child(ei, "len")), ivec(field(e, "d", ei), child(ei, "d"))};
        if (x.d.size() != c.dim) fail(child(ei, "d"), "length differs from dim");
        c.edges.push_back(std::move(x));
    }
    const auto xw = child(at, "ends");
    i = 0;
    for (const auto& x : array(field(j, "ends", at), xw)) {
        auto xi = child(xw, i++);
        CurveEnd end{index(field(x, "v", xi), child(xi, "v")), ivec(field(x, "d", xi), child(xi, "d"))};
        if (end.vertex >= c.vertices.size()) fail(child(xi, "v"), "vertex index out of range");
        if (end.d.size() != c.dim) fail(child(xi, "d"), "length differs from dim");
        c.ends.push_back(std::move(end));
    }
    return c;
}

CountingProblem problem_from_json(const Json& j) {
    CountingProblem p;
    if (auto d = optional_field(j, "degree", "")) {
        p.degree = index(*d, "/degree");
        if (p.degree == 0) fail("/degree", "degree must be positive");
        p.ends = degree_ends(p.degree);
    } else if (auto e = optional_field(j, "ends", "")) {
        std::size_t i = 0;
        for (const auto& d : array(*e, "/ends")) p.ends.push_back(ivec(d, child("/ends", i++)));
    } else {
        fail("", "missing \"degree\" or \"ends\"");
    }
    if (auto g = optional_field(j, "genus", "")) p.genus = index(*g, "/genus");
    std::size_t i = 0;
    for (const auto& q : array(field(j, "points", ""), "/points")) {
        auto at = child("/points", i++);
        p.points.push_back(rvec(q, at));
        if (p.points.back().size() != 2) fail(at, "points are planar");
    }
    return p;
}

Json to_json(const CountingProblem& p) {
    Json j;
    if (p.degree) j["degree"] = p.degree;
    else j["ends"] = p.ends;
    j["genus"] = p.genus;
    j["points"] = Json::array();
    for (const auto& q : p.points) j["points"].push_back(rationals(q));
    return j;
}

Json report_json(const CountingProblem& p, const CountReport& r, CountMode mode, std::optional<std::uint64_t> seed) {
    Json j = header("report");
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["problem"] = to_json(p);
    j["mode"] = mode == CountMode::direct ? "direct" : mode == CountMode::glued ? "glued" : "both";
    if (mode != CountMode::glued) j["direct"] = wire_rational(r.direct);
    if (mode != CountMode::direct) j["glued"] = wire_rational(r.glued);
    if (mode == CountMode::both) j["verdict"] = r.direct == r.glued ? "EQUAL" : "MISMATCH";
    j["curves"] = Json::array();
    j["ledger"] = Json::array();
    for (std::size_t i = 0; i < r.curves.size(); ++i) {
        const auto& l = r.ledger[i];
        j["curves"].push_back({{"type", l.type}, {"curve", to_json(r.curves[i])}});
        j["ledger"].push_back({{"type", l.type},
                               {"k", l.k.get_str()},
                               {"aut", l.aut},
                               {"multiplicity", wire_rational(l.oracle_product)},
                               {"matching", wire_rational(l.matching)},
                               {"contribution", wire_rational(l.direct)},
                               {"glued", wire_rational(l.glued)}});
    }
    return j;
}

Json curves_json(const CountingProblem& p, const std::vector<TropicalCurve>& curves, std::optional<std::uint64_t> seed) {
    Json j = header("curves");
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["problem"] = to_json(p);
    j["curves"] = Json::array();
    for (const auto& c : curves) j["curves"].push_back({{"type", type_hash(c)}, {"curve", to_json(c)}});
    return j;
}

Json rend_json(const NCConfiguration& c, const std::vector<RendComponent>& comps, std::size_t max_order) {
    Json j = header("rend");
    j["nc"] = to_json(c);
    j["max_order"] = max_order;
    j["components"] = Json::array();
    for (const auto& r : comps) j["components"].push_back({{"contact", r.contact}, {"kind", r.kind}});
    return j;
}

std::string document_kind(const Json& j) {
    if (!j.is_object()) fail("", "expected an object");
    if (auto s = j.find("schema"); s != j.end()) {
        if (!s->is_string()) fail("/schema", "expected a string");
        const std::string v = s->get<std::string>();
        for (const char* k : {"complex", "report", "curves", "rend"})
            if (v == std::string("explograph/") + k + "/v1") return k;
        fail("/schema", "unknown schema " + v);
    }
    if (j.contains("nerve")) return "nc";
    if (j.contains("rays")) return "fan";
    if (j.contains("pieces")) return "subdivision";
    if (j.contains("vertices")) return "curve";
    if (j.contains("points")) return "problem";
    fail("", "unrecognized document");
}

void validate_document(const Json& j) {
    const auto kind = document_kind(j);
    if (kind == "complex") exploded_from_json(j);
    else if (kind == "nc") normalized(nc_from_json(j));
    else if (kind == "fan") fan_from_json(j);
    else if (kind == "subdivision") subdivision_from_json(j);
    else if (kind == "curve") curve_from_json(j);
    else if (kind == "problem") problem_from_json(j);
    else if (kind == "rend") {
        normalized(nc_from_json(field(j, "nc", "")));
        index(field(j, "max_order", ""), "/max_order");
        std::size_t i = 0;
        for (const auto& c : array(field(j, "components", ""), "/components")) {
            auto at = child("/components", i++);
            ivec(field(c, "contact", at), child(at, "contact"));
            if (!field(c, "kind", at).is_string()) fail(child(at, "kind"), "expected a string");
        }
    } else {
        seed_of(j);
        problem_from_json(field(j, "problem", ""));
        std::size_t i = 0;
        const auto& curves = array(field(j, "curves", ""), "/curves");
        for (const auto& c : curves) {
            auto at = child("/curves", i++);
            if (!field(c, "type", at).is_string()) fail(child(at, "type"), "expected a string");
            curve_from_json(field(c, "curve", at), child(at, "curve"));
        }
        if (kind == "report") {
            const auto& mode = field(j, "mode", "");
            if (mode != "direct" && mode != "glued" && mode != "both") fail("/mode", "expected direct, glued or both");
            if (mode != "glued") rational(field(j, "direct", ""), "/direct");
            if (mode != "direct") rational(field(j, "glued", ""), "/glued");
            const auto& ledger = array(field(j, "ledger", ""), "/ledger");
            if (ledger.size() != curves.size()) fail("/ledger", "one entry per curve expected");
            i = 0;
            for (const auto& l : ledger) {
                auto at = child("/ledger", i++);
                for (const char* k : {"multiplicity", "matching", "contribution", "glued"}) rational(field(l, k, at), child(at, k));
                integer(field(l, "aut", at), child(at, "aut"));
                if (!field(l, "k", at).is_string()) fail(child(at, "k"), "expected an integer string");
            }
        }
    }
}

}  // namespace explograph
