#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "explograph/error.hpp"
#include "explograph/explosion.hpp"
#include "explograph/gluing.hpp"
#include "explograph/io.hpp"
#include "explograph/render.hpp"

using namespace explograph;

namespace {

constexpr int kExitError = 1;
constexpr int kExitSchema = 2;
constexpr int kExitNerve = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitNonGeneric = 5;
constexpr int kExitNotPlanar = 6;

struct RunConfig {
    std::vector<std::string> inputs;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::size_t degree = 0;
    std::size_t genus = 0;
    std::size_t max_order = 3;
    std::size_t polytope = 0;
    std::vector<std::string> point;
    bool check = false;
    bool direct = false;
    bool glued = false;
    bool both = false;
    bool serial = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) std::cout << text;
    else write_file_atomic(cfg.out, text);
}

void emit(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

const std::string& input(const RunConfig& cfg, std::size_t i) {
    if (cfg.inputs.size() <= i) throw Error("missing input file");
    return cfg.inputs[i];
}

Execution execution(const RunConfig& cfg) { return cfg.serial ? Execution::serial : Execution::parallel; }

int cmd_explode(const RunConfig& cfg) {
    auto j = read_json_file(input(cfg, 0));
    if (cfg.check) {
        validate_document(j);
        std::cout << document_kind(j) << " ok\n";
        return 0;
    }
    auto kind = document_kind(j);
    if (kind == "nc") emit(cfg, to_json(explode_nc(nc_from_json(j))));
    else if (kind == "fan") {
        auto f = fan_from_json(j);
        emit(cfg, to_json(explode_fan(f.dim, f.rays, f.cones)));
    } else
        throw SchemaError("at /: expected an NC configuration or a fan, got " + kind);
    return 0;
}

int cmd_refine(const RunConfig& cfg) {
    auto c = exploded_from_json(read_json_file(input(cfg, 0)));
    auto pieces = subdivision_from_json(read_json_file(input(cfg, 1)));
    emit(cfg, to_json(refine(c, pieces)));
    return 0;
}

int cmd_complete(const RunConfig& cfg) {
    auto c = exploded_from_json(read_json_file(input(cfg, 0)));
    RVec p;
    for (const auto& s : cfg.point) p.push_back(parse_rational(s));
    emit(cfg, to_json(tropical_completion(c, cfg.polytope, p)));
    return 0;
}

int cmd_rend(const RunConfig& cfg) {
    auto nc = normalized(nc_from_json(read_json_file(input(cfg, 0))));
    emit(cfg, rend_json(nc, rend_components(nc, cfg.max_order), cfg.max_order));
    return 0;
}

// A problem from a file, or sampled from --degree/--genus/--seed.
CountingProblem problem(const RunConfig& cfg, std::vector<TropicalCurve>& curves, bool& enumerated) {
    enumerated = false;
    if (!cfg.inputs.empty()) {
        auto p = problem_from_json(read_json_file(cfg.inputs[0]));
        validate_problem(p);
        return p;
    }
    if (cfg.degree == 0) throw Error("give a problem file or --degree");
    enumerated = true;
    return random_generic_problem(cfg.degree, cfg.genus, cfg.seed.value_or(0), &curves);
}

std::optional<std::uint64_t> recorded_seed(const RunConfig& cfg) {
    if (!cfg.inputs.empty()) return std::nullopt;
    return cfg.seed.value_or(0);
}

int cmd_enumerate(const RunConfig& cfg) {
    std::vector<TropicalCurve> curves;
    bool enumerated;
    auto p = problem(cfg, curves, enumerated);
    if (!enumerated) curves = enumerate_rigid_curves(p, execution(cfg));
    emit(cfg, curves_json(p, curves, recorded_seed(cfg)));
    return 0;
}

int cmd_count(const RunConfig& cfg) {
    std::vector<TropicalCurve> curves;
    bool enumerated;
    auto p = problem(cfg, curves, enumerated);
    auto r = enumerated ? report_for(p, std::move(curves), lattice_multiplicity)
                        : count_both(p, lattice_multiplicity, execution(cfg));
    CountMode mode = CountMode::both;
    if (cfg.direct && !cfg.glued && !cfg.both) mode = CountMode::direct;
    if (cfg.glued && !cfg.direct && !cfg.both) mode = CountMode::glued;
    emit(cfg, report_json(p, r, mode, recorded_seed(cfg)));
    if (mode == CountMode::both && r.direct != r.glued) {
        std::cerr << "pipeline mismatch: direct " << wire_rational(r.direct) << ", glued " << wire_rational(r.glued) << "\n";
        return kExitMismatch;
    }
    return 0;
}

int cmd_render(const RunConfig& cfg) {
    auto j = read_json_file(input(cfg, 0));
    auto kind = document_kind(j);
    if (kind == "curve") {
        emit(cfg, render_svg(curve_from_json(j)));
        return 0;
    }
    if (kind != "report" && kind != "curves") throw SchemaError("at /: expected a curve, curves or report document");
    validate_document(j);
    if (cfg.out.empty()) throw Error("--out must name a directory for a multi-curve document");
    auto p = problem_from_json(j["problem"]);
    std::filesystem::create_directories(cfg.out);
    std::size_t i = 0;
    for (const auto& entry : j["curves"]) {
        auto svg = render_svg(curve_from_json(entry["curve"]), p.points);
        auto path = std::filesystem::path(cfg.out) / ("curve-" + std::to_string(i++) + "-" + entry["type"].get<std::string>() + ".svg");
        write_file_atomic(path.string(), svg);
        std::cout << path.string() << "\n";
    }
    return 0;
}

int run(const std::function<int()>& f, const RunConfig& cfg) {
    try {
        return f();
    } catch (const SchemaError& e) {
        std::cerr << "schema error " << e.what() << "\n";
        return kExitSchema;
    } catch (const InvalidNerve& e) {
        std::cerr << "invalid nerve: " << e.what() << "\n";
        return kExitNerve;
    } catch (const NonGeneric& e) {
        std::cerr << e.what() << "\n";
        if (cfg.degree) std::cerr << "try --seed " << cfg.seed.value_or(0) + 1 << "\n";
        else std::cerr << "try count --degree d --genus g --seed s for a sampled generic configuration\n";
        return kExitNonGeneric;
    } catch (const NotPlanar& e) {
        std::cerr << "not planar: " << e.what() << "\n";
        return kExitNotPlanar;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exploded manifolds, tropical curves and gluing counts"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int()> action;

    auto add = [&](const char* name, const char* help, int (*f)(const RunConfig&), const char* files) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", cfg.inputs, files);
        sub->add_option("-o,--out", cfg.out, "output path (stdout when omitted)");
        sub->callback([&, f] { action = [&, f] { return f(cfg); }; });
        return sub;
    };

    add("explode", "explode an NC configuration or a fan", cmd_explode, "nc or fan file")
        ->add_flag("--check", cfg.check, "validate any emitted document instead");
    add("refine", "refine a complex by a subdivision", cmd_refine, "complex file, subdivision file");
    auto* complete = add("complete", "tropical completion at a point", cmd_complete, "complex file");
    complete->add_option("--polytope", cfg.polytope, "polytope index");
    complete->add_option("--point", cfg.point, "coordinates as p/q")->delimiter(',')->required();
    add("rend", "rend components of an NC configuration", cmd_rend, "nc file")
        ->add_option("--max-order", cfg.max_order, "largest contact order");

    for (auto [name, help, f] : {std::tuple{"enumerate", "rigid curves through the points", cmd_enumerate},
                                 std::tuple{"count", "direct and glued counts with a ledger", cmd_count}}) {
        auto* sub = add(name, help, f, "problem file");
        sub->add_option("--degree", cfg.degree, "sample points for this degree");
        sub->add_option("--genus", cfg.genus, "genus of the sampled problem");
        sub->add_option("--seed", cfg.seed, "seed for the sampled points");
        sub->add_flag("--serial", cfg.serial, "run the serial enumerator");
        if (std::string(name) == "count") {
            sub->add_flag("--direct", cfg.direct, "report the direct count");
            sub->add_flag("--glued", cfg.glued, "report the glued count");
            sub->add_flag("--both", cfg.both, "report both and their verdict (default)");
        }
    }
    add("render", "SVG of a curve, or one per curve of a report", cmd_render, "curve, curves or report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }
    return run(action, cfg);
}
