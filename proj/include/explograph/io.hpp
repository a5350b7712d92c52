#pragma once

// JSON files. Rationals travel as "p/q" strings; readers throw SchemaError
// naming the JSON pointer of the first offending value.

#include <optional>
#include <string>

#include <json.hpp>

#include "explograph/affine.hpp"
#include "explograph/charts.hpp"
#include "explograph/explosion.hpp"
#include "explograph/gluing.hpp"
#include "explograph/tropcurve.hpp"

namespace explograph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Parses text; malformed JSON is a SchemaError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& contents);

Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, const std::string& at = "");

Json to_json(const PolytopeComplex& c);
PolytopeComplex complex_from_json(const Json& j, const std::string& at = "");

Json to_json(const Chart& c);
Json to_json(const ChartMorphism& m);

// {"schema": "explograph/complex/v1", "tropical", "charts", "gluings"}.
Json to_json(const ExplodedComplex& c);
// Rebuilds charts and gluings from the tropical part and the chart n values,
// and checks the stored charts against them.
ExplodedComplex exploded_from_json(const Json& j);

Json to_json(const NCConfiguration& c);
NCConfiguration nc_from_json(const Json& j);

struct FanInput {
    std::size_t dim = 0;
    std::vector<IVec> rays;
    std::vector<std::vector<std::size_t>> cones;
};
FanInput fan_from_json(const Json& j);

// One list of pieces per polytope: {"pieces": [[polytope, ...], ...]}.
std::vector<std::vector<Polytope>> subdivision_from_json(const Json& j);

Json to_json(const TropicalCurve& c);
TropicalCurve curve_from_json(const Json& j, const std::string& at = "");

// {"degree", "genus", "points"} or {"ends", "genus", "points"}.
CountingProblem problem_from_json(const Json& j);
Json to_json(const CountingProblem& p);

enum class CountMode { direct, glued, both };

Json report_json(const CountingProblem& p, const CountReport& r, CountMode mode, std::optional<std::uint64_t> seed);
Json curves_json(const CountingProblem& p, const std::vector<TropicalCurve>& curves, std::optional<std::uint64_t> seed);
Json rend_json(const NCConfiguration& c, const std::vector<RendComponent>& comps, std::size_t max_order);

// Which reader a document belongs to: "complex", "nc", "fan", "subdivision",
// "curve", "problem", "report", "curves", "rend". Throws SchemaError.
std::string document_kind(const Json& j);

// Full structural validation of any known document kind.
void validate_document(const Json& j);

}  // namespace explograph
