#pragma once

// Rigid plane tropical curves through point constraints, their direct count
// and the cut-and-glue assembly of the same number.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "explograph/rational.hpp"
#include "explograph/tropcurve.hpp"

namespace explograph {

struct CountingProblem {
    std::size_t dim = 2;
    std::vector<IVec> ends;  // Δ
    std::size_t genus = 0;
    std::vector<RVec> points;
    std::size_t degree = 0;  // 0 when Δ is not a multiple of the standard triangle
};

// d copies each of (−1,0), (0,−1), (1,1).
std::vector<IVec> degree_ends(std::size_t degree);
CountingProblem plane_problem(std::size_t degree, std::size_t genus, std::vector<RVec> points);

// |Δ| − 1 + g.
std::size_t expected_point_count(const CountingProblem& p);

// Dimension two, balanced Δ, right number of points. Throws Error.
void validate_problem(const CountingProblem& p);

using LocalContributionOracle = std::function<Rational(const VertexStar&)>;

// |det(d1, d2)| of a trivalent plane star. Throws Error otherwise.
Integer plane_vertex_multiplicity(const VertexStar& s);
Rational lattice_multiplicity(const VertexStar& s);

enum class Execution { serial, parallel };

// Curves in canonical form (vertices sorted by position, edges from the
// smaller vertex), sorted and deduplicated. Throws NonGeneric when a solution
// degenerates, a point sits on a vertex or crossing, or two points align
// along a possible edge direction.
std::vector<TropicalCurve> enumerate_rigid_curves(const CountingProblem& p, Execution ex = Execution::parallel);

TropicalCurve canonical_form(const TropicalCurve& c);

// Where a point sits on a curve: internal edge or end index.
struct Incidence {
    bool end = false;
    std::size_t index = 0;
    friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Each point must lie in the relative interior of exactly one edge or end.
std::vector<Incidence> point_incidences(const TropicalCurve& c, const std::vector<RVec>& points);

// Combinatorial type without positions or lengths, as a short hex digest.
std::string type_hash(const TropicalCurve& c);

struct LedgerEntry {
    std::string type;
    Integer k;
    std::uint64_t aut = 1;
    Rational oracle_product;
    Rational matching;  // per-edge Z/m_e quotient and labelled ends
    Rational glued;     // (k/|Aut|) · matching · oracle_product
    Rational direct;
};

struct CountReport {
    Rational direct;
    Rational glued;
    std::vector<TropicalCurve> curves;
    std::vector<LedgerEntry> ledger;  // parallel to curves
};

Rational direct_count(const CountingProblem& p, const LocalContributionOracle& oracle);
Rational glued_count(const CountingProblem& p, const LocalContributionOracle& oracle);

// Both pipelines over one enumeration, with the per-type ledger.
CountReport count_both(const CountingProblem& p, const LocalContributionOracle& oracle,
                       Execution ex = Execution::parallel);
CountReport report_for(const CountingProblem& p, std::vector<TropicalCurve> curves,
                       const LocalContributionOracle& oracle);

// Unique solutions of the cut system for a curve's type and point incidences:
// star positions, edge lengths and point parameters matched across every cut
// edge. Returns 0 or 1; throws NonGeneric on a positive-dimensional family.
std::size_t matching_solutions(const TropicalCurve& c, const std::vector<RVec>& points);

// Seeded rejection sampling of points the enumerator accepts as generic.
// The accepted enumeration is stored in `curves` when given.
CountingProblem random_generic_problem(std::size_t degree, std::size_t genus, std::uint64_t seed,
                                       std::vector<TropicalCurve>* curves = nullptr);

struct SeriesKey {
    std::size_t genus = 0;
    std::size_t n = 0;
    std::size_t degree = 0;
    friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};
using GWSeries = std::map<SeriesKey, Rational>;

struct SeriesTerm {
    SeriesKey key;
    Rational value;
};

// Sums terms by key; zero terms are dropped.
GWSeries assemble_series(const std::vector<SeriesTerm>& terms);
GWSeries merge_series(const GWSeries& a, const GWSeries& b);

}  // namespace explograph
