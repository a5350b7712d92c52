#pragma once

// The explosion functor on normal-crossing combinatorics and toric fans,
// refinements by subdivision, rend components, tropical completion and the
// tropical part of a degeneration fiber.

#include <string>
#include <vector>

#include "explograph/affine.hpp"
#include "explograph/charts.hpp"

namespace explograph {

// Combinatorics of a simple normal-crossing divisor D_1 ∪ ... ∪ D_k.
// Nerve elements are sorted 1-based index sets; every intersection is
// assumed connected.
struct NCConfiguration {
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> nerve;
    // Complex dimension of the ambient manifold; 0 means "the largest nerve element".
    std::size_t dim = 0;
    std::vector<std::string> labels;
};

// Sorts and deduplicates the nerve. Throws InvalidNerve when an index is out
// of range or the family is not downward closed.
NCConfiguration normalized(NCConfiguration cfg);
std::vector<std::vector<std::size_t>> maximal_elements(const NCConfiguration& cfg);
// Nerve of D_i: sets J with J ∪ {i} in the nerve, reindexed to 1..k-1.
NCConfiguration nerve_link(const NCConfiguration& cfg, std::size_t i);

struct ExplodedComplex {
    PolytopeComplex tropical;
    std::vector<Chart> charts;             // one per polytope
    std::vector<ChartMorphism> gluings;    // one per identification: face chart → target chart
};

// Chart morphism from the chart over the identified face into the target
// chart; its tropical part is the identification restricted to the face.
ChartMorphism face_gluing(const PolytopeComplex& c, const std::vector<Chart>& charts, std::size_t identification);

// Validates the complex, builds charts with real dimension n[i], and the gluings.
ExplodedComplex make_exploded_complex(PolytopeComplex c, const std::vector<std::size_t>& n);

ExplodedComplex explode_nc(const NCConfiguration& cfg);

// Closed cone spanned by integer rays in R^dim (full-dimensional, pointed).
Polytope cone_from_rays(const std::vector<IVec>& rays, std::size_t dim);

// T^dim refined by a complete fan; cones index into rays.
ExplodedComplex explode_fan(std::size_t dim, const std::vector<IVec>& rays,
                            const std::vector<std::vector<std::size_t>>& cones);

// pieces[i] subdivides polytope i; an empty list keeps it whole.
// Throws Error("invalid subdivision") when a piece list fails
// validate_subdivision or two subdivisions disagree on a shared face.
ExplodedComplex refine(const ExplodedComplex& c, const std::vector<std::vector<Polytope>>& pieces);

// All full-dimensional intersections of a piece of one subdivision with a piece of the other.
std::vector<Polytope> common_refinement(const std::vector<Polytope>& a, const std::vector<Polytope>& b);

struct RendComponent {
    IVec contact;
    std::string kind;  // "B", "expl D<i>" or "needs refinement"
};

std::vector<RendComponent> rend_components(const NCConfiguration& cfg, std::size_t max_order);

// B⫽p for the point `point` of polytope `polytope`. Throws Error when the
// point is outside that polytope.
ExplodedComplex tropical_completion(const ExplodedComplex& c, std::size_t polytope, const RVec& point);

// Unit simplices, one per maximal nerve element, glued along common vertices.
PolytopeComplex degeneration_fiber_complex(const NCConfiguration& dual);

}  // namespace explograph
