#pragma once

/**
 * Integral-affine polytopes and their lattice combinatorics.
 *
 * A polytope is a subset of R^m with nonempty interior cut out by finitely
 * many constraints x·alpha + a >= 0 (or > 0) with alpha ∈ Z^m and a ∈ Q.
 * Everything is computed exactly: feasibility, tightness and containment go
 * through the rational simplex in lp.hpp.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "explograph/linalg.hpp"
#include "explograph/lp.hpp"
#include "explograph/rational.hpp"

namespace explograph {

struct AffineConstraint {
    IVec alpha;
    Rational offset;
    bool strict = false;

    AffineConstraint() = default;
    // Throws std::invalid_argument when alpha is the zero vector.
    AffineConstraint(IVec alpha, Rational offset, bool strict = false);

    Rational eval(const RVec& x) const { return dot(alpha, x) + offset; }
    bool satisfied_by(const RVec& x) const {
        int s = sgn(eval(x));
        return strict ? s > 0 : s >= 0;
    }
    friend bool operator==(const AffineConstraint&, const AffineConstraint&) = default;
};

class Polytope {
public:
    Polytope() = default;
    Polytope(std::size_t dim, std::vector<AffineConstraint> constraints);

    // {x : x_i >= 0} ⊂ R^m.
    static Polytope orthant(std::size_t m);
    // The whole of R^m.
    static Polytope space(std::size_t m) { return Polytope(m, {}); }
    // Closed interval [lo, hi] in R^1.
    static Polytope interval(const Rational& lo, const Rational& hi);
    // Closed cone over the given integer generators (dimension 2 only).
    static Polytope cone2(const IVec& r1, const IVec& r2);

    std::size_t dim() const { return dim_; }
    const std::vector<AffineConstraint>& constraints() const { return constraints_; }

    bool contains(const RVec& x) const;
    // Same constraints with every strict flag cleared.
    Polytope closure() const;
    bool has_strict() const;

    friend bool operator==(const Polytope&, const Polytope&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<AffineConstraint> constraints_;
};

// x ↦ A x + b with A integral (k × m) and b rational.
struct IntegralAffineMap {
    IMatrix a;
    RVec b;

    static IntegralAffineMap identity(std::size_t m);
    std::size_t source_dim() const { return a.empty() ? 0 : a[0].size(); }
    std::size_t target_dim() const { return a.size(); }
    RVec apply(const RVec& x) const;
    // this ∘ inner
    IntegralAffineMap compose(const IntegralAffineMap& inner) const;
    bool is_unimodular() const;
    // Requires a unimodular square matrix.
    IntegralAffineMap inverse() const;
    friend bool operator==(const IntegralAffineMap&, const IntegralAffineMap&) = default;
};

// Image of P under a unimodular map.
Polytope image(const Polytope& p, const IntegralAffineMap& f);

// ---- LP-backed queries (all over the closure unless stated otherwise) ----

LinearProgram closure_lp(const Polytope& p);
// Minimum of alpha·x + offset over the closure; nullopt when unbounded below.
// Throws std::invalid_argument if the closure is empty.
std::optional<Rational> minimum_over(const Polytope& p, const IVec& alpha, const Rational& offset);
std::optional<RVec> interior_point(const Polytope& p);
bool polytope_nonempty_interior(const Polytope& p);
bool polytope_is_complete(const Polytope& p);
bool is_bounded(const Polytope& p);
// closure(inner) ⊆ closure(outer)
bool closure_contains(const Polytope& outer, const Polytope& inner);
bool same_closure(const Polytope& p, const Polytope& q);

// ---- faces ----

struct Face {
    std::vector<std::size_t> tight;  // exact set of constraints tight on the face
    std::size_t dim = 0;
    RVec point;                       // a relative-interior point
    std::vector<IVec> lattice_basis;  // basis of the integral directions of the span
    Polytope in_span;                 // the face in coordinates y, x = point + B y
};

// All nonempty faces of the closure, including P itself, ordered by
// decreasing dimension then by tight set. Requires nonempty interior.
std::vector<Face> polytope_faces(const Polytope& p);
// The face cut out by making `tight` tight (its exact tight set may be larger).
// Throws std::invalid_argument when that face is empty.
Face face_of(const Polytope& p, const std::vector<std::size_t>& tight);

// Vertices of the closure (empty when the closure contains a line).
std::vector<RVec> vertices(const Polytope& p);
// Primitive extreme rays of the recession cone (requires a pointed closure).
std::vector<IVec> extreme_rays(const Polytope& p);

// Cone at the origin {t(x − p)}; throws std::invalid_argument when p ∉ P.
Polytope local_cone(const Polytope& p, const RVec& point);

// Throws std::invalid_argument when v is not a vertex of P.
bool is_standard_corner(const Polytope& p, const RVec& vertex);

// Search for x ↦ Ax + b with A unimodular carrying P onto Q. Exhaustive over
// vertex/edge matchings; correct for pointed polytopes and for R^m itself
// with at most 12 faces. Polytopes with strict constraints are compared by
// closure and must agree on completeness.
std::optional<IntegralAffineMap> integral_affine_iso(const Polytope& p, const Polytope& q);

// Exact volume of a bounded closed polytope (Lebesgue measure in R^m).
Rational volume(const Polytope& p);

// Pieces have pairwise disjoint interiors, cover P and meet face to face.
// Throws std::invalid_argument on malformed pieces (wrong dimension or
// empty interior).
bool validate_subdivision(const Polytope& p, const std::vector<Polytope>& pieces);

// ---- smooth-monomial monoid ----

// The nonnegative integral-affine function x ↦ offset + x·alpha.
struct MonoidElement {
    Rational offset;
    IVec alpha;
    friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};
// Order used for generator lists: offset, then |alpha|_1, then alpha lexicographically.
bool graded_lex_less(const MonoidElement& x, const MonoidElement& y);

// Hilbert basis of the pointed cone generated by integer vectors.
std::vector<IVec> hilbert_basis(const std::vector<IVec>& generators, std::size_t dim);

// Minimal generators of the monoid of zero-achieving nonnegative
// integral-affine functions on P, sorted by graded_lex_less.
std::vector<MonoidElement> smooth_monomial_generators(const Polytope& p);

// ---- complexes ----

// Identification of a face of polytopes[from] with a face of polytopes[to].
struct FaceIdentification {
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<std::size_t> tight_from;
    std::vector<std::size_t> tight_to;
    IntegralAffineMap map;  // ambient(from) → ambient(to), restricted to the face
};

struct PolytopeComplex {
    std::vector<Polytope> polytopes;
    std::vector<FaceIdentification> identifications;
};

// Throws std::invalid_argument describing the first incoherent record.
void validate_complex(const PolytopeComplex& c);

// The face {x ∈ closure(P) : c_t(x) = 0 for t in tight} as an LP region.
LinearProgram face_lp(const Polytope& p, const std::vector<std::size_t>& tight);

}  // namespace explograph
