#pragma once

// Exploded coordinate charts R^n × T^m_P, monomials on them, chart
// morphisms, and fibers of monomial maps.

#include <string>
#include <vector>

#include "explograph/affine.hpp"
#include "explograph/semiring.hpp"

namespace explograph {

// c⌊e^a⌋ z^alpha. The tropical part is x ↦ a + x·alpha.
struct ExplodedMonomial {
    ExplodedScalar coeff = ExplodedScalar::one();
    IVec alpha;

    Rational tropical_offset() const { return coeff.exponent(); }
    friend bool operator==(const ExplodedMonomial&, const ExplodedMonomial&) = default;
};

// z_i on an m-dimensional chart.
ExplodedMonomial coordinate_monomial(std::size_t m, std::size_t i);
// ⌊e^offset⌋ z^alpha for a monoid element.
ExplodedMonomial monomial_of(const MonoidElement& e);
ExplodedMonomial monomial_mul(const ExplodedMonomial& x, const ExplodedMonomial& y);

// Tropical part is nonnegative on P.
bool is_smooth_monomial(const ExplodedMonomial& mon, const Polytope& p);

class Chart {
public:
    Chart() = default;
    // Computes and caches the smooth-monomial generators of P.
    Chart(std::size_t n, Polytope p);

    std::size_t n() const { return n_; }
    std::size_t m() const { return polytope_.dim(); }
    std::size_t dimension() const { return n_ + 2 * m(); }
    const Polytope& polytope() const { return polytope_; }
    const std::vector<MonoidElement>& generators() const { return generators_; }

    friend bool operator==(const Chart& a, const Chart& b) { return a.n_ == b.n_ && a.polytope_ == b.polytope_; }

private:
    std::size_t n_ = 0;
    Polytope polytope_;
    std::vector<MonoidElement> generators_;
};

struct ChartPoint {
    std::vector<ExplodedScalar> w;  // units, tropical part in P
    RVec real;                      // the R^n factor
};

// Throws Error when a coordinate is not a unit or the tropical part leaves P.
ChartPoint make_point(const Chart& chart, std::vector<ExplodedScalar> w, RVec real = {});
RVec tropical_part(const ChartPoint& p);

ExplodedScalar evaluate_monomial(const ExplodedMonomial& mon, const ChartPoint& p);
std::vector<GaussianRational> smooth_coordinates(const Chart& chart, const ChartPoint& p);

class ChartMorphism {
public:
    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const std::vector<ExplodedMonomial>& entries() const { return entries_; }
    // Opaque smooth factor h; "1" for pure monomial maps.
    const std::string& smooth_factor() const { return smooth_factor_; }

    // x ↦ (a_i + x·alpha_i)_i
    IntegralAffineMap tropical_part() const;
    ChartPoint apply(const ChartPoint& p) const;

private:
    friend ChartMorphism make_morphism(const Chart&, const Chart&, std::vector<ExplodedMonomial>, std::string);
    Chart source_, target_;
    std::vector<ExplodedMonomial> entries_;
    std::string smooth_factor_ = "1";
};

// Throws Error("tropical part leaves target polytope") when the image of P is not inside Q.
ChartMorphism make_morphism(const Chart& src, const Chart& dst, std::vector<ExplodedMonomial> entries,
                            std::string smooth_factor = "1");
ChartMorphism identity_morphism(const Chart& c);

// g ∘ f. Throws Error("chart mismatch") when f's target is not g's source.
ChartMorphism compose_morphisms(const ChartMorphism& f, const ChartMorphism& g);

struct Fiber {
    Chart chart;
    // Fiber coordinates y into the source ambient space: x = origin + B y.
    IntegralAffineMap embedding;
};

// Restriction of x ↦ offset + x·alpha along the fiber embedding.
MonoidElement restrict_to_fiber(const Fiber& fiber, const MonoidElement& e);

// The fiber of a single-entry monomial map to T_[0,∞) over a unit value.
// Tropical dimensions lost to a lower-dimensional slice become smooth real
// dimensions. Throws Error("empty fiber").
Fiber fiber_of_monomial_map(const ChartMorphism& f, const ExplodedScalar& value);

}  // namespace explograph
