#pragma once

// Tropical curves: integral-affine graphs with genus-labelled vertices,
// finite internal edges and semi-infinite ends, mapped into a tropical part.

#include <cstdint>
#include <vector>

#include "explograph/rational.hpp"

namespace explograph {

struct CurveVertex {
    RVec pos;
    std::size_t polytope = 0;
    std::size_t genus = 0;
    friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

// Oriented tail → head; pos(head) − pos(tail) = length · d.
struct CurveEdge {
    std::size_t tail = 0;
    std::size_t head = 0;
    Rational length;
    IVec d;
    friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

// Semi-infinite edge leaving `vertex` in direction d.
struct CurveEnd {
    std::size_t vertex = 0;
    IVec d;
    friend bool operator==(const CurveEnd&, const CurveEnd&) = default;
};

struct TropicalCurve {
    std::size_t dim = 2;
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;
    std::vector<CurveEnd> ends;
    friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

// A vertex with every incident edge made semi-infinite.
struct VertexStar {
    RVec pos;
    std::size_t genus = 0;
    std::vector<IVec> ends;
};

// Positions consistent with lengths, lengths positive, every vertex balanced.
bool check_balanced(const TropicalCurve& c);
bool is_balanced(const VertexStar& s);

// b1 of the graph plus the vertex genera. Throws Error when disconnected.
std::size_t curve_genus(const TropicalCurve& c);

// gcd of the entries; 0 for the zero vector.
std::int64_t edge_multiplicity(const IVec& d);

// Product of internal edge multiplicities. Throws Error on a zero edge
// unless allow_zero is set, in which case such edges contribute 1.
Integer k_factor(const TropicalCurve& c, bool allow_zero = false);

inline constexpr std::size_t kMaxAutomorphismEdges = 24;

// Order of the automorphism group preserving positions, genera, lengths and
// derivatives; ends are unlabelled. Throws Error above kMaxAutomorphismEdges
// internal edges plus ends.
std::uint64_t automorphism_order(const TropicalCurve& c);

std::vector<VertexStar> cut(const TropicalCurve& c);

}  // namespace explograph
