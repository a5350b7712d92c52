#pragma once

// Combinatorial types of simple plane tropical curves, read off from lattice
// subdivisions of the Newton polygon into triangles and parallelograms.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "explograph/rational.hpp"
#include "explograph/tropcurve.hpp"

namespace explograph {

using Point2 = std::array<std::int64_t, 2>;

// Counterclockwise boundary lattice points, one per unit boundary segment.
struct LatticePolygon {
    std::vector<Point2> boundary;
};

// Polygon dual to the end multiset: each end d becomes the unit boundary
// segment with outward normal d. Ends must be primitive and sum to zero.
LatticePolygon newton_polygon(const std::vector<IVec>& ends);

std::vector<Point2> lattice_points(const LatticePolygon& p);

// Corners counterclockwise; three for a triangle, four for a parallelogram.
struct Cell {
    std::vector<Point2> corners;
    friend bool operator==(const Cell&, const Cell&) = default;
};

using Subdivision = std::vector<Cell>;

// Every face-to-face subdivision into lattice triangles and parallelograms
// whose boundary vertices are all boundary lattice points. Order is
// deterministic.
std::vector<Subdivision> lattice_subdivisions(const LatticePolygon& p);

std::int64_t doubled_area(const Cell& c);

// Trivalent graph dual to a subdivision: one vertex per triangle, edges
// following strands through parallelograms. Lengths are left at zero.
struct CurveType {
    TropicalCurve graph;
    std::vector<Cell> triangles;
    std::string key;
};

// Types of connected curves of the given genus, deduplicated by key.
std::vector<CurveType> plane_curve_types(const std::vector<IVec>& ends, std::size_t genus);

}  // namespace explograph
