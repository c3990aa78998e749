#pragma once

#include "patchwork/lattice.hpp"
#include "patchwork/polynomial.hpp"
#include "patchwork/topology.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/// A curve piece in the local (+,+) frame of one quadrant copy.  A piece with
/// a == b is a marked point.
struct ChartSegment {
    int quadrant = 0;  // index into kQuadrants
    Point2 a;
    Point2 b;

    bool is_point() const { return a == b; }
    friend bool operator==(const ChartSegment&, const ChartSegment&) = default;
};

/// Chart of a polynomial: one polygon drawn in each quadrant by reflection,
/// with the curve stored per quadrant in local coordinates.
struct Chart {
    ConvexPolygon polygon;
    std::vector<ChartSegment> curve;
    std::vector<LatticePoint> adjoined;  // normals of inserted sides, in order

    std::vector<ChartSegment> in_quadrant(int q) const;
    /// Curve in global coordinates: quadrant pieces reflected into place.
    PLCurve global_curve() const;
    std::array<std::size_t, 4> points_per_quadrant() const;
};

struct ChartSide {
    LatticePoint from;
    LatticePoint to;
    LatticePoint normal;
    bool inserted = false;
};

std::vector<ChartSide> chart_sides(const Chart& c);

/// Throws std::invalid_argument("use quasihomogeneous_chart") for collinear support.
Chart trinomial_chart(const SparsePolynomial& a);

/// Throws std::invalid_argument("peripherally degenerate") on a repeated
/// nonzero root of the segment polynomial.
Chart quasihomogeneous_chart(const SparsePolynomial& a);

/// Chart of the T-curve of a signed triangulation.
Chart t_curve_chart(const SymmetricComplex& c);

/// Throws std::invalid_argument on a zero normal.
Chart adjoin_side(const Chart& c, LatticePoint normal);

struct GluedComplex {
    std::string carrier;  // "affine-plane" or "projective-plane"
    std::vector<std::vector<Point2>> cells;
    PLCurve curve;
    Rational radius{0};
    std::size_t components = 0;
    std::size_t unbounded_branches = 0;
    std::optional<IsotopyCode> code;
    std::string note;
};

GluedComplex affine_topology(const Chart& c);
GluedComplex projective_topology(const Chart& c);

/// Throws std::invalid_argument on overlapping or non-convex unions and
/// "incompatible charts" on mismatched boundary traces.
Chart patchwork_charts(const std::vector<Chart>& charts);

/// Canonical comparison key: sorted segments per quadrant with endpoints ordered.
std::vector<ChartSegment> canonical_trace(const Chart& c);

}  // namespace patchwork
