#pragma once

#include "patchwork/lattice.hpp"
#include "patchwork/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace patchwork {

/// Quadrant order used throughout: (+,+), (-,+), (+,-), (-,-).
struct Quadrant {
    int eps;
    int delta;
};
inline constexpr std::array<Quadrant, 4> kQuadrants{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};

inline LatticePoint reflect(LatticePoint p, Quadrant q) { return {q.eps * p.i, q.delta * p.j}; }
inline Point2 reflect(const Point2& p, Quadrant q) { return {Rational(q.eps) * p.x, Rational(q.delta) * p.y}; }

/// The four reflected copies of a signed triangulation, merged into one
/// triangulation of the symmetric polygon with extended signs.
struct SymmetricComplex {
    SignedTriangulation base;
    std::array<SignedTriangulation, 4> copies;
    std::vector<LatticePoint> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::map<LatticePoint, int> signs;

    int sign(LatticePoint p) const;
};

/// σ(εi, δj) = σ(i, j) ε^i δ^j.
int extended_sign(int sigma, LatticePoint p, Quadrant q);

/// Throws std::invalid_argument for invalid input or a domain leaving the
/// closed positive quadrant.
SymmetricComplex symmetrize(const SignedTriangulation& t);

struct Segment {
    Point2 a;
    Point2 b;

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct PLCurve {
    std::vector<Segment> segments;

    bool empty() const { return segments.empty(); }
};

PLCurve midline_curve(const SymmetricComplex& c);

/// Curve in the diamond |x| + |y| <= R with boundary points glued by p ~ -p,
/// a model of the real projective plane.
class ProjectiveComplex {
public:
    /// Throws std::invalid_argument("sign rule violated") when a boundary
    /// endpoint has no antipodal partner, or when the curve leaves the diamond.
    ProjectiveComplex(PLCurve curve, Rational radius);

    const PLCurve& curve() const { return curve_; }
    const Rational& radius() const { return radius_; }
    bool on_boundary(const Point2& p) const;
    /// Representative of p after gluing.
    Point2 canonical(const Point2& p) const;
    /// Every glued endpoint is shared by exactly two segment ends.
    bool is_closed_manifold() const;
    std::size_t boundary_crossings() const;
    std::size_t component_count() const;

private:
    PLCurve curve_;
    Rational radius_;
};

/// Requires the base domain to be a full degree-m triangle.
ProjectiveComplex projective_quotient(const SymmetricComplex& c, const PLCurve& l);

/// Oval nesting forest node; children are the ovals immediately inside.
struct Oval {
    std::vector<Oval> children;

    std::size_t size() const;
};

struct IsotopyCode {
    int one_sided = 0;
    std::vector<Oval> ovals;
    std::string encoding = "0";

    std::size_t oval_count() const;
    std::size_t components() const { return oval_count() + static_cast<std::size_t>(one_sided); }

    friend bool operator==(const IsotopyCode& a, const IsotopyCode& b) { return a.encoding == b.encoding; }
};

/// Throws std::domain_error when the curve is not a closed 1-manifold.
IsotopyCode isotopy_code(const ProjectiveComplex& p);

/// Canonical text of a forest, e.g. "9 ∪ 1⟨1⟩"; "0" for no ovals.
std::string encode(int one_sided, const std::vector<Oval>& ovals);

/// Components of the curve within each open quadrant (order of kQuadrants).
std::array<std::size_t, 4> quadrant_components(const PLCurve& curve);

struct AffineCounts {
    std::size_t components = 0;
    std::size_t unbounded_ends = 0;
};

/// Components in the open diamond: the boundary is the line at infinity and
/// no gluing takes place.
AffineCounts affine_counts(const PLCurve& curve, const Rational& radius);

/// Connected components of the segment graph.
std::size_t component_count(const PLCurve& curve);
/// Segment endpoints used by exactly one segment.
std::size_t free_ends(const PLCurve& curve);

/// Harnack bound (m-1)(m-2)/2 + 1.
std::size_t harnack_bound(std::int64_t degree);

}  // namespace patchwork
