#pragma once

#include "patchwork/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace patchwork {

struct LatticePoint {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }
inline LatticePoint operator-(LatticePoint a) { return {-a.i, -a.j}; }
inline std::int64_t dot(LatticePoint a, LatticePoint b) { return a.i * b.i + a.j * b.j; }
inline std::int64_t cross(LatticePoint a, LatticePoint b) { return a.i * b.j - a.j * b.i; }
inline Point2 to_point(LatticePoint p) { return {Rational(p.i), Rational(p.j)}; }

/// Twice the signed area of (a, b, c).
inline std::int64_t doubled_area(LatticePoint a, LatticePoint b, LatticePoint c) {
    return cross(b - a, c - a);
}

/// v / gcd(|v.i|, |v.j|).  Throws on the zero vector.
LatticePoint primitive(LatticePoint v);

std::string to_string(LatticePoint p);

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// Convex lattice polygon, counterclockwise, without collinear vertices.
/// One vertex is a point, two vertices a segment.
class ConvexPolygon {
public:
    ConvexPolygon() = default;
    /// Takes the convex hull of `points`.
    explicit ConvexPolygon(const std::vector<LatticePoint>& points);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }

    std::int64_t doubled_area() const;
    /// Closed containment.
    bool contains(LatticePoint p) const;
    bool contains(const Point2& p) const;
    bool on_boundary(const Point2& p) const;
    /// Sides as (start, end) in counterclockwise order; a segment has two.
    std::vector<std::pair<LatticePoint, LatticePoint>> sides() const;
    /// All lattice points in the closed polygon, sorted.
    std::vector<LatticePoint> lattice_points() const;
    std::optional<std::pair<LatticePoint, LatticePoint>> side_with_normal(LatticePoint normal) const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

private:
    std::vector<LatticePoint> vertices_;
};

ConvexPolygon newton_polygon(const std::vector<LatticePoint>& support);

/// True when the open interiors of two convex polygons do not meet.
bool interiors_disjoint(const ConvexPolygon& a, const ConvexPolygon& b);

struct Ray {
    LatticePoint direction;
    Point2 anchor;
};

struct SideRay {
    LatticePoint from;
    LatticePoint to;
    Ray ray;
};

std::vector<SideRay> outward_normal_rays(const ConvexPolygon& poly);

/// Triangulation of a convex lattice polygon with a sign at every vertex.
struct SignedTriangulation {
    ConvexPolygon domain;
    std::vector<LatticePoint> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> signs;

    int index_of(LatticePoint p) const;  // -1 when absent
    int sign_at(LatticePoint p) const;
    std::int64_t triangle_area(std::size_t t) const;
};

struct TriangulationReport {
    bool valid = false;
    bool primitive = false;
    std::vector<std::string> violations;
};

TriangulationReport validate_triangulation(const SignedTriangulation& t);

/// Copy with every triangle reordered counterclockwise.
SignedTriangulation normalized(SignedTriangulation t);

/// Undirected interior edges (vertex index pairs, smaller first) shared by two triangles.
std::vector<std::pair<int, int>> interior_edges(const SignedTriangulation& t);

/// The degree-m triangle (0,0), (m,0), (0,m).
ConvexPolygon degree_triangle(std::int64_t m);

}  // namespace patchwork
