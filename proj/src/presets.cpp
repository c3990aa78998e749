#include "patchwork/presets.hpp"

#include <stdexcept>
#include <variant>

namespace patchwork {

namespace {

// Unit squares below the anti-diagonal split along their anti-diagonal,
// plus the half squares along the hypotenuse.
SignedTriangulation staircase(std::int64_t m) {
    SignedTriangulation t;
    t.domain = degree_triangle(m);
    for (std::int64_t j = 0; j <= m; ++j) {
        for (std::int64_t i = 0; i + j <= m; ++i) t.vertices.push_back({i, j});
    }
    t.signs.assign(t.vertices.size(), 1);
    auto id = [&](std::int64_t i, std::int64_t j) { return t.index_of({i, j}); };
    for (std::int64_t j = 0; j < m; ++j) {
        for (std::int64_t i = 0; i + j < m; ++i) {
            t.triangles.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
            if (i + j + 2 <= m) t.triangles.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return t;
}

HeightFunction heights_for(const SignedTriangulation& t) {
    auto result = find_convexifying_heights(t);
    if (!std::holds_alternative<HeightFunction>(result)) throw std::logic_error("preset is not convexifiable");
    return std::get<HeightFunction>(result);
}

}  // namespace

SignedTriangulation harnack_triangulation(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("degree must be positive");
    SignedTriangulation t = staircase(m);
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        const auto& v = t.vertices[k];
        t.signs[k] = (v.i % 2 == 0 && v.j % 2 == 0) ? -1 : 1;
    }
    return t;
}

SignedTriangulation ellipse_triangulation() {
    SignedTriangulation t = staircase(2);
    t.signs[static_cast<std::size_t>(t.index_of({0, 0}))] = -1;
    return t;
}

SignedTriangulation gudkov_triangulation() {
    // Same vertex order as the staircase: row by row in j, i increasing.
    SignedTriangulation t = harnack_triangulation(6);
    t.signs = {1, 1, -1, -1, -1, -1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1};
    t.triangles = {{24, 1, 20},  {8, 0, 1},    {2, 10, 3},   {4, 16, 10},  {9, 2, 1},    {24, 8, 14},
                   {11, 16, 21}, {6, 11, 12},  {5, 11, 4},   {2, 16, 10},  {11, 16, 4},  {15, 21, 20},
                   {7, 23, 13},  {21, 1, 9},   {21, 1, 15},  {0, 19, 14},  {3, 10, 4},   {21, 11, 17},
                   {17, 11, 12}, {6, 11, 5},   {13, 23, 18}, {0, 23, 19},  {1, 20, 15},  {21, 2, 9},
                   {24, 14, 19}, {20, 24, 21}, {19, 23, 24}, {24, 1, 8},   {0, 23, 7},   {23, 22, 18},
                   {25, 26, 27}, {21, 2, 16},  {14, 8, 0},   {23, 25, 22}, {25, 24, 23}, {25, 24, 26}};
    return normalized(t);
}

ConvexPartition pinwheel_partition() {
    auto rect = [](std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
        return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
    };
    ConvexPartition p;
    p.domain = rect(0, 0, 3, 3);
    p.cells = {rect(0, 0, 2, 1), rect(2, 0, 3, 2), rect(1, 2, 3, 3), rect(0, 1, 1, 3), rect(1, 1, 2, 2)};
    return p;
}

std::vector<SparsePolynomial> example_parts() {
    return {SparsePolynomial::parse("8x^3 - x^2 + 4y^2"), SparsePolynomial::parse("4y^2 - x^2 + 1")};
}

HeightFunction example_heights() {
    return HeightFunction({{{0, 0}, 2}, {{2, 0}, 0}, {{0, 2}, 0}, {{3, 0}, 0}});
}

std::vector<std::string> preset_names() { return {"ellipse", "harnack", "gudkov"}; }

Preset make_preset(std::string_view name, std::int64_t degree) {
    Preset p;
    p.name = std::string(name);
    if (name == "ellipse") {
        if (degree > 0 && degree != 2) throw std::invalid_argument("ellipse preset has degree 2");
        p.degree = 2;
        p.triangulation = ellipse_triangulation();
        p.expected_code = "1";
    } else if (name == "harnack") {
        p.degree = degree > 0 ? degree : 6;
        p.triangulation = harnack_triangulation(p.degree);
        if (p.degree == 6) p.expected_code = "9 ∪ 1⟨1⟩";
    } else if (name == "gudkov") {
        if (degree > 0 && degree != 6) throw std::invalid_argument("gudkov preset has degree 6");
        p.degree = 6;
        p.triangulation = gudkov_triangulation();
        p.expected_code = "5 ∪ 1⟨5⟩";
    } else {
        throw std::invalid_argument("unknown preset: " + std::string(name));
    }
    p.heights = heights_for(p.triangulation);
    return p;
}

}  // namespace patchwork
