#pragma once

#include "patchwork/convexity.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace patchwork {

struct Preset {
    std::string name;
    std::int64_t degree = 0;
    SignedTriangulation triangulation;
    HeightFunction heights;
    std::string expected_code;
};

std::vector<std::string> preset_names();

/// Throws std::invalid_argument for an unknown name or a degree the preset
/// does not support.  `degree` <= 0 selects the preset's default.
Preset make_preset(std::string_view name, std::int64_t degree = 0);

/// Staircase triangulation of the degree-m triangle with Harnack's signs:
/// σ(i, j) = -1 exactly when i and j are both even.
SignedTriangulation harnack_triangulation(std::int64_t m);

/// Degree-6 signed triangulation whose T-curve has the Gudkov arrangement.
SignedTriangulation gudkov_triangulation();

/// Degree-2 signed triangulation whose T-curve is a single oval.
SignedTriangulation ellipse_triangulation();

/// A convex polygon cut into four rectangles around a central square, with
/// no convex height function.
ConvexPartition pinwheel_partition();

/// The parts 8x^3 - x^2 + 4y^2 and 4y^2 - x^2 + 1 of the cubic example.
std::vector<SparsePolynomial> example_parts();
HeightFunction example_heights();

}  // namespace patchwork
