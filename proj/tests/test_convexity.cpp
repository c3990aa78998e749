#include "generators.hpp"

#include "patchwork/convexity.hpp"
#include "patchwork/presets.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <variant>

using namespace patchwork;

namespace {

std::vector<std::vector<LatticePoint>> cells_of(const ConvexPartition& p) {
    std::vector<std::vector<LatticePoint>> out;
    for (const auto& c : p.cells) out.push_back(c.vertices());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Convexity, StaircaseHasHeights) {
    for (std::int64_t m = 1; m <= 6; ++m) {
        SignedTriangulation t = harnack_triangulation(m);
        auto r = find_convexifying_heights(t);
        ASSERT_TRUE(std::holds_alternative<HeightFunction>(r)) << m;
        const auto& h = std::get<HeightFunction>(r);
        EXPECT_TRUE(check_convexifies(t, h));
        for (const auto& v : t.vertices) EXPECT_TRUE(h.has(v));
    }
}

TEST(Convexity, PinwheelIsInfeasibleWithVerifiedCertificate) {
    ConvexPartition p = pinwheel_partition();
    EXPECT_TRUE(partition_violations(p).empty());
    auto r = find_convexifying_heights(p);
    ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
    const auto& cert = std::get<Infeasible>(r).certificate;
    EXPECT_TRUE(cert.verified);
    EXPECT_FALSE(cert.entries.empty());
    for (const auto& e : cert.entries) EXPECT_NE(e.multiplier, 0);
}

TEST(Convexity, InvalidPartitionIsRejected) {
    ConvexPartition p;
    p.domain = ConvexPolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    p.cells = {ConvexPolygon({{0, 0}, {2, 0}, {0, 2}})};
    EXPECT_FALSE(partition_violations(p).empty());
    EXPECT_THROW(find_convexifying_heights(p), std::invalid_argument);
}

TEST(Convexity, LinearHeightsDoNotConvexify) {
    SignedTriangulation t = harnack_triangulation(2);
    HeightFunction flat;
    for (const auto& v : t.vertices) flat.set(v, v.i + 2 * v.j);
    EXPECT_FALSE(check_convexifies(t, flat));
    EXPECT_FALSE(convexity_violation(as_partition(t), flat).empty());
}

TEST(Convexity, MissingHeightThrows) {
    SignedTriangulation t = harnack_triangulation(2);
    HeightFunction partial({{{0, 0}, 0}});
    EXPECT_THROW(check_convexifies(t, partial), std::invalid_argument);
}

TEST(Convexity, AddingAnAffineFunctionKeepsConvexity) {
    patchwork::testing::Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        auto s = patchwork::testing::random_convex_triangulation(3, rng);
        HeightFunction shifted;
        for (const auto& [w, h] : s.heights.values()) shifted.set(w, h + 3 * w.i - 5 * w.j + 7);
        EXPECT_TRUE(check_convexifies(s.triangulation, shifted));
    }
}

TEST(Convexity, RegularSubdivisionRoundTrip) {
    patchwork::testing::Rng rng(12);
    for (int k = 0; k < 25; ++k) {
        auto s = patchwork::testing::random_convex_triangulation(2 + k % 4, rng);
        ConvexPartition back = regular_subdivision(s.triangulation.vertices, s.heights);
        EXPECT_EQ(cells_of(back), cells_of(as_partition(s.triangulation)));
    }
}

TEST(Convexity, FlatLiftGivesOneCell) {
    std::vector<LatticePoint> pts = degree_triangle(3).lattice_points();
    HeightFunction zero;
    for (const auto& p : pts) zero.set(p, 0);
    ConvexPartition p = regular_subdivision(pts, zero);
    ASSERT_EQ(p.cells.size(), 1u);
    EXPECT_EQ(p.cells[0], degree_triangle(3));
}

TEST(Convexity, CollinearPointsThrow) {
    HeightFunction h({{{0, 0}, 0}, {{1, 1}, 1}, {{2, 2}, 0}});
    EXPECT_THROW(regular_subdivision({{0, 0}, {1, 1}, {2, 2}}, h), std::invalid_argument);
}

TEST(Convexity, InterpolateAndExtend) {
    AffineFunction f = interpolate({0, 0}, {1, 0}, {0, 1}, BigRational(1), BigRational(3), BigRational(-1));
    EXPECT_EQ(f({1, 1}), BigRational(1));
    EXPECT_EQ(f({2, 0}), BigRational(5));

    ConvexPartition p;
    p.domain = degree_triangle(2);
    p.cells = {degree_triangle(2)};
    HeightFunction corners({{{0, 0}, 0}, {{2, 0}, 4}, {{0, 2}, 2}});
    HeightFunction full = extend_to_lattice(p, corners);
    EXPECT_EQ(full.size(), 6u);
    EXPECT_EQ(full.at({1, 0}), 2);
    EXPECT_EQ(full.at({1, 1}), 3);
}

TEST(Convexity, NonConvexTriangulationsExist) {
    patchwork::testing::Rng rng(11);
    SignedTriangulation t = patchwork::testing::random_nonconvex_triangulation(5, rng);
    EXPECT_TRUE(validate_triangulation(t).valid);
    auto r = find_convexifying_heights(t);
    ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
    EXPECT_TRUE(std::get<Infeasible>(r).certificate.verified);
}
