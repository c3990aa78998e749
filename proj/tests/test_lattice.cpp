#include "generators.hpp"

#include "patchwork/lattice.hpp"
#include "patchwork/presets.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace patchwork;

TEST(Rational, ParsesAndPrintsReducedFractions) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(Rational(3, -6)), "-1/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(parse_big_rational("10/4"), BigRational(5, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, OrientationAndSegments) {
    Point2 a{Rational(0), Rational(0)}, b{Rational(2), Rational(0)}, c{Rational(1), Rational(1)};
    EXPECT_EQ(orientation(a, b, c), 1);
    EXPECT_EQ(orientation(a, c, b), -1);
    EXPECT_TRUE(on_segment({Rational(1), Rational(0)}, a, b));
    EXPECT_FALSE(on_segment({Rational(3), Rational(0)}, a, b));
    EXPECT_TRUE(segments_cross_properly(a, {Rational(2), Rational(2)}, {Rational(0), Rational(2)}, b));
    EXPECT_FALSE(segments_cross_properly(a, b, b, c));
}

TEST(LatticePoint, PrimitiveDividesByGcd) {
    EXPECT_EQ(primitive({4, -6}), (LatticePoint{2, -3}));
    EXPECT_EQ(primitive({0, -5}), (LatticePoint{0, -1}));
    EXPECT_THROW(primitive({0, 0}), std::invalid_argument);
}

TEST(ConvexPolygon, HullDropsInteriorAndCollinearPoints) {
    ConvexPolygon p({{0, 0}, {2, 0}, {1, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 2}});
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.doubled_area(), 8);
    EXPECT_TRUE(p.contains(LatticePoint{1, 1}));
    EXPECT_FALSE(p.contains(LatticePoint{3, 1}));
    EXPECT_EQ(p.lattice_points().size(), 9u);
}

TEST(ConvexPolygon, DegenerateCases) {
    ConvexPolygon point({{3, 4}});
    EXPECT_TRUE(point.is_point());
    ConvexPolygon seg({{0, 0}, {2, 1}, {4, 2}});
    EXPECT_TRUE(seg.is_segment());
    EXPECT_EQ(seg.doubled_area(), 0);
    EXPECT_EQ(seg.lattice_points().size(), 3u);
}

TEST(ConvexPolygon, PickFormulaOnDegreeTriangles) {
    for (std::int64_t m = 1; m <= 8; ++m) {
        ConvexPolygon t = degree_triangle(m);
        EXPECT_EQ(t.doubled_area(), m * m);
        EXPECT_EQ(static_cast<std::int64_t>(t.lattice_points().size()), (m + 1) * (m + 2) / 2);
    }
}

TEST(ConvexPolygon, SideWithNormal) {
    ConvexPolygon t = degree_triangle(3);
    auto hyp = t.side_with_normal({1, 1});
    ASSERT_TRUE(hyp.has_value());
    EXPECT_EQ(hyp->first.i + hyp->first.j, 3);
    EXPECT_FALSE(t.side_with_normal({1, 0}).has_value());
}

TEST(ConvexPolygon, NewtonPolygonAndInteriors) {
    ConvexPolygon n = newton_polygon({{3, 0}, {2, 0}, {0, 2}});
    EXPECT_EQ(n.size(), 3u);
    ConvexPolygon a({{0, 0}, {2, 0}, {0, 2}});
    ConvexPolygon b({{2, 0}, {2, 2}, {0, 2}});
    ConvexPolygon c({{1, 0}, {3, 0}, {1, 2}});
    EXPECT_TRUE(interiors_disjoint(a, b));
    EXPECT_FALSE(interiors_disjoint(a, c));
}

TEST(ConvexPolygon, OutwardNormalRaysPointAway) {
    ConvexPolygon t = degree_triangle(2);
    auto rays = outward_normal_rays(t);
    ASSERT_EQ(rays.size(), 3u);
    std::set<LatticePoint> dirs;
    for (const auto& r : rays) dirs.insert(r.ray.direction);
    EXPECT_EQ(dirs, (std::set<LatticePoint>{{0, -1}, {-1, 0}, {1, 1}}));
}

TEST(Triangulation, StaircaseIsValidAndPrimitive) {
    for (std::int64_t m = 1; m <= 7; ++m) {
        SignedTriangulation t = harnack_triangulation(m);
        auto r = validate_triangulation(t);
        EXPECT_TRUE(r.valid) << m;
        EXPECT_TRUE(r.primitive) << m;
        EXPECT_EQ(static_cast<std::int64_t>(t.triangles.size()), m * m);
        // Euler: interior edges = (3T - boundary edges) / 2 with 3m boundary edges
        EXPECT_EQ(static_cast<std::int64_t>(interior_edges(t).size()), (3 * m * m - 3 * m) / 2);
    }
}

TEST(Triangulation, DetectsOverlapAndGaps) {
    SignedTriangulation t = harnack_triangulation(2);
    SignedTriangulation gap = t;
    gap.triangles.pop_back();
    auto r = validate_triangulation(gap);
    EXPECT_FALSE(r.valid);
    EXPECT_FALSE(r.violations.empty());

    SignedTriangulation overlap = t;
    overlap.triangles.push_back(overlap.triangles.front());
    EXPECT_FALSE(validate_triangulation(overlap).valid);
}

TEST(Triangulation, NonPrimitiveIsValidButFlagged) {
    SignedTriangulation t;
    t.domain = degree_triangle(2);
    t.vertices = {{0, 0}, {2, 0}, {0, 2}};
    t.triangles = {{0, 1, 2}};
    t.signs = {1, -1, 1};
    auto r = validate_triangulation(t);
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.primitive);
}

TEST(Triangulation, NormalizedIsCounterclockwise) {
    SignedTriangulation t = harnack_triangulation(3);
    for (auto& tri : t.triangles) std::swap(tri[0], tri[1]);
    t = normalized(t);
    for (std::size_t k = 0; k < t.triangles.size(); ++k) EXPECT_GT(t.triangle_area(k), 0);
}

TEST(Triangulation, RandomFlipsKeepValidity) {
    patchwork::testing::Rng rng(3);
    for (int k = 0; k < 30; ++k) {
        SignedTriangulation t = patchwork::testing::random_triangulation(2 + k % 4, 50, rng);
        auto r = validate_triangulation(t);
        EXPECT_TRUE(r.valid);
        EXPECT_TRUE(r.primitive);
    }
}

TEST(Triangulation, IndexAndSignLookup) {
    SignedTriangulation t = harnack_triangulation(2);
    EXPECT_EQ(t.index_of({5, 5}), -1);
    int k = t.index_of({2, 0});
    ASSERT_GE(k, 0);
    EXPECT_EQ(t.sign_at({2, 0}), -1);
    EXPECT_EQ(t.sign_at({1, 0}), 1);
}
