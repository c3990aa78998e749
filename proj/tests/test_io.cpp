#include "generators.hpp"

#include "patchwork/io.hpp"
#include "patchwork/pipeline.hpp"
#include "patchwork/presets.hpp"

#include <gtest/gtest.h>

using namespace patchwork;

namespace {

PatchworkProblem harnack_problem(std::int64_t m) {
    Preset p = make_preset("harnack", m);
    return make_problem(p.triangulation, p.degree, p.name, p.heights);
}

}  // namespace

TEST(Io, ProblemRoundTrip) {
    PatchworkProblem p = harnack_problem(4);
    p.notes = "staircase";
    Json j = to_json(p);
    EXPECT_EQ(j["v"], 1);
    EXPECT_EQ(j["kind"], "problem");
    EXPECT_EQ(problem_from_json(j), p);
    EXPECT_EQ(problem_from_json(Json::parse(dump(j))), p);
}

TEST(Io, RandomProblemsRoundTrip) {
    patchwork::testing::Rng rng(4);
    for (int k = 0; k < 20; ++k) {
        auto t = patchwork::testing::random_triangulation(1 + k % 5, 25, rng);
        PatchworkProblem p = make_problem(t, 1 + k % 5, "r" + std::to_string(k));
        EXPECT_EQ(problem_from_json(to_json(p)), p);
    }
}

TEST(Io, BuildReportRoundTrip) {
    BuildReport r = build(harnack_problem(3));
    Json j = to_json(r);
    EXPECT_EQ(j["kind"], "build-report");
    EXPECT_EQ(build_report_from_json(Json::parse(dump(j))), r);
    // curve coordinates are exact rationals in string form
    ASSERT_FALSE(j["curve"].empty());
    EXPECT_TRUE(j["curve"][0][0][0].is_string());
}

TEST(Io, ConvexifyReportRoundTrip) {
    ConvexifyReport feasible = convexify(harnack_problem(3));
    EXPECT_EQ(convexify_report_from_json(to_json(feasible)), feasible);

    ConvexifyReport infeasible = convexify(pinwheel_partition());
    Json j = to_json(infeasible);
    EXPECT_EQ(j["status"], "infeasible");
    for (const auto& e : j["certificate"]) EXPECT_TRUE(e["multiplier"].is_string());
    EXPECT_EQ(convexify_report_from_json(j), infeasible);
}

TEST(Io, PartitionRoundTrip) {
    ConvexPartition p = pinwheel_partition();
    Json j = to_json(p);
    EXPECT_TRUE(is_partition(j));
    EXPECT_FALSE(is_partition(to_json(harnack_problem(2))));
    ConvexPartition q = partition_from_json(j);
    EXPECT_EQ(q.domain, p.domain);
    EXPECT_EQ(q.cells, p.cells);
}

TEST(Io, DumpIsDeterministic) {
    Json a = to_json(build(harnack_problem(4)));
    Json b = to_json(build(harnack_problem(4)));
    EXPECT_EQ(dump(a), dump(b));
    EXPECT_EQ(dump(a).back(), '\n');
}

TEST(Io, RejectsWrongVersion) {
    Json j = to_json(harnack_problem(2));
    j["v"] = 2;
    EXPECT_THROW(problem_from_json(j), InputError);
    j.erase("v");
    EXPECT_THROW(problem_from_json(j), InputError);
    EXPECT_THROW(problem_from_json(Json::array()), InputError);
}

TEST(Io, RejectsMissingOrMalformedFields) {
    Json base = to_json(harnack_problem(2));
    Json j = base;
    j.erase("signs");
    EXPECT_THROW(problem_from_json(j), InputError);
    j = base;
    j["signs"][0] = 0;
    EXPECT_THROW(problem_from_json(j), InputError);
    j = base;
    j["signs"].erase(0);
    EXPECT_THROW(problem_from_json(j), InputError);
    j = base;
    j["triangles"][0][0] = 99;
    EXPECT_THROW(problem_from_json(j), InputError);
    j = base;
    j["degree"] = "two";
    EXPECT_THROW(problem_from_json(j), InputError);
}

TEST(Io, VerticesOutsideTheDegreeTriangle) {
    Json j = to_json(harnack_problem(2));
    j["vertices"][0] = {5, 5};
    try {
        problem_from_json(j);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_FALSE(e.violations().empty());
    }
}

TEST(Io, ErrorDocument) {
    Json e = error_json("input", "bad", {"x"});
    EXPECT_EQ(e["code"], "input");
    EXPECT_EQ(e["message"], "bad");
    EXPECT_EQ(e["violations"], Json::array({"x"}));
}
