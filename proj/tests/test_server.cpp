#include "server.hpp"

#include "patchwork/io.hpp"
#include "patchwork/presets.hpp"

#include <httplib.h>
#include <gtest/gtest.h>

#include <chrono>
#include <thread>

using namespace patchwork;

namespace {

class ServerTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        server_ = new ApiServer;
        port_ = server_->bind_any("127.0.0.1");
        ASSERT_GT(port_, 0);
        thread_ = new std::thread([] { server_->listen_after_bind(); });
        for (int k = 0; k < 200 && !server_->running(); ++k) std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    static void TearDownTestSuite() {
        server_->stop();
        thread_->join();
        delete thread_;
        delete server_;
    }

    httplib::Client client() const {
        httplib::Client c("127.0.0.1", port_);
        c.set_read_timeout(120, 0);
        return c;
    }

    Json post(const std::string& path, const std::string& body, int expect) {
        auto c = client();
        auto res = c.Post(path, body, "application/json");
        EXPECT_TRUE(res);
        if (!res) return {};
        EXPECT_EQ(res->status, expect) << res->body;
        return Json::parse(res->body);
    }

    static Json problem(std::string_view name, std::int64_t degree = 0) {
        Preset p = make_preset(name, degree);
        return to_json(make_problem(p.triangulation, p.degree, p.name, p.heights));
    }

    static inline ApiServer* server_ = nullptr;
    static inline std::thread* thread_ = nullptr;
    static inline int port_ = 0;
};

}  // namespace

TEST_F(ServerTest, Healthz) {
    auto c = client();
    auto res = c.Get("/healthz");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(Json::parse(res->body)["status"], "ok");
}

TEST_F(ServerTest, Presets) {
    auto c = client();
    auto res = c.Get("/api/presets");
    ASSERT_TRUE(res);
    Json j = Json::parse(res->body);
    EXPECT_EQ(j["v"], 1);
    ASSERT_EQ(j["presets"].size(), preset_names().size());
    for (const auto& p : j["presets"]) EXPECT_NO_THROW(problem_from_json(p["problem"]));
}

TEST_F(ServerTest, Patchwork) {
    Json r = post("/api/patchwork", problem("harnack", 6).dump(), 200);
    EXPECT_EQ(r["kind"], "build-report");
    EXPECT_EQ(r["code"], "9 ∪ 1⟨1⟩");
    EXPECT_EQ(r["components"], 11);
}

TEST_F(ServerTest, PatchworkRejectsInvalidTriangulation) {
    Json p = problem("harnack", 3);
    p["triangles"].erase(0);
    Json e = post("/api/patchwork", p.dump(), 400);
    EXPECT_EQ(e["code"], "invalid-input");
    EXPECT_FALSE(e["violations"].empty());
}

TEST_F(ServerTest, Convexify) {
    Json ok = post("/api/convexify", problem("gudkov").dump(), 200);
    EXPECT_EQ(ok["status"], "convex");
    Json pin = post("/api/convexify", to_json(pinwheel_partition()).dump(), 200);
    EXPECT_EQ(pin["status"], "infeasible");
    EXPECT_TRUE(pin["certificate_verified"].get<bool>());
}

TEST_F(ServerTest, Verify) {
    Json body{{"problem", problem("ellipse")}, {"t_start", 1}, {"t_steps", 6}, {"grid", 128}};
    Json r = post("/api/verify", body.dump(), 200);
    EXPECT_EQ(r["kind"], "verify-report");
    EXPECT_TRUE(r["stabilized"].get<bool>());
    EXPECT_EQ(r["code"], "1");
    body["grid"] = 100000;
    post("/api/verify", body.dump(), 400);
}

TEST_F(ServerTest, MalformedJson) {
    Json e = post("/api/patchwork", "{not json", 400);
    EXPECT_EQ(e["code"], "invalid-input");
    EXPECT_TRUE(e.contains("message"));
    EXPECT_TRUE(e.contains("violations"));
    Json v = post("/api/convexify", R"({"v": 7})", 400);
    EXPECT_EQ(v["code"], "invalid-input");
}
