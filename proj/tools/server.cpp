#include "server.hpp"

#include "patchwork/io.hpp"
#include "patchwork/pipeline.hpp"
#include "patchwork/presets.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

namespace patchwork {

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(dump(body), kJson);
}

Json parse_body(const httplib::Request& req) {
    try {
        return Json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

// Runs a handler and maps exceptions to {code, message, violations}.
template <class F>
void guarded(const httplib::Request& req, httplib::Response& res, F&& f) {
    try {
        send(res, 200, f(parse_body(req)));
    } catch (const InputError& e) {
        send(res, 400, error_json("invalid-input", e.what(), e.violations()));
    } catch (const InfeasibleError& e) {
        send(res, 422, error_json("infeasible", e.what()));
    } catch (const std::invalid_argument& e) {
        send(res, 400, error_json("invalid-input", e.what()));
    } catch (const std::exception& e) {
        spdlog::error("{} failed: {}", req.path, e.what());
        send(res, 500, error_json("internal", e.what()));
    }
}

Json presets_json() {
    Json list = Json::array();
    for (const auto& name : preset_names()) {
        Preset p = make_preset(name);
        list.push_back({{"name", name},
                        {"degree", p.degree},
                        {"expected_code", p.expected_code},
                        {"problem", to_json(make_problem(p.triangulation, p.degree, name, p.heights))}});
    }
    return {{"v", 1}, {"presets", list}};
}

}  // namespace

ApiServer::ApiServer() : server_(std::make_unique<httplib::Server>()) {
    auto presets = std::make_shared<const std::string>(dump(presets_json()));
    auto& s = *server_;
    s.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
        send(res, 200, {{"v", 1}, {"status", "ok"}});
    });
    s.Get("/api/presets", [presets](const httplib::Request&, httplib::Response& res) {
        res.set_content(*presets, kJson);
    });
    s.Post("/api/patchwork", [](const httplib::Request& req, httplib::Response& res) {
        guarded(req, res, [](const Json& body) {
            BuildReport r = build(problem_from_json(body));
            if (!r.valid) throw InputError("invalid triangulation", r.violations);
            return to_json(r);
        });
    });
    s.Post("/api/convexify", [](const httplib::Request& req, httplib::Response& res) {
        guarded(req, res, [](const Json& body) {
            if (is_partition(body)) return to_json(convexify(partition_from_json(body)));
            return to_json(convexify(problem_from_json(body)));
        });
    });
    s.Post("/api/verify", [](const httplib::Request& req, httplib::Response& res) {
        guarded(req, res, [](const Json& body) {
            const Json& problem = body.contains("problem") ? body.at("problem") : body;
            VerifyOptions opts;
            int start = body.value("t_start", 1);
            int steps = body.value("t_steps", 8);
            opts.resolution = body.value("grid", 256);
            if (opts.resolution > 2048) throw InputError("grid is limited to 2048");
            opts.schedule = halving_schedule(start, steps);
            return to_json(verify(problem_from_json(problem), opts));
        });
    });
    s.set_logger([](const httplib::Request& req, const httplib::Response& res) {
        spdlog::info("{} {} -> {}", req.method, req.path, res.status);
    });
}

ApiServer::~ApiServer() = default;

bool ApiServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int ApiServer::bind_any(const std::string& host) { return server_->bind_to_any_port(host); }

bool ApiServer::listen_after_bind() { return server_->listen_after_bind(); }

void ApiServer::stop() { server_->stop(); }

bool ApiServer::running() const { return server_->is_running(); }

}  // namespace patchwork
