#include "server.hpp"

#include "patchwork/io.hpp"
#include "patchwork/pipeline.hpp"
#include "patchwork/presets.hpp"
#include "patchwork/svg.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace patchwork;

enum Exit : int { kOk = 0, kInput = 1, kInfeasible = 2, kUnstable = 3 };

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

void emit(const std::string& path, const Json& j) {
    if (path.empty()) {
        std::cout << dump(j);
    } else {
        write_file(path, dump(j));
    }
}

int cmd_build(const std::string& file, const std::string& svg, const std::string& json_out) {
    PatchworkProblem p = problem_from_json(read_json(file));
    BuildReport r = build(p);
    emit(json_out, to_json(r));
    if (!r.valid) {
        for (const auto& v : r.violations) spdlog::error("{}", v);
        return kInput;
    }
    if (!svg.empty()) write_file(svg, render_svg(p.triangulation(), r));
    spdlog::info("code {} with {} components", r.code.value_or("n/a"), r.components);
    return kOk;
}

int cmd_convexify(const std::string& file, const std::string& heights_out) {
    Json doc = read_json(file);
    ConvexifyReport r;
    std::optional<PatchworkProblem> problem;
    if (is_partition(doc)) {
        r = convexify(partition_from_json(doc));
    } else {
        problem = problem_from_json(doc);
        r = convexify(*problem);
    }
    std::cout << dump(to_json(r));
    if (!r.feasible) return kInfeasible;
    if (!heights_out.empty()) {
        if (problem) {
            HeightFunction h;
            for (const auto& [pt, v] : r.heights) h.set(pt, v);
            problem->heights = std::vector<std::int64_t>();
            for (const auto& v : problem->vertices) problem->heights->push_back(h.at(v));
            write_file(heights_out, dump(to_json(*problem)));
        } else {
            Json hj = to_json(r);
            write_file(heights_out, dump(hj.at("heights")));
        }
    }
    return kOk;
}

int cmd_verify(const std::string& file, int t_start, int t_steps, int grid) {
    PatchworkProblem p = problem_from_json(read_json(file));
    VerifyOptions opts;
    opts.schedule = halving_schedule(t_start, t_steps);
    opts.resolution = grid;
    NumericReport r = verify(p, opts);
    std::cout << dump(to_json(r));
    return r.stabilized ? kOk : kUnstable;
}

int cmd_chart(const std::string& expr, const std::vector<std::string>& adjoin, bool affine, bool projective) {
    std::vector<LatticePoint> normals;
    for (const auto& n : adjoin) {
        auto comma = n.find(',');
        if (comma == std::string::npos) throw InputError("--adjoin expects a,b");
        try {
            normals.push_back({std::stoll(n.substr(0, comma)), std::stoll(n.substr(comma + 1))});
        } catch (const std::logic_error&) {
            throw InputError("bad --adjoin value " + n);
        }
    }
    std::cout << dump(chart_report(expr, normals, affine ? "affine" : projective ? "projective" : ""));
    return kOk;
}

int cmd_preset(const std::string& name, std::int64_t degree) {
    Preset p = make_preset(name, degree);
    PatchworkProblem problem = make_problem(p.triangulation, p.degree, p.name, p.heights);
    if (!p.expected_code.empty()) problem.notes = "expected code " + p.expected_code;
    std::cout << dump(to_json(problem));
    return kOk;
}

int cmd_serve(int port) {
    ApiServer server;
    spdlog::info("listening on port {}", port);
    if (!server.listen("0.0.0.0", port)) {
        spdlog::error("cannot bind port {}", port);
        return kInput;
    }
    return kOk;
}

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("patchwork");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("PATCHWORK_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Combinatorial patchworking of real algebraic curves"};
    app.require_subcommand(1);

    std::string file, svg, json_out, heights_out, expr, preset_name;
    int t_start = 1, t_steps = 12, grid = 512, port = 8080;
    std::int64_t degree = 0;
    std::vector<std::string> adjoin;
    bool affine = false, projective = false;

    auto* build_cmd = app.add_subcommand("build", "T-curve, isotopy code and report for a problem file");
    build_cmd->add_option("file", file, "problem JSON, or - for stdin")->required();
    build_cmd->add_option("--svg", svg, "write an SVG rendering");
    build_cmd->add_option("--json", json_out, "write the report here instead of stdout");

    auto* convexify_cmd = app.add_subcommand("convexify", "find or check convex heights");
    convexify_cmd->add_option("file", file, "problem or partition JSON")->required();
    convexify_cmd->add_option("--heights", heights_out, "write the heights");

    auto* verify_cmd = app.add_subcommand("verify", "numeric check of the patchwork at small t");
    verify_cmd->add_option("file", file, "problem JSON")->required();
    verify_cmd->add_option("--t-start", t_start, "first t is 2^-R")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--t-steps", t_steps, "number of halvings")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--grid", grid, "grid resolution")->check(CLI::Range(8, 8192));

    auto* chart_cmd = app.add_subcommand("chart", "chart of a trinomial or quasi-homogeneous polynomial");
    chart_cmd->add_option("poly", expr, "polynomial, e.g. \"x^2 + y^2 - 1\"")->required();
    chart_cmd->add_option("--adjoin", adjoin, "adjoin a side with outward normal a,b")->delimiter(';');
    auto* aff = chart_cmd->add_flag("--affine", affine, "glue into the affine plane");
    chart_cmd->add_flag("--projective", projective, "glue into the projective plane")->excludes(aff);

    auto* preset_cmd = app.add_subcommand("preset", "print a built-in problem");
    preset_cmd->add_option("name", preset_name, "ellipse, harnack or gudkov")->required();
    preset_cmd->add_option("--degree", degree, "degree (harnack only)");

    auto* serve_cmd = app.add_subcommand("serve", "serve the HTTP API");
    serve_cmd->add_option("--port", port, "port")->check(CLI::Range(1, 65535));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*build_cmd) return cmd_build(file, svg, json_out);
        if (*convexify_cmd) return cmd_convexify(file, heights_out);
        if (*verify_cmd) return cmd_verify(file, t_start, t_steps, grid);
        if (*chart_cmd) return cmd_chart(expr, adjoin, affine, projective);
        if (*preset_cmd) return cmd_preset(preset_name, degree);
        if (*serve_cmd) return cmd_serve(port);
    } catch (const InputError& e) {
        std::cerr << dump(error_json("invalid-input", e.what(), e.violations()));
        return kInput;
    } catch (const InfeasibleError& e) {
        std::cerr << dump(error_json("infeasible", e.what()));
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << dump(error_json("invalid-input", e.what()));
        return kInput;
    } catch (const std::domain_error& e) {
        std::cerr << dump(error_json("invalid-input", e.what()));
        return kInput;
    }
    return kOk;
}
