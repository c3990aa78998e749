#include "patchwork/io.hpp"
#include "patchwork/pipeline.hpp"
#include "patchwork/polyval.hpp"
#include "patchwork/presets.hpp"
#include "patchwork/topology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace patchwork;

namespace {

// The package layer converts between dicts and these JSON strings.

std::string build_json(const std::string& problem) {
    return dump(to_json(build(problem_from_json(Json::parse(problem)))));
}

std::string convexify_json(const std::string& doc) {
    Json j = Json::parse(doc);
    if (is_partition(j)) return dump(to_json(convexify(partition_from_json(j))));
    return dump(to_json(convexify(problem_from_json(j))));
}

std::string verify_json(const std::string& problem, int t_start, int t_steps, int grid) {
    VerifyOptions opts;
    opts.schedule = halving_schedule(t_start, t_steps);
    opts.resolution = grid;
    py::gil_scoped_release release;
    return dump(to_json(verify(problem_from_json(Json::parse(problem)), opts)));
}

std::string preset_json(const std::string& name, std::int64_t degree) {
    Preset p = make_preset(name, degree);
    PatchworkProblem problem = make_problem(p.triangulation, p.degree, p.name, p.heights);
    if (!p.expected_code.empty()) problem.notes = "expected code " + p.expected_code;
    return dump(to_json(problem));
}

std::string chart_json(const std::string& expr, const std::vector<std::pair<std::int64_t, std::int64_t>>& adjoin,
                       const std::string& mode) {
    std::vector<LatticePoint> normals;
    for (const auto& [a, b] : adjoin) normals.push_back({a, b});
    return dump(chart_report(expr, normals, mode));
}

std::string family(const std::vector<std::string>& parts, const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& heights) {
    std::vector<SparsePolynomial> polys;
    for (const auto& p : parts) polys.push_back(SparsePolynomial::parse(p));
    HeightFunction nu;
    for (const auto& [w, h] : heights) nu.set({w.first, w.second}, h);
    return patchwork_family(polys, nu).to_string();
}

py::dict isotopy(const std::string& poly, int resolution) {
    SparsePolynomial b = SparsePolynomial::parse(poly);
    NumericIsotopy n;
    {
        py::gil_scoped_release release;
        n = numeric_isotopy(b, resolution);
    }
    py::dict d;
    d["degree"] = n.degree;
    d["resolution"] = n.resolution;
    d["quadrant_components"] = n.quadrant_components;
    d["affine_components"] = n.affine_components;
    d["unbounded_ends"] = n.unbounded_ends;
    d["code"] = n.code ? py::object(py::str(n.code->encoding)) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Combinatorial patchworking of real algebraic curves";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const nlohmann::json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("build_json", &build_json, py::arg("problem"));
    m.def("convexify_json", &convexify_json, py::arg("document"));
    m.def("verify_json", &verify_json, py::arg("problem"), py::arg("t_start") = 1, py::arg("t_steps") = 12,
          py::arg("grid") = 512);
    m.def("preset_json", &preset_json, py::arg("name"), py::arg("degree") = 0);
    m.def("chart_json", &chart_json, py::arg("expr"), py::arg("adjoin") = std::vector<std::pair<std::int64_t, std::int64_t>>{},
          py::arg("mode") = "");
    m.def("preset_names", &preset_names);
    m.def("patchwork_family", &family, py::arg("parts"), py::arg("heights"),
          "Symbolic family such as '8x^3 - x^2 + 4y^2 + t^2'.");
    m.def("numeric_isotopy", &isotopy, py::arg("polynomial"), py::arg("resolution") = 256);
    m.def("asymptote_distances", [](const std::string& poly, const std::vector<double>& radii) {
        return asymptote_distances(SparsePolynomial::parse(poly), radii);
    }, py::arg("polynomial"), py::arg("radii"));
    m.def("harnack_bound", &harnack_bound, py::arg("degree"));
}
