#pragma once

#include "patchwork/convexity.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/polyval.hpp"
#include "patchwork/topology.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchwork {

using Json = nlohmann::json;

/// Malformed or inconsistent input file.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what, std::vector<std::string> violations = {})
        : std::invalid_argument(what), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

struct PatchworkProblem {
    std::int64_t degree = 0;
    std::vector<LatticePoint> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> signs;
    std::optional<std::vector<std::int64_t>> heights;
    std::string name;
    std::string notes;

    /// Domain is the hull of the vertices.  Throws InputError when a vertex
    /// leaves the degree triangle or the arrays disagree in length.
    SignedTriangulation triangulation() const;
    std::optional<HeightFunction> height_function() const;

    friend bool operator==(const PatchworkProblem&, const PatchworkProblem&) = default;
};

PatchworkProblem make_problem(const SignedTriangulation& t, std::int64_t degree, const std::string& name,
                              const std::optional<HeightFunction>& heights = std::nullopt);

Json to_json(const PatchworkProblem& p);
PatchworkProblem problem_from_json(const Json& j);

Json to_json(const ConvexPartition& p);
ConvexPartition partition_from_json(const Json& j);
/// True for a document whose "kind" is "partition".
bool is_partition(const Json& j);

struct BuildReport {
    std::string name;
    std::int64_t degree = 0;
    bool valid = false;
    bool primitive = false;
    std::vector<std::string> violations;
    bool convexifiable = false;
    std::vector<std::int64_t> heights;  // parallel to the vertices, empty when not convexifiable
    std::optional<std::string> code;
    std::size_t components = 0;
    int one_sided = 0;
    std::size_t ovals = 0;
    std::size_t harnack_bound = 0;
    std::size_t boundary_crossings = 0;
    std::vector<Segment> curve;
    std::string note;

    friend bool operator==(const BuildReport&, const BuildReport&) = default;
};

Json to_json(const BuildReport& r);
BuildReport build_report_from_json(const Json& j);

struct ConvexifyReport {
    bool feasible = false;
    bool given = false;  // heights were supplied and checked
    std::vector<std::pair<LatticePoint, std::int64_t>> heights;
    std::vector<InfeasibilityCertificate::Entry> certificate;
    bool certificate_verified = false;
    std::string violation;

    friend bool operator==(const ConvexifyReport& a, const ConvexifyReport& b);
};

Json to_json(const ConvexifyReport& r);
ConvexifyReport convexify_report_from_json(const Json& j);

Json to_json(const NumericReport& r);

/// {code, message, violations}
Json error_json(const std::string& code, const std::string& message, const std::vector<std::string>& violations = {});

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace patchwork
