#pragma once

#include "patchwork/io.hpp"
#include "patchwork/lattice.hpp"

#include <string>

namespace patchwork {

/// Two panels: the symmetric copy of the triangulation with signs and the
/// curve, and the same disk with the antipodal boundary gluing marked.
std::string render_svg(const SignedTriangulation& t, const BuildReport& report);

}  // namespace patchwork
