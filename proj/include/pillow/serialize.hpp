#pragma once

#include <string>

#include "json.hpp"

#include "pillow/branch_degeneration.hpp"
#include "pillow/pillow_complex.hpp"
#include "pillow/report.hpp"
#include "pillow/surface_invariants.hpp"

namespace pillow {

// Insertion-ordered JSON so that output is byte-stable in declared field order.
using Json = nlohmann::ordered_json;

Json to_json(const PillowConfig& c);
Json to_json(const DegenerationTable& t);
Json to_json(const BranchCharacters& c);
Json to_json(const SurfaceClasses& s);
Json to_json(const Report& r);
Json to_json(const StageConfig& s);

/// Face-adjacency graph: one node per triangle, one edge per shared line.
std::string face_adjacency_dot(const PillowConfig& c);
/// Line-intersection graph: one node per line, an edge when two lines share a point.
std::string line_intersection_dot(const PillowConfig& c);

}  // namespace pillow
