#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pillow/report.hpp"

namespace pillow {

/// Label of a coordinate point, 1 .. 2ab+2.
struct VertexId {
    int value = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

enum class Side { top, bottom };
enum class LineSide { top, bottom, shared };
enum class LineKind { boundary, horizontal, vertical, diagonal };
enum class Half { lower, upper };

std::string_view to_string(Side s);
std::string_view to_string(LineSide s);
std::string_view to_string(LineKind k);
std::string_view to_string(Half h);

/// A double line: the intersection of two planes. Endpoints are stored with u < v.
struct Line {
    VertexId u;
    VertexId v;
    LineKind kind = LineKind::boundary;
    LineSide side = LineSide::shared;

    bool touches(VertexId x) const noexcept { return u == x || v == x; }
    bool meets(const Line& o) const noexcept { return touches(o.u) || touches(o.v); }
};

/// A plane, spanned by three coordinate points. The cell is (row 1..b, col 1..a).
struct Triangle {
    std::array<VertexId, 3> vertices;  ///< sorted ascending
    Side side = Side::top;
    int row = 0;
    int col = 0;
    Half half = Half::lower;

    bool contains(VertexId x) const noexcept {
        return vertices[0] == x || vertices[1] == x || vertices[2] == x;
    }
};

/// Grid point on one side of the pillow; row 0..b from the top, col 0..a from the left.
struct GridPos {
    Side side = Side::top;
    int row = 0;
    int col = 0;
    friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

/// The pillow of bidegree (a, b): two a x b grids of triangulated cells,
/// glued along their common boundary cycle of 2a+2b lines.
///
/// Labeling: boundary points 1 .. 2a+2b run clockwise from the top-left
/// corner, so the corners are 1, a+1, a+b+1 and 2a+b+1. Interior points are
/// row-major, top side 2a+2b+1 .. ab+a+b+1, bottom side ab+a+b+2 .. 2ab+2.
/// Top cells are split by rising diagonals, bottom cells by falling ones.
struct PillowConfig {
    int a = 0;
    int b = 0;
    int g = 0;
    std::vector<VertexId> vertices;    ///< ascending
    std::vector<Line> lines;           ///< lexicographic by (u, v)
    std::vector<Triangle> triangles;   ///< by (side, row, col, half)
    std::map<GridPos, VertexId> grid_map;

    VertexId at(Side side, int row, int col) const { return grid_map.at(GridPos{side, row, col}); }
};

/// Throws InvalidParameter unless a >= 2 and b >= 2.
void require_bidegree(int a, int b);

/// Boundary label of grid point (row, col) on an a x b grid; nullopt for interior points.
std::optional<VertexId> boundary_label(int a, int b, int row, int col);

/// The four corner labels in clockwise order.
std::array<VertexId, 4> corner_ids(int a, int b);

PillowConfig build_pillow(int a, int b);

/// Number of lines through each vertex, indexed by label (index 0 unused).
std::vector<int> line_degrees(const PillowConfig& c);
/// Number of triangles through each vertex, indexed by label (index 0 unused).
std::vector<int> triangle_degrees(const PillowConfig& c);

/// Checks every closed-surface and census condition:
///   lines_in_two_triangles, vertex_links_single_cycle,
///   face_adjacency_connected, euler_characteristic, vertex_degree_census.
/// Works on any structurally well-formed config, including damaged ones.
Report verify_sphere_triangulation(const PillowConfig& c);

/// Triangles adjacent across a shared line; indices into c.triangles.
std::vector<std::vector<std::size_t>> face_adjacency(const PillowConfig& c);
/// Lines that share a vertex; indices into c.lines.
std::vector<std::vector<std::size_t>> line_intersection_graph(const PillowConfig& c);

/// Unordered pairs of lines with no common vertex, by exhaustive enumeration.
std::int64_t count_disjoint_line_pairs(const PillowConfig& c);

/// (9g^2 - 51g + 78) / 2. Throws InvalidParameter for g < 9 or even g,
/// NonIntegral if the numerator is odd.
std::int64_t formula_disjoint_pairs(std::int64_t g);

/// Relabeling taking pillow(a, b) to pillow(b, a) by transposing both grids,
/// as a map indexed by label of `from` (index 0 unused). Returns nullopt if
/// the transposed triangles do not coincide with those of `to`.
std::optional<std::vector<VertexId>> transpose_isomorphism(const PillowConfig& from, const PillowConfig& to);

// Degeneration stages.

enum class Stage { two_surfaces, quadrics, planes };
std::string_view to_string(Stage s);

/// A face of a stage: a whole side, a rectangle, or a triangle. The boundary
/// lists the corner points in cyclic order.
struct StageFace {
    Side side = Side::top;
    int row = 0;  ///< 0 for whole-side faces
    int col = 0;
    std::optional<Half> half;
    std::vector<VertexId> boundary;
};

/// Dimensions of linear spans, from coordinate-point counts.
struct SpanDimensions {
    std::int64_t top = 0;
    std::int64_t bottom = 0;
    std::int64_t intersection = 0;
    std::int64_t ambient = 0;
};

struct StageConfig {
    Stage stage = Stage::planes;
    int a = 0;
    int b = 0;
    std::vector<StageFace> cells;
    std::vector<Line> lines;
    std::optional<SpanDimensions> spans;  ///< two_surfaces only
};

/// Union of two P^1 x P^1's meeting along the boundary cycle.
StageConfig two_surface_stage(int a, int b);
/// 2ab quadrics: the pillow with its diagonal lines removed.
StageConfig quadric_stage(int a, int b);
/// 4ab planes: the pillow itself, viewed as a stage.
StageConfig planes_stage(int a, int b);

/// Checks that every face boundary is a closed cycle of stage lines of the
/// expected length and every stage line bounds exactly two faces.
Report verify_stage(const StageConfig& s);

struct CupleReduction {
    int c = 1;
    std::pair<int, int> reduced;
    int primitive_multiple = 1;
};

/// c = gcd(a, b) and the reduced bidegree (a/c, b/c).
CupleReduction cuple_reduction(int a, int b);

}  // namespace pillow
