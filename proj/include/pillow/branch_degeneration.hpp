#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pillow/pillow_complex.hpp"
#include "pillow/report.hpp"
#include "pillow/surface_invariants.hpp"

namespace pillow {

/// Branch points, nodes and cusps of the general branch curve that
/// converge to a point where n doubled lines meet.
struct NPointBudget {
    int n = 0;
    std::int64_t branch_points = 0;
    std::int64_t nodes = 0;
    std::int64_t cusps = 0;

    friend bool operator==(const NPointBudget&, const NPointBudget&) = default;
};

enum class ObjectType { lines, three_points, six_points, two_points };
std::string_view to_string(ObjectType t);

struct TableRow {
    ObjectType type = ObjectType::lines;
    std::int64_t count = 0;
    std::int64_t branch_points = 0;  ///< per object
    std::int64_t nodes = 0;
    std::int64_t cusps = 0;
};

struct TableTotals {
    std::int64_t branch_points = 0;
    std::int64_t nodes = 0;
    std::int64_t cusps = 0;

    friend bool operator==(const TableTotals&, const TableTotals&) = default;
};

/// Where the singularities of the general branch curve go in the limit.
struct DegenerationTable {
    std::int64_t g = 0;
    std::vector<TableRow> rows;  ///< lines, 3-points, 6-points, 2-points
    TableTotals totals;

    const TableRow& row(ObjectType t) const;
    TableRow& row(ObjectType t);
    void recompute_totals();
};

/// Characters of the branch curve of a Del Pezzo surface of degree n,
/// the local smoothing of n planes through a point. 3 <= n <= 6.
BranchCharacters local_del_pezzo_characters(int n);

/// n in {2,...,6}.
NPointBudget npoint_budget(int n);

/// Object counts are read off the complex; budgets come from npoint_budget.
/// Throws MalformedComplex if a vertex has line-degree other than 3 or 6.
DegenerationTable build_table(const PillowConfig& c);

/// Compares table totals with the characters of a smooth K3 of genus g.
Report verify_conservation(const DegenerationTable& table, std::int64_t lines_in_complex);
Report verify_conservation(const PillowConfig& c);

/// Aligned text rendering in the row order lines, 3-points, 6-points, 2-points, totals.
std::string render_table(const DegenerationTable& table);

}  // namespace pillow
