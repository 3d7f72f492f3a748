#include "pillow/branch_degeneration.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "pillow/checked.hpp"
#include "pillow/errors.hpp"

namespace pillow {

using checked::add;
using checked::mul;
using checked::sub;

std::string_view to_string(ObjectType t) {
    switch (t) {
        case ObjectType::lines: return "lines";
        case ObjectType::three_points: return "three_points";
        case ObjectType::six_points: return "six_points";
        case ObjectType::two_points: return "two_points";
    }
    return "?";
}

const TableRow& DegenerationTable::row(ObjectType t) const {
    for (const auto& r : rows)
        if (r.type == t) return r;
    throw std::out_of_range("table has no row " + std::string(to_string(t)));
}

TableRow& DegenerationTable::row(ObjectType t) {
    return const_cast<TableRow&>(std::as_const(*this).row(t));
}

void DegenerationTable::recompute_totals() {
    totals = {};
    for (const auto& r : rows) {
        totals.branch_points = add(totals.branch_points, mul(r.count, r.branch_points));
        totals.nodes = add(totals.nodes, mul(r.count, r.nodes));
        totals.cusps = add(totals.cusps, mul(r.count, r.cusps));
    }
}

BranchCharacters local_del_pezzo_characters(int n) {
    if (n < 3 || n > 6) throw InvalidParameter("local_del_pezzo_characters: n must be in [3, 6]");
    return BranchCharacters{2 * n, 2 * (n - 2) * (n - 3), 6 * n - 12, 12};
}

NPointBudget npoint_budget(int n) {
    if (n == 2) return NPointBudget{2, 0, 4, 0};
    if (n < 3 || n > 6) throw InvalidParameter("npoint_budget: n must be in [2, 6]");
    // Every node and cusp of the local Del Pezzo branch curve lands on the
    // concurrent point; of its 12 branch points, one per line stays away.
    return NPointBudget{n, 12 - n, 2 * (n - 2) * (n - 3), 6 * n - 12};
}

DegenerationTable build_table(const PillowConfig& c) {
    const auto deg = line_degrees(c);
    std::int64_t threes = 0, sixes = 0;
    for (auto v : c.vertices) {
        const int d = static_cast<std::size_t>(v.value) < deg.size() ? deg[v.value] : 0;
        if (d == 3)
            ++threes;
        else if (d == 6)
            ++sixes;
        else
            throw MalformedComplex("vertex " + std::to_string(v.value) + " has line-degree " + std::to_string(d));
    }

    DegenerationTable t;
    t.g = c.g;
    auto budget_row = [](ObjectType type, std::int64_t count, const NPointBudget& nb) {
        return TableRow{type, count, nb.branch_points, nb.nodes, nb.cusps};
    };
    t.rows.push_back(TableRow{ObjectType::lines, static_cast<std::int64_t>(c.lines.size()), 0, 0, 0});
    t.rows.push_back(budget_row(ObjectType::three_points, threes, npoint_budget(3)));
    t.rows.push_back(budget_row(ObjectType::six_points, sixes, npoint_budget(6)));
    t.rows.push_back(budget_row(ObjectType::two_points, count_disjoint_line_pairs(c), npoint_budget(2)));
    t.recompute_totals();
    return t;
}

Report verify_conservation(const DegenerationTable& table, std::int64_t lines_in_complex) {
    const auto smooth = branch_characters(k3(table.g));
    Report r;
    r.add("branch_points", table.totals.branch_points, smooth.t);
    r.add("nodes", table.totals.nodes, smooth.n);
    r.add("cusps", table.totals.cusps, smooth.k);

    const auto& lines = table.row(ObjectType::lines);
    r.add("lines_row_contributes_nothing",
          add(add(mul(lines.count, lines.branch_points), mul(lines.count, lines.nodes)),
              mul(lines.count, lines.cusps)),
          0);
    // Each double line appears twice in the limit branch curve.
    r.add("degree", mul(2, lines_in_complex), smooth.b);
    return r;
}

Report verify_conservation(const PillowConfig& c) {
    return verify_conservation(build_table(c), static_cast<std::int64_t>(c.lines.size()));
}

std::string render_table(const DegenerationTable& table) {
    struct Cells {
        std::string object, number, branch, nodes, cusps;
    };
    std::vector<Cells> lines;
    lines.push_back({"Object", "Number", "Branch", "Nodes", "Cusps"});
    auto name = [](ObjectType t) -> std::string {
        switch (t) {
            case ObjectType::lines: return "Lines";
            case ObjectType::three_points: return "3-points";
            case ObjectType::six_points: return "6-points";
            case ObjectType::two_points: return "2-points";
        }
        return "?";
    };
    for (const auto& r : table.rows)
        lines.push_back({name(r.type), std::to_string(r.count), std::to_string(r.branch_points),
                         std::to_string(r.nodes), std::to_string(r.cusps)});
    lines.push_back({"Totals", "", std::to_string(table.totals.branch_points), std::to_string(table.totals.nodes),
                     std::to_string(table.totals.cusps)});

    std::size_t w[5] = {0, 0, 0, 0, 0};
    for (const auto& l : lines) {
        w[0] = std::max(w[0], l.object.size());
        w[1] = std::max(w[1], l.number.size());
        w[2] = std::max(w[2], l.branch.size());
        w[3] = std::max(w[3], l.nodes.size());
        w[4] = std::max(w[4], l.cusps.size());
    }

    std::ostringstream os;
    os << "g = " << table.g << "\n";
    auto rule = [&] {
        os << std::string(w[0], '-') << "-+-" << std::string(w[1], '-') << "-+-" << std::string(w[2], '-')
           << "-+-" << std::string(w[3], '-') << "-+-" << std::string(w[4], '-') << "\n";
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (i + 1 == lines.size()) rule();
        os << std::left << std::setw(static_cast<int>(w[0])) << l.object << " | " << std::right
           << std::setw(static_cast<int>(w[1])) << l.number << " | " << std::setw(static_cast<int>(w[2]))
           << l.branch << " | " << std::setw(static_cast<int>(w[3])) << l.nodes << " | "
           << std::setw(static_cast<int>(w[4])) << l.cusps << "\n";
        if (i == 0) rule();
    }
    return os.str();
}

}  // namespace pillow
