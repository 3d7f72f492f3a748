#include "pillow/serialize.hpp"

#include <sstream>

namespace pillow {

namespace {

std::string triangle_node(const Triangle& t) {
    std::ostringstream os;
    os << to_string(t.side) << "_r" << t.row << "_c" << t.col << "_" << to_string(t.half);
    return os.str();
}

std::string line_node(const Line& l) { return "L" + std::to_string(l.u.value) + "_" + std::to_string(l.v.value); }

constexpr const char* kConventions =
    "boundary points 1..2a+2b clockwise from the top-left corner; interior points row-major, "
    "top side first; top cells split by rising diagonals, bottom cells by falling diagonals";

}  // namespace

Json to_json(const PillowConfig& c) {
    Json j;
    j["a"] = c.a;
    j["b"] = c.b;
    j["g"] = c.g;
    Json vertices = Json::array();
    for (auto v : c.vertices) vertices.push_back(v.value);
    j["vertices"] = std::move(vertices);
    Json lines = Json::array();
    for (const auto& l : c.lines)
        lines.push_back(Json{{"u", l.u.value}, {"v", l.v.value}, {"kind", to_string(l.kind)}, {"side", to_string(l.side)}});
    j["lines"] = std::move(lines);
    Json triangles = Json::array();
    for (const auto& t : c.triangles)
        triangles.push_back(Json{{"v1", t.vertices[0].value},
                                 {"v2", t.vertices[1].value},
                                 {"v3", t.vertices[2].value},
                                 {"side", to_string(t.side)},
                                 {"row", t.row},
                                 {"col", t.col},
                                 {"half", to_string(t.half)}});
    j["triangles"] = std::move(triangles);
    j["conventions"] = kConventions;
    return j;
}

Json to_json(const DegenerationTable& t) {
    Json j;
    j["g"] = t.g;
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back(Json{{"type", to_string(r.type)},
                            {"count", r.count},
                            {"branch", r.branch_points},
                            {"nodes", r.nodes},
                            {"cusps", r.cusps}});
    j["rows"] = std::move(rows);
    j["totals"] = Json{{"branch", t.totals.branch_points}, {"nodes", t.totals.nodes}, {"cusps", t.totals.cusps}};
    return j;
}

Json to_json(const BranchCharacters& c) { return Json{{"b", c.b}, {"n", c.n}, {"k", c.k}, {"t", c.t}}; }

Json to_json(const SurfaceClasses& s) {
    Json j{{"label", s.label}, {"d", s.d}, {"kh", s.kh}, {"k2", s.k2}, {"euler", s.euler}};
    if (s.ambient_dim) j["ambient_dim"] = *s.ambient_dim;
    return j;
}

Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks())
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return checks;
}

Json to_json(const StageConfig& s) {
    Json j;
    j["stage"] = to_string(s.stage);
    j["a"] = s.a;
    j["b"] = s.b;
    Json cells = Json::array();
    for (const auto& f : s.cells) {
        Json cell{{"side", to_string(f.side)}, {"row", f.row}, {"col", f.col}};
        if (f.half) cell["half"] = to_string(*f.half);
        Json boundary = Json::array();
        for (auto v : f.boundary) boundary.push_back(v.value);
        cell["boundary"] = std::move(boundary);
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    Json lines = Json::array();
    for (const auto& l : s.lines)
        lines.push_back(Json{{"u", l.u.value}, {"v", l.v.value}, {"kind", to_string(l.kind)}, {"side", to_string(l.side)}});
    j["lines"] = std::move(lines);
    if (s.spans)
        j["spans"] = Json{{"top", s.spans->top},
                          {"bottom", s.spans->bottom},
                          {"intersection", s.spans->intersection},
                          {"ambient", s.spans->ambient}};
    return j;
}

std::string face_adjacency_dot(const PillowConfig& c) {
    std::ostringstream os;
    os << "// " << kConventions << "\n";
    os << "graph face_adjacency_a" << c.a << "_b" << c.b << " {\n";
    for (const auto& t : c.triangles)
        os << "  " << triangle_node(t) << " [label=\"" << t.vertices[0].value << "," << t.vertices[1].value << ","
           << t.vertices[2].value << "\"];\n";
    const auto adj = face_adjacency(c);
    for (std::size_t x = 0; x < adj.size(); ++x)
        for (auto y : adj[x])
            if (x < y) os << "  " << triangle_node(c.triangles[x]) << " -- " << triangle_node(c.triangles[y]) << ";\n";
    os << "}\n";
    return os.str();
}

std::string line_intersection_dot(const PillowConfig& c) {
    std::ostringstream os;
    os << "// " << kConventions << "\n";
    os << "graph line_intersection_a" << c.a << "_b" << c.b << " {\n";
    for (const auto& l : c.lines)
        os << "  " << line_node(l) << " [kind=\"" << to_string(l.kind) << "\", side=\"" << to_string(l.side)
           << "\"];\n";
    const auto adj = line_intersection_graph(c);
    for (std::size_t x = 0; x < adj.size(); ++x)
        for (auto y : adj[x])
            if (x < y) os << "  " << line_node(c.lines[x]) << " -- " << line_node(c.lines[y]) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace pillow
