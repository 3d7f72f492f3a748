#include "pillow/pillow_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "pillow/checked.hpp"
#include "pillow/errors.hpp"

namespace pillow {

std::string_view to_string(Side s) { return s == Side::top ? "top" : "bottom"; }

std::string_view to_string(LineSide s) {
    switch (s) {
        case LineSide::top: return "top";
        case LineSide::bottom: return "bottom";
        case LineSide::shared: return "shared";
    }
    return "?";
}

std::string_view to_string(LineKind k) {
    switch (k) {
        case LineKind::boundary: return "boundary";
        case LineKind::horizontal: return "horizontal";
        case LineKind::vertical: return "vertical";
        case LineKind::diagonal: return "diagonal";
    }
    return "?";
}

std::string_view to_string(Half h) { return h == Half::lower ? "lower" : "upper"; }

std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::two_surfaces: return "two_surfaces";
        case Stage::quadrics: return "quadrics";
        case Stage::planes: return "planes";
    }
    return "?";
}

void require_bidegree(int a, int b) {
    if (a < 2 || b < 2)
        throw InvalidParameter("bidegree (a, b) requires a >= 2 and b >= 2, got (" + std::to_string(a) +
                               ", " + std::to_string(b) + ")");
    // 2ab + 2 labels must fit comfortably in an int.
    if (a > 10000 || b > 10000) throw InvalidParameter("bidegree too large");
}

std::optional<VertexId> boundary_label(int a, int b, int row, int col) {
    if (row == 0) return VertexId{col + 1};
    if (col == a) return VertexId{a + 1 + row};
    if (row == b) return VertexId{a + b + 1 + (a - col)};
    if (col == 0) return VertexId{2 * a + b + 1 + (b - row)};
    return std::nullopt;
}

std::array<VertexId, 4> corner_ids(int a, int b) {
    return {VertexId{1}, VertexId{a + 1}, VertexId{a + b + 1}, VertexId{2 * a + b + 1}};
}

namespace {

using Edge = std::pair<int, int>;

Edge edge_key(VertexId x, VertexId y) {
    return x.value < y.value ? Edge{x.value, y.value} : Edge{y.value, x.value};
}

Triangle make_triangle(VertexId p, VertexId q, VertexId r, Side side, int row, int col, Half half) {
    std::array<VertexId, 3> v{p, q, r};
    std::sort(v.begin(), v.end());
    return Triangle{v, side, row, col, half};
}

std::array<Edge, 3> triangle_edges(const Triangle& t) {
    const auto& v = t.vertices;
    return {edge_key(v[0], v[1]), edge_key(v[1], v[2]), edge_key(v[0], v[2])};
}

int max_label(const PillowConfig& c) {
    int m = 0;
    for (auto v : c.vertices) m = std::max(m, v.value);
    for (const auto& l : c.lines) m = std::max({m, l.u.value, l.v.value});
    for (const auto& t : c.triangles) m = std::max(m, t.vertices[2].value);
    return m;
}

std::size_t count_components(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            for (auto y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
        }
    }
    return components;
}

// The link of a vertex is a single cycle iff its edges form one connected
// 2-regular graph on at least three vertices.
bool link_is_single_cycle(const std::vector<Edge>& link) {
    if (link.size() < 3) return false;
    std::map<int, std::vector<int>> adj;
    std::set<Edge> distinct;
    for (auto [x, y] : link) {
        if (!distinct.insert(Edge{x, y}).second) return false;
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (const auto& [_, nbrs] : adj)
        if (nbrs.size() != 2) return false;
    if (adj.size() != link.size()) return false;
    // Walk the cycle from any vertex; it must visit everything.
    const int start = adj.begin()->first;
    int prev = start, cur = adj[start][0];
    std::size_t steps = 1;
    while (cur != start) {
        const auto& nbrs = adj[cur];
        int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
        ++steps;
    }
    return steps == adj.size();
}

}  // namespace

PillowConfig build_pillow(int a, int b) {
    require_bidegree(a, b);
    PillowConfig c;
    c.a = a;
    c.b = b;
    c.g = 2 * a * b + 1;

    for (Side side : {Side::top, Side::bottom}) {
        const int base = side == Side::top ? 2 * a + 2 * b + 1 : a * b + a + b + 2;
        for (int row = 0; row <= b; ++row)
            for (int col = 0; col <= a; ++col) {
                auto label = boundary_label(a, b, row, col);
                c.grid_map[GridPos{side, row, col}] =
                    label ? *label : VertexId{base + (row - 1) * (a - 1) + (col - 1)};
            }
    }

    for (int id = 1; id <= 2 * a * b + 2; ++id) c.vertices.push_back(VertexId{id});

    std::map<Edge, Line> lines;
    auto add_line = [&](VertexId x, VertexId y, LineKind kind, LineSide side) {
        auto key = edge_key(x, y);
        lines.try_emplace(key, Line{VertexId{key.first}, VertexId{key.second}, kind, side});
    };

    for (Side side : {Side::top, Side::bottom}) {
        const LineSide own = side == Side::top ? LineSide::top : LineSide::bottom;
        auto at = [&](int row, int col) { return c.at(side, row, col); };
        for (int row = 0; row <= b; ++row)
            for (int col = 0; col < a; ++col) {
                const bool rim = row == 0 || row == b;
                add_line(at(row, col), at(row, col + 1), rim ? LineKind::boundary : LineKind::horizontal,
                         rim ? LineSide::shared : own);
            }
        for (int row = 0; row < b; ++row)
            for (int col = 0; col <= a; ++col) {
                const bool rim = col == 0 || col == a;
                add_line(at(row, col), at(row + 1, col), rim ? LineKind::boundary : LineKind::vertical,
                         rim ? LineSide::shared : own);
            }
        for (int i = 1; i <= b; ++i)
            for (int j = 1; j <= a; ++j) {
                const VertexId ul = at(i - 1, j - 1), ur = at(i - 1, j);
                const VertexId ll = at(i, j - 1), lr = at(i, j);
                if (side == Side::top) {
                    add_line(ll, ur, LineKind::diagonal, own);
                    c.triangles.push_back(make_triangle(ll, lr, ur, side, i, j, Half::lower));
                    c.triangles.push_back(make_triangle(ll, ul, ur, side, i, j, Half::upper));
                } else {
                    add_line(ul, lr, LineKind::diagonal, own);
                    c.triangles.push_back(make_triangle(ul, ll, lr, side, i, j, Half::lower));
                    c.triangles.push_back(make_triangle(ul, ur, lr, side, i, j, Half::upper));
                }
            }
    }

    c.lines.reserve(lines.size());
    for (auto& [_, line] : lines) c.lines.push_back(line);
    return c;
}

std::vector<int> line_degrees(const PillowConfig& c) {
    std::vector<int> deg(static_cast<std::size_t>(max_label(c)) + 1, 0);
    for (const auto& l : c.lines) {
        ++deg[l.u.value];
        ++deg[l.v.value];
    }
    return deg;
}

std::vector<int> triangle_degrees(const PillowConfig& c) {
    std::vector<int> deg(static_cast<std::size_t>(max_label(c)) + 1, 0);
    for (const auto& t : c.triangles)
        for (auto v : t.vertices) ++deg[v.value];
    return deg;
}

std::vector<std::vector<std::size_t>> face_adjacency(const PillowConfig& c) {
    std::map<Edge, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < c.triangles.size(); ++i)
        for (const auto& e : triangle_edges(c.triangles[i])) by_edge[e].push_back(i);
    std::vector<std::vector<std::size_t>> adj(c.triangles.size());
    for (const auto& [_, faces] : by_edge)
        for (std::size_t x = 0; x < faces.size(); ++x)
            for (std::size_t y = x + 1; y < faces.size(); ++y) {
                adj[faces[x]].push_back(faces[y]);
                adj[faces[y]].push_back(faces[x]);
            }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<std::vector<std::size_t>> line_intersection_graph(const PillowConfig& c) {
    std::vector<std::vector<std::size_t>> adj(c.lines.size());
    for (std::size_t x = 0; x < c.lines.size(); ++x)
        for (std::size_t y = x + 1; y < c.lines.size(); ++y)
            if (c.lines[x].meets(c.lines[y])) {
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
    return adj;
}

Report verify_sphere_triangulation(const PillowConfig& c) {
    Report report;

    // (i) every line lies in exactly two triangles, and triangles only use lines.
    std::map<Edge, int> faces_on_edge;
    for (const auto& t : c.triangles)
        for (const auto& e : triangle_edges(t)) ++faces_on_edge[e];
    std::set<Edge> line_set;
    std::int64_t bad_lines = 0;
    for (const auto& l : c.lines) {
        auto key = edge_key(l.u, l.v);
        line_set.insert(key);
        auto it = faces_on_edge.find(key);
        if (it == faces_on_edge.end() || it->second != 2) ++bad_lines;
    }
    for (const auto& [e, _] : faces_on_edge)
        if (!line_set.contains(e)) ++bad_lines;
    report.add("lines_in_two_triangles", bad_lines, 0);

    // (ii) vertex links.
    std::map<int, std::vector<Edge>> links;
    for (auto v : c.vertices) links[v.value];
    for (const auto& t : c.triangles)
        for (int i = 0; i < 3; ++i) {
            const auto& v = t.vertices;
            links[v[i].value].push_back(edge_key(v[(i + 1) % 3], v[(i + 2) % 3]));
        }
    std::int64_t bad_links = 0;
    for (const auto& [_, link] : links)
        if (!link_is_single_cycle(link)) ++bad_links;
    report.add("vertex_links_single_cycle", bad_links, 0);

    // (iii) face adjacency graph connected.
    const auto adj = face_adjacency(c);
    report.add("face_adjacency_connected", static_cast<std::int64_t>(count_components(adj.size(), adj)), 1);

    // (iv) Euler characteristic.
    const auto chi = static_cast<std::int64_t>(c.vertices.size()) - static_cast<std::int64_t>(c.lines.size()) +
                     static_cast<std::int64_t>(c.triangles.size());
    report.add("euler_characteristic", chi, 2);

    // (v) corners in three planes, every other point in six.
    const auto corners = corner_ids(c.a, c.b);
    const auto deg = triangle_degrees(c);
    std::int64_t bad_degrees = 0;
    for (auto v : c.vertices) {
        const bool corner = std::find(corners.begin(), corners.end(), v) != corners.end();
        const int got = static_cast<std::size_t>(v.value) < deg.size() ? deg[v.value] : 0;
        if (got != (corner ? 3 : 6)) ++bad_degrees;
    }
    report.add("vertex_degree_census", bad_degrees, 0);
    return report;
}

std::int64_t count_disjoint_line_pairs(const PillowConfig& c) {
    std::int64_t count = 0;
    const auto& lines = c.lines;
    for (std::size_t x = 0; x < lines.size(); ++x)
        for (std::size_t y = x + 1; y < lines.size(); ++y)
            if (!lines[x].meets(lines[y])) ++count;
    return count;
}

std::int64_t formula_disjoint_pairs(std::int64_t g) {
    using namespace checked;
    if (g < 9 || g % 2 == 0)
        throw InvalidParameter("formula_disjoint_pairs: g must be odd and >= 9, got " + std::to_string(g));
    const Int ab = (g - 1) / 2;
    bool factors = false;
    for (Int a = 2; a * a <= ab && !factors; ++a) factors = ab % a == 0;
    if (!factors)
        throw InvalidParameter("formula_disjoint_pairs: g = " + std::to_string(g) +
                               " is not 2ab+1 with a, b >= 2");
    const Int numerator = add(sub(mul(9, g, g), mul(51, g)), 78);
    if (numerator % 2 != 0) throw NonIntegral("9g^2 - 51g + 78 is odd for g = " + std::to_string(g));
    return numerator / 2;
}

std::optional<std::vector<VertexId>> transpose_isomorphism(const PillowConfig& from, const PillowConfig& to) {
    if (from.a != to.b || from.b != to.a) return std::nullopt;
    std::vector<VertexId> map(static_cast<std::size_t>(max_label(from)) + 1, VertexId{0});
    for (const auto& [pos, label] : from.grid_map) {
        auto it = to.grid_map.find(GridPos{pos.side, pos.col, pos.row});
        if (it == to.grid_map.end()) return std::nullopt;
        auto& slot = map[label.value];
        if (slot.value != 0 && slot != it->second) return std::nullopt;
        slot = it->second;
    }
    std::set<int> image;
    for (auto v : from.vertices) {
        if (map[v.value].value == 0 || !image.insert(map[v.value].value).second) return std::nullopt;
    }
    if (image.size() != to.vertices.size()) return std::nullopt;

    auto triples = [](const PillowConfig& c, const std::vector<VertexId>* relabel) {
        std::set<std::array<int, 3>> out;
        for (const auto& t : c.triangles) {
            std::array<int, 3> v{};
            for (int i = 0; i < 3; ++i) v[i] = relabel ? (*relabel)[t.vertices[i].value].value : t.vertices[i].value;
            std::sort(v.begin(), v.end());
            out.insert(v);
        }
        return out;
    };
    if (triples(from, &map) != triples(to, nullptr)) return std::nullopt;
    return map;
}

StageConfig two_surface_stage(int a, int b) {
    const auto pillow = build_pillow(a, b);
    StageConfig s;
    s.stage = Stage::two_surfaces;
    s.a = a;
    s.b = b;

    std::vector<VertexId> cycle;
    for (int id = 1; id <= 2 * a + 2 * b; ++id) cycle.push_back(VertexId{id});
    for (Side side : {Side::top, Side::bottom}) s.cells.push_back(StageFace{side, 0, 0, std::nullopt, cycle});
    for (const auto& l : pillow.lines)
        if (l.kind == LineKind::boundary) s.lines.push_back(l);

    // Coordinate points are linearly independent, so a span has dimension
    // (number of points) - 1.
    std::set<int> top, bottom, all;
    for (const auto& [pos, label] : pillow.grid_map) {
        (pos.side == Side::top ? top : bottom).insert(label.value);
        all.insert(label.value);
    }
    std::vector<int> common;
    std::set_intersection(top.begin(), top.end(), bottom.begin(), bottom.end(), std::back_inserter(common));
    s.spans = SpanDimensions{static_cast<std::int64_t>(top.size()) - 1, static_cast<std::int64_t>(bottom.size()) - 1,
                             static_cast<std::int64_t>(common.size()) - 1,
                             static_cast<std::int64_t>(all.size()) - 1};
    return s;
}

StageConfig quadric_stage(int a, int b) {
    const auto pillow = build_pillow(a, b);
    StageConfig s;
    s.stage = Stage::quadrics;
    s.a = a;
    s.b = b;
    for (Side side : {Side::top, Side::bottom})
        for (int i = 1; i <= b; ++i)
            for (int j = 1; j <= a; ++j)
                s.cells.push_back(StageFace{side, i, j, std::nullopt,
                                            {pillow.at(side, i - 1, j - 1), pillow.at(side, i - 1, j),
                                             pillow.at(side, i, j), pillow.at(side, i, j - 1)}});
    for (const auto& l : pillow.lines)
        if (l.kind != LineKind::diagonal) s.lines.push_back(l);
    return s;
}

StageConfig planes_stage(int a, int b) {
    const auto pillow = build_pillow(a, b);
    StageConfig s;
    s.stage = Stage::planes;
    s.a = a;
    s.b = b;
    for (const auto& t : pillow.triangles)
        s.cells.push_back(StageFace{t.side, t.row, t.col, t.half, {t.vertices.begin(), t.vertices.end()}});
    s.lines = pillow.lines;
    return s;
}

Report verify_stage(const StageConfig& s) {
    const std::int64_t ab = static_cast<std::int64_t>(s.a) * s.b;
    std::int64_t cycle_len = 0, faces = 0, lines = 0;
    switch (s.stage) {
        case Stage::two_surfaces:
            cycle_len = 2 * s.a + 2 * s.b;
            faces = 2;
            lines = 2 * s.a + 2 * s.b;
            break;
        case Stage::quadrics:
            cycle_len = 4;
            faces = 2 * ab;
            lines = 4 * ab;
            break;
        case Stage::planes:
            cycle_len = 3;
            faces = 4 * ab;
            lines = 6 * ab;
            break;
    }

    Report report;
    report.add("face_count", static_cast<std::int64_t>(s.cells.size()), faces);
    report.add("line_count", static_cast<std::int64_t>(s.lines.size()), lines);

    std::set<Edge> line_set;
    for (const auto& l : s.lines) line_set.insert(edge_key(l.u, l.v));

    std::map<Edge, int> uses;
    std::int64_t bad_faces = 0;
    for (const auto& f : s.cells) {
        const auto& cyc = f.boundary;
        std::set<int> distinct;
        for (auto v : cyc) distinct.insert(v.value);
        bool ok = static_cast<std::int64_t>(cyc.size()) == cycle_len && distinct.size() == cyc.size();
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            auto e = edge_key(cyc[i], cyc[(i + 1) % cyc.size()]);
            ++uses[e];
            if (!line_set.contains(e)) ok = false;
        }
        if (!ok) ++bad_faces;
    }
    report.add("face_boundaries_are_line_cycles", bad_faces, 0);

    std::int64_t bad_lines = 0;
    for (const auto& e : line_set) {
        auto it = uses.find(e);
        if (it == uses.end() || it->second != 2) ++bad_lines;
    }
    report.add("lines_bound_two_faces", bad_lines, 0);

    if (s.spans) {
        report.add("top_span_dim", s.spans->top, ab + s.a + s.b);
        report.add("bottom_span_dim", s.spans->bottom, ab + s.a + s.b);
        report.add("intersection_span_dim", s.spans->intersection, 2 * s.a + 2 * s.b - 1);
        report.add("ambient_dim", s.spans->ambient, 2 * ab + 1);
    }
    return report;
}

CupleReduction cuple_reduction(int a, int b) {
    require_bidegree(a, b);
    const int c = std::gcd(a, b);
    return CupleReduction{c, {a / c, b / c}, c};
}

}  // namespace pillow
