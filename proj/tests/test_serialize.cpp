#include "doctest.h"
#include "pillow/serialize.hpp"

using namespace pillow;

TEST_CASE("pillow JSON") {
    const auto c = build_pillow(2, 2);
    const auto j = to_json(c);
    CHECK(j["a"] == 2);
    CHECK(j["b"] == 2);
    CHECK(j["g"] == 9);
    CHECK(j["vertices"].size() == 10);
    CHECK(j["vertices"][0] == 1);
    CHECK(j["lines"].size() == 24);
    CHECK(j["triangles"].size() == 16);

    const auto& l0 = j["lines"][0];
    CHECK(l0["u"] == 1);
    CHECK(l0["v"] == 2);
    CHECK(l0["kind"] == "boundary");
    CHECK(l0["side"] == "shared");

    const auto& t0 = j["triangles"][0];
    CHECK(t0["side"] == "top");
    CHECK(t0["row"] == 1);
    CHECK(t0["col"] == 1);
    CHECK(t0["half"] == "lower");
    CHECK(t0["v1"] < t0["v2"]);
    CHECK(t0["v2"] < t0["v3"]);

    // Keys come out in declared order.
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"a", "b", "g", "vertices", "lines", "triangles", "conventions"});

    // Deterministic.
    CHECK(to_json(build_pillow(2, 2)).dump() == j.dump());
}

TEST_CASE("table JSON") {
    const auto j = to_json(build_table(build_pillow(2, 3)));
    CHECK(j["g"] == 13);
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][3]["type"] == "two_points");
    CHECK(j["rows"][3]["count"] == 468);
    CHECK(j["rows"][3]["nodes"] == 4);
    CHECK(j["totals"]["branch"] == 96);
    CHECK(j["totals"]["nodes"] == 2112);
    CHECK(j["totals"]["cusps"] == 264);
}

TEST_CASE("DOT exports") {
    const auto c = build_pillow(3, 3);
    const auto dot = face_adjacency_dot(c);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
    for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(nodes == 36);
    CHECK(edges == 54);  // one per shared line
    CHECK(dot.find("top_r1_c1_lower") != std::string::npos);
    CHECK(dot.find("bottom_r3_c3_upper") != std::string::npos);

    const auto ldot = line_intersection_dot(build_pillow(2, 2));
    std::size_t ledges = 0;
    for (std::size_t pos = 0; (pos = ldot.find(" -- ", pos)) != std::string::npos; ++pos) ++ledges;
    CHECK(ledges == 276 - 174);
}

TEST_CASE("stage JSON") {
    const auto j = to_json(two_surface_stage(2, 2));
    CHECK(j["stage"] == "two_surfaces");
    CHECK(j["spans"]["top"] == 8);
    CHECK(j["spans"]["intersection"] == 7);
    CHECK(j["cells"].size() == 2);
}
