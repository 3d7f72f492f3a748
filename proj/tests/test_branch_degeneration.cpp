#include "doctest.h"
#include "pillow/branch_degeneration.hpp"
#include "pillow/errors.hpp"

using namespace pillow;

TEST_CASE("local del pezzo characters") {
    CHECK(local_del_pezzo_characters(3) == BranchCharacters{6, 0, 6, 12});
    CHECK(local_del_pezzo_characters(6) == BranchCharacters{12, 24, 24, 12});
    CHECK(local_del_pezzo_characters(4) == BranchCharacters{8, 4, 12, 12});
    for (int n = 3; n <= 6; ++n) CHECK(local_del_pezzo_characters(n) == branch_characters(del_pezzo(n)));
    CHECK_THROWS_AS(local_del_pezzo_characters(2), InvalidParameter);
    CHECK_THROWS_AS(local_del_pezzo_characters(7), InvalidParameter);
}

TEST_CASE("n-point budgets") {
    CHECK(npoint_budget(3) == NPointBudget{3, 9, 0, 6});
    CHECK(npoint_budget(6) == NPointBudget{6, 6, 24, 24});
    CHECK(npoint_budget(2) == NPointBudget{2, 0, 4, 0});
    for (int n = 3; n <= 6; ++n) {
        const auto budget = npoint_budget(n);
        const auto local = local_del_pezzo_characters(n);
        CHECK(budget.branch_points + n == 12);
        CHECK(budget.branch_points + n == local.t);
        CHECK(budget.nodes == local.n);
        CHECK(budget.cusps == local.k);
    }
    CHECK_THROWS_AS(npoint_budget(1), InvalidParameter);
    CHECK_THROWS_AS(npoint_budget(7), InvalidParameter);
}

TEST_CASE("table for (2,2)") {
    const auto c = build_pillow(2, 2);
    const auto t = build_table(c);
    CHECK(t.g == 9);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0].type == ObjectType::lines);
    CHECK(t.rows[1].type == ObjectType::three_points);
    CHECK(t.rows[2].type == ObjectType::six_points);
    CHECK(t.rows[3].type == ObjectType::two_points);

    const auto& lines = t.row(ObjectType::lines);
    CHECK(lines.count == 24);
    CHECK(lines.branch_points == 0);
    CHECK(lines.nodes == 0);
    CHECK(lines.cusps == 0);
    CHECK(t.row(ObjectType::three_points).count == 4);
    CHECK(t.row(ObjectType::six_points).count == 6);
    CHECK(t.row(ObjectType::two_points).count == 174);

    // 4*9 + 6*6 = 72; 6*24 + 174*4 = 840; 4*6 + 6*24 = 168
    CHECK(t.totals == TableTotals{72, 840, 168});
    const auto k = branch_characters(k3(9));
    CHECK(t.totals.branch_points == k.t);
    CHECK(t.totals.nodes == k.n);
    CHECK(t.totals.cusps == k.k);
    CHECK(verify_conservation(c).all_passed());
}

TEST_CASE("table for (2,3)") {
    const auto t = build_table(build_pillow(2, 3));
    CHECK(t.g == 13);
    CHECK(t.totals == TableTotals{96, 2112, 264});
}

TEST_CASE("conservation sweep") {
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const auto c = build_pillow(a, b);
            const std::int64_t g = c.g;
            const auto t = build_table(c);
            CHECK(t.totals == TableTotals{6 * g + 18, 18 * g * g - 78 * g + 84, 24 * (g - 2)});
            CHECK(t.row(ObjectType::lines).count == 3 * g - 3);
            CHECK(t.row(ObjectType::three_points).count == 4);
            CHECK(t.row(ObjectType::six_points).count == g - 3);
            CHECK(t.row(ObjectType::two_points).count == formula_disjoint_pairs(g));
            CHECK(2 * t.row(ObjectType::lines).count == branch_characters(k3(g)).b);
            const auto rep = verify_conservation(c);
            CHECK(rep.all_passed());
            CHECK(rep.checks().size() == 5);
        }
}

TEST_CASE("corrupted budget breaks conservation") {
    const auto c = build_pillow(2, 2);
    auto t = build_table(c);
    auto& six = t.row(ObjectType::six_points);
    six.branch_points += 1;
    six.nodes += 1;
    six.cusps += 1;
    t.recompute_totals();
    const auto rep = verify_conservation(t, static_cast<std::int64_t>(c.lines.size()));
    CHECK_FALSE(rep.passed("branch_points"));
    CHECK_FALSE(rep.passed("nodes"));
    CHECK_FALSE(rep.passed("cusps"));
    CHECK(rep.passed("lines_row_contributes_nothing"));
    CHECK(rep.passed("degree"));
}

TEST_CASE("malformed complex") {
    auto c = build_pillow(3, 3);
    c.lines.pop_back();
    CHECK_THROWS_AS(build_table(c), MalformedComplex);
}

TEST_CASE("text rendering follows the row order") {
    const auto text = render_table(build_table(build_pillow(2, 2)));
    const auto lines = text.find("Lines");
    const auto three = text.find("3-points");
    const auto six = text.find("6-points");
    const auto two = text.find("2-points");
    const auto totals = text.find("Totals");
    CHECK(lines < three);
    CHECK(three < six);
    CHECK(six < two);
    CHECK(two < totals);
    CHECK(totals != std::string::npos);
    CHECK(text.find("840") != std::string::npos);
    CHECK(text.find("174") != std::string::npos);
}
