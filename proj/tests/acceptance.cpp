// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "pillow/branch_degeneration.hpp"
#include "pillow/checked.hpp"
#include "pillow/pillow_complex.hpp"
#include "pillow/surface_invariants.hpp"

using namespace pillow;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && pass) detail = what;
        pass = pass && cond;
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // <= 0 means no runtime bound
    std::function<Outcome()> run;
};

std::string s(long long v) { return std::to_string(v); }

Outcome family_closed_forms() {
    Outcome o;
    for (std::int64_t r = 1; r <= 20; ++r) {
        o.expect(branch_characters(veronese(r)) ==
                     BranchCharacters{3 * r * (r - 1), 3 * (r - 1) * (r - 2) * (3 * r * r + 3 * r - 8) / 2,
                                      3 * (r - 1) * (4 * r - 5), 3 * (r - 1) * (r - 1)},
                 "veronese r=" + s(r));
        o.expect(branch_characters(scroll_p1p1(r)) == BranchCharacters{4 * r - 2, 4 * (r - 1) * (2 * r - 3), 6 * r - 6, 2 * r},
                 "scroll r=" + s(r));
    }
    for (std::int64_t d = 3; d <= 9; ++d)
        o.expect(branch_characters(del_pezzo(d)) == BranchCharacters{2 * d, 2 * (d - 2) * (d - 3), 6 * (d - 2), 12},
                 "del pezzo d=" + s(d));
    for (std::int64_t g = 3; g <= 100; ++g)
        o.expect(branch_characters(k3(g)) ==
                     BranchCharacters{6 * g - 6, 18 * g * g - 78 * g + 84, 24 * (g - 2), 6 * g + 18},
                 "k3 g=" + s(g));
    return o;
}

Outcome identity_suite() {
    Outcome o;
    std::vector<SurfaceClasses> surfaces;
    for (std::int64_t r = 1; r <= 20; ++r) {
        surfaces.push_back(veronese(r));
        surfaces.push_back(scroll_p1p1(r));
    }
    for (std::int64_t d = 3; d <= 9; ++d) surfaces.push_back(del_pezzo(d));
    for (std::int64_t g = 3; g <= 100; ++g) surfaces.push_back(k3(g));
    for (const auto& surf : surfaces) {
        const auto rep = verify_character_identities(surf, branch_characters(surf));
        o.expect(rep.checks().size() == 4 && rep.all_passed(), "identities for " + surf.label);
    }
    o.detail = o.pass ? s(static_cast<long long>(surfaces.size())) + " surfaces x 4 identities" : o.detail;
    return o;
}

Outcome sphere_triangulation() {
    Outcome o;
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b) {
            const auto c = build_pillow(a, b);
            const std::string at = " at (" + s(a) + "," + s(b) + ")";
            const auto ab = static_cast<std::size_t>(a * b);
            o.expect(c.vertices.size() == 2 * ab + 2, "|V|" + at);
            o.expect(c.lines.size() == 6 * ab, "|E|" + at);
            o.expect(c.triangles.size() == 4 * ab, "|F|" + at);
            const auto rep = verify_sphere_triangulation(c);
            o.expect(rep.passed("euler_characteristic"), "Euler characteristic" + at);
            o.expect(rep.passed("lines_in_two_triangles"), "edge-face incidence" + at);
            o.expect(rep.passed("vertex_links_single_cycle"), "vertex links" + at);
            int three = 0;
            const auto td = triangle_degrees(c);
            for (auto v : c.vertices) three += td[v.value] == 3;
            o.expect(three == 4, "degree-3 count" + at);
        }
    return o;
}

Outcome disjoint_pairs() {
    Outcome o;
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) {
            const auto c = build_pillow(a, b);
            const std::int64_t g = c.g;
            const auto brute = count_disjoint_line_pairs(c);
            const auto formula = (9 * g * g - 51 * g + 78) / 2;
            std::int64_t through = 0;
            for (int d : line_degrees(c)) through += checked::choose2(d);
            const auto complement = checked::choose2(static_cast<std::int64_t>(c.lines.size())) - through;
            const std::string at = " at (" + s(a) + "," + s(b) + ")";
            o.expect(brute == formula, "brute vs formula" + at);
            o.expect(brute == complement, "brute vs complement" + at);
            o.expect(formula_disjoint_pairs(g) == formula, "formula_disjoint_pairs" + at);
            if (a == 2 && b == 2) o.expect(brute == 174, "174 at g=9");
        }
    return o;
}

Outcome conservation() {
    Outcome o;
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) {
            const auto c = build_pillow(a, b);
            const std::int64_t g = c.g;
            const auto t = build_table(c);
            const auto k = branch_characters(k3(g));
            const std::string at = " at (" + s(a) + "," + s(b) + ")";
            o.expect(t.totals == TableTotals{6 * g + 18, 18 * g * g - 78 * g + 84, 24 * (g - 2)}, "closed-form totals" + at);
            o.expect(t.totals == TableTotals{k.t, k.n, k.k}, "k3 characters" + at);
            o.expect(verify_conservation(c).all_passed(), "verify_conservation" + at);
            if (g == 9) o.expect(t.totals == TableTotals{72, 840, 168}, "(72, 840, 168) at g=9");
        }
    return o;
}

Outcome del_pezzo_agreement() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        o.expect(local_del_pezzo_characters(n) == branch_characters(del_pezzo(n)), "local vs global n=" + s(n));
        o.expect(npoint_budget(n).branch_points == 12 - n, "budget branch points n=" + s(n));
    }
    return o;
}

Outcome stage_contracts() {
    Outcome o;
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) {
            const std::string at = " at (" + s(a) + "," + s(b) + ")";
            const auto q = quadric_stage(a, b);
            o.expect(q.cells.size() == static_cast<std::size_t>(2 * a * b), "quadric count" + at);
            bool four = true;
            for (const auto& f : q.cells) four = four && f.boundary.size() == 4;
            o.expect(four, "rectangle boundaries" + at);
            o.expect(verify_stage(q).all_passed(), "quadric stage checks" + at);
            const auto t = two_surface_stage(a, b);
            const std::int64_t ab = static_cast<std::int64_t>(a) * b;
            o.expect(t.spans && t.spans->top == ab + a + b && t.spans->bottom == ab + a + b &&
                         t.spans->intersection == 2 * a + 2 * b - 1,
                     "span dimensions" + at);
            o.expect(verify_stage(t).all_passed(), "two-surface stage checks" + at);
        }
    return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(PILLOW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism() {
    Outcome o;
    const auto first = run_cli("table --a 2 --b 2 --format json");
    o.expect(first.first == 0 && !first.second.empty(), "table run succeeded");
    for (int i = 0; i < 4; ++i) o.expect(run_cli("table --a 2 --b 2 --format json").second == first.second, "byte-identical");

    const std::vector<std::pair<std::string, int>> fixture = {
        {"table --a 2 --b 2", 0},
        {"table --a 2 --b 3 --format json", 0},
        {"characters --family k3 --g 9", 0},
        {"characters --family custom --d 4 --kh -6 --k2 9 --euler 3", 0},
        {"pillow --a 2 --b 2 --verify", 0},
        {"verify --a 2..2 --b 2..2", 0},
        {"pillow --a 1 --b 5", 2},
        {"table --a 2", 2},
        {"characters --family k3 --g 1", 2},
        {"verify --a 3..2 --b 2..2", 2},
        {"frobnicate", 2},
        {"pillow --a 2 --b 2 --export json --out /nonexistent-dir/p.json", 3},
    };
    for (const auto& [args, code] : fixture) {
        const auto got = run_cli(args).first;
        o.expect(got == code, "'" + args + "' exited " + s(got) + ", expected " + s(code));
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "family closed forms", 1.0, family_closed_forms},
        {2, "identity suite", 1.0, identity_suite},
        {3, "sphere triangulation (2..8 x 2..8)", 5.0, sphere_triangulation},
        {4, "disjoint-pair oracle (2..6 x 2..6)", 5.0, disjoint_pairs},
        {5, "degeneration table conservation (2..6 x 2..6)", 5.0, conservation},
        {6, "local/global Del Pezzo agreement", 0.0, del_pezzo_agreement},
        {7, "stage contracts (2..6 x 2..6)", 0.0, stage_contracts},
        {8, "CLI determinism and exit codes", 0.0, cli_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
            o.pass = false;
            o.detail = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.budget_seconds) + " s";
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.empty() ? "" : " - ", o.detail.c_str());
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
