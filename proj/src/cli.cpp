#include "pillow/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "pillow/branch_degeneration.hpp"
#include "pillow/checked.hpp"
#include "pillow/errors.hpp"
#include "pillow/pillow_complex.hpp"
#include "pillow/surface_invariants.hpp"

namespace pillow::cli {

namespace {

std::string format_checks(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks())
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.lhs << (c.pass ? " = " : " != ")
           << c.rhs << "\n";
    return os.str();
}

std::size_t count_passed(const Report& r) {
    std::size_t n = 0;
    for (const auto& c : r.checks()) n += c.pass ? 1 : 0;
    return n;
}

void fail_usage(RunReport& rep, const std::exception& e) {
    rep.exit_code = usage_error;
    rep.error = std::string("error: ") + e.what() + "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

long long need(const std::optional<long long>& v, const char* flag, const std::string& family) {
    if (!v) throw InvalidParameter("family " + family + " requires " + flag);
    return *v;
}

SurfaceClasses surface_for(const CharactersArgs& args) {
    const auto& f = args.family;
    if (f == "veronese") return veronese(need(args.r, "--r", f));
    if (f == "scroll") return scroll_p1p1(need(args.r, "--r", f));
    if (f == "delpezzo") return del_pezzo(need(args.deg, "--deg", f));
    if (f == "k3") return k3(need(args.g, "--g", f));
    if (f == "custom") {
        SurfaceClasses s{need(args.d, "--d", f), need(args.kh, "--kh", f), need(args.k2, "--k2", f),
                         need(args.euler, "--euler", f), "custom", std::nullopt};
        return s;
    }
    throw InvalidParameter("unknown family " + f);
}

void add_characters(Report& r, const std::string& prefix, const BranchCharacters& got,
                    const BranchCharacters& want) {
    r.add(prefix + ".b", got.b, want.b);
    r.add(prefix + ".n", got.n, want.n);
    r.add(prefix + ".k", got.k, want.k);
    r.add(prefix + ".t", got.t, want.t);
}

}  // namespace

void RunReport::finish() {
    if (exit_code == ok && !checks.all_passed()) exit_code = check_failed;
}

Json RunReport::to_json() const {
    Json j;
    j["command"] = command;
    Json params = Json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["result"] = result;
    j["checks"] = pillow::to_json(checks);
    j["artifacts"] = artifacts;
    j["exit_code"] = exit_code;
    return j;
}

IntRange parse_range(const std::string& text) {
    static const std::regex pattern(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw InvalidParameter("bad range '" + text + "', expected lo..hi");
    try {
        const int lo = std::stoi(m[1].str());
        const int hi = m[2].matched ? std::stoi(m[2].str()) : lo;
        return IntRange{lo, hi};
    } catch (const std::out_of_range&) {
        throw InvalidParameter("range bound out of range in '" + text + "'");
    }
}

RunReport cmd_characters(const CharactersArgs& args) {
    RunReport rep;
    rep.command = "characters";
    rep.parameters.emplace_back("family", args.family);
    for (auto [name, value] : {std::pair{"r", args.r}, {"deg", args.deg}, {"g", args.g}, {"d", args.d},
                               {"kh", args.kh}, {"k2", args.k2}, {"euler", args.euler}})
        if (value) rep.parameters.emplace_back(name, std::to_string(*value));

    try {
        const auto surface = surface_for(args);
        const auto chars = branch_characters(surface);
        rep.checks = verify_character_identities(surface, chars);
        rep.result = Json{{"surface", to_json(surface)}, {"characters", to_json(chars)}};
        rep.finish();
        if (args.format == Format::json) {
            rep.output = dump(rep.to_json());
        } else {
            std::ostringstream os;
            os << surface.label << ": b=" << chars.b << " n=" << chars.n << " k=" << chars.k << " t=" << chars.t
               << "\n"
               << format_checks(rep.checks) << count_passed(rep.checks) << "/" << rep.checks.checks().size()
               << " identities pass\n";
            rep.output = os.str();
        }
    } catch (const Error& e) {
        fail_usage(rep, e);
    }
    return rep;
}

Report full_suite(int a, int b) {
    using checked::choose2;
    Report r;
    const auto c = build_pillow(a, b);
    const std::int64_t g = c.g;
    const std::int64_t ab = static_cast<std::int64_t>(a) * b;
    const auto V = static_cast<std::int64_t>(c.vertices.size());
    const auto E = static_cast<std::int64_t>(c.lines.size());
    const auto F = static_cast<std::int64_t>(c.triangles.size());

    r.add("vertices", V, 2 * ab + 2);
    r.add("lines", E, 6 * ab);
    r.add("triangles", F, 4 * ab);
    r.append(verify_sphere_triangulation(c), "sphere");

    const auto deg = line_degrees(c);
    std::int64_t threes = 0, sixes = 0, degree_sum = 0, pairs_through = 0;
    for (auto v : c.vertices) {
        const int d = deg[v.value];
        threes += d == 3;
        sixes += d == 6;
        degree_sum += d;
        pairs_through += choose2(d);
    }
    r.add("census.line_degree_3", threes, 4);
    r.add("census.line_degree_6", sixes, 2 * ab - 2);
    r.add("census.handshake", degree_sum, 2 * E);

    const auto brute = count_disjoint_line_pairs(c);
    r.add("pairs.brute_vs_formula", brute, formula_disjoint_pairs(g));
    r.add("pairs.brute_vs_complement", brute, choose2(E) - pairs_through);

    const auto quadrics = quadric_stage(a, b);
    r.append(verify_stage(quadrics), "quadric_stage");
    std::int64_t diagonals = 0;
    for (const auto& l : c.lines) diagonals += l.kind == LineKind::diagonal;
    r.add("quadric_stage.lines_are_pillow_minus_diagonals", static_cast<std::int64_t>(quadrics.lines.size()),
          E - diagonals);
    r.add("quadric_stage.diagonal_count", diagonals, 2 * ab);
    r.append(verify_stage(two_surface_stage(a, b)), "two_surface_stage");
    r.append(verify_stage(planes_stage(a, b)), "planes_stage");

    r.add("transpose_isomorphic", transpose_isomorphism(c, build_pillow(b, a)).has_value() ? 1 : 0, 1);

    const auto cuple = cuple_reduction(a, b);
    r.add("cuple.reduced_a", static_cast<std::int64_t>(cuple.reduced.first) * cuple.c, a);
    r.add("cuple.reduced_b", static_cast<std::int64_t>(cuple.reduced.second) * cuple.c, b);

    const auto table = build_table(c);
    r.add("table.lines", table.row(ObjectType::lines).count, 3 * g - 3);
    r.add("table.three_points", table.row(ObjectType::three_points).count, 4);
    r.add("table.six_points", table.row(ObjectType::six_points).count, g - 3);
    r.add("table.two_points", table.row(ObjectType::two_points).count, formula_disjoint_pairs(g));
    r.add("table.totals.branch", table.totals.branch_points, 6 * g + 18);
    r.add("table.totals.nodes", table.totals.nodes, 18 * g * g - 78 * g + 84);
    r.add("table.totals.cusps", table.totals.cusps, 24 * (g - 2));
    r.append(verify_conservation(table, E), "conservation");
    return r;
}

Report family_suite() {
    Report r;
    auto check_family = [&r](const std::string& name, const SurfaceClasses& s, const BranchCharacters& closed) {
        const auto got = branch_characters(s);
        add_characters(r, name, got, closed);
        r.append(verify_character_identities(s, got), name);
    };
    for (std::int64_t x = 1; x <= 20; ++x) {
        check_family("veronese[" + std::to_string(x) + "]", veronese(x),
                     {3 * x * (x - 1), 3 * (x - 1) * (x - 2) * (3 * x * x + 3 * x - 8) / 2, 3 * (x - 1) * (4 * x - 5),
                      3 * (x - 1) * (x - 1)});
        check_family("scroll[" + std::to_string(x) + "]", scroll_p1p1(x),
                     {4 * x - 2, 4 * (x - 1) * (2 * x - 3), 6 * x - 6, 2 * x});
    }
    for (std::int64_t d = 3; d <= 9; ++d)
        check_family("del_pezzo[" + std::to_string(d) + "]", del_pezzo(d), {2 * d, 2 * (d - 2) * (d - 3), 6 * (d - 2), 12});
    for (std::int64_t g = 3; g <= 100; ++g)
        check_family("k3[" + std::to_string(g) + "]", k3(g), {6 * g - 6, 18 * g * g - 78 * g + 84, 24 * (g - 2), 6 * g + 18});
    add_characters(r, "veronese3_vs_del_pezzo9", branch_characters(veronese(3)), branch_characters(del_pezzo(9)));
    for (int n = 3; n <= 6; ++n) {
        const auto name = "local_del_pezzo[" + std::to_string(n) + "]";
        add_characters(r, name, local_del_pezzo_characters(n), branch_characters(del_pezzo(n)));
        const auto budget = npoint_budget(n);
        r.add(name + ".budget_branch_plus_n", budget.branch_points + n, 12);
        r.add(name + ".budget_nodes", budget.nodes, local_del_pezzo_characters(n).n);
        r.add(name + ".budget_cusps", budget.cusps, local_del_pezzo_characters(n).k);
    }
    return r;
}

RunReport cmd_pillow(const PillowArgs& args) {
    RunReport rep;
    rep.command = "pillow";
    rep.parameters = {{"a", std::to_string(args.a)}, {"b", std::to_string(args.b)},
                      {"verify", args.verify ? "true" : "false"}};
    if (args.export_format) rep.parameters.emplace_back("export", *args.export_format);
    if (args.out) rep.parameters.emplace_back("out", *args.out);

    PillowConfig c;
    try {
        c = build_pillow(args.a, args.b);
        if (args.export_format && *args.export_format != "json" && *args.export_format != "dot")
            throw InvalidParameter("--export must be json or dot");
        if (args.graph != "faces" && args.graph != "lines") throw InvalidParameter("--graph must be faces or lines");
    } catch (const Error& e) {
        fail_usage(rep, e);
        return rep;
    }

    std::ostringstream summary;
    summary << "V=" << c.vertices.size() << " E=" << c.lines.size() << " F=" << c.triangles.size() << " g=" << c.g;
    rep.result = Json{{"V", c.vertices.size()}, {"E", c.lines.size()}, {"F", c.triangles.size()}, {"g", c.g}};

    if (args.verify) {
        rep.checks.append(verify_sphere_triangulation(c), "sphere");
        const auto deg = line_degrees(c);
        std::int64_t threes = 0, sixes = 0, through = 0;
        for (auto v : c.vertices) {
            threes += deg[v.value] == 3;
            sixes += deg[v.value] == 6;
            through += checked::choose2(deg[v.value]);
        }
        const std::int64_t ab = static_cast<std::int64_t>(c.a) * c.b;
        rep.checks.add("census.line_degree_3", threes, 4);
        rep.checks.add("census.line_degree_6", sixes, 2 * ab - 2);
        const auto brute = count_disjoint_line_pairs(c);
        const auto formula = formula_disjoint_pairs(c.g);
        rep.checks.add("pairs.brute_vs_formula", brute, formula);
        rep.checks.add("pairs.brute_vs_complement", brute,
                       checked::choose2(static_cast<std::int64_t>(c.lines.size())) - through);
        rep.result["disjoint_pairs"] = brute;
        rep.result["formula_pairs"] = formula;
        summary << "; disjoint pairs " << brute << (brute == formula ? " = " : " != ") << "formula " << formula << "; "
                << (rep.checks.all_passed() ? "all checks pass" : "CHECKS FAILED");
    }
    summary << "\n";

    std::string exported;
    if (args.export_format) {
        if (*args.export_format == "json")
            exported = dump(to_json(c));
        else
            exported = args.graph == "faces" ? face_adjacency_dot(c) : line_intersection_dot(c);
        if (args.out) {
            std::ofstream f(*args.out, std::ios::binary);
            f << exported;
            f.close();
            if (!f) {
                rep.exit_code = io_error;
                rep.error = "error: cannot write " + *args.out + "\n";
            } else {
                rep.artifacts.push_back(*args.out);
            }
        }
    }

    rep.finish();
    if (args.export_format && !args.out)
        rep.output = exported;
    else if (args.format == Format::json)
        rep.output = dump(rep.to_json());
    else
        rep.output = summary.str() + (args.verify ? format_checks(rep.checks) : "");
    return rep;
}

RunReport cmd_table(const TableArgs& args) {
    RunReport rep;
    rep.command = "table";
    rep.parameters = {{"a", std::to_string(args.a)}, {"b", std::to_string(args.b)}};
    try {
        const auto c = build_pillow(args.a, args.b);
        const auto table = build_table(c);
        rep.checks = verify_conservation(table, static_cast<std::int64_t>(c.lines.size()));
        rep.result = to_json(table);
        rep.finish();
        if (args.format == Format::json)
            rep.output = dump(rep.to_json());
        else
            rep.output = render_table(table) + "conservation against the smooth K3 branch curve:\n" +
                         format_checks(rep.checks) + (rep.checks.all_passed() ? "conservation: pass\n" : "conservation: FAIL\n");
    } catch (const Error& e) {
        fail_usage(rep, e);
    }
    return rep;
}

RunReport cmd_verify(const VerifyArgs& args) {
    RunReport rep;
    rep.command = "verify";
    rep.parameters = {{"a", args.a_range}, {"b", args.b_range}, {"limit", std::to_string(args.limit)}};
    IntRange ar, br;
    try {
        ar = parse_range(args.a_range);
        br = parse_range(args.b_range);
        if (ar.empty() || br.empty()) throw InvalidParameter("empty range");
        for (const auto& r : {ar, br})
            if (r.lo < 2 || r.hi > args.limit)
                throw InvalidParameter("ranges must lie within [2, " + std::to_string(args.limit) + "]");
    } catch (const Error& e) {
        fail_usage(rep, e);
        return rep;
    }

    std::ostringstream os;
    std::ostringstream failures;
    Json matrix = Json::array();
    os << std::setw(6) << "";
    for (int b = br.lo; b <= br.hi; ++b) os << " " << std::setw(5) << ("b=" + std::to_string(b));
    os << "\n";
    for (int a = ar.lo; a <= ar.hi; ++a) {
        os << std::setw(6) << std::left << ("a=" + std::to_string(a)) << std::right;
        for (int b = br.lo; b <= br.hi; ++b) {
            const auto suite = full_suite(a, b);
            const std::string prefix = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            rep.checks.append(suite, prefix);
            os << " " << std::setw(5) << (suite.all_passed() ? "PASS" : "FAIL");
            matrix.push_back(Json{{"a", a}, {"b", b}, {"checks", suite.checks().size()}, {"pass", suite.all_passed()}});
            for (const auto& c : suite.checks())
                if (!c.pass) failures << "  " << prefix << " " << c.name << ": " << c.lhs << " != " << c.rhs << "\n";
        }
        os << "\n";
    }
    const auto families = family_suite();
    rep.checks.append(families, "families");
    for (const auto& c : families.checks())
        if (!c.pass) failures << "  families " << c.name << ": " << c.lhs << " != " << c.rhs << "\n";
    os << "surface families: " << (families.all_passed() ? "PASS" : "FAIL") << " (" << families.checks().size()
       << " checks)\n";

    rep.finish();
    rep.result = Json{{"configurations", matrix}, {"families_pass", families.all_passed()}};
    if (args.format == Format::json) {
        rep.output = dump(rep.to_json());
    } else {
        os << failures.str() << count_passed(rep.checks) << "/" << rep.checks.checks().size() << " checks pass\n";
        rep.output = os.str();
    }
    return rep;
}

int run(int argc, const char* const* argv, std::string& out, std::string& err) {
    CLI::App app{"Pillow degenerations of K3 surfaces: branch-curve characters and the degeneration table"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    CharactersArgs chars;
    auto* characters = app.add_subcommand("characters", "Branch-curve characters of a surface family");
    characters->add_option("--family", chars.family, "Surface family")
        ->required()
        ->check(CLI::IsMember({"veronese", "scroll", "delpezzo", "k3", "custom"}));
    characters->add_option("--r", chars.r, "Veronese / scroll parameter");
    characters->add_option("--deg", chars.deg, "Del Pezzo degree");
    characters->add_option("--g", chars.g, "K3 genus");
    characters->add_option("--d", chars.d, "custom: degree H^2");
    characters->add_option("--kh", chars.kh, "custom: K.H");
    characters->add_option("--k2", chars.k2, "custom: K^2");
    characters->add_option("--euler", chars.euler, "custom: Euler number e(S)");
    add_format(characters);

    PillowArgs pargs;
    auto* pillow_cmd = app.add_subcommand("pillow", "Build the pillow complex of bidegree (a, b)");
    pillow_cmd->add_option("--a", pargs.a)->required();
    pillow_cmd->add_option("--b", pargs.b)->required();
    pillow_cmd->add_flag("--verify", pargs.verify, "Run the triangulation, census and pair-count checks");
    pillow_cmd->add_option("--export", pargs.export_format, "Export format (json or dot)");
    pillow_cmd->add_option("--graph", pargs.graph, "DOT graph: faces or lines");
    pillow_cmd->add_option("--out", pargs.out, "Export path (stdout if omitted)");
    add_format(pillow_cmd);

    TableArgs targs;
    auto* table = app.add_subcommand("table", "Degeneration table and conservation check");
    table->add_option("--a", targs.a)->required();
    table->add_option("--b", targs.b)->required();
    add_format(table);

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Sweep every check over a range of bidegrees");
    verify->add_option("--a", vargs.a_range, "Range lo..hi")->required();
    verify->add_option("--b", vargs.b_range, "Range lo..hi")->required();
    verify->add_option("--limit", vargs.limit, "Largest bidegree parameter allowed");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out += o.str();
        err += e2.str();
        return code == 0 ? ok : usage_error;
    }

    const Format fmt = format == "json" ? Format::json : Format::text;
    RunReport rep;
    if (characters->parsed()) {
        chars.format = fmt;
        rep = cmd_characters(chars);
    } else if (pillow_cmd->parsed()) {
        pargs.format = fmt;
        rep = cmd_pillow(pargs);
    } else if (table->parsed()) {
        targs.format = fmt;
        rep = cmd_table(targs);
    } else {
        vargs.format = fmt;
        rep = cmd_verify(vargs);
    }
    out += rep.output;
    err += rep.error;
    return rep.exit_code;
}

}  // namespace pillow::cli
