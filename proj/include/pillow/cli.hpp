#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pillow/report.hpp"
#include "pillow/serialize.hpp"

namespace pillow::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, io_error = 3 };

enum class Format { text, json };

/// Outcome of one command. exit_code is 0 iff every check passed and no
/// error occurred.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    Report checks;
    std::vector<std::string> artifacts;
    int exit_code = ok;
    Json result;           ///< command payload (characters, table, ...)
    std::string output;    ///< what the command prints on stdout
    std::string error;     ///< what the command prints on stderr

    /// Sets exit_code from the checks, keeping any earlier error code.
    void finish();
    Json to_json() const;
};

struct CharactersArgs {
    std::string family;  ///< veronese, scroll, delpezzo, k3, custom
    std::optional<long long> r, deg, g;
    std::optional<long long> d, kh, k2, euler;
    Format format = Format::text;
};

struct PillowArgs {
    int a = 0;
    int b = 0;
    bool verify = false;
    std::optional<std::string> export_format;  ///< json or dot
    std::string graph = "faces";               ///< faces or lines, for dot
    std::optional<std::string> out;
    Format format = Format::text;
};

struct TableArgs {
    int a = 0;
    int b = 0;
    Format format = Format::text;
};

struct IntRange {
    int lo = 0;
    int hi = -1;
    bool empty() const { return hi < lo; }
};

/// Parses "lo..hi" or a single integer. Throws InvalidParameter on bad syntax.
IntRange parse_range(const std::string& text);

struct VerifyArgs {
    std::string a_range;
    std::string b_range;
    int limit = 6;
    Format format = Format::text;
};

RunReport cmd_characters(const CharactersArgs& args);
RunReport cmd_pillow(const PillowArgs& args);
RunReport cmd_table(const TableArgs& args);
RunReport cmd_verify(const VerifyArgs& args);

/// Every per-configuration check the verify sweep runs for one bidegree.
Report full_suite(int a, int b);

/// Family closed forms and identity checks over the fixed parameter sweep.
Report family_suite();

/// Parses argv and runs the selected subcommand, writing to the given streams.
int run(int argc, const char* const* argv, std::string& out, std::string& err);

}  // namespace pillow::cli
