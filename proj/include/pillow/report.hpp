#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pillow {

/// One named comparison: passes when lhs == rhs.
struct Check {
    std::string name;
    bool pass = false;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

/// Ordered list of checks. Verifiers report failures here instead of throwing.
class Report {
public:
    void add(std::string name, std::int64_t lhs, std::int64_t rhs) {
        checks_.push_back(Check{std::move(name), lhs == rhs, lhs, rhs});
    }

    void append(const Report& other, std::string_view prefix = {}) {
        for (const auto& c : other.checks_) {
            Check copy = c;
            if (!prefix.empty()) copy.name = std::string(prefix) + "." + copy.name;
            checks_.push_back(std::move(copy));
        }
    }

    const std::vector<Check>& checks() const noexcept { return checks_; }

    bool all_passed() const noexcept {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    /// Throws std::out_of_range if no check has this name.
    const Check& at(std::string_view name) const;

    bool passed(std::string_view name) const { return at(name).pass; }

private:
    std::vector<Check> checks_;
};

}  // namespace pillow
