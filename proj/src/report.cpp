#include "pillow/report.hpp"

#include <stdexcept>

namespace pillow {

const Check& Report::at(std::string_view name) const {
    for (const auto& c : checks_)
        if (c.name == name) return c;
    throw std::out_of_range("no check named " + std::string(name));
}

}  // namespace pillow
