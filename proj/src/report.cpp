#include "hom3lie/report.hpp"

namespace hom3lie {

std::string Report::summary() const {
    if (pass()) return "pass";
    std::string s = "fail (" + std::to_string(violations.size()) + " violation(s))";
    const auto& v = violations.front();
    s += "; first: " + v.identity + " at " + v.witness + ": " + v.left + " vs " + v.right;
    return s;
}

} // namespace hom3lie
