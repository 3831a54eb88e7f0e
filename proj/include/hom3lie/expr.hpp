#pragma once

#include <map>
#include <memory>
#include <string>

#include "hom3lie/rational.hpp"

namespace hom3lie {

/// Arithmetic expression over integer literals and named parameters with
/// +, -, *, /, unary minus and parentheses. Standard precedence, left
/// associative. Unbound names surface at evaluation, not at parse time.
class ScalarExpr {
public:
    ScalarExpr() = default;

    /// Throws ParseError with the byte offset of the failure.
    static ScalarExpr parse(const std::string& text);

    /// Throws LoadError on unbound parameters and division by zero.
    Rational eval(const std::map<std::string, Rational>& bindings) const;

    /// Compact form (no whitespace) that re-parses to the same expression.
    std::string to_string() const;

    bool valid() const { return root_ != nullptr; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

} // namespace hom3lie
