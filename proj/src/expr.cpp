#include "hom3lie/expr.hpp"

#include <cctype>

#include "hom3lie/errors.hpp"

namespace hom3lie {

struct ScalarExpr::Node {
    enum class Kind { number, name, neg, add, sub, mul, div } kind;
    Integer number;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t offset = 0;
};

namespace {

using NodePtr = std::shared_ptr<const ScalarExpr::Node>;
using Kind = ScalarExpr::Node::Kind;

NodePtr make(Kind k, std::size_t off, NodePtr l = nullptr, NodePtr r = nullptr) {
    auto n = std::make_shared<ScalarExpr::Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->offset = off;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool take(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            if (take('+')) lhs = make(Kind::add, pos_ - 1, lhs, term());
            else if (take('-')) lhs = make(Kind::sub, pos_ - 1, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (true) {
            if (take('*')) lhs = make(Kind::mul, pos_ - 1, lhs, factor());
            else if (take('/')) lhs = make(Kind::div, pos_ - 1, lhs, factor());
            else return lhs;
        }
    }

    NodePtr factor() {
        skip_ws();
        if (take('-')) return make(Kind::neg, pos_ - 1, factor());
        return primary();
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            NodePtr e = expr();
            if (!take(')')) throw ParseError("missing closing parenthesis", open);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto n = std::make_shared<ScalarExpr::Node>();
            n->kind = Kind::number;
            n->number = Integer(s_.substr(start, pos_ - start));
            n->offset = start;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            auto n = std::make_shared<ScalarExpr::Node>();
            n->kind = Kind::name;
            n->name = s_.substr(start, pos_ - start);
            n->offset = start;
            return n;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Rational eval_node(const ScalarExpr::Node& n, const std::map<std::string, Rational>& env) {
    switch (n.kind) {
        case Kind::number: return Rational(n.number);
        case Kind::name: {
            auto it = env.find(n.name);
            if (it == env.end()) throw LoadError("unbound parameter '" + n.name + "'");
            return it->second;
        }
        case Kind::neg: return -eval_node(*n.lhs, env);
        case Kind::add: return eval_node(*n.lhs, env) + eval_node(*n.rhs, env);
        case Kind::sub: return eval_node(*n.lhs, env) - eval_node(*n.rhs, env);
        case Kind::mul: return eval_node(*n.lhs, env) * eval_node(*n.rhs, env);
        case Kind::div: {
            Rational d = eval_node(*n.rhs, env);
            if (d == 0) throw LoadError("division by zero");
            return eval_node(*n.lhs, env) / d;
        }
    }
    throw LoadError("corrupt expression");
}

int precedence(Kind k) {
    switch (k) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::neg: return 3;
        default: return 4;
    }
}

std::string print_node(const ScalarExpr::Node& n, int parent_prec, bool rhs_of_nonassoc) {
    auto wrap = [&](const std::string& s, int prec) {
        if (prec < parent_prec || (prec == parent_prec && rhs_of_nonassoc)) return "(" + s + ")";
        return s;
    };
    switch (n.kind) {
        case Kind::number: return n.number.str();
        case Kind::name: return n.name;
        case Kind::neg: return wrap("-" + print_node(*n.lhs, precedence(Kind::neg), false), precedence(Kind::neg));
        case Kind::add:
            return wrap(print_node(*n.lhs, 1, false) + "+" + print_node(*n.rhs, 1, true), 1);
        case Kind::sub:
            return wrap(print_node(*n.lhs, 1, false) + "-" + print_node(*n.rhs, 1, true), 1);
        case Kind::mul:
            return wrap(print_node(*n.lhs, 2, false) + "*" + print_node(*n.rhs, 2, true), 2);
        case Kind::div:
            return wrap(print_node(*n.lhs, 2, false) + "/" + print_node(*n.rhs, 2, true), 2);
    }
    return "";
}

} // namespace

ScalarExpr ScalarExpr::parse(const std::string& text) {
    ScalarExpr e;
    Parser p(text);
    e.root_ = p.run();
    e.source_ = text;
    return e;
}

Rational ScalarExpr::eval(const std::map<std::string, Rational>& bindings) const {
    if (!root_) throw LoadError("empty expression");
    return eval_node(*root_, bindings);
}

std::string ScalarExpr::to_string() const {
    if (!root_) return "0";
    return print_node(*root_, 0, false);
}

} // namespace hom3lie
