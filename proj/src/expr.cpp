#include "expr.hpp"

#include <cctype>
#include <set>

namespace hgm {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void bad(const std::string& why) {
        fail(errc::argument, "expression parse error at offset " + std::to_string(pos) + " in '" + s +
                                 "': " + why);
    }

    ExprPtr make(ExprNode::Op op, ExprPtr l = nullptr, ExprPtr r = nullptr) {
        auto n = std::make_unique<ExprNode>();
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    ExprPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            ExprPtr e = parse_sum();
            if (!eat(')')) bad("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos;
            return make(ExprNode::Op::neg, parse_factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            auto n = make(ExprNode::Op::num);
            n->value = Rat(s.substr(start, pos - start));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            auto n = make(ExprNode::Op::sym);
            n->name = s.substr(start, pos - start);
            return n;
        }
        bad("unexpected character");
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            ++pos;
            bool negexp = eat('-');
            if (!std::isdigit(static_cast<unsigned char>(peek()))) bad("expected integer exponent");
            long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                e = e * 10 + (s[pos++] - '0');
            auto n = make(ExprNode::Op::pow, std::move(base));
            n->exponent = negexp ? -e : e;
            return n;
        }
        return base;
    }

    ExprPtr parse_product() {
        ExprPtr l = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                l = make(ExprNode::Op::mul, std::move(l), parse_factor());
            } else if (c == '/') {
                ++pos;
                l = make(ExprNode::Op::div, std::move(l), parse_factor());
            } else {
                return l;
            }
        }
    }

    ExprPtr parse_sum() {
        ExprPtr l = parse_product();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                l = make(ExprNode::Op::add, std::move(l), parse_product());
            } else if (c == '-') {
                ++pos;
                l = make(ExprNode::Op::sub, std::move(l), parse_product());
            } else {
                return l;
            }
        }
    }
};

void collect_syms(const ExprNode& e, std::set<std::string>& out) {
    if (e.op == ExprNode::Op::sym) out.insert(e.name);
    if (e.lhs) collect_syms(*e.lhs, out);
    if (e.rhs) collect_syms(*e.rhs, out);
}

} // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.bad("trailing input");
    return e;
}

Rat eval_expr(const ExprNode& e, const std::map<std::string, Rat>& syms) {
    switch (e.op) {
        case ExprNode::Op::num:
            return e.value;
        case ExprNode::Op::sym: {
            auto it = syms.find(e.name);
            if (it == syms.end()) fail(errc::argument, "unbound symbol '" + e.name + "'");
            return it->second;
        }
        case ExprNode::Op::add:
            return eval_expr(*e.lhs, syms) + eval_expr(*e.rhs, syms);
        case ExprNode::Op::sub:
            return eval_expr(*e.lhs, syms) - eval_expr(*e.rhs, syms);
        case ExprNode::Op::mul:
            return eval_expr(*e.lhs, syms) * eval_expr(*e.rhs, syms);
        case ExprNode::Op::div: {
            Rat d = eval_expr(*e.rhs, syms);
            if (d == 0) fail(errc::argument, "division by zero in expression");
            return eval_expr(*e.lhs, syms) / d;
        }
        case ExprNode::Op::neg:
            return -eval_expr(*e.lhs, syms);
        case ExprNode::Op::pow: {
            Rat b = eval_expr(*e.lhs, syms);
            long n = e.exponent;
            if (n < 0) {
                if (b == 0) fail(errc::argument, "zero to negative power in expression");
                b = 1 / b;
                n = -n;
            }
            Rat r = 1;
            for (long i = 0; i < n; ++i) r *= b;
            return r;
        }
    }
    fail(errc::internal, "corrupt expression node");
}

std::vector<std::string> expr_symbols(const ExprNode& e) {
    std::set<std::string> s;
    collect_syms(e, s);
    return {s.begin(), s.end()};
}

} // namespace hgm
