#pragma once

#include <map>
#include <memory>
#include <string>

#include "rat.hpp"

namespace hgm {

// Minimal arithmetic expression AST used by the catalog files and CLI:
// integers, symbols, + - * / ^int, parentheses, unary minus.
struct ExprNode {
    enum class Op { num, sym, add, sub, mul, div, neg, pow };
    Op op;
    Rat value;              // num
    std::string name;       // sym
    long exponent = 0;      // pow
    std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

ExprPtr parse_expr(const std::string& text);

// Evaluate with a symbol table; unknown symbol or division by zero throws errc::argument.
Rat eval_expr(const ExprNode& e, const std::map<std::string, Rat>& syms);

// Symbols appearing in the expression (sorted, unique).
std::vector<std::string> expr_symbols(const ExprNode& e);

} // namespace hgm
