#pragma once

#include <map>
#include <memory>
#include <string>

#include "trilie/core.hpp"

namespace trilie {

// Arithmetic over rational literals and named parameters:
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := '-' factor | '(' expr ')' | rational | ident
//   rational := int ('/' posint)?
// Whitespace-insensitive. Identifiers are [A-Za-z_][A-Za-z0-9_]*.
struct ParamExpr {
    enum class Kind { literal, param, neg, add, sub, mul, div };
    Kind kind = Kind::literal;
    Scalar value;                              // literal
    std::string name;                          // param
    std::shared_ptr<const ParamExpr> lhs, rhs; // neg uses lhs only
};
using ExprPtr = std::shared_ptr<const ParamExpr>;

// Throws invalid_argument with a 1-based character position on syntax errors.
ExprPtr parse_expr(const std::string& text);

// Numeric evaluation. Unknown names and division by zero raise
// invalid_argument naming the offender.
Scalar eval_expr(const ParamExpr& e, const std::map<std::string, Scalar>& params);

// Render for error messages and reports (fully parenthesized where needed).
std::string expr_to_string(const ParamExpr& e);

}  // namespace trilie
