#pragma once

#include "dsphere/exact_value.hpp"
#include "dsphere/matforms.hpp"

#include <string>
#include <variant>

namespace dsphere {

// Result of an expression: a form, a matrix of forms (e, q), or an integral.
using ExprValue = std::variant<Form, MatForm, ExactValue>;

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary | '/' number)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := number | name | func '(' expr ')' | '(' expr ')'
// Names: a a* b b* t da da* db db* dt lam lamc lam' phi phi' phi'' ... i omega e q.
// Functions: d tr integrate star.
// A '*' right after a, b, da, db is the adjoint suffix unless an operand follows it,
// so "a*db" is a product and "da**db" is da* times db.
// integrate() specializes phi by `phi` first.
ExprValue evalExpr(const std::string& text, const PhiSpec& phi = PhiSpec::Formal());

// integrals relative to int omega print as "(1/5)*(8/3)*pi^2"; forms print with lam'
std::string formatValue(const ExprValue& v);

}  // namespace dsphere
