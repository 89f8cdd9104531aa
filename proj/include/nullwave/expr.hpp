#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nullwave {

// Immutable expression tree over an indexed set of real variables.
// Grammar: numeric constants, variables, + - * /, ^ (right associative),
// unary minus, exp(), log(), sqrt() (sugar for ^0.5), pow(a,b).
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Log };

  Kind kind;
  double value = 0.0;  // Const
  int var = -1;        // Var
  ExprPtr a, b;        // operands

  static ExprPtr constant(double v);
  static ExprPtr variable(int index);
  // Smart constructors fold constants and algebraic identities
  // (x+0, x*1, x*0, x^1, x^0, log(exp(x)), nested negation).
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr pow(ExprPtr a, ExprPtr b);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr exp(ExprPtr a);
  static ExprPtr log(ExprPtr a);

  bool is_const(double v) const { return kind == Kind::Const && value == v; }
};

// Evaluate with vals[i] bound to variable i. Throws DomainError for log of
// a nonpositive argument, division by zero, and fractional powers of
// negative bases.
double eval(const ExprPtr& e, std::span<const double> vals);

// Partial derivative with respect to variable `var`, simplified on the way
// out by the smart constructors.
ExprPtr diff(const ExprPtr& e, int var);

// Exact structural equality (same shape, same constants).
bool equal(const ExprPtr& a, const ExprPtr& b);

// Number of nodes (diagnostics; simplification keeps this in check).
int node_count(const ExprPtr& e);

// Render to the same grammar the parser accepts; parse(to_string(e))
// evaluates identically to e.
std::string to_string(const ExprPtr& e, const std::vector<std::string>& var_names);

// Parse an expression over the named variables. Throws ConfigError on
// syntax errors or unknown identifiers.
ExprPtr parse_expr(const std::string& text, const std::map<std::string, int>& vars);

}  // namespace nullwave
