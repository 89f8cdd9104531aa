#include "nullwave/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "nullwave/error.hpp"

namespace nullwave {

namespace {

ExprPtr make(Expr::Kind k, double v, int var, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->value = v;
  e->var = var;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

bool both_const(const ExprPtr& a, const ExprPtr& b) {
  return a->kind == Expr::Kind::Const && b->kind == Expr::Kind::Const;
}

}  // namespace

ExprPtr Expr::constant(double v) { return make(Kind::Const, v, -1, nullptr, nullptr); }
ExprPtr Expr::variable(int index) { return make(Kind::Var, 0.0, index, nullptr, nullptr); }

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  if (both_const(a, b)) return constant(a->value + b->value);
  if (a->is_const(0.0)) return b;
  if (b->is_const(0.0)) return a;
  return make(Kind::Add, 0, -1, std::move(a), std::move(b));
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
  if (both_const(a, b)) return constant(a->value - b->value);
  if (b->is_const(0.0)) return a;
  if (a->is_const(0.0)) return neg(std::move(b));
  return make(Kind::Sub, 0, -1, std::move(a), std::move(b));
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  if (both_const(a, b)) return constant(a->value * b->value);
  if (a->is_const(0.0) || b->is_const(0.0)) return constant(0.0);
  if (a->is_const(1.0)) return b;
  if (b->is_const(1.0)) return a;
  if (a->is_const(-1.0)) return neg(std::move(b));
  if (b->is_const(-1.0)) return neg(std::move(a));
  return make(Kind::Mul, 0, -1, std::move(a), std::move(b));
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
  if (both_const(a, b) && b->value != 0.0) return constant(a->value / b->value);
  if (a->is_const(0.0)) return constant(0.0);
  if (b->is_const(1.0)) return a;
  return make(Kind::Div, 0, -1, std::move(a), std::move(b));
}

ExprPtr Expr::pow(ExprPtr a, ExprPtr b) {
  if (b->is_const(0.0)) return constant(1.0);
  if (b->is_const(1.0)) return a;
  if (both_const(a, b)) return constant(std::pow(a->value, b->value));
  if (a->is_const(1.0)) return constant(1.0);
  return make(Kind::Pow, 0, -1, std::move(a), std::move(b));
}

ExprPtr Expr::neg(ExprPtr a) {
  if (a->kind == Kind::Const) return constant(-a->value);
  if (a->kind == Kind::Neg) return a->a;
  return make(Kind::Neg, 0, -1, std::move(a), nullptr);
}

ExprPtr Expr::exp(ExprPtr a) {
  if (a->is_const(0.0)) return constant(1.0);
  if (a->kind == Kind::Const) return constant(std::exp(a->value));
  return make(Kind::Exp, 0, -1, std::move(a), nullptr);
}

ExprPtr Expr::log(ExprPtr a) {
  if (a->is_const(1.0)) return constant(0.0);
  if (a->kind == Kind::Exp) return a->a;
  return make(Kind::Log, 0, -1, std::move(a), nullptr);
}

double eval(const ExprPtr& e, std::span<const double> vals) {
  switch (e->kind) {
    case Expr::Kind::Const: return e->value;
    case Expr::Kind::Var:
      if (e->var < 0 || e->var >= static_cast<int>(vals.size()))
        throw DomainError("eval: variable index out of range");
      return vals[e->var];
    case Expr::Kind::Add: return eval(e->a, vals) + eval(e->b, vals);
    case Expr::Kind::Sub: return eval(e->a, vals) - eval(e->b, vals);
    case Expr::Kind::Mul: return eval(e->a, vals) * eval(e->b, vals);
    case Expr::Kind::Div: {
      double num = eval(e->a, vals), den = eval(e->b, vals);
      if (den == 0.0) throw DomainError("eval: division by zero");
      return num / den;
    }
    case Expr::Kind::Pow: {
      double base = eval(e->a, vals), ex = eval(e->b, vals);
      if (base < 0.0 && ex != std::floor(ex))
        throw DomainError("eval: fractional power of negative base");
      if (base == 0.0 && ex < 0.0) throw DomainError("eval: zero to negative power");
      return std::pow(base, ex);
    }
    case Expr::Kind::Neg: return -eval(e->a, vals);
    case Expr::Kind::Exp: return std::exp(eval(e->a, vals));
    case Expr::Kind::Log: {
      double x = eval(e->a, vals);
      if (x <= 0.0) throw DomainError("eval: log of nonpositive argument");
      return std::log(x);
    }
  }
  throw DomainError("eval: corrupt node");
}

ExprPtr diff(const ExprPtr& e, int var) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::Const: return Expr::constant(0.0);
    case K::Var: return Expr::constant(e->var == var ? 1.0 : 0.0);
    case K::Add: return Expr::add(diff(e->a, var), diff(e->b, var));
    case K::Sub: return Expr::sub(diff(e->a, var), diff(e->b, var));
    case K::Mul:
      return Expr::add(Expr::mul(diff(e->a, var), e->b), Expr::mul(e->a, diff(e->b, var)));
    case K::Div:
      // (a/b)' = a'/b - a b' / b^2
      return Expr::sub(Expr::div(diff(e->a, var), e->b),
                       Expr::div(Expr::mul(e->a, diff(e->b, var)),
                                 Expr::mul(e->b, e->b)));
    case K::Pow: {
      if (e->b->kind == K::Const) {
        // (a^c)' = c a^(c-1) a'
        double c = e->b->value;
        return Expr::mul(Expr::mul(Expr::constant(c), Expr::pow(e->a, Expr::constant(c - 1.0))),
                         diff(e->a, var));
      }
      // a^b = exp(b log a):  (a^b)' = a^b (b' log a + b a'/a)
      ExprPtr val = Expr::pow(e->a, e->b);
      ExprPtr t1 = Expr::mul(diff(e->b, var), Expr::log(e->a));
      ExprPtr t2 = Expr::div(Expr::mul(e->b, diff(e->a, var)), e->a);
      return Expr::mul(val, Expr::add(t1, t2));
    }
    case K::Neg: return Expr::neg(diff(e->a, var));
    case K::Exp: return Expr::mul(e, diff(e->a, var));
    case K::Log: return Expr::div(diff(e->a, var), e->a);
  }
  throw DomainError("diff: corrupt node");
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Const: return a->value == b->value;
    case Expr::Kind::Var: return a->var == b->var;
    case Expr::Kind::Neg:
    case Expr::Kind::Exp:
    case Expr::Kind::Log: return equal(a->a, b->a);
    default: return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

int node_count(const ExprPtr& e) {
  int n = 1;
  if (e->a) n += node_count(e->a);
  if (e->b) n += node_count(e->b);
  return n;
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void render(const ExprPtr& e, const std::vector<std::string>& names, std::ostream& os, int parent_prec,
            bool right_side) {
  using K = Expr::Kind;
  int prec = precedence(e->kind);
  // Parenthesize when binding looser than context, or equal on the side
  // where associativity would reparse differently.
  bool parens = prec < parent_prec || (prec == parent_prec && right_side && (e->kind == K::Sub || e->kind == K::Div));
  if (e->kind == K::Neg && parent_prec >= 2) parens = true;
  if (parens) os << "(";
  switch (e->kind) {
    case K::Const: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << e->value;
      std::string s = tmp.str();
      if (e->value < 0) {
        os << "(" << s << ")";
      } else {
        os << s;
      }
      break;
    }
    case K::Var: os << names.at(e->var); break;
    case K::Add:
      render(e->a, names, os, prec, false); os << " + "; render(e->b, names, os, prec, true);
      break;
    case K::Sub:
      render(e->a, names, os, prec, false); os << " - "; render(e->b, names, os, prec, true);
      break;
    case K::Mul:
      render(e->a, names, os, prec, false); os << "*"; render(e->b, names, os, prec, true);
      break;
    case K::Div:
      render(e->a, names, os, prec, false); os << "/"; render(e->b, names, os, prec, true);
      break;
    case K::Pow:
      // ^ is right associative: parenthesize a left operand of equal precedence.
      render(e->a, names, os, prec + 1, false); os << "^"; render(e->b, names, os, prec, false);
      break;
    case K::Neg: os << "-"; render(e->a, names, os, prec, true); break;
    case K::Exp: os << "exp("; render(e->a, names, os, 0, false); os << ")"; break;
    case K::Log: os << "log("; render(e->a, names, os, 0, false); os << ")"; break;
  }
  if (parens) os << ")";
}

class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, int>& vars) : s_(text), vars_(vars) {}

  ExprPtr run() {
    ExprPtr e = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ConfigError("parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  ExprPtr expression() {
    ExprPtr e = term();
    for (;;) {
      if (consume('+')) e = Expr::add(e, term());
      else if (consume('-')) e = Expr::sub(e, term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (consume('*')) e = Expr::mul(e, unary());
      else if (consume('/')) e = Expr::div(e, unary());
      else return e;
    }
  }

  ExprPtr unary() {
    if (consume('-')) return Expr::neg(unary());
    if (consume('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (consume('^')) return Expr::pow(base, unary());  // right associative
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expression();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e' ||
            s_[pos_] == 'E' ||
            ((s_[pos_] == '+' || s_[pos_] == '-') && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    try {
      size_t used = 0;
      double v = std::stod(s_.substr(start, pos_ - start), &used);
      if (used != pos_ - start) fail("bad numeric literal");
      return Expr::constant(v);
    } catch (const std::logic_error&) {
      fail("bad numeric literal");
    }
  }

  ExprPtr identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (peek() == '(') {
      ++pos_;
      ExprPtr arg = expression();
      if (name == "pow") {
        if (!consume(',')) fail("pow expects two arguments");
        ExprPtr ex = expression();
        if (!consume(')')) fail("expected ')'");
        return Expr::pow(arg, ex);
      }
      if (!consume(')')) fail("expected ')'");
      if (name == "exp") return Expr::exp(arg);
      if (name == "log") return Expr::log(arg);
      if (name == "sqrt") return Expr::pow(arg, Expr::constant(0.5));
      fail("unknown function '" + name + "'");
    }
    if (name == "pi") return Expr::constant(3.14159265358979323846);
    auto it = vars_.find(name);
    if (it == vars_.end()) fail("unknown identifier '" + name + "'");
    return Expr::variable(it->second);
  }

  std::string s_;
  std::map<std::string, int> vars_;
  size_t pos_ = 0;
};

}  // namespace

std::string to_string(const ExprPtr& e, const std::vector<std::string>& var_names) {
  std::ostringstream os;
  render(e, var_names, os, 0, false);
  return os.str();
}

ExprPtr parse_expr(const std::string& text, const std::map<std::string, int>& vars) {
  return Parser(text, vars).run();
}

}  // namespace nullwave
