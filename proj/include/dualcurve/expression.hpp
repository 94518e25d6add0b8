#pragma once

// Minimal scalar expression language for user-supplied curve components:
// numbers, the variable (spelled `s` or `t`), the constants `pi` and `e`,
// + - * / ^, unary minus, and sin cos sinh cosh exp. Expressions can be
// differentiated symbolically to supply analytic jets.

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>

#include "dualcurve/curve.hpp"
#include "dualcurve/error.hpp"

namespace dualcurve {

class Expr {
 public:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Sinh, Cosh, Exp, Log };

  /// Parses the whole string; trailing input or unknown identifiers are errors.
  static Expr parse(std::string_view text);

  static Expr constant(double v) { return Expr(std::make_shared<Node>(Node{Op::Const, v, nullptr, nullptr})); }
  static Expr variable() { return Expr(std::make_shared<Node>(Node{Op::Var, 0.0, nullptr, nullptr})); }

  double operator()(double x) const { return eval(*node_, x); }
  Expr derivative() const { return Expr(diff(node_)); }
  bool depends_on_variable() const { return has_var(*node_); }
  std::string to_string() const { return print(*node_); }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Op op;
    double value;
    NodePtr lhs;
    NodePtr rhs;
  };

  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static NodePtr make(Op op, NodePtr a, NodePtr b = nullptr) {
    return std::make_shared<Node>(Node{op, 0.0, std::move(a), std::move(b)});
  }
  static NodePtr num(double v) { return std::make_shared<Node>(Node{Op::Const, v, nullptr, nullptr}); }
  static bool is_const(const NodePtr& n, double v) { return n->op == Op::Const && n->value == v; }

  // Folding keeps third derivatives of modest expressions small.
  static NodePtr add(NodePtr a, NodePtr b) {
    if (is_const(a, 0)) return b;
    if (is_const(b, 0)) return a;
    if (a->op == Op::Const && b->op == Op::Const) return num(a->value + b->value);
    return make(Op::Add, std::move(a), std::move(b));
  }
  static NodePtr sub(NodePtr a, NodePtr b) {
    if (is_const(b, 0)) return a;
    if (is_const(a, 0)) return neg(std::move(b));
    if (a->op == Op::Const && b->op == Op::Const) return num(a->value - b->value);
    return make(Op::Sub, std::move(a), std::move(b));
  }
  static NodePtr mul(NodePtr a, NodePtr b) {
    if (is_const(a, 0) || is_const(b, 0)) return num(0);
    if (is_const(a, 1)) return b;
    if (is_const(b, 1)) return a;
    if (a->op == Op::Const && b->op == Op::Const) return num(a->value * b->value);
    return make(Op::Mul, std::move(a), std::move(b));
  }
  static NodePtr divide(NodePtr a, NodePtr b) {
    if (is_const(a, 0)) return num(0);
    if (is_const(b, 1)) return a;
    return make(Op::Div, std::move(a), std::move(b));
  }
  static NodePtr neg(NodePtr a) {
    if (a->op == Op::Const) return num(-a->value);
    if (a->op == Op::Neg) return a->lhs;
    return make(Op::Neg, std::move(a));
  }

  static bool has_var(const Node& n) {
    if (n.op == Op::Var) return true;
    return (n.lhs && has_var(*n.lhs)) || (n.rhs && has_var(*n.rhs));
  }

  static double eval(const Node& n, double x) {
    switch (n.op) {
      case Op::Const: return n.value;
      case Op::Var: return x;
      case Op::Add: return eval(*n.lhs, x) + eval(*n.rhs, x);
      case Op::Sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
      case Op::Mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
      case Op::Div: return eval(*n.lhs, x) / eval(*n.rhs, x);
      case Op::Pow: return std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
      case Op::Neg: return -eval(*n.lhs, x);
      case Op::Sin: return std::sin(eval(*n.lhs, x));
      case Op::Cos: return std::cos(eval(*n.lhs, x));
      case Op::Sinh: return std::sinh(eval(*n.lhs, x));
      case Op::Cosh: return std::cosh(eval(*n.lhs, x));
      case Op::Exp: return std::exp(eval(*n.lhs, x));
      case Op::Log: return std::log(eval(*n.lhs, x));
    }
    return 0.0;
  }

  static NodePtr diff(const NodePtr& n) {
    switch (n->op) {
      case Op::Const: return num(0);
      case Op::Var: return num(1);
      case Op::Add: return add(diff(n->lhs), diff(n->rhs));
      case Op::Sub: return sub(diff(n->lhs), diff(n->rhs));
      case Op::Mul: return add(mul(diff(n->lhs), n->rhs), mul(n->lhs, diff(n->rhs)));
      case Op::Div:
        return divide(sub(mul(diff(n->lhs), n->rhs), mul(n->lhs, diff(n->rhs))), mul(n->rhs, n->rhs));
      case Op::Pow: {
        if (!has_var(*n->rhs)) {
          // c·u^(c−1)·u′
          NodePtr lowered = make(Op::Pow, n->lhs, sub(n->rhs, num(1)));
          return mul(mul(n->rhs, lowered), diff(n->lhs));
        }
        // u^v·(v′·ln u + v·u′/u)
        NodePtr inner = add(mul(diff(n->rhs), make(Op::Log, n->lhs)), divide(mul(n->rhs, diff(n->lhs)), n->lhs));
        return mul(n, inner);
      }
      case Op::Neg: return neg(diff(n->lhs));
      case Op::Sin: return mul(make(Op::Cos, n->lhs), diff(n->lhs));
      case Op::Cos: return neg(mul(make(Op::Sin, n->lhs), diff(n->lhs)));
      case Op::Sinh: return mul(make(Op::Cosh, n->lhs), diff(n->lhs));
      case Op::Cosh: return mul(make(Op::Sinh, n->lhs), diff(n->lhs));
      case Op::Exp: return mul(n, diff(n->lhs));
      case Op::Log: return divide(diff(n->lhs), n->lhs);
    }
    return num(0);
  }

  static std::string print(const Node& n) {
    auto bin = [](const Node& m, const char* op) { return "(" + print(*m.lhs) + op + print(*m.rhs) + ")"; };
    auto fn = [](const Node& m, const char* name) { return std::string(name) + "(" + print(*m.lhs) + ")"; };
    switch (n.op) {
      case Op::Const: {
        std::string s = std::to_string(n.value);
        return n.value < 0 ? "(" + s + ")" : s;
      }
      case Op::Var: return "t";
      case Op::Add: return bin(n, "+");
      case Op::Sub: return bin(n, "-");
      case Op::Mul: return bin(n, "*");
      case Op::Div: return bin(n, "/");
      case Op::Pow: return bin(n, "^");
      case Op::Neg: return "(-" + print(*n.lhs) + ")";
      case Op::Sin: return fn(n, "sin");
      case Op::Cos: return fn(n, "cos");
      case Op::Sinh: return fn(n, "sinh");
      case Op::Cosh: return fn(n, "cosh");
      case Op::Exp: return fn(n, "exp");
      case Op::Log: return fn(n, "log");
    }
    return "?";
  }

  class Parser;

  NodePtr node_;
};

class Expr::Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr n = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Op::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  // Right-associative; the exponent may carry its own sign.
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - first);
    return num(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "s" || name == "t") return std::make_shared<Node>(Node{Op::Var, 0.0, nullptr, nullptr});
    if (name == "pi") return num(std::numbers::pi);
    if (name == "e") return num(std::numbers::e);
    Op op;
    if (name == "sin") {
      op = Op::Sin;
    } else if (name == "cos") {
      op = Op::Cos;
    } else if (name == "sinh") {
      op = Op::Sinh;
    } else if (name == "cosh") {
      op = Op::Cosh;
    } else if (name == "exp") {
      op = Op::Exp;
    } else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    if (!accept('(')) fail("expected '(' after " + name);
    NodePtr arg = expression();
    if (!accept(')')) fail("expected ')'");
    return make(op, arg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Expr Expr::parse(std::string_view text) { return Expr(Parser(text).parse_all()); }

/// Curve whose α and β components are expressions in the parameter. With
/// `symbolic` set, derivatives up to order 3 are differentiated exactly;
/// otherwise jet() falls back to finite differences.
inline CurveSpec make_expression_curve(const std::array<Expr, 2>& alpha, const std::array<Expr, 2>& beta,
                                       Domain domain, bool symbolic = true) {
  PlanarJetFns fns;
  std::array<Expr, 2> a = alpha;
  std::array<Expr, 2> b = beta;
  for (std::size_t k = 0; k < 4; ++k) {
    fns.alpha[k] = [ax = a[0], ay = a[1]](double t) { return Vec2{ax(t), ay(t)}; };
    fns.beta[k] = [bx = b[0], by = b[1]](double t) { return Vec2{bx(t), by(t)}; };
    if (symbolic && k < 3) {
      for (auto* e : {&a[0], &a[1], &b[0], &b[1]}) *e = e->derivative();
    }
  }
  return make_planar_curve(CurveKind::Analytic, domain, std::move(fns), symbolic, "analytic");
}

}  // namespace dualcurve
