#pragma once

// Scalar expressions in the variables s and t.
//
// Grammar, lowest precedence first:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := NUMBER | 's' | 't' | FUNC '(' expr ')' | '(' expr ')'
// so "-s^2" is -(s^2) and "2^-1" is 2^(-1).

#include <cmath>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>

#include "gali/errors.hpp"
#include "gali/taylor.hpp"

namespace gali {

enum class Func : std::uint8_t { Sin, Cos, Tan, Sinh, Cosh, Exp, Ln, Sqrt };

std::string_view func_name(Func f) noexcept;

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind : std::uint8_t { Number, VarS, VarT, Neg, Add, Sub, Mul, Div, Pow, Call };

  Kind kind = Kind::Number;
  double value = 0.0;
  Func func = Func::Sin;
  int depth = 1;
  ExprNodePtr lhs;
  ExprNodePtr rhs;
};

/// Immutable, cheaply copyable expression tree.
class Expr {
 public:
  Expr();
  explicit Expr(ExprNodePtr root);

  const ExprNode& root() const noexcept { return *root_; }
  bool uses_s() const noexcept { return uses_s_; }
  bool uses_t() const noexcept { return uses_t_; }

  /// Minimal-parenthesis rendering that parses back to the same tree.
  std::string to_string() const;

  static Expr constant(double v);

  friend bool operator==(const Expr& a, const Expr& b) noexcept;

 private:
  ExprNodePtr root_;
  bool uses_s_ = false;
  bool uses_t_ = false;
};

enum class Variables : std::uint8_t { S, ST };

/// Trees deeper than this are rejected at parse time.
inline constexpr int kMaxExprDepth = 256;

/// Throws ParseError carrying the byte offset of the offending token.
Expr parse_expr(std::string_view text, Variables allowed = Variables::ST);

namespace detail {

[[noreturn]] void throw_domain(std::string_view what, double arg, double s, double t);

inline bool integer_exponent(const ExprNode& n, long& out) {
  double v;
  if (n.kind == ExprNode::Kind::Number) {
    v = n.value;
  } else if (n.kind == ExprNode::Kind::Neg && n.lhs->kind == ExprNode::Kind::Number) {
    v = -n.lhs->value;
  } else {
    return false;
  }
  if (v != std::floor(v) || std::abs(v) > 1024) return false;
  out = static_cast<long>(v);
  return true;
}

template <typename S>
S eval_node(const ExprNode& n, const S& s, const S& t) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  using std::tan;
  using K = ExprNode::Kind;
  constexpr bool jet = is_taylor_v<S>;

  switch (n.kind) {
    case K::Number:
      return S(n.value);
    case K::VarS:
      return s;
    case K::VarT:
      return t;
    case K::Neg:
      return -eval_node(*n.lhs, s, t);
    case K::Add:
      return eval_node(*n.lhs, s, t) + eval_node(*n.rhs, s, t);
    case K::Sub:
      return eval_node(*n.lhs, s, t) - eval_node(*n.rhs, s, t);
    case K::Mul:
      return eval_node(*n.lhs, s, t) * eval_node(*n.rhs, s, t);
    case K::Div: {
      S den = eval_node(*n.rhs, s, t);
      if (primal(den) == 0.0) throw_domain("division by zero", 0.0, primal(s), primal(t));
      return eval_node(*n.lhs, s, t) / den;
    }
    case K::Pow: {
      S base = eval_node(*n.lhs, s, t);
      long k = 0;
      if (integer_exponent(*n.rhs, k)) {
        if (k < 0 && primal(base) == 0.0) {
          throw_domain("negative power of zero", 0.0, primal(s), primal(t));
        }
        return integer_power(base, k);
      }
      S ex = eval_node(*n.rhs, s, t);
      double b = primal(base);
      if constexpr (!jet) {
        if (b < 0.0 || (b == 0.0 && ex <= 0.0)) {
          throw_domain("power with non-positive base", b, primal(s), primal(t));
        }
        return std::pow(base, ex);
      } else {
        if (b <= 0.0) throw_domain("power with non-positive base", b, primal(s), primal(t));
        return exp(ex * log(base));
      }
    }
    case K::Call: {
      S a = eval_node(*n.lhs, s, t);
      double v = primal(a);
      switch (n.func) {
        case Func::Sin:
          return sin(a);
        case Func::Cos:
          return cos(a);
        case Func::Tan:
          if (std::cos(v) == 0.0) throw_domain("tan pole", v, primal(s), primal(t));
          return tan(a);
        case Func::Sinh:
          return sinh(a);
        case Func::Cosh:
          return cosh(a);
        case Func::Exp:
          return exp(a);
        case Func::Ln:
          if (v <= 0.0) throw_domain("ln of non-positive value", v, primal(s), primal(t));
          return log(a);
        case Func::Sqrt:
          if (v < 0.0 || (jet && v == 0.0 && !is_constant(a))) {
            throw_domain("sqrt outside its differentiable domain", v, primal(s), primal(t));
          }
          return sqrt(a);
      }
      break;
    }
  }
  return S(0.0);
}

}  // namespace detail

/// Evaluates over any scalar with the arithmetic and elementary functions
/// (double or a possibly nested Taylor series). Throws DomainError.
template <typename S>
S evaluate(const Expr& e, const S& s, const S& t) {
  return detail::eval_node(e.root(), s, t);
}

double eval_expr(const Expr& e, double s, double t = 0.0);

}  // namespace gali
