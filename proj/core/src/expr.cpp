#include "gali/expr.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <utility>

namespace gali {

namespace {

using Kind = ExprNode::Kind;

constexpr std::array<std::pair<std::string_view, Func>, 8> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"sinh", Func::Sinh},
    {"cosh", Func::Cosh},
    {"exp", Func::Exp},
    {"ln", Func::Ln},
    {"sqrt", Func::Sqrt},
}};

ExprNodePtr make_leaf(Kind kind, double value = 0.0) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->value = value;
  return n;
}

bool scan_uses(const ExprNode& n, Kind var) {
  if (n.kind == var) return true;
  if (n.lhs && scan_uses(*n.lhs, var)) return true;
  return n.rhs && scan_uses(*n.rhs, var);
}

class Parser {
 public:
  Parser(std::string_view text, Variables allowed) : text_(text), allowed_(allowed) {}

  ExprNodePtr parse() {
    auto root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("expected one of: '+', '-', '*', '/', '^', end of input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprNodePtr make(Kind kind, ExprNodePtr lhs, ExprNodePtr rhs, std::size_t at) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->depth = 1 + std::max(lhs ? lhs->depth : 0, rhs ? rhs->depth : 0);
    if (n->depth > kMaxExprDepth) {
      throw ParseError(at, "expression nested deeper than " + std::to_string(kMaxExprDepth));
    }
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  ExprNodePtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t at = pos_++;
      auto rhs = parse_product();
      lhs = make(c == '+' ? Kind::Add : Kind::Sub, std::move(lhs), std::move(rhs), at);
    }
  }

  ExprNodePtr parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return lhs;
      std::size_t at = pos_++;
      auto rhs = parse_unary();
      lhs = make(c == '*' ? Kind::Mul : Kind::Div, std::move(lhs), std::move(rhs), at);
    }
  }

  ExprNodePtr parse_unary() {
    if (peek() == '-') {
      std::size_t at = pos_++;
      guard_depth(at);
      auto operand = parse_unary();
      --nesting_;
      return make(Kind::Neg, std::move(operand), nullptr, at);
    }
    return parse_power();
  }

  ExprNodePtr parse_power() {
    auto base = parse_primary();
    if (peek() != '^') return base;
    std::size_t at = pos_++;
    guard_depth(at);
    auto exponent = parse_unary();
    --nesting_;
    return make(Kind::Pow, std::move(base), std::move(exponent), at);
  }

  // Bounds recursion on inputs like "------..." before any node exists.
  void guard_depth(std::size_t at) {
    if (++nesting_ > kMaxExprDepth) {
      throw ParseError(at, "expression nested deeper than " + std::to_string(kMaxExprDepth));
    }
  }

  ExprNodePtr parse_primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      guard_depth(at);
      auto inner = parse_sum();
      --nesting_;
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && ((text_[end] >= 'a' && text_[end] <= 'z') ||
                                    (text_[end] >= 'A' && text_[end] <= 'Z') ||
                                    (text_[end] >= '0' && text_[end] <= '9') || text_[end] == '_')) {
        ++end;
      }
      std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "s") {
        pos_ = end;
        return make_leaf(Kind::VarS);
      }
      if (word == "t") {
        if (allowed_ == Variables::S) fail("variable t is not allowed in a curve expression");
        pos_ = end;
        return make_leaf(Kind::VarT);
      }
      for (const auto& [name, func] : kFunctions) {
        if (word != name) continue;
        pos_ = end;
        if (peek() != '(') fail("expected '(' after function name");
        ++pos_;
        guard_depth(at);
        auto arg = parse_sum();
        --nesting_;
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        auto n = make(Kind::Call, std::move(arg), nullptr, at);
        std::const_pointer_cast<ExprNode>(n)->func = func;
        return n;
      }
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("expected one of: number, s, t, function, '(', '-'");
  }

  ExprNodePtr parse_number() {
    std::size_t start = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') {
        ++end;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      mantissa += digits();
    }
    if (mantissa == 0) fail("malformed number");
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t save = end;
      ++end;
      if (end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
      if (digits() == 0) end = save;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) fail("number out of range");
    pos_ = end;
    return make_leaf(Kind::Number, value);
  }

  std::string_view text_;
  Variables allowed_;
  std::size_t pos_ = 0;
  int nesting_ = 0;
};

int precedence(const ExprNode& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void render(const ExprNode& n, std::string& out);

void render_wrapped(const ExprNode& n, bool parens, std::string& out) {
  if (parens) out += '(';
  render(n, out);
  if (parens) out += ')';
}

void render(const ExprNode& n, std::string& out) {
  int p = precedence(n);
  switch (n.kind) {
    case Kind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case Kind::VarS:
      out += 's';
      return;
    case Kind::VarT:
      out += 't';
      return;
    case Kind::Neg:
      out += '-';
      render_wrapped(*n.lhs, precedence(*n.lhs) < 3, out);
      return;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      static constexpr std::string_view ops = "+-*/";
      render_wrapped(*n.lhs, precedence(*n.lhs) < p, out);
      out += ' ';
      out += ops[static_cast<int>(n.kind) - static_cast<int>(Kind::Add)];
      out += ' ';
      render_wrapped(*n.rhs, precedence(*n.rhs) <= p, out);
      return;
    }
    case Kind::Pow:
      render_wrapped(*n.lhs, precedence(*n.lhs) < 5, out);
      out += '^';
      render_wrapped(*n.rhs, precedence(*n.rhs) < 3, out);
      return;
    case Kind::Call:
      out += func_name(n.func);
      out += '(';
      render(*n.lhs, out);
      out += ')';
      return;
  }
}

bool same_tree(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Kind::Number && a.value != b.value) return false;
  if (a.kind == Kind::Call && a.func != b.func) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  return !a.rhs || same_tree(*a.rhs, *b.rhs);
}

}  // namespace

std::string_view func_name(Func f) noexcept {
  for (const auto& [name, func] : kFunctions) {
    if (func == f) return name;
  }
  return "?";
}

Expr::Expr() : Expr(make_leaf(Kind::Number, 0.0)) {}

Expr::Expr(ExprNodePtr root)
    : root_(std::move(root)),
      uses_s_(scan_uses(*root_, Kind::VarS)),
      uses_t_(scan_uses(*root_, Kind::VarT)) {}

Expr Expr::constant(double v) { return Expr(make_leaf(Kind::Number, v)); }

std::string Expr::to_string() const {
  std::string out;
  render(*root_, out);
  return out;
}

bool operator==(const Expr& a, const Expr& b) noexcept { return same_tree(*a.root_, *b.root_); }

Expr parse_expr(std::string_view text, Variables allowed) {
  return Expr(Parser(text, allowed).parse());
}

namespace detail {

void throw_domain(std::string_view what, double arg, double s, double t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.*s (argument %.9g) at s=%.9g, t=%.9g",
                static_cast<int>(what.size()), what.data(), arg, s, t);
  throw DomainError(buf);
}

}  // namespace detail

double eval_expr(const Expr& e, double s, double t) { return evaluate(e, s, t); }

}  // namespace gali
