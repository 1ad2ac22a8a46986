#include "gha/exprparse.hpp"

#include <cctype>
#include <cmath>

#include "gha/errors.hpp"

namespace gha::expr {

NodePtr constant(Rational value) { return std::make_shared<const Node>(Node{Constant{std::move(value)}}); }
NodePtr variable() { return std::make_shared<const Node>(Node{Variable{}}); }
NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
  return std::make_shared<const Node>(Node{Binary{op, std::move(lhs), std::move(rhs)}});
}
NodePtr power(NodePtr base, unsigned exponent) {
  return std::make_shared<const Node>(Node{Power{std::move(base), exponent}});
}
NodePtr negate(NodePtr operand) { return std::make_shared<const Node>(Node{Negate{std::move(operand)}}); }

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    if (pos_ < text_.size())
      msg += ", found '" + std::string(1, text_[pos_]) + "'";
    else
      msg += ", found end of input";
    throw SyntaxError(pos_, std::move(expected), msg);
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      lhs = binary(c == '+' ? BinaryOp::Add : BinaryOp::Sub, lhs, parse_term());
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      lhs = binary(c == '*' ? BinaryOp::Mul : BinaryOp::Div, lhs, parse_factor());
    }
    return lhs;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      if (start == pos_) fail({"nonnegative integer exponent"});
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) {
        pos_ = start;
        fail({"exponent below 1000000"});
      }
      return power(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  NodePtr parse_atom() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return variable();
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (peek() != ')') fail({"')'"});
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return negate(parse_atom());
    }
    if (is_digit(c) || c == '.') return parse_number();
    fail({"number", "'x'", "'('", "'-'"});
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      return pos_ - s;
    };
    std::size_t n = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      n += digits();
      if (n == 0) {
        pos_ = start;
        fail({"number"});
      }
      return constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    // fraction literal: digits '/' digits with no intervening spaces
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
      const std::size_t slash = pos_;
      ++pos_;
      digits();
      if (text_.substr(slash + 1, pos_ - slash - 1).find_first_not_of('0') == std::string_view::npos) {
        // "3/0" reads as a division so eval reports it with its subtree
        pos_ = slash;
      }
    }
    return constant(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class T>
struct Evaluator {
  T x;

  T operator()(const Constant& c) const {
    if constexpr (std::is_same_v<T, double>)
      return to_double(c.value);
    else
      return c.value;
  }
  T operator()(const Variable&) const { return x; }
  T operator()(const Negate& n) const { return T(-eval(*n.operand, x)); }
  T operator()(const Power& p) const {
    const T b = eval(*p.base, x);
    T acc(1);
    for (unsigned i = 0; i < p.exponent; ++i) acc *= b;
    return acc;
  }
  T operator()(const Binary& b) const {
    const T l = eval(*b.lhs, x);
    const T r = eval(*b.rhs, x);
    switch (b.op) {
      case BinaryOp::Add: return T(l + r);
      case BinaryOp::Sub: return T(l - r);
      case BinaryOp::Mul: return T(l * r);
      case BinaryOp::Div:
        if (r == T(0)) throw DivisionByZero(to_string(Node{b}));
        return T(l / r);
    }
    return T(0);
  }
};

bool is_atom(const Node& n) {
  return std::holds_alternative<Variable>(n.value) ||
         (std::holds_alternative<Constant>(n.value) && std::get<Constant>(n.value).value >= 0);
}

std::string as_atom(const Node& n) {
  std::string s = to_string(n);
  return is_atom(n) ? s : "(" + s + ")";
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).parse_all(); }

Rational eval(const Node& node, const Rational& x) {
  return std::visit(Evaluator<Rational>{x}, node.value);
}

double eval(const Node& node, double x) { return std::visit(Evaluator<double>{x}, node.value); }

std::optional<Affine> as_affine(const Node& node) {
  struct Visitor {
    std::optional<Affine> operator()(const Constant& c) const { return Affine{0, c.value}; }
    std::optional<Affine> operator()(const Variable&) const { return Affine{1, 0}; }
    std::optional<Affine> operator()(const Negate& n) const {
      auto a = as_affine(*n.operand);
      if (!a) return std::nullopt;
      return Affine{-a->slope, -a->intercept};
    }
    std::optional<Affine> operator()(const Power& p) const {
      auto a = as_affine(*p.base);
      if (!a) return std::nullopt;
      if (p.exponent == 0) return Affine{0, 1};
      if (p.exponent == 1) return a;
      if (a->slope != 0) return std::nullopt;
      Rational v = 1;
      for (unsigned i = 0; i < p.exponent; ++i) v *= a->intercept;
      return Affine{0, v};
    }
    std::optional<Affine> operator()(const Binary& b) const {
      auto l = as_affine(*b.lhs);
      auto r = as_affine(*b.rhs);
      if (!l || !r) return std::nullopt;
      switch (b.op) {
        case BinaryOp::Add: return Affine{l->slope + r->slope, l->intercept + r->intercept};
        case BinaryOp::Sub: return Affine{l->slope - r->slope, l->intercept - r->intercept};
        case BinaryOp::Mul:
          if (l->slope == 0) return Affine{l->intercept * r->slope, l->intercept * r->intercept};
          if (r->slope == 0) return Affine{r->intercept * l->slope, r->intercept * l->intercept};
          return std::nullopt;
        case BinaryOp::Div:
          if (r->slope != 0 || r->intercept == 0) return std::nullopt;
          return Affine{l->slope / r->intercept, l->intercept / r->intercept};
      }
      return std::nullopt;
    }
  };
  return std::visit(Visitor{}, node.value);
}

std::string to_string(const Node& node) {
  struct Visitor {
    std::string operator()(const Constant& c) const { return gha::to_string(c.value); }
    std::string operator()(const Variable&) const { return "x"; }
    std::string operator()(const Negate& n) const { return "-" + as_atom(*n.operand); }
    std::string operator()(const Power& p) const {
      return as_atom(*p.base) + "^" + std::to_string(p.exponent);
    }
    std::string operator()(const Binary& b) const {
      static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
      return "(" + to_string(*b.lhs) + ops[static_cast<int>(b.op)] + to_string(*b.rhs) + ")";
    }
  };
  return std::visit(Visitor{}, node.value);
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.value.index() != b.value.index()) return false;
  if (auto* c = std::get_if<Constant>(&a.value)) return c->value == std::get<Constant>(b.value).value;
  if (std::holds_alternative<Variable>(a.value)) return true;
  if (auto* n = std::get_if<Negate>(&a.value))
    return structurally_equal(*n->operand, *std::get<Negate>(b.value).operand);
  if (auto* p = std::get_if<Power>(&a.value)) {
    const auto& q = std::get<Power>(b.value);
    return p->exponent == q.exponent && structurally_equal(*p->base, *q.base);
  }
  const auto& x = std::get<Binary>(a.value);
  const auto& y = std::get<Binary>(b.value);
  return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) && structurally_equal(*x.rhs, *y.rhs);
}

}  // namespace gha::expr
