#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gha/scalar.hpp"

namespace gha::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class BinaryOp { Add, Sub, Mul, Div };

struct Constant {
  Rational value;
};
struct Variable {};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};
struct Negate {
  NodePtr operand;
};

// Immutable expression tree in one variable x.
struct Node {
  std::variant<Constant, Variable, Binary, Power, Negate> value;
};

NodePtr constant(Rational value);
NodePtr variable();
NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
NodePtr power(NodePtr base, unsigned exponent);
NodePtr negate(NodePtr operand);

/// Grammar (whitespace ignored between tokens):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' uint)?
///   atom   := number | 'x' | '(' expr ')' | '-' atom
/// A number is a decimal ("2", "0.5") or a fraction literal ("3/2", no
/// spaces around the slash). Throws SyntaxError with the byte offset.
NodePtr parse(std::string_view text);

/// Exact evaluation. Throws DivisionByZero naming the offending subtree.
Rational eval(const Node& node, const Rational& x);
double eval(const Node& node, double x);

struct Affine {
  Rational slope;
  Rational intercept;
};

/// (a, b) with node == a*x + b, if the tree is affine after constant folding.
std::optional<Affine> as_affine(const Node& node);

/// Fully parenthesized form that parses back to the same tree.
std::string to_string(const Node& node);

bool structurally_equal(const Node& a, const Node& b);

}  // namespace gha::expr
