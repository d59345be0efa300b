#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zykov/numeric.hpp"

namespace zykov::expr {

/// 1-based source position plus length in bytes.
struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

enum class LiteralKind { Complete, Cycle, Edgeless, Sphere0, Octahedron, Wheel, Path, Random, Graph6 };

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { Integer, Literal, Neg, Add, Sub, Mul, Div, Call };

  Kind kind;
  Span span;
  Integer integer;               // Integer: the value
  LiteralKind literal{};         // Literal: which family
  std::vector<Integer> params;   // Literal: K/C/E/W/Path size, or G(n, _, seed)
  Rational probability;          // Literal G: edge probability
  std::string text;              // Literal g6: payload; Call: function name
  std::vector<NodePtr> children; // operands or call arguments
};

/// Lisp-style dump of the tree, for tests and debugging: (call c (mul (K 5) (C 7))).
std::string to_sexpr(const Node& node);

}  // namespace zykov::expr
