#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "zykov/errors.hpp"
#include "zykov/fractions.hpp"
#include "zykov/graph.hpp"
#include "zykov/grothendieck.hpp"
#include "zykov/invariants.hpp"
#include "zykov/numeric.hpp"
#include "zykov/polynomial.hpp"

namespace zykov::expr {

/// A wrong operand type for an operator or function.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// One or more factorizations, each a list of graphs.
struct FactorList {
  std::vector<std::vector<Graph>> factorizations;
};

using Value = std::variant<Graph, SignedGraph, GraphFraction, Rational, Integer, bool, FVector, Polynomial,
                           RationalFunction, FactorList>;

/// "graph", "signed", "fraction", "rational", "integer", "boolean", "fvector", "polynomial",
/// "rational_function" or "factors".
std::string type_name(const Value& v);

/// Expression that evaluates back to v (eq-equal). Defined for graph, signed, fraction,
/// rational, integer and boolean values; graphs need at most 62 vertices. Throws TypeError otherwise.
std::string to_expression(const Value& v);

/// Human-readable rendering. Graph-like values print as their generating expression.
std::string to_text(const Value& v);

/// {"type", "graph6", "signed", "value"} as documented in the README.
nlohmann::json to_json(const Value& v);

}  // namespace zykov::expr
