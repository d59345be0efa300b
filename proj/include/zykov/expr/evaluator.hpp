#pragma once

#include <cstdint>
#include <string_view>

#include "zykov/expr/ast.hpp"
#include "zykov/expr/value.hpp"
#include "zykov/invariants.hpp"
#include "zykov/primes.hpp"

namespace zykov::expr {

struct EvalOptions {
  std::size_t max_vertices = 4096;                 // literals, joins and products above this are refused
  std::uint64_t clique_budget = kDefaultCliqueBudget;
  std::size_t max_catalog_order = kMaxCatalogOrder;  // for mprime / mfactor
  std::size_t ds_call_budget = 100'000;
};

/// Evaluates a parsed expression.
///
/// Bare integers n are the complete graphs K_n. "+", "-", "*" act on graphs by join, formal
/// difference and Zykov product, promoting graph -> signed graph -> fraction as needed; "/"
/// always yields a fraction. Integer and rational scalars (results of c, chi, norm, ...) combine
/// with each other as numbers and embed into graph arithmetic as multiples of K1.
///
/// Throws TypeError, DivisionByCliqueZero, ResourceError or InputError.
Value evaluate(const Node& node, const EvalOptions& options = {});

Value evaluate(std::string_view text, const EvalOptions& options = {});

/// Structural equality used by eq(): isomorphism for graphs, cross-multiplication for fractions,
/// with the same promotions as arithmetic.
bool values_equal(const Value& a, const Value& b);

}  // namespace zykov::expr
