#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zykov/errors.hpp"
#include "zykov/expr/ast.hpp"

namespace zykov::expr {

/// Lexical or syntax error, located at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Function names accepted by call syntax.
const std::vector<std::string>& function_names();

/// Parses one expression:
///
///   expr    := term { ("+" | "-") term }
///   term    := unary { ("*" | "/") unary }
///   unary   := "-" unary | atom
///   atom    := INT | literal | call | "(" expr ")"
///   literal := "K(" INT ")" | "C(" INT ")" | "E(" INT ")" | "S0" | "Oct" | "W(" INT ")"
///            | "Path(" INT ")" | "G(" INT "," RATIONAL "," INT ")" | "g6(" STRING ")"
///   call    := NAME "(" [ expr { "," expr } ] ")"
///
/// RATIONAL is INT, INT "/" INT or a decimal such as 0.25. All binary operators are left
/// associative.
NodePtr parse(std::string_view text);

}  // namespace zykov::expr
