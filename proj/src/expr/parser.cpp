#include "zykov/expr/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zykov::expr {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
            (expected.empty() ? std::string{} : " (expected " + join_expected(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names{"c",      "chi",    "genus",  "f",      "fvec",
                                              "norm",   "dist",   "aprime", "afactor", "mprime",
                                              "mfactor", "ds",    "iso",    "eq"};
  return names;
}

namespace {

enum class Tok { Int, Decimal, Name, String, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Int: return "integer";
    case Tok::Decimal: return "decimal";
    case Tok::Name: return "name";
    case Tok::String: return "string";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Span span{line, col, 0};
    auto emit = [&](Tok kind, std::size_t len) {
      span.length = len;
      out.push_back({kind, std::string(s.substr(i, len)), span});
      advance(len);
    };
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '.' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        emit(Tok::Decimal, j - i);
      } else {
        emit(Tok::Int, j - i);
      }
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      emit(Tok::Name, j - i);
    } else if (ch == '"') {
      std::size_t j = s.find('"', i + 1);
      if (j == std::string_view::npos) throw ParseError(line, col, "unterminated string");
      span.length = j - i + 1;
      out.push_back({Tok::String, std::string(s.substr(i + 1, j - i - 1)), span});
      advance(j - i + 1);
    } else {
      Tok kind;
      switch (ch) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default: throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
      }
      emit(kind, 1);
    }
  }
  out.push_back({Tok::End, "", {line, col, 0}});
  return out;
}

const std::vector<std::string>& literal_names() {
  static const std::vector<std::string> names{"K", "C", "E", "S0", "Oct", "W", "Path", "G", "g6"};
  return names;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix.
Integer decimal_integer(std::string digits) {
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  return Integer(digits);
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  NodePtr parse_all() {
    NodePtr root = expr();
    if (peek().kind != Tok::End) fail({"operator", "end of input"});
    return root;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string what = t.kind == Tok::End ? "unexpected end of input" : "unexpected " + std::string(describe(t.kind)) +
                                                                             (t.text.empty() ? "" : " '" + t.text + "'");
    throw ParseError(t.span.line, t.span.column, what, std::move(expected));
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail({describe(kind)});
    return take();
  }

  static NodePtr make(Node::Kind kind, Span span) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->span = span;
    return n;
  }

  static NodePtr binary(Node::Kind kind, Span span, NodePtr lhs, NodePtr rhs) {
    auto n = make(kind, span);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = take();
      lhs = binary(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, op.span, std::move(lhs), term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = take();
      lhs = binary(op.kind == Tok::Star ? Node::Kind::Mul : Node::Kind::Div, op.span, std::move(lhs), unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus) {
      Token op = take();
      auto n = make(Node::Kind::Neg, op.span);
      n->children.push_back(unary());
      return n;
    }
    return atom();
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        auto n = make(Node::Kind::Integer, t.span);
        n->integer = decimal_integer(take().text);
        return n;
      }
      case Tok::LParen: {
        take();
        NodePtr inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Name: return named();
      default: {
        std::vector<std::string> expected{"integer", "'('", "'-'", "graph literal", "function call"};
        fail(expected);
      }
    }
  }

  Integer int_param() {
    Token t = expect(Tok::Int);
    return decimal_integer(t.text);
  }

  Rational rational_param() {
    const Token& t = peek();
    if (t.kind == Tok::Decimal) {
      const std::string text = take().text;
      auto dot = text.find('.');
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      Integer scale = 1;
      for (std::size_t k = dot + 1; k < text.size(); ++k) scale *= 10;
      return Rational(decimal_integer(digits), scale);
    }
    if (t.kind != Tok::Int) fail({"integer", "decimal"});
    Integer num = decimal_integer(take().text);
    if (peek().kind != Tok::Slash) return Rational(num);
    take();
    Token den_tok = expect(Tok::Int);
    Integer den = decimal_integer(den_tok.text);
    if (den == 0) throw ParseError(den_tok.span.line, den_tok.span.column, "zero denominator in probability");
    return Rational(num, den);
  }

  NodePtr named() {
    Token name = take();
    const auto& fns = function_names();
    const auto& lits = literal_names();
    const bool is_fn = std::find(fns.begin(), fns.end(), name.text) != fns.end();
    const bool is_lit = std::find(lits.begin(), lits.end(), name.text) != lits.end();
    if (!is_fn && !is_lit) {
      std::vector<std::string> expected = lits;
      expected.insert(expected.end(), fns.begin(), fns.end());
      throw ParseError(name.span.line, name.span.column, "unknown name '" + name.text + "'", expected);
    }
    if (is_fn) return call(name);
    return literal(name);
  }

  NodePtr call(const Token& name) {
    auto n = make(Node::Kind::Call, name.span);
    n->text = name.text;
    expect(Tok::LParen);
    if (peek().kind != Tok::RParen) {
      n->children.push_back(expr());
      while (peek().kind == Tok::Comma) {
        take();
        n->children.push_back(expr());
      }
    }
    if (peek().kind != Tok::RParen) fail({"','", "')'"});
    take();
    return n;
  }

  NodePtr literal(const Token& name) {
    auto n = make(Node::Kind::Literal, name.span);
    const std::string& s = name.text;
    if (s == "S0") {
      n->literal = LiteralKind::Sphere0;
      return n;
    }
    if (s == "Oct") {
      n->literal = LiteralKind::Octahedron;
      return n;
    }
    expect(Tok::LParen);
    if (s == "g6") {
      n->literal = LiteralKind::Graph6;
      n->text = expect(Tok::String).text;
    } else if (s == "G") {
      n->literal = LiteralKind::Random;
      n->params.push_back(int_param());
      expect(Tok::Comma);
      const Span p_span = peek().span;
      n->probability = rational_param();
      if (n->probability < 0 || n->probability > 1)
        throw ParseError(p_span.line, p_span.column, "edge probability must lie in [0, 1]");
      expect(Tok::Comma);
      n->params.push_back(int_param());
      if (n->params.back() > Integer(UINT64_MAX))
        throw ParseError(name.span.line, name.span.column, "seed does not fit in 64 bits");
    } else {
      const Span p_span = peek().span;
      n->params.push_back(int_param());
      if (s == "K") n->literal = LiteralKind::Complete;
      if (s == "E") n->literal = LiteralKind::Edgeless;
      if (s == "Path") n->literal = LiteralKind::Path;
      if (s == "C" || s == "W") {
        n->literal = s == "C" ? LiteralKind::Cycle : LiteralKind::Wheel;
        if (n->params.back() < 3)
          throw ParseError(p_span.line, p_span.column, s + "(n) requires n >= 3");
      }
    }
    expect(Tok::RParen);
    return n;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const char* kind_name(Node::Kind k) {
  switch (k) {
    case Node::Kind::Integer: return "int";
    case Node::Kind::Literal: return "lit";
    case Node::Kind::Neg: return "neg";
    case Node::Kind::Add: return "add";
    case Node::Kind::Sub: return "sub";
    case Node::Kind::Mul: return "mul";
    case Node::Kind::Div: return "div";
    case Node::Kind::Call: return "call";
  }
  return "?";
}

const char* literal_name(LiteralKind k) {
  switch (k) {
    case LiteralKind::Complete: return "K";
    case LiteralKind::Cycle: return "C";
    case LiteralKind::Edgeless: return "E";
    case LiteralKind::Sphere0: return "S0";
    case LiteralKind::Octahedron: return "Oct";
    case LiteralKind::Wheel: return "W";
    case LiteralKind::Path: return "Path";
    case LiteralKind::Random: return "G";
    case LiteralKind::Graph6: return "g6";
  }
  return "?";
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string to_sexpr(const Node& node) {
  std::ostringstream os;
  switch (node.kind) {
    case Node::Kind::Integer: os << node.integer; break;
    case Node::Kind::Literal:
      os << "(" << literal_name(node.literal);
      if (node.literal == LiteralKind::Graph6) os << " \"" << node.text << "\"";
      if (node.literal == LiteralKind::Random)
        os << " " << node.params[0] << " " << node.probability << " " << node.params[1];
      else
        for (const auto& p : node.params) os << " " << p;
      os << ")";
      break;
    case Node::Kind::Call:
      os << "(call " << node.text;
      for (const auto& c : node.children) os << " " << to_sexpr(*c);
      os << ")";
      break;
    default:
      os << "(" << kind_name(node.kind);
      for (const auto& c : node.children) os << " " << to_sexpr(*c);
      os << ")";
  }
  return os.str();
}

}  // namespace zykov::expr
