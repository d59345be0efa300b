#include "zykov/expr/value.hpp"

#include <limits>
#include <sstream>

#include "zykov/io.hpp"

namespace zykov::expr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string graph_expression(const Graph& g) {
  if (g.empty()) return "0";
  if (g.vertex_count() > kGraph6MaxVertices)
    throw TypeError("graph with " + std::to_string(g.vertex_count()) + " vertices has no graph6 expression");
  return "g6(\"" + encode_graph6(g) + "\")";
}

std::string signed_expression(const SignedGraph& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, term] : s.terms()) {
    const bool negative = term.multiplicity < 0;
    const Integer mag = abs(term.multiplicity);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::ostringstream os;
    if (term.graph.vertex_count() == 1)
      os << mag;
    else if (mag == 1)
      os << graph_expression(term.graph);
    else
      os << mag << "*" << graph_expression(term.graph);
    out += os.str();
  }
  return out;
}

std::string integer_expression(const Integer& n) {
  std::ostringstream os;
  if (n < 0)
    os << "c(-" << -n << ")";
  else
    os << "c(" << n << ")";
  return os.str();
}

nlohmann::json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

nlohmann::json terms_json(const SignedGraph& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, term] : s.terms()) {
    nlohmann::json entry;
    entry["prime_g6"] = term.graph.vertex_count() <= kGraph6MaxVertices ? nlohmann::json(encode_graph6(term.graph))
                                                                       : nlohmann::json(nullptr);
    entry["mult"] = integer_json(term.multiplicity);
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string factor_list_text(const FactorList& f) {
  std::string out;
  for (std::size_t i = 0; i < f.factorizations.size(); ++i) {
    if (i) out += "\n";
    out += "[";
    for (std::size_t j = 0; j < f.factorizations[i].size(); ++j)
      out += (j ? ", " : "") + graph_expression(f.factorizations[i][j]);
    out += "]";
  }
  return f.factorizations.empty() ? "[]" : out;
}

}  // namespace

std::string type_name(const Value& v) {
  return std::visit(overloaded{[](const Graph&) { return "graph"; }, [](const SignedGraph&) { return "signed"; },
                               [](const GraphFraction&) { return "fraction"; },
                               [](const Rational&) { return "rational"; }, [](const Integer&) { return "integer"; },
                               [](bool) { return "boolean"; }, [](const FVector&) { return "fvector"; },
                               [](const Polynomial&) { return "polynomial"; },
                               [](const RationalFunction&) { return "rational_function"; },
                               [](const FactorList&) { return "factors"; }},
                    v);
}

std::string to_expression(const Value& v) {
  return std::visit(
      overloaded{[](const Graph& g) { return graph_expression(g); },
                 [](const SignedGraph& s) { return signed_expression(s); },
                 [](const GraphFraction& f) {
                   return "(" + signed_expression(f.numerator()) + ")/(" + signed_expression(f.denominator()) + ")";
                 },
                 [](const Rational& r) {
                   return integer_expression(numerator(r)) + "/" + integer_expression(denominator(r));
                 },
                 [](const Integer& n) { return integer_expression(n); },
                 [](bool b) { return std::string(b ? "iso(1, 1)" : "iso(1, 2)"); },
                 [&](const auto&) -> std::string {
                   throw TypeError("a " + type_name(v) + " value has no generating expression");
                 }},
      v);
}

std::string to_text(const Value& v) {
  return std::visit(
      overloaded{[](const Graph& g) {
                   return g.vertex_count() <= kGraph6MaxVertices ? graph_expression(g) : describe(g);
                 },
                 [](const SignedGraph& s) { return signed_expression(s); },
                 [](const GraphFraction& f) {
                   return "(" + signed_expression(f.numerator()) + ")/(" + signed_expression(f.denominator()) + ")";
                 },
                 [](const Rational& r) { return rational_text(r); },
                 [](const Integer& n) { return n.str(); }, [](bool b) { return std::string(b ? "true" : "false"); },
                 [](const FVector& f) { return f.to_string(); }, [](const Polynomial& p) { return p.to_string(); },
                 [](const RationalFunction& r) { return r.to_string(); },
                 [](const FactorList& f) { return factor_list_text(f); }},
      v);
}

nlohmann::json to_json(const Value& v) {
  nlohmann::json out;
  out["type"] = type_name(v);
  out["graph6"] = nullptr;
  out["signed"] = nullptr;
  std::visit(overloaded{[&](const Graph& g) {
                          if (g.vertex_count() <= kGraph6MaxVertices) out["graph6"] = encode_graph6(g);
                          out["signed"] = terms_json(from_graph(g));
                          out["value"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
                        },
                        [&](const SignedGraph& s) {
                          out["signed"] = terms_json(s);
                          out["value"] = signed_expression(s);
                        },
                        [&](const GraphFraction& f) {
                          out["value"] = {{"numerator", terms_json(f.numerator())},
                                          {"denominator", terms_json(f.denominator())}};
                        },
                        [&](const Rational& r) { out["value"] = rational_text(r); },
                        [&](const Integer& n) { out["value"] = integer_json(n); },
                        [&](bool b) { out["value"] = b; },
                        [&](const FVector& f) { out["value"] = f.counts; },
                        [&](const Polynomial& p) {
                          nlohmann::json arr = nlohmann::json::array();
                          for (const auto& c : p.coefficients()) arr.push_back(integer_json(c));
                          out["value"] = arr;
                        },
                        [&](const RationalFunction& r) {
                          auto coeffs = [](const Polynomial& p) {
                            nlohmann::json arr = nlohmann::json::array();
                            for (const auto& c : p.coefficients()) arr.push_back(integer_json(c));
                            return arr;
                          };
                          out["value"] = {{"numerator", coeffs(r.numerator())},
                                          {"denominator", coeffs(r.denominator())}};
                        },
                        [&](const FactorList& f) {
                          nlohmann::json arr = nlohmann::json::array();
                          for (const auto& fac : f.factorizations) {
                            nlohmann::json inner = nlohmann::json::array();
                            for (const auto& g : fac)
                              inner.push_back(g.vertex_count() <= kGraph6MaxVertices
                                                  ? nlohmann::json(encode_graph6(g))
                                                  : nlohmann::json(nullptr));
                            arr.push_back(std::move(inner));
                          }
                          out["value"] = arr;
                        }},
             v);
  return out;
}

}  // namespace zykov::expr
