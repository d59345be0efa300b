// Command-line front end: evaluate graph-arithmetic expressions, factor graphs, run
// Fibonacci sequences, list the small-graph catalog and convert between formats.
//
// Exit codes: 0 success, 1 selftest failure, 2 parse/type/input error,
// 3 division by a clique-zero element, 4 resource budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "selftest.hpp"
#include "zykov/expr/evaluator.hpp"
#include "zykov/expr/parser.hpp"
#include "zykov/grothendieck.hpp"
#include "zykov/io.hpp"
#include "zykov/primes.hpp"
#include "zykov/sequences.hpp"

namespace {

using namespace zykov;

enum Exit { kOk = 0, kSelftestFailed = 1, kUsage = 2, kCliqueZero = 3, kResource = 4 };

const Graph& require_graph(const expr::Value& v, const char* what) {
  if (auto* g = std::get_if<Graph>(&v)) return *g;
  throw expr::TypeError(std::string(what) + " needs a graph, got a " + expr::type_name(v) + " value");
}

int cmd_eval(const std::string& text, const std::string& format) {
  const expr::Value v = expr::evaluate(text);
  if (format == "json")
    std::cout << expr::to_json(v).dump() << "\n";
  else if (format == "graph6")
    std::cout << encode_graph6(require_graph(v, "graph6 output")) << "\n";
  else if (format == "dot")
    std::cout << export_dot(require_graph(v, "dot output"));
  else
    std::cout << expr::to_text(v) << "\n";
  return kOk;
}

std::string g6_or_size(const Graph& g) {
  return g.vertex_count() <= kGraph6MaxVertices ? encode_graph6(g) : describe(g);
}

int cmd_factor(const std::string& text, bool multiplicative) {
  const expr::Value v = expr::evaluate(text);
  if (multiplicative) {
    const Graph& g = require_graph(v, "multiplicative factorization");
    const auto pairs = multiplicative_factorizations(g);
    if (pairs.empty()) std::cout << (g.vertex_count() == 1 ? "unit" : "prime") << "\n";
    for (const auto& p : pairs) std::cout << g6_or_size(p.left) << " * " << g6_or_size(p.right) << "\n";
    return kOk;
  }
  SignedGraph s;
  if (auto* g = std::get_if<Graph>(&v))
    s = from_graph(*g);
  else if (auto* sg = std::get_if<SignedGraph>(&v))
    s = *sg;
  else
    throw expr::TypeError("factor needs a graph or signed graph, got a " + expr::type_name(v) + " value");
  for (const auto& [key, term] : s.terms()) std::cout << term.multiplicity << "\t" << g6_or_size(term.graph) << "\n";
  return kOk;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << static_cast<double>(r);
  return os.str();
}

int cmd_fib(const std::string& start0, const std::string& start1, std::size_t steps, const std::string& format) {
  const Graph g0 = require_graph(expr::evaluate(start0), "--start0");
  const Graph g1 = require_graph(expr::evaluate(start1), "--start1");
  const FibReport report = fibonacci_report(g0, g1, steps);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : report.steps) {
      nlohmann::json row;
      row["index"] = s.index;
      row["vertices"] = s.vertex_count;
      row["clique"] = s.clique_number;
      row["ds_dimension"] = s.ds_dimension ? nlohmann::json(*s.ds_dimension) : nlohmann::json(nullptr);
      row["ratio"] = s.ratio ? nlohmann::json(rational_text(*s.ratio)) : nlohmann::json(nullptr);
      row["ratio_decimal"] = s.ratio ? nlohmann::json(static_cast<double>(*s.ratio)) : nlohmann::json(nullptr);
      row["fraction_norm"] = s.fraction_norm ? nlohmann::json(rational_text(*s.fraction_norm)) : nlohmann::json(nullptr);
      arr.push_back(std::move(row));
    }
    std::cout << nlohmann::json{{"steps", arr}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "index,vertices,clique,ds_dimension,ratio,ratio_decimal,fraction_norm\n";
  for (const auto& s : report.steps) {
    std::cout << s.index << "," << s.vertex_count << "," << s.clique_number << ","
              << (s.ds_dimension ? std::to_string(*s.ds_dimension) : "") << ","
              << (s.ratio ? rational_text(*s.ratio) : "") << "," << (s.ratio ? decimal(*s.ratio) : "") << ","
              << (s.fraction_norm ? rational_text(*s.fraction_norm) : "") << "\n";
  }
  return kOk;
}

int cmd_catalog(std::size_t order) {
  for (const auto& g : graphs_of_order(order)) std::cout << encode_graph6(g) << "\n";
  return kOk;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& input) {
  std::ostringstream buffer;
  if (input.empty() || input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(input);
    if (!in) throw InputError("cannot open " + input);
    buffer << in.rdbuf();
  }
  const std::string text = buffer.str();
  std::vector<Graph> graphs;
  if (from == "edgelist") {
    graphs.push_back(parse_edge_list(text));
  } else {
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
      if (!line.empty() && line != "\r") graphs.push_back(decode_graph6(line));
  }
  for (const auto& g : graphs) std::cout << (to == "dot" ? export_dot(g) : encode_graph6(g) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the Zykov-Sabidussi ring of graphs"};
  app.require_subcommand(1);

  std::string expression, format = "text";
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expression, "Expression, e.g. \"norm(C(4)-C(5))\"")->required();
  eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "graph6", "dot"}));

  bool multiplicative = false;
  auto* factor = app.add_subcommand("factor", "Additive (default) or multiplicative factorization");
  factor->add_option("expr", expression)->required();
  factor->add_flag("--multiplicative", multiplicative, "List factor pairs A * B instead");

  std::string start0, start1, fib_format = "csv";
  std::size_t steps = 0;
  auto* fib = app.add_subcommand("fib", "Fibonacci sequence G_{n+1} = G_n + G_{n-1}");
  fib->add_option("--start0", start0)->required();
  fib->add_option("--start1", start1)->required();
  fib->add_option("--steps", steps)->required();
  fib->add_option("--format", fib_format)->check(CLI::IsMember({"json", "csv"}));

  std::size_t order = 0;
  auto* catalog = app.add_subcommand("catalog", "graph6 of one graph per isomorphism class of the given order");
  catalog->add_option("--order", order)->required();

  std::uint64_t corpus_seed = 1;
  std::size_t trials = 50;
  auto* selftest = app.add_subcommand("selftest", "Randomized algebraic self-check");
  selftest->add_option("--corpus-seed", corpus_seed);
  selftest->add_option("--trials", trials);

  std::string from = "g6", to = "dot", input;
  auto* convert = app.add_subcommand("convert", "Convert graphs read from stdin or --input");
  convert->add_option("--from", from)->check(CLI::IsMember({"g6", "edgelist"}));
  convert->add_option("--to", to)->check(CLI::IsMember({"dot", "g6"}));
  convert->add_option("--input", input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(expression, format);
    if (*factor) return cmd_factor(expression, multiplicative);
    if (*fib) return cmd_fib(start0, start1, steps, fib_format);
    if (*catalog) return cmd_catalog(order);
    if (*selftest) return zykov::cli::run_selftest(corpus_seed, trials, std::cout) == 0 ? kOk : kSelftestFailed;
    if (*convert) return cmd_convert(from, to, input);
  } catch (const DivisionByCliqueZero& e) {
    std::cerr << "error: division by clique zero: " << e.what() << "\n";
    return kCliqueZero;
  } catch (const ResourceError& e) {
    std::cerr << "error: resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const expr::ParseError& e) {
    std::cerr << "error: syntax: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
