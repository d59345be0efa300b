#include "zykov/expr/evaluator.hpp"

#include "zykov/canonical.hpp"
#include "zykov/expr/parser.hpp"
#include "zykov/grothendieck.hpp"
#include "zykov/io.hpp"
#include "zykov/random.hpp"

namespace zykov::expr {

namespace {

// Position of a value in the promotion chain graph -> signed -> fraction; scalars sit below
// and enter the chain as multiples of K1.
enum class Rank { IntegerScalar, RationalScalar, Graph, Signed, Fraction, Other };

Rank rank_of(const Value& v) {
  switch (v.index()) {
    case 0: return Rank::Graph;
    case 1: return Rank::Signed;
    case 2: return Rank::Fraction;
    case 3: return Rank::RationalScalar;
    case 4: return Rank::IntegerScalar;
    default: return Rank::Other;
  }
}

bool is_scalar(Rank r) { return r == Rank::IntegerScalar || r == Rank::RationalScalar; }

Rational as_rational(const Value& v) {
  if (auto* n = std::get_if<Integer>(&v)) return Rational(*n);
  return std::get<Rational>(v);
}

SignedGraph as_signed(const Value& v) {
  if (auto* g = std::get_if<Graph>(&v)) return from_graph(*g);
  if (auto* s = std::get_if<SignedGraph>(&v)) return *s;
  if (auto* n = std::get_if<Integer>(&v)) return SignedGraph::from_integer(*n);
  throw TypeError("cannot use a " + type_name(v) + " value as a signed graph");
}

GraphFraction as_fraction(const Value& v) {
  if (auto* f = std::get_if<GraphFraction>(&v)) return *f;
  if (auto* r = std::get_if<Rational>(&v)) return scalar_from_rational(*r);
  return make_fraction(as_signed(v));
}

// Lifts both operands to the smallest common rank within the graph chain.
Rank common_graph_rank(const Value& a, const Value& b) {
  Rank ra = rank_of(a), rb = rank_of(b);
  auto lift = [](Rank r) {
    if (r == Rank::IntegerScalar) return Rank::Signed;
    if (r == Rank::RationalScalar) return Rank::Fraction;
    return r;
  };
  Rank la = lift(ra), lb = lift(rb);
  return la > lb ? la : lb;
}

class Evaluator {
 public:
  explicit Evaluator(const EvalOptions& options) : opt_(options) {}

  Value eval(const Node& n) {
    switch (n.kind) {
      case Node::Kind::Integer: return complete_graph(n.integer);
      case Node::Kind::Literal: return literal(n);
      case Node::Kind::Neg: return negate(eval(*n.children[0]));
      case Node::Kind::Add:
      case Node::Kind::Sub:
      case Node::Kind::Mul:
      case Node::Kind::Div: return binary(n.kind, eval(*n.children[0]), eval(*n.children[1]));
      case Node::Kind::Call: return call(n);
    }
    throw TypeError("unknown node");
  }

 private:
  std::size_t size_param(const Integer& n) const {
    if (n > Integer(opt_.max_vertices))
      throw ResourceError("graph literal of order " + n.str() + " exceeds the vertex limit of " +
                          std::to_string(opt_.max_vertices));
    return static_cast<std::size_t>(n);
  }

  void guard(std::size_t vertices, const char* what) const {
    if (vertices > opt_.max_vertices)
      throw ResourceError(std::string(what) + " would have " + std::to_string(vertices) +
                          " vertices, above the limit of " + std::to_string(opt_.max_vertices));
  }

  Value complete_graph(const Integer& n) const { return complete(size_param(n)); }

  Value literal(const Node& n) const {
    switch (n.literal) {
      case LiteralKind::Complete: return complete(size_param(n.params[0]));
      case LiteralKind::Cycle: return cycle(size_param(n.params[0]));
      case LiteralKind::Edgeless: return edgeless(size_param(n.params[0]));
      case LiteralKind::Sphere0: return edgeless(2);
      case LiteralKind::Octahedron: return octahedron();
      case LiteralKind::Wheel: return wheel(size_param(n.params[0]));
      case LiteralKind::Path: return path(size_param(n.params[0]));
      case LiteralKind::Random:
        return erdos_renyi(size_param(n.params[0]), n.probability, static_cast<std::uint64_t>(n.params[1]));
      case LiteralKind::Graph6: return decode_graph6(n.text);
    }
    throw TypeError("unknown literal");
  }

  Value negate(const Value& v) const {
    switch (rank_of(v)) {
      case Rank::IntegerScalar: return Integer(-std::get<Integer>(v));
      case Rank::RationalScalar: return Rational(-std::get<Rational>(v));
      case Rank::Graph:
      case Rank::Signed: return neg_signed(as_signed(v));
      case Rank::Fraction: return neg_fraction(std::get<GraphFraction>(v));
      default: throw TypeError("cannot negate a " + type_name(v) + " value");
    }
  }

  Value scalar_binary(Node::Kind op, const Value& a, const Value& b) const {
    if (op != Node::Kind::Div && rank_of(a) == Rank::IntegerScalar && rank_of(b) == Rank::IntegerScalar) {
      const Integer& x = std::get<Integer>(a);
      const Integer& y = std::get<Integer>(b);
      if (op == Node::Kind::Add) return Integer(x + y);
      if (op == Node::Kind::Sub) return Integer(x - y);
      return Integer(x * y);
    }
    const Rational x = as_rational(a), y = as_rational(b);
    switch (op) {
      case Node::Kind::Add: return Rational(x + y);
      case Node::Kind::Sub: return Rational(x - y);
      case Node::Kind::Mul: return Rational(x * y);
      default:
        if (y == 0) throw DivisionByCliqueZero("division by a scalar with clique value 0");
        return Rational(x / y);
    }
  }

  Value binary(Node::Kind op, const Value& a, const Value& b) const {
    const Rank ra = rank_of(a), rb = rank_of(b);
    const char* opname = op == Node::Kind::Add ? "+" : op == Node::Kind::Sub ? "-" : op == Node::Kind::Mul ? "*" : "/";
    if (ra == Rank::Other || rb == Rank::Other)
      throw TypeError(std::string("operator ") + opname + " does not accept " + type_name(ra == Rank::Other ? a : b) +
                      " values");
    if (is_scalar(ra) && is_scalar(rb)) return scalar_binary(op, a, b);

    Rank rank = common_graph_rank(a, b);
    if (op == Node::Kind::Div) rank = Rank::Fraction;

    if (rank == Rank::Graph) {
      const Graph& g = std::get<Graph>(a);
      const Graph& h = std::get<Graph>(b);
      switch (op) {
        case Node::Kind::Add:
          guard(g.vertex_count() + h.vertex_count(), "join");
          return join(g, h);
        case Node::Kind::Mul:
          guard(g.vertex_count() * h.vertex_count(), "product");
          return zykov_product(g, h);
        default: rank = Rank::Signed;  // subtraction leaves the graphs
      }
    }
    if (rank == Rank::Signed) {
      const SignedGraph s = as_signed(a), t = as_signed(b);
      switch (op) {
        case Node::Kind::Add: return add_signed(s, t);
        case Node::Kind::Sub: return sub_signed(s, t);
        default: guard_product(s, t); return mul_signed(s, t);
      }
    }
    const GraphFraction f = as_fraction(a), g = as_fraction(b);
    switch (op) {
      case Node::Kind::Add: return add_fraction(f, g);
      case Node::Kind::Sub: return sub_fraction(f, g);
      case Node::Kind::Mul: return mul_fraction(f, g);
      default: return div_fraction(f, g);
    }
  }

  void guard_product(const SignedGraph& s, const SignedGraph& t) const {
    for (const auto& [kp, p] : s.terms())
      for (const auto& [kq, q] : t.terms()) guard(p.graph.vertex_count() * q.graph.vertex_count(), "product");
  }

  static void arity(const Node& n, std::size_t expected) {
    if (n.children.size() != expected)
      throw TypeError(n.text + " expects " + std::to_string(expected) + " argument" + (expected == 1 ? "" : "s") +
                      ", got " + std::to_string(n.children.size()));
  }

  static const Graph& graph_arg(const std::string& fn, const Value& v) {
    if (auto* g = std::get_if<Graph>(&v)) return *g;
    throw TypeError(fn + " expects a graph, got a " + type_name(v) + " value");
  }

  // Integer arguments written as bare numbers arrive as complete graphs (or K1 multiples).
  static Integer integer_arg(const std::string& fn, const Value& v) {
    if (auto* n = std::get_if<Integer>(&v)) return *n;
    if (auto* g = std::get_if<Graph>(&v)) {
      const std::size_t n = g->vertex_count();
      if (n == 0 || g->edge_count() == n * (n - 1) / 2) return Integer(n);
    }
    if (auto* s = std::get_if<SignedGraph>(&v)) {
      bool k1_only = true;
      for (const auto& [key, term] : s->terms()) k1_only = k1_only && term.graph.vertex_count() == 1;
      if (k1_only) return clique_functional(*s);
    }
    throw TypeError(fn + " expects an integer, got a " + type_name(v) + " value");
  }

  Value call(const Node& n) {
    const std::string& fn = n.text;
    std::vector<Value> args;
    for (const auto& c : n.children) args.push_back(eval(*c));

    if (fn == "c") {
      arity(n, 1);
      const Value& v = args[0];
      if (auto* g = std::get_if<Graph>(&v)) return Integer(clique_number(*g));
      if (auto* s = std::get_if<SignedGraph>(&v)) return clique_functional(*s);
      if (auto* k = std::get_if<Integer>(&v)) return *k;
      throw TypeError("c is not defined on a " + type_name(v) + " value");
    }
    if (fn == "chi") {
      arity(n, 1);
      return euler_characteristic(graph_arg(fn, args[0]), opt_.clique_budget);
    }
    if (fn == "genus") {
      arity(n, 1);
      return genus(graph_arg(fn, args[0]), opt_.clique_budget);
    }
    if (fn == "f") {
      arity(n, 1);
      if (auto* s = std::get_if<SignedGraph>(&args[0])) return signed_f_function(*s, opt_.clique_budget);
      return f_function(graph_arg(fn, args[0]), opt_.clique_budget);
    }
    if (fn == "fvec") {
      arity(n, 1);
      return f_vector(graph_arg(fn, args[0]), opt_.clique_budget);
    }
    if (fn == "norm") {
      arity(n, 1);
      const Value& v = args[0];
      switch (rank_of(v)) {
        case Rank::IntegerScalar: return Integer(abs(std::get<Integer>(v)));
        case Rank::RationalScalar: return Rational(abs(std::get<Rational>(v)));
        case Rank::Graph:
        case Rank::Signed: return norm_signed(as_signed(v));
        case Rank::Fraction: return norm_fraction(std::get<GraphFraction>(v));
        default: throw TypeError("norm is not defined on a " + type_name(v) + " value");
      }
    }
    if (fn == "dist") {
      arity(n, 2);
      for (const auto& v : args)
        if (rank_of(v) != Rank::Graph && rank_of(v) != Rank::Signed && rank_of(v) != Rank::IntegerScalar)
          throw TypeError("dist expects signed graphs, got a " + type_name(v) + " value");
      return distance(as_signed(args[0]), as_signed(args[1]));
    }
    if (fn == "aprime") {
      arity(n, 1);
      return is_additive_prime(graph_arg(fn, args[0]));
    }
    if (fn == "afactor") {
      arity(n, 1);
      FactorList out;
      out.factorizations.emplace_back();
      for (auto& f : additive_factorize(graph_arg(fn, args[0]))) out.factorizations.back().push_back(std::move(f.graph));
      return out;
    }
    if (fn == "mprime") {
      arity(n, 1);
      const auto verdict = is_multiplicative_prime(graph_arg(fn, args[0]), opt_.max_catalog_order);
      if (verdict.verdict == Primality::Inconclusive)
        throw ResourceError("inconclusive: multiplicative primality needs a catalog beyond order " +
                            std::to_string(opt_.max_catalog_order));
      return verdict.verdict == Primality::Prime;
    }
    if (fn == "mfactor") {
      arity(n, 1);
      FactorList out;
      for (auto& p : multiplicative_factorizations(graph_arg(fn, args[0]), opt_.max_catalog_order))
        out.factorizations.push_back({std::move(p.left), std::move(p.right)});
      return out;
    }
    if (fn == "ds") {
      arity(n, 2);
      const Integer d = integer_arg(fn, args[1]);
      if (d < -1 || d > 1'000'000) throw InputError("ds dimension must lie in [-1, 1000000]");
      return DehnSommerville(opt_.ds_call_budget, opt_.clique_budget)
          .member(graph_arg(fn, args[0]), static_cast<int>(d));
    }
    if (fn == "iso") {
      arity(n, 2);
      return is_isomorphic(graph_arg(fn, args[0]), graph_arg(fn, args[1]));
    }
    if (fn == "eq") {
      arity(n, 2);
      return values_equal(args[0], args[1]);
    }
    throw TypeError("unknown function " + fn);
  }

  EvalOptions opt_;
};

}  // namespace

bool values_equal(const Value& a, const Value& b) {
  const Rank ra = rank_of(a), rb = rank_of(b);
  if (ra == Rank::Other || rb == Rank::Other) {
    if (a.index() != b.index())
      throw TypeError("eq cannot compare " + type_name(a) + " with " + type_name(b));
    return std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FactorList>) {
            const auto& y = std::get<FactorList>(b);
            if (x.factorizations.size() != y.factorizations.size()) return false;
            for (std::size_t i = 0; i < x.factorizations.size(); ++i) {
              if (x.factorizations[i].size() != y.factorizations[i].size()) return false;
              for (std::size_t j = 0; j < x.factorizations[i].size(); ++j)
                if (!is_isomorphic(x.factorizations[i][j], y.factorizations[i][j])) return false;
            }
            return true;
          } else if constexpr (std::is_same_v<T, bool> || std::is_same_v<T, FVector> ||
                               std::is_same_v<T, Polynomial> || std::is_same_v<T, RationalFunction>) {
            return x == std::get<T>(b);
          } else {
            return false;  // graph-like and scalar values are handled below
          }
        },
        a);
  }
  if (is_scalar(ra) && is_scalar(rb)) return as_rational(a) == as_rational(b);
  const Rank rank = common_graph_rank(a, b);
  if (rank == Rank::Graph) return is_isomorphic(std::get<Graph>(a), std::get<Graph>(b));
  if (rank == Rank::Signed) return as_signed(a) == as_signed(b);
  return fraction_equals(as_fraction(a), as_fraction(b));
}

Value evaluate(const Node& node, const EvalOptions& options) { return Evaluator(options).eval(node); }

Value evaluate(std::string_view text, const EvalOptions& options) { return evaluate(*parse(text), options); }

}  // namespace zykov::expr
