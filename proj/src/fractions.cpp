#include "zykov/fractions.hpp"

#include "zykov/errors.hpp"

namespace zykov {

GraphFraction::GraphFraction() : den_(SignedGraph::from_integer(1)) {}

GraphFraction make_fraction(SignedGraph num, SignedGraph den) {
  const Integer c = clique_functional(den);
  if (c == 0) throw DivisionByCliqueZero("denominator has clique functional 0");
  if (c < 0) return GraphFraction(neg_signed(num), neg_signed(den));
  return GraphFraction(std::move(num), std::move(den));
}

GraphFraction make_fraction(const SignedGraph& num) { return make_fraction(num, SignedGraph::from_integer(1)); }

GraphFraction add_fraction(const GraphFraction& f, const GraphFraction& g) {
  return make_fraction(f.numerator() * g.denominator() + g.numerator() * f.denominator(),
                       f.denominator() * g.denominator());
}

GraphFraction neg_fraction(const GraphFraction& f) { return make_fraction(-f.numerator(), f.denominator()); }

GraphFraction sub_fraction(const GraphFraction& f, const GraphFraction& g) { return add_fraction(f, neg_fraction(g)); }

GraphFraction mul_fraction(const GraphFraction& f, const GraphFraction& g) {
  return make_fraction(f.numerator() * g.numerator(), f.denominator() * g.denominator());
}

GraphFraction div_fraction(const GraphFraction& f, const GraphFraction& g) {
  if (clique_functional(g.numerator()) == 0) throw DivisionByCliqueZero("divisor has clique functional 0");
  return make_fraction(f.numerator() * g.denominator(), f.denominator() * g.numerator());
}

bool fraction_equals(const GraphFraction& f, const GraphFraction& g) {
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

Rational norm_fraction(const GraphFraction& f) {
  return Rational(norm_signed(f.numerator()), norm_signed(f.denominator()));
}

GraphFraction scalar_from_rational(const Rational& r) {
  return make_fraction(SignedGraph::from_integer(numerator(r)), SignedGraph::from_integer(denominator(r)));
}

GraphFraction scalar_mul(const Rational& r, const GraphFraction& f) { return mul_fraction(scalar_from_rational(r), f); }

namespace {

bool k1_only(const SignedGraph& s) {
  for (const auto& [key, term] : s.terms())
    if (term.graph.vertex_count() != 1) return false;
  return true;
}

}  // namespace

std::optional<Rational> as_rational_scalar(const GraphFraction& f) {
  if (!k1_only(f.numerator()) || !k1_only(f.denominator())) return std::nullopt;
  return Rational(clique_functional(f.numerator()), clique_functional(f.denominator()));
}

}  // namespace zykov
