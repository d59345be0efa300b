#pragma once

#include <optional>

#include "zykov/grothendieck.hpp"
#include "zykov/numeric.hpp"

namespace zykov {

/// A / B with c(B) != 0, stored with c(B) > 0. Fractions are not reduced; compare them
/// with fraction_equals(), which cross-multiplies.
class GraphFraction {
 public:
  /// 0 / K1.
  GraphFraction();

  const SignedGraph& numerator() const { return num_; }
  const SignedGraph& denominator() const { return den_; }

 private:
  friend GraphFraction make_fraction(SignedGraph num, SignedGraph den);
  GraphFraction(SignedGraph num, SignedGraph den) : num_(std::move(num)), den_(std::move(den)) {}

  SignedGraph num_;
  SignedGraph den_;
};

/// Throws DivisionByCliqueZero if c(den) = 0. A negative c(den) moves the sign to the numerator.
GraphFraction make_fraction(SignedGraph num, SignedGraph den);
GraphFraction make_fraction(const SignedGraph& num);

GraphFraction add_fraction(const GraphFraction& f, const GraphFraction& g);
GraphFraction neg_fraction(const GraphFraction& f);
GraphFraction sub_fraction(const GraphFraction& f, const GraphFraction& g);
GraphFraction mul_fraction(const GraphFraction& f, const GraphFraction& g);
/// Throws DivisionByCliqueZero if c(g.numerator()) = 0.
GraphFraction div_fraction(const GraphFraction& f, const GraphFraction& g);

/// f.num * g.den == g.num * f.den in the Grothendieck ring.
bool fraction_equals(const GraphFraction& f, const GraphFraction& g);

/// |num| / |den|.
Rational norm_fraction(const GraphFraction& f);

/// p/q -> (p copies of K1) / (q copies of K1), the sign carried by the numerator.
GraphFraction scalar_from_rational(const Rational& r);
GraphFraction scalar_mul(const Rational& r, const GraphFraction& f);

/// c(num) / c(den) when both parts consist of K1 alone (the scalar subfield), nullopt otherwise.
std::optional<Rational> as_rational_scalar(const GraphFraction& f);

}  // namespace zykov
