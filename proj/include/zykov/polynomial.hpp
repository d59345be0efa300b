#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zykov/numeric.hpp"

namespace zykov {

/// Polynomial in t with exact integer coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  static Polynomial constant(const Integer& c) { return Polynomial({c}); }
  /// (1 + t)^n.
  static Polynomial one_plus_t_pow(unsigned n);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& t) const;
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Divides every coefficient by d (d must divide them all).
  Polynomial divided_exactly(const Integer& d) const;
  /// gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  /// e.g. "1 + 3t + 3t^2 + t^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient of two polynomials, kept unevaluated. Stored with the common content of numerator
/// and denominator removed and a positive leading denominator coefficient. Equality compares
/// cross products, so two representations of one function compare equal.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::constant(0)), den_(Polynomial::constant(1)) {}
  /// Throws InputError if den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Value at t, or nullopt where the denominator vanishes.
  std::optional<Rational> evaluate(const Integer& t) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace zykov
