#pragma once

#include <map>
#include <vector>

#include "zykov/canonical.hpp"
#include "zykov/graph.hpp"
#include "zykov/numeric.hpp"

namespace zykov {

/// An additive prime (a graph with connected complement) together with its key.
struct AdditiveFactor {
  Graph graph;
  CanonicalKey key;
};

/// Join factors of g: the complement's components, complemented back. Ordered by the smallest
/// vertex of each factor in g. The zero graph has no factors.
std::vector<AdditiveFactor> additive_factorize(const Graph& g);

struct PrimeTerm {
  Graph graph;  // one representative of the isomorphism class
  Integer multiplicity;
  std::size_t clique = 0;  // c(graph)
};

/// Element of the Grothendieck group of the join monoid, stored as an integer combination of
/// additive primes. Since the join monoid factors uniquely into primes this is a normal form:
/// A - B with A and B sharing no prime, and equality is structural.
class SignedGraph {
 public:
  SignedGraph() = default;

  static SignedGraph from_graph(const Graph& g);
  /// k copies of K1, i.e. K_k for k >= 0 and -K_|k| otherwise.
  static SignedGraph from_integer(const Integer& k);

  const std::map<CanonicalKey, PrimeTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds m copies of the prime `key`; drops the entry if its multiplicity becomes 0.
  void accumulate(const CanonicalKey& key, const Graph& prime, const Integer& m, std::size_t clique);
  void accumulate(const AdditiveFactor& prime, const Integer& m);

  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  std::map<CanonicalKey, PrimeTerm> terms_;
};

SignedGraph from_graph(const Graph& g);
SignedGraph add_signed(const SignedGraph& s, const SignedGraph& t);
SignedGraph neg_signed(const SignedGraph& s);
SignedGraph sub_signed(const SignedGraph& s, const SignedGraph& t);
/// k * s for an integer k (repeated addition / negation).
SignedGraph scale_signed(const Integer& k, const SignedGraph& s);
/// Bilinear extension of the Zykov product: each pair of primes is multiplied, factorized and
/// accumulated with the product of the multiplicities.
SignedGraph mul_signed(const SignedGraph& s, const SignedGraph& t);

inline SignedGraph operator+(const SignedGraph& s, const SignedGraph& t) { return add_signed(s, t); }
inline SignedGraph operator-(const SignedGraph& s, const SignedGraph& t) { return sub_signed(s, t); }
inline SignedGraph operator-(const SignedGraph& s) { return neg_signed(s); }
inline SignedGraph operator*(const SignedGraph& s, const SignedGraph& t) { return mul_signed(s, t); }

/// c(A) - c(B) for S = A - B.
Integer clique_functional(const SignedGraph& s);
/// c(A) + c(B) for the reduced S = A - B.
Integer norm_signed(const SignedGraph& s);
/// |S - T|.
Integer distance(const SignedGraph& s, const SignedGraph& t);
/// c(S) c(T).
Integer semi_inner_product(const SignedGraph& s, const SignedGraph& t);

/// Join of the primes with positive (resp. negative) multiplicity, repeated by multiplicity.
Graph positive_part(const SignedGraph& s);
Graph negative_part(const SignedGraph& s);

}  // namespace zykov
