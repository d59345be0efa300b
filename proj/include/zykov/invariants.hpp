#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zykov/canonical.hpp"
#include "zykov/graph.hpp"
#include "zykov/numeric.hpp"
#include "zykov/polynomial.hpp"

namespace zykov {

class SignedGraph;

inline constexpr std::uint64_t kDefaultCliqueBudget = 10'000'000;

/// Vertices of one maximum clique, found by branch and bound with a greedy colouring bound.
/// Works on g as given (no join decomposition).
std::vector<Vertex> maximum_clique(const Graph& g);

/// Clique number c(g), 0 for the zero graph. The graph is first split into its join factors
/// (c is additive over the join) and each factor is solved with maximum_clique().
std::size_t clique_number(const Graph& g);

/// (f_0, f_1, ...): f_k is the number of (k+1)-vertex cliques.
struct FVector {
  std::vector<std::uint64_t> counts;

  friend bool operator==(const FVector&, const FVector&) = default;
  std::string to_string() const;
};

/// Counts every clique exactly once. Throws ResourceError once more than `budget` cliques are seen.
FVector f_vector(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);

/// 1 + f_0 t + f_1 t^2 + ...
Polynomial f_function(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);
Polynomial f_function(const FVector& f);

/// f_0 - f_1 + f_2 - ...
Integer euler_characteristic(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);
/// 1 - chi(g).
Integer genus(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);

/// Euler characteristic assembled from the join factors of g through 1 - chi(A + B) = (1 - chi A)(1 - chi B),
/// so only the factors are enumerated.
Integer euler_characteristic_by_factors(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);

/// f_A / f_B for S = A - B in reduced form; the factors' f-functions are multiplied
/// instead of enumerating the joins.
RationalFunction signed_f_function(const SignedGraph& s, std::uint64_t budget = kDefaultCliqueBudget);

/// Membership in the Dehn-Sommerville classes X_d, d >= -1.
///
/// X_{-1} holds only the zero graph. For d >= 0, g is in X_d iff g has at least one vertex,
/// chi(g) = 1 + (-1)^d and every unit sphere lies in X_{d-1}. With this indexing the
/// d-spheres are members of X_d. Results are memoised on canonical keys, so one classifier
/// can be reused across queries.
class DehnSommerville {
 public:
  /// `call_budget` bounds the number of membership calls made on nonempty graphs, memo hits
  /// included; going over it throws ResourceError.
  explicit DehnSommerville(std::size_t call_budget = std::numeric_limits<std::size_t>::max(),
                           std::uint64_t clique_budget = kDefaultCliqueBudget)
      : call_budget_(call_budget), clique_budget_(clique_budget) {}

  bool member(const Graph& g, int d);

  std::size_t calls() const { return calls_; }

 private:
  std::size_t call_budget_;
  std::uint64_t clique_budget_;
  std::size_t calls_ = 0;
  std::map<std::pair<CanonicalKey, int>, bool> memo_;
};

bool ds_member(const Graph& g, int d);

}  // namespace zykov
