#include "selftest.hpp"

#include <array>
#include <ostream>

#include "zykov/canonical.hpp"
#include "zykov/grothendieck.hpp"
#include "zykov/invariants.hpp"
#include "zykov/random.hpp"

namespace zykov::cli {

std::size_t run_selftest(std::uint64_t seed, std::size_t trials, std::ostream& out) {
  SplitMix64 rng(seed);
  const std::array<Rational, 3> probabilities{Rational(3, 10), Rational(1, 2), Rational(7, 10)};
  auto draw = [&] {
    const std::size_t n = 1 + rng.below(6);
    return erdos_renyi(n, probabilities[rng.below(3)], rng.next());
  };

  std::size_t checks = 0, failures = 0;
  auto check = [&](bool ok, std::size_t trial, const char* what) {
    ++checks;
    if (!ok) {
      ++failures;
      out << "FAIL trial " << trial << ": " << what << "\n";
    }
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const Graph a = draw(), b = draw(), c = draw();
    check(is_isomorphic(join(a, b), join(b, a)), t, "join commutes");
    check(is_isomorphic(zykov_product(a, b), zykov_product(b, a)), t, "product commutes");
    check(is_isomorphic(join(join(a, b), c), join(a, join(b, c))), t, "join associates");
    check(is_isomorphic(zykov_product(zykov_product(a, b), c), zykov_product(a, zykov_product(b, c))), t,
          "product associates");
    check(is_isomorphic(zykov_product(a, join(b, c)), join(zykov_product(a, b), zykov_product(a, c))), t,
          "product distributes over join");
    check(clique_number(join(a, b)) == clique_number(a) + clique_number(b), t, "c is additive");
    // a product of cliques is a clique; equality fails in general (c(C5*C5) = 5)
    check(clique_number(zykov_product(a, b)) >= clique_number(a) * clique_number(b), t, "c is supermultiplicative");
    check(complement(join(a, b)) == disjoint_union(complement(a), complement(b)), t, "complement duality");
    check(strong_product(a, b) == complement(zykov_product(complement(a), complement(b))), t, "strong duality");
    const SignedGraph sa = from_graph(a), sb = from_graph(b), sc = from_graph(c);
    check(from_graph(join(a, c)) - from_graph(join(b, c)) == sa - sb, t, "Grothendieck cancellation");
    check(clique_functional(sa - sb + sc) == clique_functional(sa - sb) + clique_functional(sc), t,
          "clique functional is additive");
    check(norm_signed(sa - sb + sc) <= norm_signed(sa - sb) + norm_signed(sc), t, "triangle inequality");
  }
  out << checks - failures << "/" << checks << " checks passed over " << trials << " trials (seed " << seed << ")\n";
  return failures;
}

}  // namespace zykov::cli
