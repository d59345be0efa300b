#include "doctest.h"

#include "support/corpus.hpp"
#include "zykov/canonical.hpp"
#include "zykov/grothendieck.hpp"
#include "zykov/invariants.hpp"

using namespace zykov;

namespace {

SignedGraph G(const Graph& g) { return from_graph(g); }
SignedGraph N(long k) { return SignedGraph::from_integer(k); }

Integer multiplicity_of(const SignedGraph& s, const Graph& prime) {
  auto it = s.terms().find(canonical_form(prime));
  return it == s.terms().end() ? Integer(0) : it->second.multiplicity;
}

/// Random signed graph: A - B with small random A and B.
SignedGraph random_signed(SplitMix64& rng) {
  const Graph a = rng.below(4) == 0 ? Graph{} : corpus::random_graph(rng, 5);
  const Graph b = rng.below(4) == 0 ? Graph{} : corpus::random_graph(rng, 5);
  return G(a) - G(b);
}

}  // namespace

TEST_CASE("additive factorization") {
  auto f = additive_factorize(complete(4));
  CHECK(f.size() == 4);
  for (const auto& p : f) CHECK(p.graph == complete(1));

  f = additive_factorize(cycle(4));
  REQUIRE(f.size() == 2);
  CHECK(f[0].graph == edgeless(2));
  CHECK(f[1].graph == edgeless(2));

  f = additive_factorize(cycle(5));
  REQUIRE(f.size() == 1);
  CHECK(f[0].graph == cycle(5));
  CHECK(additive_factorize(Graph{}).empty());
}

TEST_CASE("from_graph") {
  CHECK(G(complete(3)).terms().size() == 1);
  CHECK(multiplicity_of(G(complete(3)), complete(1)) == 3);
  CHECK(multiplicity_of(G(cycle(4)), edgeless(2)) == 2);
  CHECK(multiplicity_of(G(cycle(5)), cycle(5)) == 1);
  CHECK(G(Graph{}).is_zero());
  CHECK(G(complete(5)) == N(5));
  CHECK(N(-2) == -G(complete(2)));
  CHECK(N(0).is_zero());
}

TEST_CASE("group operations") {
  const SignedGraph a = G(cycle(5)), b = G(path(4)), c = G(octahedron());
  CHECK(G(join(cycle(5), octahedron())) - G(join(path(4), octahedron())) == a - b);
  CHECK(a + SignedGraph{} == a);
  CHECK(G(complete(3)) - G(complete(2)) == N(1));
  CHECK(a - a == SignedGraph{});
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + b == b + a);
  CHECK(-(-a) == a);
  CHECK(scale_signed(3, a) == a + a + a);
  CHECK(scale_signed(-2, a) == -(a + a));
  CHECK(scale_signed(0, a).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(G(complete(2)) * G(complete(3)) == G(complete(6)));
  const SignedGraph s = G(cycle(5)) - G(path(3));
  CHECK(s * G(complete(1)) == s);
  CHECK(G(complete(1)) * s == s);
  const SignedGraph a = G(complete(2)), b = G(complete(1));
  CHECK((a - b) * (a + b) == N(3));
  CHECK((a - b) * (a + b) == a * a - b * b);
  CHECK(G(edgeless(2)) * G(edgeless(2)) == G(edgeless(4)));
  // product of graphs agrees with the graph-level product
  CHECK(G(cycle(5)) * G(path(3)) == G(zykov_product(cycle(5), path(3))));
  CHECK(s * SignedGraph{} == SignedGraph{});
}

TEST_CASE("ring laws on random signed graphs") {
  SplitMix64 rng(31337);
  for (int i = 0; i < 60; ++i) {
    const SignedGraph s = random_signed(rng), t = random_signed(rng), u = random_signed(rng);
    CHECK(s * t == t * s);
    CHECK((s * t) * u == s * (t * u));
    CHECK(s * (t + u) == s * t + s * u);
    CHECK(s * (t - u) == s * t - s * u);
    CHECK(clique_functional(s + t) == clique_functional(s) + clique_functional(t));
    CHECK(clique_functional(s * N(3)) == 3 * clique_functional(s));
  }
}

TEST_CASE("product formula of the differences") {
  // (A - B)(C - D) = (AC + BD) - (AD + BC)
  const SignedGraph a = G(cycle(5)), b = G(path(3)), c = G(edgeless(2)), d = G(complete(2));
  CHECK((a - b) * (c - d) == (a * c + b * d) - (a * d + b * c));
  CHECK_FALSE((a - b) * (c - d) == (a * c + b * d) - (a * d + b * d));
}

TEST_CASE("clique functional, norm and distance") {
  const SignedGraph c4 = G(cycle(4)), c5 = G(cycle(5)), c6 = G(cycle(6));
  CHECK(clique_functional(c4 - c5) == 0);
  CHECK(clique_functional(G(complete(7))) == 7);
  CHECK(clique_functional(SignedGraph{}) == 0);

  CHECK(norm_signed(c4 - c5) == 4);
  CHECK(norm_signed(G(complete(3)) - G(complete(2))) == 1);
  CHECK(norm_signed(SignedGraph{}) == 0);

  CHECK(distance(c4, c5) == 4);
  CHECK(distance(c4 - c5, c4 - c5) == 0);
  // C4 - C5 and C5 - C6 share no prime, so their difference C4 + C6 - 2 C5 has norm 2 + 2 + 2*2
  CHECK(distance(c4 - c5, c5 - c6) == 8);
  CHECK(norm_signed((c4 - c5) + (c5 - c6)) == 4);
  CHECK(norm_signed(c4 - c6) == 4);
  CHECK(norm_signed(c4 - c5) + norm_signed(c5 - c6) == 8);
}

TEST_CASE("norm axioms on random signed graphs") {
  SplitMix64 rng(4242);
  for (int i = 0; i < 150; ++i) {
    const SignedGraph s = random_signed(rng), t = random_signed(rng);
    CHECK(norm_signed(s) >= 0);
    CHECK((norm_signed(s) == 0) == s.is_zero());
    CHECK(distance(s, t) == distance(t, s));
    CHECK(norm_signed(s + t) <= norm_signed(s) + norm_signed(t));
    CHECK(norm_signed(s * N(4)) == 4 * norm_signed(s));
    for (long k : {-3, -1, 0, 2, 5}) CHECK(norm_signed(scale_signed(k, s)) == abs(Integer(k)) * norm_signed(s));
    CHECK(norm_signed(s) == clique_number(positive_part(s)) + clique_number(negative_part(s)));
  }
}

TEST_CASE("positive and negative parts") {
  CHECK(is_isomorphic(positive_part(G(cycle(4))), cycle(4)));
  CHECK(negative_part(G(cycle(4))) == Graph{});
  const SignedGraph s = G(complete(3)) - G(complete(2));
  CHECK(positive_part(s) == complete(1));
  CHECK(negative_part(s) == Graph{});
  CHECK(positive_part(-G(cycle(5))) == Graph{});
  CHECK(negative_part(-G(cycle(5))) == cycle(5));
  const SignedGraph m = G(join(cycle(5), path(4))) - G(join(cycle(5), complete(2)));
  CHECK(is_isomorphic(positive_part(m), path(4)));
  CHECK(is_isomorphic(negative_part(m), complete(2)));
  CHECK(G(positive_part(m)) - G(negative_part(m)) == m);
}

TEST_CASE("multiplicativity fails beyond complete factors") {
  const SignedGraph c5 = G(cycle(5));
  CHECK(clique_functional(c5 * c5) == 5);
  CHECK(clique_functional(c5) * clique_functional(c5) == 4);
  CHECK(norm_signed(c5 * c5) == 5);
  CHECK(norm_signed(c5) * norm_signed(c5) == 4);
  CHECK(clique_functional(c5 * N(3)) == 6);
}

TEST_CASE("semi-inner product") {
  const SignedGraph z = G(cycle(4)) - G(cycle(5));
  CHECK(semi_inner_product(z, G(octahedron())) == 0);
  CHECK(semi_inner_product(z, z) == 0);
  CHECK(norm_signed(z) == 4);
  CHECK(semi_inner_product(G(complete(2)), G(complete(3))) == 6);
  CHECK(semi_inner_product(G(cycle(7)), SignedGraph{}) == 0);
}
