#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "zykov/canonical.hpp"
#include "zykov/graph.hpp"
#include "zykov/random.hpp"

using namespace zykov;

namespace {

std::vector<Vertex> shuffled(std::size_t n, SplitMix64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

}  // namespace

TEST_CASE("spec-level isomorphism examples") {
  CHECK(is_isomorphic(cycle(4), join(edgeless(2), edgeless(2))));
  CHECK_FALSE(is_isomorphic(cycle(6), disjoint_union(complete(3), complete(3))));
  CHECK_FALSE(is_isomorphic(path(4), disjoint_union(complete(2), complete(2))));
  CHECK(is_isomorphic(Graph{}, Graph{}));
  CHECK_FALSE(is_isomorphic(Graph{}, complete(1)));
  CHECK(is_isomorphic(complement(cycle(5)), cycle(5)));
  CHECK(is_isomorphic(complement(path(4)), path(4)));
}

TEST_CASE("canonical form is invariant under relabelling") {
  SplitMix64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Graph g = corpus::random_graph(rng, 12);
    const auto perm = shuffled(g.vertex_count(), rng);
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
}

TEST_CASE("regular and symmetric graphs") {
  // Petersen graph versus the 5-prism: both cubic on 10 vertices
  const std::vector<Edge> petersen{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                   {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  const std::vector<Edge> prism{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8},
                                {8, 9}, {9, 5}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  const Graph p = Graph::from_edges(10, petersen), q = Graph::from_edges(10, prism);
  CHECK_FALSE(is_isomorphic(p, q));
  SplitMix64 rng(3);
  for (int i = 0; i < 10; ++i) {
    CHECK(is_isomorphic(p, relabel(p, shuffled(10, rng))));
    CHECK(is_isomorphic(q, relabel(q, shuffled(10, rng))));
  }
  // C_n plus chords: strongly regular Paley(13) against a relabelled copy
  GraphBuilder b(13);
  for (Vertex u = 0; u < 13; ++u)
    for (Vertex v = u + 1; v < 13; ++v) {
      const std::size_t d = v - u;
      if (d == 1 || d == 3 || d == 4 || d == 9 || d == 10 || d == 12) b.add_edge(u, v);
    }
  const Graph paley = std::move(b).build();
  CHECK(is_isomorphic(paley, relabel(paley, shuffled(13, rng))));
  CHECK(is_isomorphic(paley, complement(paley)));
  CHECK_FALSE(is_isomorphic(cycle(12), disjoint_union(cycle(6), cycle(6))));
  CHECK_FALSE(is_isomorphic(cycle(12), disjoint_union(cycle(5), cycle(7))));
}

TEST_CASE("isomorphism agrees with the permutation oracle for n <= 8") {
  SplitMix64 rng(2718);
  int agree_true = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + rng.below(8);
    const auto& p = corpus::probabilities()[rng.below(3)];
    const Graph g = erdos_renyi(n, p, rng.next());
    // half the time compare with a relabelled copy, otherwise with an independent graph of the
    // same order and size so the cheap invariants do not decide
    Graph h;
    if (i % 2 == 0) {
      h = relabel(g, shuffled(n, rng));
    } else {
      do {
        h = erdos_renyi(n, p, rng.next());
      } while (h.edge_count() != g.edge_count());
    }
    const bool expected = oracle::isomorphic_by_permutation(g, h);
    CHECK(is_isomorphic(g, h) == expected);
    agree_true += expected;
  }
  CHECK(agree_true >= 300);
}

TEST_CASE("keys of large products are stable") {
  const Graph g = zykov_product(zykov_product(cycle(5), path(4)), cycle(6));
  SplitMix64 rng(17);
  CHECK(canonical_form(relabel(g, shuffled(g.vertex_count(), rng))) == canonical_form(g));
  CHECK_FALSE(to_hex(canonical_form(g)).empty());
}

namespace {

// Replaces every vertex of a small random quotient by a random module (edgeless or complete),
// which produces graphs full of true and false twins.
Graph blow_up(SplitMix64& rng, std::size_t max_order) {
  const Graph q = erdos_renyi(1 + rng.below(4), corpus::probabilities()[rng.below(3)], rng.next());
  std::vector<Graph> parts;
  std::size_t total = 0;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    const std::size_t k = 1 + rng.below(3);
    if (total + k > max_order) break;
    parts.push_back(rng.below(2) ? edgeless(k) : complete(k));
    total += k;
  }
  std::vector<Vertex> offset{0};
  for (const auto& p : parts) offset.push_back(offset.back() + p.vertex_count());
  GraphBuilder b(total);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i].edges()) b.add_edge(offset[i] + u, offset[i] + v);
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (q.adjacent(i, j))
        for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
          for (Vertex v = offset[j]; v < offset[j + 1]; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("graphs with many twins agree with the permutation oracle") {
  SplitMix64 rng(4711);
  int same = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph g = blow_up(rng, 8);
    Graph h = i % 3 == 0 ? relabel(g, shuffled(g.vertex_count(), rng)) : blow_up(rng, 8);
    if (h.vertex_count() != g.vertex_count()) continue;
    const bool expected = oracle::isomorphic_by_permutation(g, h);
    CHECK(is_isomorphic(g, h) == expected);
    CHECK((canonical_form(g) == canonical_form(h)) == expected);
    same += expected;
  }
  CHECK(same > 50);
}

TEST_CASE("products with edgeless and complete factors") {
  SplitMix64 rng(808);
  for (int i = 0; i < 20; ++i) {
    const Graph x = corpus::random_graph(rng, 6);
    const Graph g = zykov_product(zykov_product(edgeless(3), x), complete(2));
    CHECK(canonical_form(relabel(g, shuffled(g.vertex_count(), rng))) == canonical_form(g));
    // K2 * P is the join of two copies of P
    CHECK(is_isomorphic(zykov_product(complete(2), x), join(x, x)));
  }
  CHECK_FALSE(is_isomorphic(zykov_product(edgeless(3), cycle(5)), zykov_product(edgeless(5), path(3))));
}
