#pragma once

#include <cstddef>
#include <vector>

#include "zykov/graph.hpp"

namespace zykov {

inline constexpr std::size_t kMaxCatalogOrder = 8;

/// True iff the complement of g is connected. Throws InputError for the zero graph.
bool is_additive_prime(const Graph& g);

/// One representative per isomorphism class of graphs with exactly `order` vertices.
/// Built by extending every class of order-1 by a new vertex in all possible ways and
/// deduplicating on canonical keys. Cached; throws ResourceError above kMaxCatalogOrder.
const std::vector<Graph>& graphs_of_order(std::size_t order);

/// All classes of order 0..n, ascending by order.
std::vector<Graph> all_graphs_up_to(std::size_t n);

struct FactorPair {
  Graph left;   // the factor of smaller order
  Graph right;
};

/// All pairs (A, B) of graphs with at least 2 vertices each and A * B isomorphic to g, up to
/// isomorphism of the factors, with |A| <= |B| (and key(A) <= key(B) when the orders agree).
/// Only orders multiplying to |V(g)| are searched. Throws ResourceError ("inconclusive") when a
/// needed factor order is larger than max_catalog_order.
std::vector<FactorPair> multiplicative_factorizations(const Graph& g,
                                                      std::size_t max_catalog_order = kMaxCatalogOrder);

enum class Primality { Prime, Composite, Inconclusive };

struct MultiplicativeVerdict {
  Primality verdict = Primality::Inconclusive;
  bool unit = false;  // set for K1, reported as Prime
  std::vector<FactorPair> witnesses;
};

/// Three-valued multiplicative primality in the monoid of graphs. Throws InputError for the zero graph.
MultiplicativeVerdict is_multiplicative_prime(const Graph& g, std::size_t max_catalog_order = kMaxCatalogOrder);

const char* to_string(Primality p);

}  // namespace zykov
