#include "zykov/primes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "zykov/canonical.hpp"
#include "zykov/errors.hpp"
#include "zykov/invariants.hpp"

namespace zykov {

bool is_additive_prime(const Graph& g) {
  if (g.empty()) throw InputError("additive primality is undefined for the zero graph");
  return is_connected(complement(g));
}

namespace {

std::vector<Graph> extend_by_one(const std::vector<Graph>& smaller, std::size_t order) {
  std::vector<Graph> out;
  std::set<CanonicalKey> seen;
  const std::size_t old = order - 1;
  for (const Graph& g : smaller) {
    const auto edges = g.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << old); ++mask) {
      GraphBuilder b(order);
      for (auto [u, v] : edges) b.add_edge(u, v);
      for (Vertex u = 0; u < old; ++u)
        if (mask >> u & 1U) b.add_edge(u, old);
      Graph h = std::move(b).build();
      if (seen.insert(canonical_form(h)).second) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace

const std::vector<Graph>& graphs_of_order(std::size_t order) {
  if (order > kMaxCatalogOrder)
    throw ResourceError("graph catalog is limited to order " + std::to_string(kMaxCatalogOrder));
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> cache{{Graph{}}};
  std::lock_guard lock(mutex);
  while (cache.size() <= order) cache.push_back(extend_by_one(cache.back(), cache.size()));
  return cache[order];
}

std::vector<Graph> all_graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& level = graphs_of_order(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

struct SearchResult {
  std::vector<FactorPair> pairs;
  std::size_t first_unsearched_order = 0;  // 0 when the search was exhaustive
};

SearchResult search_factorizations(const Graph& g, std::size_t max_order, bool stop_at_first) {
  SearchResult result;
  const std::size_t n = g.vertex_count();
  const std::size_t edges = g.edge_count();
  const std::size_t clique = clique_number(g);
  const CanonicalKey target = canonical_form(g);

  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::size_t m = n / d;
    if (m > max_order) {
      if (!result.first_unsearched_order) result.first_unsearched_order = m;
      continue;
    }
    // index the order-m catalog by edge count
    std::map<std::size_t, std::vector<std::pair<const Graph*, std::size_t>>> right_index;
    for (const Graph& b : graphs_of_order(m)) right_index[b.edge_count()].emplace_back(&b, clique_number(b));

    for (const Graph& a : graphs_of_order(d)) {
      const std::size_t ea = a.edge_count();
      const std::size_t ca = clique_number(a);
      // c(A*B) >= c(A) c(B); equality can fail (c(C5*C5) = 5), so this is only a bound
      if (ca > clique) continue;
      // |E(A*B)| = eA m^2 + eB d^2 - 2 eA eB determines eB
      const long long num = static_cast<long long>(edges) - static_cast<long long>(ea * m * m);
      const long long den = static_cast<long long>(d * d) - 2 * static_cast<long long>(ea);
      if (num < 0 || num % den != 0) continue;
      auto it = right_index.find(static_cast<std::size_t>(num / den));
      if (it == right_index.end()) continue;
      const CanonicalKey ka = canonical_form(a);
      for (const auto& [b, cb] : it->second) {
        if (ca * cb > clique) continue;
        if (d == m && canonical_form(*b) < ka) continue;
        if (canonical_form(zykov_product(a, *b)) != target) continue;
        result.pairs.push_back({a, *b});
        if (stop_at_first) return result;
      }
    }
  }
  return result;
}

}  // namespace

std::vector<FactorPair> multiplicative_factorizations(const Graph& g, std::size_t max_catalog_order) {
  if (g.empty()) throw InputError("multiplicative factorization is undefined for the zero graph");
  auto result = search_factorizations(g, std::min(max_catalog_order, kMaxCatalogOrder), false);
  if (result.first_unsearched_order)
    throw ResourceError("inconclusive: factor search needs the catalog of order " +
                        std::to_string(result.first_unsearched_order) + " (limit " +
                        std::to_string(max_catalog_order) + ")");
  return std::move(result.pairs);
}

MultiplicativeVerdict is_multiplicative_prime(const Graph& g, std::size_t max_catalog_order) {
  if (g.empty()) throw InputError("multiplicative primality is undefined for the zero graph");
  MultiplicativeVerdict v;
  if (g.vertex_count() == 1) {
    v.verdict = Primality::Prime;
    v.unit = true;
    return v;
  }
  auto result = search_factorizations(g, std::min(max_catalog_order, kMaxCatalogOrder), true);
  v.witnesses = std::move(result.pairs);
  if (!v.witnesses.empty())
    v.verdict = Primality::Composite;
  else
    v.verdict = result.first_unsearched_order ? Primality::Inconclusive : Primality::Prime;
  return v;
}

const char* to_string(Primality p) {
  switch (p) {
    case Primality::Prime: return "prime";
    case Primality::Composite: return "composite";
    case Primality::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace zykov
