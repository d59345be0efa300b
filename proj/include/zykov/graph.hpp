#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zykov/errors.hpp"

namespace zykov {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on the vertices 0..n-1, stored as a symmetric bit matrix.
/// Values are immutable once built; use GraphBuilder to assemble one.
class Graph {
 public:
  /// The zero graph (no vertices).
  Graph() = default;

  /// Builds a graph from an edge list. Loops are dropped, duplicates merged.
  /// Throws InputError if an endpoint is >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const;
  bool empty() const { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  /// Adjacency row of v as packed 64-bit words (bit w of word k is vertex 64k+w).
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t vertex_count() const { return graph_.n_; }
  /// Adds the undirected edge {u, v}; a loop (u == v) is ignored.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

// Named families.
Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);  // n >= 3
Graph path(std::size_t n);
Graph wheel(std::size_t rim);  // rim >= 3: C_rim + K1
Graph octahedron();            // E2 + E2 + E2

/// Builds a graph from arbitrary labels. Vertices are renumbered in order of first
/// appearance in `vertices`; loops are dropped and repeated or reversed edges merged.
template <typename Label, typename Hash = std::hash<Label>>
Graph normalize(std::span<const Label> vertices, std::span<const std::pair<Label, Label>> edges) {
  std::unordered_map<Label, Vertex, Hash> index;
  for (const auto& label : vertices) index.try_emplace(label, index.size());
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InputError("edge endpoint is not in the vertex list");
    mapped.emplace_back(ia->second, ib->second);
  }
  return Graph::from_edges(index.size(), mapped);
}

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Zykov join: disjoint union plus every edge between the two sides. Vertices of h follow those of g.
Graph join(const Graph& g, const Graph& h);
/// Join of `copies` copies of g (the zero graph for copies == 0).
Graph join_power(const Graph& g, std::size_t copies);
/// Sabidussi/Zykov product on V(g) x V(h); the pair (a, b) gets index a * |V(h)| + b.
/// (a, b) ~ (c, d) iff ac is an edge of g or bd is an edge of h.
Graph zykov_product(const Graph& g, const Graph& h);
/// Strong product, computed as complement(zykov_product(complement g, complement h)).
Graph strong_product(const Graph& g, const Graph& h);

/// Vertex sets of the connected components, each ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex sets of the connected components of the complement (the join factors of g).
std::vector<std::vector<Vertex>> cocomponent_vertex_sets(const Graph& g);

/// Subgraph induced on `vertices`, renumbered in the given order. Throws InputError on a bad vertex.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Subgraph induced on the neighbours of v.
Graph unit_sphere(const Graph& g, Vertex v);

/// Applies a relabelling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::string describe(const Graph& g);

}  // namespace zykov
