#include "zykov/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace zykov {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range for a graph on " +
                     std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

GraphBuilder::GraphBuilder(std::size_t n) {
  graph_.n_ = n;
  graph_.words_ = words_for(n);
  graph_.bits_.assign(n * graph_.words_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= graph_.n_ || v >= graph_.n_)
    throw InputError("edge endpoint out of range");
  if (u == v) return;
  graph_.bits_[u * graph_.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  graph_.bits_[v * graph_.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (auto w = r[k]; w != 0; w &= w - 1) out.push_back(64 * k + std::countr_zero(w));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph edgeless(std::size_t n) { return std::move(GraphBuilder(n)).build(); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph wheel(std::size_t rim) { return join(cycle(rim), complete(1)); }

Graph octahedron() { return join(edgeless(2), join(edgeless(2), edgeless(2))); }

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = h.vertex_count();
  GraphBuilder b(n + m);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(n + u, n + v);
  if (cross)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < m; ++v) b.add_edge(u, n + v);
  return std::move(b).build();
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph join_power(const Graph& g, std::size_t copies) {
  const std::size_t n = g.vertex_count();
  GraphBuilder b(n * copies);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < copies; ++i) {
    for (auto [u, v] : edges) b.add_edge(i * n + u, i * n + v);
    for (std::size_t j = i + 1; j < copies; ++j)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) b.add_edge(i * n + u, j * n + v);
  }
  return std::move(b).build();
}

Graph zykov_product(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = h.vertex_count();
  GraphBuilder b(n * m);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = 0; c < n; ++c) {
      const bool ac = g.adjacent(a, c);
      for (Vertex bv = 0; bv < m; ++bv)
        for (Vertex d = 0; d < m; ++d)
          if (ac || h.adjacent(bv, d)) b.add_edge(a * m + bv, c * m + d);
    }
  return std::move(b).build();
}

Graph strong_product(const Graph& g, const Graph& h) {
  return complement(zykov_product(complement(g), complement(h)));
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& vs : component_vertex_sets(g)) out.push_back(induced_subgraph(g, vs));
  return out;
}

bool is_connected(const Graph& g) { return component_vertex_sets(g).size() <= 1; }

std::vector<std::vector<Vertex>> cocomponent_vertex_sets(const Graph& g) {
  return component_vertex_sets(complement(g));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) check_vertex(g, v);
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] != vertices[j] && g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph unit_sphere(const Graph& g, Vertex v) {
  check_vertex(g, v);
  auto nbrs = g.neighbors(v);
  return induced_subgraph(g, nbrs);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw InputError("relabelling has the wrong length");
  GraphBuilder b(g.vertex_count());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "Graph(" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)";
  return os.str();
}

}  // namespace zykov
