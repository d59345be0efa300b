#include "zykov/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "zykov/errors.hpp"

namespace zykov {

namespace {

using Bits = std::vector<std::uint64_t>;

bool none(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

// Tomita-style maximum clique search on a graph relabelled so that bit order is the
// initial vertex ordering (non-increasing degree).
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : n_(g.vertex_count()), words_((n_ + 63) / 64) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bits(words_, 0));
    for (auto [u, v] : g.edges()) {
      set(adj_[pos[u]], pos[v]);
      set(adj_[pos[v]], pos[u]);
    }
  }

  std::vector<Vertex> solve() {
    if (n_ == 0) return {};
    Bits all(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) set(all, i);
    std::vector<std::size_t> current;
    expand(current, all);
    std::vector<Vertex> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void reset(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  // Greedy sequential colouring of p; vertices come out grouped by colour, colours ascending.
  void colour(const Bits& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
    Bits uncoloured = p;
    std::size_t k = 0;
    while (!none(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const std::size_t v = 64 * w + std::countr_zero(q[w]);
          reset(uncoloured, v);
          reset(q, v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~adj_[v][x];
          verts.push_back(v);
          colours.push_back(k);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bits p) {
    std::vector<std::size_t> verts, colours;
    colour(p, verts, colours);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_.size()) return;
      const std::size_t v = verts[i];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (none(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      reset(p, v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
};

class CliqueCounter {
 public:
  CliqueCounter(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  FVector run() {
    const std::size_t n = g_.vertex_count();
    Bits all((n + 63) / 64, 0);
    for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    extend(all, 0);
    return FVector{std::move(counts_)};
  }

 private:
  // candidates: vertices adjacent to the whole current clique and larger than its last vertex.
  void extend(const Bits& candidates, std::size_t depth) {
    for (std::size_t w = 0; w < candidates.size(); ++w) {
      for (auto word = candidates[w]; word != 0; word &= word - 1) {
        const std::size_t v = 64 * w + std::countr_zero(word);
        if (counts_.size() <= depth) counts_.push_back(0);
        ++counts_[depth];
        if (++seen_ > budget_)
          throw ResourceError("clique enumeration exceeded the budget of " + std::to_string(budget_) +
                              " cliques");
        Bits next(candidates.size(), 0);
        auto row = g_.row(v);
        // keep only vertices after v
        next[w] = candidates[w] & row[w] & ~((std::uint64_t{2} << (v % 64)) - 1);
        for (std::size_t x = w + 1; x < candidates.size(); ++x) next[x] = candidates[x] & row[x];
        if (!none(next)) extend(next, depth + 1);
      }
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t seen_ = 0;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) { return CliqueSolver(g).solve(); }

std::size_t clique_number(const Graph& g) {
  auto factors = cocomponent_vertex_sets(g);
  if (factors.size() <= 1) return maximum_clique(g).size();
  std::size_t total = 0;
  for (const auto& vs : factors) total += maximum_clique(induced_subgraph(g, vs)).size();
  return total;
}

std::string FVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < counts.size(); ++k) os << (k ? "," : "") << counts[k];
  os << ")";
  return os.str();
}

FVector f_vector(const Graph& g, std::uint64_t budget) { return CliqueCounter(g, budget).run(); }

Polynomial f_function(const FVector& f) {
  std::vector<Integer> c{1};
  for (auto x : f.counts) c.emplace_back(x);
  return Polynomial(std::move(c));
}

Polynomial f_function(const Graph& g, std::uint64_t budget) { return f_function(f_vector(g, budget)); }

Integer euler_characteristic(const Graph& g, std::uint64_t budget) {
  Integer chi = 0;
  const auto f = f_vector(g, budget);
  for (std::size_t k = 0; k < f.counts.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * Integer(f.counts[k]);
  return chi;
}

Integer genus(const Graph& g, std::uint64_t budget) { return 1 - euler_characteristic(g, budget); }

Integer euler_characteristic_by_factors(const Graph& g, std::uint64_t budget) {
  if (g.empty()) return 0;
  Integer genus_product = 1;
  for (const auto& vs : cocomponent_vertex_sets(g))
    genus_product *= 1 - euler_characteristic(induced_subgraph(g, vs), budget);
  return 1 - genus_product;
}

bool DehnSommerville::member(const Graph& g, int d) {
  if (d < -1) return false;
  if (d == -1) return g.empty();
  if (g.empty()) return false;

  if (++calls_ > call_budget_)
    throw ResourceError("Dehn-Sommerville check exceeded its budget of " + std::to_string(call_budget_) +
                        " recursive calls");
  auto key = std::make_pair(canonical_form(g), d);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Integer expected = (d % 2 == 0) ? 2 : 0;
  bool ok = euler_characteristic_by_factors(g, clique_budget_) == expected;
  if (ok) {
    // vertices with equal neighbourhoods have equal unit spheres
    std::set<std::vector<std::uint64_t>> checked;
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
      auto row = g.row(v);
      if (!checked.emplace(row.begin(), row.end()).second) continue;
      ok = member(unit_sphere(g, v), d - 1);
    }
  }
  memo_.emplace(std::move(key), ok);
  return ok;
}

bool ds_member(const Graph& g, int d) { return DehnSommerville().member(g, d); }

}  // namespace zykov
