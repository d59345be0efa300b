#include "zykov/grothendieck.hpp"

#include "zykov/invariants.hpp"

namespace zykov {

std::vector<AdditiveFactor> additive_factorize(const Graph& g) {
  std::vector<AdditiveFactor> out;
  for (const auto& vs : cocomponent_vertex_sets(g)) {
    Graph factor = induced_subgraph(g, vs);
    CanonicalKey key = canonical_form(factor);
    out.push_back({std::move(factor), std::move(key)});
  }
  return out;
}

void SignedGraph::accumulate(const CanonicalKey& key, const Graph& prime, const Integer& m, std::size_t clique) {
  if (m == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, PrimeTerm{prime, m, clique});
    return;
  }
  it->second.multiplicity += m;
  if (it->second.multiplicity == 0) terms_.erase(it);
}

void SignedGraph::accumulate(const AdditiveFactor& prime, const Integer& m) {
  accumulate(prime.key, prime.graph, m, clique_number(prime.graph));
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.multiplicity != ib->second.multiplicity) return false;
  return true;
}

SignedGraph SignedGraph::from_graph(const Graph& g) {
  SignedGraph s;
  for (const auto& f : additive_factorize(g)) s.accumulate(f, 1);
  return s;
}

SignedGraph SignedGraph::from_integer(const Integer& k) {
  SignedGraph s;
  const Graph k1 = complete(1);
  s.accumulate(canonical_form(k1), k1, k, 1);
  return s;
}

SignedGraph from_graph(const Graph& g) { return SignedGraph::from_graph(g); }

SignedGraph add_signed(const SignedGraph& s, const SignedGraph& t) {
  SignedGraph out = s;
  for (const auto& [key, term] : t.terms()) out.accumulate(key, term.graph, term.multiplicity, term.clique);
  return out;
}

SignedGraph scale_signed(const Integer& k, const SignedGraph& s) {
  SignedGraph out;
  for (const auto& [key, term] : s.terms()) out.accumulate(key, term.graph, k * term.multiplicity, term.clique);
  return out;
}

SignedGraph neg_signed(const SignedGraph& s) { return scale_signed(-1, s); }

SignedGraph sub_signed(const SignedGraph& s, const SignedGraph& t) { return add_signed(s, neg_signed(t)); }

SignedGraph mul_signed(const SignedGraph& s, const SignedGraph& t) {
  SignedGraph out;
  for (const auto& [kp, p] : s.terms())
    for (const auto& [kq, q] : t.terms()) {
      const Integer m = p.multiplicity * q.multiplicity;
      for (const auto& f : additive_factorize(zykov_product(p.graph, q.graph))) out.accumulate(f, m);
    }
  return out;
}

Integer clique_functional(const SignedGraph& s) {
  Integer c = 0;
  for (const auto& [key, term] : s.terms()) c += term.multiplicity * term.clique;
  return c;
}

Integer norm_signed(const SignedGraph& s) {
  Integer c = 0;
  for (const auto& [key, term] : s.terms()) c += abs(term.multiplicity) * term.clique;
  return c;
}

Integer distance(const SignedGraph& s, const SignedGraph& t) { return norm_signed(sub_signed(s, t)); }

Integer semi_inner_product(const SignedGraph& s, const SignedGraph& t) {
  return clique_functional(s) * clique_functional(t);
}

namespace {

Graph part(const SignedGraph& s, int sign) {
  Graph out;
  for (const auto& [key, term] : s.terms()) {
    if ((term.multiplicity > 0) != (sign > 0)) continue;
    const auto copies = static_cast<std::size_t>(abs(term.multiplicity));
    out = join(out, join_power(term.graph, copies));
  }
  return out;
}

}  // namespace

Graph positive_part(const SignedGraph& s) { return part(s, 1); }
Graph negative_part(const SignedGraph& s) { return part(s, -1); }

}  // namespace zykov
