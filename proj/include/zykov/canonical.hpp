#pragma once

#include <compare>
#include <string>

#include "zykov/graph.hpp"

namespace zykov {

/// Isomorphism-class fingerprint: two graphs have equal keys iff they are isomorphic.
/// The bytes are deterministic across runs and platforms.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Canonical key of g.
///
/// Disconnected graphs are keyed by the sorted multiset of their component keys and graphs
/// with a disconnected complement by the sorted multiset of their join factors. What remains
/// (connected with connected complement) is labelled by equitable colour refinement followed
/// by an individualisation search that keeps the smallest adjacency certificate, pruning
/// children that lie in a common orbit of the automorphisms found so far.
CanonicalKey canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Hex dump of a key, for diagnostics.
std::string to_hex(const CanonicalKey& key);

}  // namespace zykov
