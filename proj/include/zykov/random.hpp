#pragma once

#include <cstdint>

#include "zykov/graph.hpp"
#include "zykov/numeric.hpp"

namespace zykov {

/// SplitMix64 (Steele, Lea, Flood). Fully specified, so streams are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// True with probability exactly p (p in [0, 1]) over the 2^64 possible draws.
  bool bernoulli(const Rational& p);

  /// Uniform integer in [0, bound) for bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// G(n, p): each pair (u, v), u < v, visited in lexicographic order, is an edge
/// iff the next SplitMix64 draw falls below p * 2^64. Throws InputError if p is outside [0, 1].
Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed);

}  // namespace zykov
