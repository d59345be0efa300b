#include "zykov/random.hpp"

namespace zykov {

bool SplitMix64::bernoulli(const Rational& p) {
  const Integer draw = next();
  // draw / 2^64 < num / den  <=>  draw * den < num * 2^64
  return draw * denominator(p) < (numerator(p) << 64);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw InputError("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace zykov
