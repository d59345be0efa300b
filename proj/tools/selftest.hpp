#pragma once

#include <cstdint>
#include <iosfwd>

namespace zykov::cli {

/// Randomized ring-law, homomorphism and duality checks on seeded Erdos-Renyi triples.
/// Prints one line per failure and a summary; returns the number of failed checks.
std::size_t run_selftest(std::uint64_t seed, std::size_t trials, std::ostream& out);

}  // namespace zykov::cli
