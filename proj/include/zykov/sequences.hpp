#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zykov/graph.hpp"
#include "zykov/numeric.hpp"

namespace zykov {

struct FibonacciOptions {
  std::size_t vertex_guard = 2000;        // largest vertex count allowed for any G_n
  std::size_t ds_call_budget = 256;       // Dehn-Sommerville recursive calls per step
};

/// G_0, G_1, ..., G_steps with G_{n+1} = G_n + G_{n-1}. For steps == 0 only G_0 is returned.
/// Throws ResourceError naming the first index whose vertex count exceeds the guard.
std::vector<Graph> fibonacci_sequence(const Graph& g0, const Graph& g1, std::size_t steps,
                                      const FibonacciOptions& options = {});

struct FibStep {
  std::size_t index = 0;
  std::size_t vertex_count = 0;
  std::size_t clique_number = 0;
  std::optional<int> ds_dimension;      // d with G_n in X_d, if confirmed within budget
  std::optional<Rational> ratio;        // c(G_n) / c(G_{n-1}); absent for n = 0 or c(G_{n-1}) = 0
  std::optional<Rational> fraction_norm;  // |G_n / G_{n-1}| in the fraction ring
};

struct FibReport {
  std::vector<FibStep> steps;
};

/// Clique numbers are summed over the additive factors of each G_n. The candidate
/// Dehn-Sommerville dimension is c(G_n) - 1.
FibReport fibonacci_report(const Graph& g0, const Graph& g1, std::size_t steps,
                           const FibonacciOptions& options = {});

}  // namespace zykov
