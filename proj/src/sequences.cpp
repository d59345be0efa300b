#include "zykov/sequences.hpp"

#include "zykov/errors.hpp"
#include "zykov/fractions.hpp"
#include "zykov/grothendieck.hpp"
#include "zykov/invariants.hpp"

namespace zykov {

std::vector<Graph> fibonacci_sequence(const Graph& g0, const Graph& g1, std::size_t steps,
                                      const FibonacciOptions& options) {
  std::vector<Graph> seq;
  auto push = [&](Graph g) {
    if (g.vertex_count() > options.vertex_guard)
      throw ResourceError("Fibonacci term " + std::to_string(seq.size()) + " has " +
                          std::to_string(g.vertex_count()) + " vertices, above the guard of " +
                          std::to_string(options.vertex_guard));
    seq.push_back(std::move(g));
  };
  push(g0);
  if (steps >= 1) push(g1);
  for (std::size_t n = 2; n <= steps; ++n) {
    if (seq[n - 1].vertex_count() + seq[n - 2].vertex_count() > options.vertex_guard)
      throw ResourceError("Fibonacci term " + std::to_string(n) + " would have " +
                          std::to_string(seq[n - 1].vertex_count() + seq[n - 2].vertex_count()) +
                          " vertices, above the guard of " + std::to_string(options.vertex_guard));
    push(join(seq[n - 1], seq[n - 2]));
  }
  return seq;
}

FibReport fibonacci_report(const Graph& g0, const Graph& g1, std::size_t steps, const FibonacciOptions& options) {
  const auto seq = fibonacci_sequence(g0, g1, steps, options);
  FibReport report;
  std::optional<SignedGraph> previous;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    const Graph& g = seq[n];
    SignedGraph s = from_graph(g);
    FibStep step;
    step.index = n;
    step.vertex_count = g.vertex_count();
    step.clique_number = static_cast<std::size_t>(clique_functional(s));

    if (step.clique_number >= 1) {
      const int d = static_cast<int>(step.clique_number) - 1;
      try {
        if (DehnSommerville(options.ds_call_budget).member(g, d)) step.ds_dimension = d;
      } catch (const ResourceError&) {
        // left unset: not confirmed within budget
      }
    }
    if (previous) {
      const std::size_t c_prev = report.steps.back().clique_number;
      if (c_prev != 0) {
        step.ratio = Rational(step.clique_number, c_prev);
        step.fraction_norm = norm_fraction(make_fraction(s, *previous));
      }
    }
    report.steps.push_back(std::move(step));
    previous = std::move(s);
  }
  return report;
}

}  // namespace zykov
