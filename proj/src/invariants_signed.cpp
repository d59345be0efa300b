#include "zykov/grothendieck.hpp"
#include "zykov/invariants.hpp"

namespace zykov {

RationalFunction signed_f_function(const SignedGraph& s, std::uint64_t budget) {
  Polynomial num = Polynomial::constant(1);
  Polynomial den = Polynomial::constant(1);
  for (const auto& [key, term] : s.terms()) {
    const Polynomial f = f_function(term.graph, budget).pow(static_cast<unsigned>(abs(term.multiplicity)));
    if (term.multiplicity > 0)
      num = num * f;
    else
      den = den * f;
  }
  return {std::move(num), std::move(den)};
}

}  // namespace zykov
