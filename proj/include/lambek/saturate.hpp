#pragma once

#include <string>
#include <vector>

#include "lambek/enumerate.hpp"
#include "lambek/signature.hpp"

namespace lambek {

struct SaturateResult {
  bool derivable = false;
  std::string verdict;  // "derivable" or "not derived at this depth"
  std::vector<FormulaPtr> universe;
  std::vector<std::pair<int, int>> derived;  // indices into the universe
  std::vector<std::string> notes;

  Sequent sequent(std::size_t k) const {
    return {universe[derived[k].first], universe[derived[k].second]};
  }
};

// Forward-chaining closure over a finite formula universe: the subformula
// closure of the goal and of the axiom schemata instantiated with the
// goal's atoms, then `formula_universe_depth` rounds of product/residual
// composition bounded by the largest initial formula size. The closure
// contains reflexivity and every schema instance lying inside the universe
// and is closed under cut, or-elimination on the left, and-introduction on
// the right, both residuation directions, and indexed modal monotonicity
// (box_{s2} phi |- box_{s1} psi from phi |- psi when s1 precedes s2, and the
// same shape for dia). A negative verdict is an under-approximation, never a
// refutation.
SaturateResult saturate(const Sequent& goal,
                        const std::vector<Schema>& axioms,
                        const SearchConfig& cfg,
                        const Signature& sig = Signature::monomodal());

}  // namespace lambek
