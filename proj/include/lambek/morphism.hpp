#pragma once

#include <vector>

#include "lambek/frame.hpp"

namespace lambek {

// Bounded morphism check between validated frames; `f` maps world indices of
// `f1` to world indices of `f2`.
CheckReport is_bounded_morphism(const Frame& f1, const Frame& f2,
                                const std::vector<int>& f);

// Verifies that truth of every formula in `formulas` is preserved along a
// bounded morphism of models, at every world. Precondition failures (not a
// bounded morphism, or atom agreement broken) are reported, not checked
// silently.
CheckReport check_truth_preservation(const Model& m1, const Model& m2,
                                     const std::vector<int>& f,
                                     const std::vector<FormulaPtr>& formulas);

}  // namespace lambek
